// Command-line surface: ingest truth tables and vertex sets, run measures,
// emit constructions, drive searches and theorem verifications, write
// certificates.
//
// Exit codes: 0 verified/ok, 1 refuted, 2 usage/parse error, 3 infeasible
// parameters, 4 budget exceeded / partial.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cubesense/constructions.hpp"
#include "cubesense/io.hpp"
#include "cubesense/kernels.hpp"
#include "cubesense/measures.hpp"
#include "cubesense/search.hpp"
#include "cubesense/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cubesense;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

void apply_threads(int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("CUBESENSE_THREADS"))
            threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

double dyadic_value(std::uint64_t num, int log2_den) {
    return static_cast<double>(num) / static_cast<double>(std::uint64_t{1} << log2_den);
}

// --- measure ---------------------------------------------------------------

int run_measure(const std::string& fn, const std::string& input,
                const std::string& format, const std::string& output) {
    TruthTable f = TruthTable::constant(1, false);
    if (!fn.empty()) {
        f = catalog_function(fn);
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open " << input << "\n";
            return kExitUsage;
        }
        f = read_truth_table(in);
    }

    MeasureReport r = measure(f);
    std::optional<SimonCorollaryVerdict> simon;
    if (r.ones_count > 0) simon = check_simon_corollary(f);
    IrreducibleCorollaryVerdict irr = check_irreducible_corollary(f);

    std::ofstream file;
    std::ostream& out = open_output(file, output);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = f.dim();
        j["s"] = r.s;
        j["s0"] = r.s0 ? nlohmann::ordered_json(*r.s0) : nullptr;
        j["s1"] = r.s1 ? nlohmann::ordered_json(*r.s1) : nullptr;
        j["ones"] = r.ones_count;
        j["delta"] = r.delta_of_one_set
                         ? nlohmann::ordered_json(*r.delta_of_one_set)
                         : nullptr;
        if (simon) {
            j["simon"] = {{"s1", simon->s1},
                          {"bound", simon->bound},
                          {"actual", simon->actual},
                          {"equality", simon->equality},
                          {"is_subcube", simon->is_subcube},
                          {"pass", simon->holds}};
        } else {
            j["simon"] = "not-applicable";
        }
        if (irr.condition_met) {
            j["irreducible_bound"] = {{"s1", irr.s1},
                                      {"bound_num", irr.bound_num},
                                      {"bound_log2_den", irr.bound_log2_den},
                                      {"actual", irr.actual},
                                      {"pass", irr.holds}};
        } else {
            j["irreducible_bound"] = "condition_not_met";
        }
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << f.dim() << "\n";
        out << "s = " << r.s << "\n";
        out << "s0 = " << (r.s0 ? std::to_string(*r.s0) : "-") << "\n";
        out << "s1 = " << (r.s1 ? std::to_string(*r.s1) : "-") << "\n";
        out << "ones = " << r.ones_count << "\n";
        out << "delta = "
            << (r.delta_of_one_set ? std::to_string(*r.delta_of_one_set) : "-")
            << "\n";
        if (simon) {
            out << "simon: " << (simon->holds ? "pass" : "FAIL") << " ("
                << simon->actual << " >= " << simon->bound
                << (simon->equality ? ", equality, subcube" : "") << ")\n";
        } else {
            out << "simon: not-applicable (constant 0)\n";
        }
        if (irr.condition_met) {
            out << "irreducible-bound: " << (irr.holds ? "pass" : "FAIL")
                << " (" << irr.actual << " >= "
                << dyadic_value(irr.bound_num, irr.bound_log2_den) << ")\n";
        } else {
            out << "irreducible-bound: condition_not_met\n";
        }
    }
    bool fail = (simon && !simon->holds) || (irr.condition_met && !irr.holds);
    return fail ? kExitRefuted : kExitOk;
}

// --- construct -------------------------------------------------------------

int run_construct(int n, int d, bool simon, const std::string& output) {
    VertexSet witness(1);
    try {
        witness = simon ? simon_extremal(n, d) : extremal_irreducible(n, d);
    } catch (const std::invalid_argument& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    write_vertex_set(out, witness);
    std::cerr << "size=" << witness.size() << " delta=" << min_degree(witness)
              << " irreducible=" << (is_irreducible(witness) ? "true" : "false")
              << (as_subcube(witness) ? " subcube=true" : "") << "\n";
    return kExitOk;
}

// --- search ----------------------------------------------------------------

int run_search(const SearchConfig& cfg, const std::string& format,
               const std::string& output) {
    Certificate cert = certify_search(cfg);
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    if (format == "json") {
        out << certificate_json(cert).dump(2) << "\n";
    } else {
        out << "claim = search n = " << cfg.n << " d = " << cfg.d << "\n";
        out << "verdict = " << verdict_name(cert.verdict) << "\n";
        if (cert.extremal_size) {
            out << "size = " << *cert.extremal_size << "\n";
            out << "witness:\n";
            write_vertex_set(out, cert.witnesses.front());
        }
        out << "subsets_examined = " << cert.subsets_examined << "\n";
    }
    switch (cert.verdict) {
        case Verdict::verified: return kExitOk;
        case Verdict::infeasible: return kExitInfeasible;
        case Verdict::partial: return kExitBudget;
        default: return kExitRefuted;
    }
}

// --- verify ----------------------------------------------------------------

void print_certificate_table(std::ostream& out, const Certificate& cert) {
    out << "claim = " << cert.claim_id << " n = " << cert.n << "\n";
    out << "verdict = " << verdict_name(cert.verdict) << "\n";
    out << "subsets_examined = " << cert.subsets_examined << "\n";
    if (cert.detail.contains("per_d")) {
        for (const auto& row : cert.detail["per_d"])
            out << "  " << row.dump() << "\n";
    }
    if (cert.counterexample) {
        out << "counterexample:\n";
        write_vertex_set(out, *cert.counterexample);
    }
    out << "elapsed_ms = " << cert.elapsed_ms << "\n";
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::verified: return kExitOk;
        case Verdict::refuted: return kExitRefuted;
        case Verdict::infeasible: return kExitInfeasible;
        case Verdict::partial: return kExitBudget;
    }
    return kExitUsage;
}

int run_verify(const std::string& claim, int n, bool allow_large,
               std::optional<std::uint64_t> budget, std::uint64_t seed,
               const std::string& format, const std::string& output) {
    VerifyOptions opts;
    opts.budget = budget;
    opts.seed = seed;

    bool exhaustive_claim = claim != "main";
    if (n > kMaxExhaustiveN && (exhaustive_claim || !allow_large) && claim != "all") {
        std::cerr << "error: verify --claim " << claim << " is capped at n <= "
                  << kMaxExhaustiveN
                  << (claim == "main" ? " (use --allow-large for the pruned search)"
                                      : "")
                  << "\n";
        return kExitUsage;
    }
    if (claim == "all" && n > kMaxExhaustiveN) {
        std::cerr << "error: verify --claim all is capped at n <= "
                  << kMaxExhaustiveN << "\n";
        return kExitUsage;
    }
    if (claim == "main" && n > kMaxExhaustiveN && !budget) {
        std::cerr << "error: --allow-large requires --budget\n";
        return kExitUsage;
    }

    std::vector<Certificate> certs;
    if (claim == "simon" || claim == "all") certs.push_back(verify_simon(n, opts));
    if (claim == "main" || claim == "all") certs.push_back(verify_main(n, opts));
    if (claim == "gap" || claim == "all") certs.push_back(verify_gap(n, opts));
    if (claim == "lemma-minsize" || claim == "all")
        certs.push_back(verify_lemma_minsize(n, opts));
    if (claim == "lemma-extended" || claim == "all")
        certs.push_back(verify_lemma_extended(n, opts));
    if (claim == "lemma-fancy" || claim == "all")
        certs.push_back(verify_lemma_fancy(n, opts));

    std::ofstream file;
    std::ostream& out = open_output(file, output);
    if (format == "json") {
        if (certs.size() == 1) {
            out << certificate_json(certs.front()).dump(2) << "\n";
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (const Certificate& c : certs) arr.push_back(certificate_json(c));
            out << arr.dump(2) << "\n";
        }
    } else {
        for (const Certificate& c : certs) print_certificate_table(out, c);
    }

    int worst = kExitOk;
    for (const Certificate& c : certs) {
        int code = exit_code_for(c.verdict);
        if (code == kExitRefuted) return kExitRefuted;
        if (code != kExitOk) worst = code;
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of low-sensitivity subsets of the Boolean cube"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (0 = CUBESENSE_THREADS or OpenMP default); "
                   "never affects outputs");

    std::string format = "table";
    std::string output;

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "sensitivity measures of a truth table");
    std::string fn, input;
    auto* fn_opt = measure_cmd->add_option("--fn", fn, "catalog name, e.g. or:3");
    auto* in_opt = measure_cmd->add_option("--input", input, "truth table file");
    fn_opt->excludes(in_opt);
    measure_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    measure_cmd->add_option("--output", output, "output path (default stdout)");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit an extremal vertex set");
    int cn = 0, cd = 0;
    bool want_simon = false, want_irreducible = false;
    construct_cmd->add_option("--n", cn, "cube dimension")->required();
    construct_cmd->add_option("--d", cd, "target minimum degree")->required();
    auto* simon_flag = construct_cmd->add_flag("--simon", want_simon, "d-subcube witness");
    construct_cmd->add_flag("--irreducible", want_irreducible, "irreducible extremal witness")
        ->excludes(simon_flag);
    construct_cmd->add_option("--output", output, "output path (default stdout)");

    // search
    auto* search_cmd = app.add_subcommand("search", "minimum-size search");
    SearchConfig cfg;
    bool at_least = false;
    std::string strategy = "exhaustive";
    std::optional<std::uint64_t> budget;
    search_cmd->add_option("--n", cfg.n, "cube dimension")->required();
    search_cmd->add_option("--d", cfg.d, "minimum degree")->required();
    search_cmd->add_flag("--at-least", at_least, "require delta >= d instead of exactly d");
    search_cmd->add_flag("--irreducible", cfg.require_irreducible, "restrict to irreducible sets");
    search_cmd->add_option("--budget", budget, "cap on subsets examined");
    search_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"exhaustive", "bnb", "canonical_bnb"}));
    search_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    search_cmd->add_option("--output", output, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a theorem or lemma, emit a certificate");
    std::string claim;
    int vn = 0;
    bool allow_large = false;
    std::uint64_t seed = 20250823;
    std::optional<std::uint64_t> vbudget;
    verify_cmd->add_option("--claim", claim)
        ->required()
        ->check(CLI::IsMember({"simon", "main", "gap", "lemma-minsize",
                               "lemma-extended", "lemma-fancy", "all"}));
    verify_cmd->add_option("--n", vn, "cube dimension")->required();
    verify_cmd->add_flag("--allow-large", allow_large,
                         "allow n > 4 for --claim main (pruned search, budgeted)");
    verify_cmd->add_option("--budget", vbudget, "cap on subsets examined");
    verify_cmd->add_option("--seed", seed, "seed for sampled checks");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    verify_cmd->add_option("--output", output, "certificate path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    apply_threads(threads);

    try {
        if (measure_cmd->parsed()) {
            if (fn.empty() && input.empty()) {
                std::cerr << "error: measure requires --fn or --input\n";
                return kExitUsage;
            }
            return run_measure(fn, input, format, output);
        }
        if (construct_cmd->parsed()) {
            if (want_simon == want_irreducible) {
                std::cerr << "error: construct requires exactly one of --simon, --irreducible\n";
                return kExitUsage;
            }
            return run_construct(cn, cd, want_simon, output);
        }
        if (search_cmd->parsed()) {
            cfg.degree_mode = at_least ? DegreeMode::at_least : DegreeMode::exact;
            cfg.strategy = strategy == "exhaustive" ? Strategy::exhaustive
                                                    : Strategy::canonical_bnb;
            cfg.size_budget = budget;
            return run_search(cfg, format, output);
        }
        if (verify_cmd->parsed())
            return run_verify(claim, vn, allow_large, vbudget, seed, format, output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
