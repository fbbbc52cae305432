#include "cubesense/io.hpp"

#include <istream>
#include <ostream>

namespace cubesense {

namespace {

int parse_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header line");
    if (line.rfind("n=", 0) != 0)
        throw ParseError(1, "expected \"n=<dim>\", got \"" + line + "\"");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line.substr(2), &pos);
        if (pos != line.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(1, "malformed dimension \"" + line + "\"");
    }
    if (n < 1 || n > kMaxN)
        throw ParseError(1, "dimension out of range [1, " +
                                std::to_string(kMaxN) + "]");
    return n;
}

Vertex parse_vertex_line(const std::string& line, int n, int lineno) {
    if (static_cast<int>(line.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) +
                                     " binary digits, got " +
                                     std::to_string(line.size()));
    Vertex v = 0;
    for (int i = 0; i < n; ++i) {
        if (line[i] == '1')
            v |= Vertex{1} << i;
        else if (line[i] != '0')
            throw ParseError(lineno, "invalid character at column " +
                                         std::to_string(i + 1));
    }
    return v;
}

}  // namespace

VertexSet read_vertex_set(std::istream& in) {
    int n = parse_header(in);
    VertexSet s(n);
    std::string line;
    int lineno = 1;
    bool first_body = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (first_body && n >= 2 &&
            line.size() == (std::size_t{1} << n)) {
            // compact bitmap form
            for (std::size_t v = 0; v < line.size(); ++v) {
                if (line[v] == '1')
                    s.insert(static_cast<Vertex>(v));
                else if (line[v] != '0')
                    throw ParseError(lineno, "invalid character at column " +
                                                 std::to_string(v + 1));
            }
            first_body = false;
            continue;
        }
        first_body = false;
        s.insert(parse_vertex_line(line, n, lineno));
    }
    return s;
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
    out << "n=" << s.dim() << "\n";
    s.for_each([&](Vertex v) { out << vertex_string(s.dim(), v) << "\n"; });
}

TruthTable read_truth_table(std::istream& in) {
    int n = parse_header(in);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(2, "missing output bitmap");
    TruthTable f(n);
    if (line.size() != f.table_size())
        throw ParseError(2, "expected " + std::to_string(f.table_size()) +
                                " output bits, got " +
                                std::to_string(line.size()));
    for (std::size_t v = 0; v < line.size(); ++v) {
        if (line[v] == '1')
            f.set(static_cast<Vertex>(v), true);
        else if (line[v] != '0')
            throw ParseError(2, "invalid character at column " +
                                    std::to_string(v + 1));
    }
    return f;
}

void write_truth_table(std::ostream& out, const TruthTable& f) {
    out << "n=" << f.dim() << "\n";
    std::string bits(f.table_size(), '0');
    for (Vertex v = 0; v < f.table_size(); ++v)
        if (f.value(v)) bits[v] = '1';
    out << bits << "\n";
}

TruthTable catalog_function(const std::string& name) {
    std::size_t colon = name.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("catalog name must be <kind>:<n>, got \"" +
                                    name + "\"");
    std::string kind = name.substr(0, colon);
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(name.substr(colon + 1), &pos);
        if (pos != name.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed catalog dimension in \"" + name +
                                    "\"");
    }
    check_dim(n);
    if (kind == "const0") return TruthTable::constant(n, false);
    if (kind == "const1") return TruthTable::constant(n, true);
    TruthTable f(n);
    for (Vertex v = 0; v < f.table_size(); ++v) {
        if (kind == "or")
            f.set(v, v != 0);
        else if (kind == "and")
            f.set(v, v == f.table_size() - 1);
        else if (kind == "parity")
            f.set(v, __builtin_popcount(v) & 1);
        else
            throw std::invalid_argument("unknown catalog function \"" + kind +
                                        "\"");
    }
    return f;
}

nlohmann::ordered_json vertex_set_lines(const VertexSet& s) {
    auto lines = nlohmann::ordered_json::array();
    lines.push_back("n=" + std::to_string(s.dim()));
    s.for_each([&](Vertex v) { lines.push_back(vertex_string(s.dim(), v)); });
    return lines;
}

nlohmann::ordered_json certificate_json(const Certificate& c,
                                        bool include_elapsed) {
    nlohmann::ordered_json j;
    j["claim_id"] = c.claim_id;
    nlohmann::ordered_json params;
    params["n"] = c.n;
    if (c.d)
        params["d"] = *c.d;
    else
        params["d"] = nullptr;
    params["degree_mode"] = c.degree_mode;
    params["irreducible"] = c.irreducible;
    j["params"] = params;
    j["verdict"] = verdict_name(c.verdict);
    if (c.extremal_size)
        j["extremal_size"] = *c.extremal_size;
    else
        j["extremal_size"] = nullptr;
    auto ws = nlohmann::ordered_json::array();
    for (const VertexSet& w : c.witnesses) ws.push_back(vertex_set_lines(w));
    j["witnesses"] = ws;
    if (c.counterexample)
        j["counterexample"] = vertex_set_lines(*c.counterexample);
    else
        j["counterexample"] = nullptr;
    j["subsets_examined"] = c.subsets_examined;
    if (c.seed)
        j["seed"] = *c.seed;
    else
        j["seed"] = nullptr;
    if (include_elapsed) j["elapsed_ms"] = c.elapsed_ms;
    j["tool_version"] = c.tool_version;
    j["detail"] = c.detail;
    return j;
}

}  // namespace cubesense
