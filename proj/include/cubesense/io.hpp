#pragma once

// File formats:
//   vertex set:  line 1 "n=<dim>", then one vertex per line as an n-char
//                binary string x_1...x_n (x_1 leftmost); readers also accept
//                a single 2^n-char 0/1 bitmap line indexed by vertex index.
//   truth table: line 1 "n=<dim>", line 2 a 2^n-char 0/1 string, character
//                at position v = f at vertex index v.
// Certificates serialize to JSON with a fixed field set and key order.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "cubesense/core.hpp"
#include "cubesense/measures.hpp"
#include "cubesense/verify.hpp"

namespace cubesense {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

VertexSet read_vertex_set(std::istream& in);
void write_vertex_set(std::ostream& out, const VertexSet& s);  // per-line form

TruthTable read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const TruthTable& f);

// Built-in catalog: or:<n>, and:<n>, parity:<n>, const0:<n>, const1:<n>.
TruthTable catalog_function(const std::string& name);

// The per-line file rendering of a set as a string array (first element
// "n=<dim>").
nlohmann::ordered_json vertex_set_lines(const VertexSet& s);

// Fixed field set and key order per tool_version.  include_elapsed=false
// yields the deterministic form used for byte-identical comparisons.
nlohmann::ordered_json certificate_json(const Certificate& c,
                                        bool include_elapsed = true);

}  // namespace cubesense
