#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entropic/graphs.hpp"
#include "entropic/linalg.hpp"
#include "entropic/polynomial.hpp"

namespace entropic {

// Matrix: {"rows": r, "cols": c, "entries": [["1", "-2/3", ...], ...]}.
// Entries may also be JSON integers on input.
ExactMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const ExactMatrix& m);

// Polynomial: {"vars": ["b1", ...], "terms": [{"c": "3/2", "e": [2, 0, 1]}, ...]}
// or {"vars": [...], "expr": "b1^2 - 3 b2"} on input.
struct NamedPolynomial {
  std::vector<std::string> vars;
  Polynomial poly;
};
NamedPolynomial polynomial_from_json(std::string_view text);
std::string polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars);

// Graph: {"nodes": 4, "edges": [[1, 2], ...], "signing": "oriented" | "all_negative"}.
GraphModel graph_from_json(std::string_view text);
std::string graph_to_json(const GraphModel& g);

// "3,2,-1/2" -> rationals.
std::vector<Scalar> parse_vector(std::string_view text);

// Whole file as a string; InvalidInput when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace entropic
