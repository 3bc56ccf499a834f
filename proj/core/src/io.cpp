#include "entropic/io.hpp"

#include <fstream>
#include <sstream>

#include "entropic/errors.hpp"
#include "json.hpp"

namespace entropic {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    raise(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) raise(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar scalar(const Json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  raise(ErrorKind::InvalidInput, "matrix entries must be strings \"p/q\" or integers");
}

}  // namespace

ExactMatrix matrix_from_json(std::string_view text) {
  const Json j = parse(text);
  const std::size_t rows = count(j, "rows");
  const std::size_t cols = count(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) raise(ErrorKind::InvalidInput, "\"entries\" must have \"rows\" rows");
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      raise(ErrorKind::InvalidInput, "row " + std::to_string(i + 1) + " must have \"cols\" entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar(entries[i][k]);
  }
  return m;
}

std::string matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    entries.push_back(std::move(row));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j.dump();
}

NamedPolynomial polynomial_from_json(std::string_view text) {
  const Json j = parse(text);
  NamedPolynomial out;
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) raise(ErrorKind::InvalidInput, "\"vars\" must be an array of names");
  for (const auto& v : vars) {
    if (!v.is_string()) raise(ErrorKind::InvalidInput, "\"vars\" must be an array of names");
    out.vars.push_back(v.get<std::string>());
  }
  const std::size_t arity = out.vars.size();
  if (j.contains("expr")) {
    const Json& e = j.at("expr");
    std::string expr;
    if (e.is_string()) {
      expr = e.get<std::string>();
    } else if (e.is_array()) {
      for (const auto& piece : e) expr += piece.get<std::string>() + " ";
    } else {
      raise(ErrorKind::InvalidInput, "\"expr\" must be a string or an array of strings");
    }
    out.poly = parse_polynomial(expr, out.vars);
    return out;
  }
  std::vector<Polynomial::Term> terms;
  for (const auto& t : field(j, "terms")) {
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != arity) raise(ErrorKind::InvalidInput, "exponent vector length must match \"vars\"");
    std::vector<unsigned> exps;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) raise(ErrorKind::InvalidInput, "exponents must be non-negative integers");
      exps.push_back(x.get<unsigned>());
    }
    terms.push_back({Monomial::from_exponents(exps), scalar(field(t, "c"))});
  }
  out.poly = Polynomial::from_terms(arity, std::move(terms));
  return out;
}

std::string polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json term;
    term["c"] = to_string(t.coefficient);
    term["e"] = t.monomial.exponents(p.arity());
    terms.push_back(std::move(term));
  }
  Json j;
  j["vars"] = vars;
  j["terms"] = std::move(terms);
  return j.dump();
}

GraphModel graph_from_json(std::string_view text) {
  const Json j = parse(text);
  GraphModel g;
  g.nodes = count(j, "nodes");
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      raise(ErrorKind::InvalidInput, "edges must be pairs of node numbers");
    g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  const std::string signing = j.contains("signing") ? j.at("signing").get<std::string>() : "oriented";
  if (signing == "oriented") {
    g.signing = Signing::Oriented;
  } else if (signing == "all_negative") {
    g.signing = Signing::AllNegative;
  } else {
    raise(ErrorKind::InvalidInput, "signing must be \"oriented\" or \"all_negative\"");
  }
  validate(g);
  return g;
}

std::string graph_to_json(const GraphModel& g) {
  Json j;
  j["nodes"] = g.nodes;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["signing"] = g.signing == Signing::Oriented ? "oriented" : "all_negative";
  return j.dump();
}

std::vector<Scalar> parse_vector(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_scalar(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace entropic
