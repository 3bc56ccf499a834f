#include "entropic/graphs.hpp"

#include <algorithm>
#include <set>

#include "entropic/errors.hpp"

namespace entropic {

void validate(const GraphModel& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.nodes || v > g.nodes)
      raise(ErrorKind::InvalidInput, "edge endpoint outside 1.." + std::to_string(g.nodes));
    if (u == v) raise(ErrorKind::SelfLoop, "self-loop at node " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      raise(ErrorKind::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated");
  }
}

GraphModel complete_graph(std::size_t d, Signing signing) {
  GraphModel g{d, {}, signing};
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j) g.edges.emplace_back(i, j);
  return g;
}

GraphModel cycle_graph(std::size_t n, Signing signing) {
  GraphModel g{n, {}, signing};
  for (std::size_t i = 1; i <= n; ++i) g.edges.emplace_back(i, i % n + 1);
  return g;
}

ExactMatrix incidence_matrix(const GraphModel& g) {
  validate(g);
  ExactMatrix m(g.nodes, g.edges.size(), Scalar(0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    m(u - 1, e) = 1;
    m(v - 1, e) = g.signing == Signing::Oriented ? -1 : 1;
  }
  const auto keep = independent_rows(m);
  if (keep.size() == m.rows()) return m;
  return m.select_rows(keep);
}

Integer stirling2(long n, long k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

std::vector<Integer> zaslavsky_charpoly_coefficients(std::size_t d) {
  if (d < 1) raise(ErrorKind::InvalidInput, "need at least one node");
  const long n = static_cast<long>(d);
  std::vector<Integer> chi(d + 1, 0);
  // falling = (t-1)(t-3)...(t-1-2(k-1)), low degree first
  std::vector<Integer> falling{1};
  for (long k = 0; k <= n; ++k) {
    const Integer c = stirling2(n, k) + n * stirling2(n - 1, k);
    for (std::size_t i = 0; i < falling.size(); ++i) chi[i] += c * falling[i];
    std::vector<Integer> next(falling.size() + 1, 0);
    const long shift = -1 - 2 * k;
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] += shift * falling[i];
    }
    falling = std::move(next);
  }
  while (chi.size() > 1 && chi.back() == 0) chi.pop_back();
  return chi;
}

Polynomial zaslavsky_charpoly(std::size_t d) {
  const auto chi = zaslavsky_charpoly_coefficients(d);
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < chi.size(); ++k)
    if (chi[k] != 0) terms.push_back({Monomial::variable(0, static_cast<unsigned>(k)), Scalar(chi[k])});
  return Polynomial::from_terms(1, std::move(terms));
}

RetinaRow retina_row(std::size_t d) {
  const auto chi = zaslavsky_charpoly_coefficients(d);
  const Integer sign = d % 2 == 0 ? 1 : -1;
  const Integer c0 = chi[0];
  const Integer c1 = chi.size() > 1 ? chi[1] : Integer(0);
  return {d, 2 * sign * (static_cast<long>(d) * c0 + c1), sign * c0};
}

std::vector<RetinaRow> retina_table(std::size_t d_max) {
  if (d_max < 4 || d_max > 10) raise(ErrorKind::InvalidInput, "retina table covers 4 <= d_max <= 10");
  std::vector<RetinaRow> rows;
  for (std::size_t d = 4; d <= d_max; ++d) rows.push_back(retina_row(d));
  return rows;
}

}  // namespace entropic
