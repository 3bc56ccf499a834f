#include "entropic/reciprocal.hpp"

#include <algorithm>
#include <unordered_set>

#include "entropic/budget.hpp"
#include "entropic/errors.hpp"

namespace entropic {

namespace {

// Visits the k-subsets of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    visit(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial column_form(const ExactMatrix& a, std::size_t j) {
  Polynomial l(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, j) != 0) l += Polynomial::variable(a.rows(), i) * a(i, j);
  return l;
}

Polynomial squared_monomial(std::size_t arity, std::span<const std::size_t> vars, const Scalar& c) {
  Monomial m;
  for (auto v : vars) m.set(v, 2);
  return Polynomial::monomial(arity, m, c);
}

Polynomial g_of(const ExactMatrix& a, std::span<const std::size_t> columns, std::size_t arity) {
  const std::size_t d = a.rows();
  check_budget(binomial(static_cast<long>(columns.size()), static_cast<long>(d)).get_ui(), "Cauchy-Binet expansion");
  std::vector<Polynomial::Term> terms;
  for_each_subset(columns.size(), d, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> cols;
    for (auto p : pick) cols.push_back(columns[p]);
    const Scalar det = determinant(a.select_columns(cols));
    if (det == 0) return;
    Monomial m;
    for (auto c : cols) m.set(c, 2);
    terms.push_back({m, det * det});
  });
  return Polynomial::from_terms(arity, std::move(terms));
}

}  // namespace

Polynomial circuit_polynomial(const Circuit& c, std::size_t n) {
  const auto supp = members(c.support);
  std::vector<Polynomial::Term> terms;
  for (auto i : supp) {
    Monomial m;
    for (auto j : supp)
      if (j != i) m.set(j, 1);
    terms.push_back({m, c.vector[i]});
  }
  return Polynomial::from_terms(n, std::move(terms));
}

std::vector<CircuitPolynomial> circuit_polys(const Matroid& m) {
  std::vector<CircuitPolynomial> out;
  for (const auto& c : m.circuits()) out.push_back({c, circuit_polynomial(c, m.size())});
  return out;
}

bool exposes(const Matroid& m, std::span<const Circuit> chosen) {
  const std::size_t n = m.size();
  check_budget(std::uint64_t{1} << n, "non-flat enumeration");
  std::unordered_set<ColumnSet> flats;
  for (const auto& level : m.flats_by_rank())
    for (const auto& f : level) flats.insert(f.members);
  const ColumnSet ground = m.ground();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto j = static_cast<ColumnSet>(s);
    if (flats.count(j)) continue;
    const ColumnSet outside = ground & ~j;
    const bool exposed = std::any_of(chosen.begin(), chosen.end(),
                                     [outside](const Circuit& c) { return cardinality(c.support & outside) == 1; });
    if (!exposed) return false;
  }
  return true;
}

std::vector<Circuit> circuits_through(const Matroid& m, std::size_t column) {
  std::vector<Circuit> out;
  for (const auto& c : m.circuits())
    if (c.support & (ColumnSet{1} << column)) out.push_back(c);
  return out;
}

Polynomial arrangement_form(const ExactMatrix& a) {
  Polynomial f = Polynomial::constant(a.rows(), 1);
  for (std::size_t j = 0; j < a.cols(); ++j) f = f * column_form(a, j);
  return f;
}

Polynomial g_A(const ExactMatrix& a) {
  if (rank(a) != a.rows()) raise(ErrorKind::RankDeficient, "matrix rank is below its row count");
  std::vector<std::size_t> all(a.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return g_of(a, all, a.cols());
}

Polynomial g_A_determinant(const ExactMatrix& a) {
  if (rank(a) != a.rows()) raise(ErrorKind::RankDeficient, "matrix rank is below its row count");
  const std::size_t n = a.cols();
  PolyMatrix g(a.rows(), a.rows(), Polynomial(n));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t s = 0; s < a.rows(); ++s) {
      Polynomial entry(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar c = a(r, k) * a(s, k);
        if (c != 0) entry += Polynomial::monomial(n, Monomial::variable(k, 2), c);
      }
      g(r, s) = std::move(entry);
    }
  }
  return determinant(g);
}

Polynomial g_A_restricted(const Matroid& m, ColumnSet j) {
  if (!m.is_flat(j)) raise(ErrorKind::NotAFlat, "column set is not a flat");
  const auto idx = members(j);
  const ExactMatrix sub = m.matrix().select_columns(idx);
  const ExactMatrix hat = sub.select_rows(independent_rows(sub));
  // Columns of hat are renumbered; map them back onto x_j.
  ExactMatrix spread(hat.rows(), m.size(), Scalar(0));
  for (std::size_t r = 0; r < hat.rows(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) spread(r, idx[c]) = hat(r, c);
  if (hat.rows() == 0) return Polynomial::constant(m.size(), 1);
  return g_of(spread, idx, m.size());
}

long tangent_codim(const Matroid& m, ColumnSet j) {
  if (!m.is_flat(j)) raise(ErrorKind::NotAFlat, "column set is not a flat");
  const auto con = contraction(m, j);
  const long size_j = static_cast<long>(cardinality(j));
  const long outside = static_cast<long>(m.size()) - size_j;
  return size_j - static_cast<long>(m.rank_of(j)) + outside -
         static_cast<long>(parallel_class_count(con.matroid.matrix()));
}

std::vector<Flat> singular_strata(const Matroid& m) {
  std::vector<Flat> out;
  for (const auto& level : m.flats_by_rank()) {
    for (const auto& f : level) {
      if (f.members == 0) continue;
      if (!is_basic(contraction(m, f.members).matroid)) out.push_back(f);
    }
  }
  return out;
}

TangentConeGenerators tangent_cone_generators(const Matroid& m, std::span<const Scalar> p) {
  const std::size_t n = m.size();
  if (p.size() != n) raise(ErrorKind::InvalidInput, "point has the wrong dimension");
  ColumnSet j = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != 0) j |= ColumnSet{1} << i;
  if (!m.is_flat(j)) raise(ErrorKind::NotAFlat, "support of the point is not a flat");
  const auto idx = members(j);
  std::vector<Scalar> inv;
  for (auto i : idx) inv.push_back(1 / p[i]);
  if (!is_consistent(m.matrix().select_columns(idx).transpose(), inv)) {
    raise(ErrorKind::NotOnStratum, "1/p is not in the row space of A_J");
  }
  TangentConeGenerators out;
  out.support = j;
  for (const auto& c : m.circuits()) {
    if (!is_subset(c.support, j)) continue;
    Polynomial form(n);
    for (auto i : members(c.support)) form -= Polynomial::variable(n, i) * Scalar(c.vector[i] / (p[i] * p[i]));
    out.linear_forms.push_back(std::move(form));
  }
  const auto con = contraction(m, j);
  for (const auto& c : con.matroid.circuits()) {
    auto local = circuit_polynomial(c, con.matroid.size());
    out.contraction_circuits.push_back(local.remap(n, con.columns));
  }
  return out;
}

Polynomial hessian_product(const ExactMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (n < 2) raise(ErrorKind::InvalidInput, "the Hessian formula needs at least two columns");
  std::vector<Polynomial> forms;
  for (std::size_t j = 0; j < n; ++j) forms.push_back(column_form(a, j));
  std::vector<Polynomial> squares;
  for (const auto& l : forms) squares.push_back(l * l);
  Polynomial sum(d);
  for_each_subset(n, d, [&](const std::vector<std::size_t>& pick) {
    const Scalar det = determinant(a.select_columns(pick));
    if (det == 0) return;
    Polynomial term = Polynomial::constant(d, det * det);
    std::size_t next = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (next < pick.size() && pick[next] == k) {
        ++next;
        continue;
      }
      term = term * squares[k];
    }
    sum += term;
  });
  Polynomial f = arrangement_form(a);
  Scalar c = static_cast<long>(n - 1);
  if ((d - 1) % 2 == 1) c = -c;
  Polynomial prefactor = d >= 2 ? f.pow(static_cast<unsigned>(d - 2)) : Polynomial::constant(d, 1);
  return prefactor * sum * c;
}

Polynomial hessian_direct(const ExactMatrix& a) {
  const std::size_t d = a.rows();
  const Polynomial f = arrangement_form(a);
  PolyMatrix h(d, d, Polynomial(d));
  for (std::size_t i = 0; i < d; ++i) {
    const Polynomial fi = f.derivative(i);
    for (std::size_t k = i; k < d; ++k) {
      h(i, k) = fi.derivative(k);
      h(k, i) = h(i, k);
    }
  }
  return determinant(h);
}

std::vector<Scalar> polar_map_eval(const ExactMatrix& a, std::span<const Scalar> z) {
  if (z.size() != a.rows()) raise(ErrorKind::InvalidInput, "point has the wrong dimension");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar l = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) l += z[i] * a(i, j);
    if (l == 0) raise(ErrorKind::OnArrangement, "column form " + std::to_string(j + 1) + " vanishes at the point");
  }
  const Polynomial f = arrangement_form(a);
  std::vector<Scalar> grad;
  for (std::size_t i = 0; i < a.rows(); ++i) grad.push_back(f.derivative(i).evaluate(z));
  return grad;
}

std::vector<Scalar> polar_map_composition(const ExactMatrix& a, std::span<const Scalar> z) {
  if (z.size() != a.rows()) raise(ErrorKind::InvalidInput, "point has the wrong dimension");
  std::vector<Scalar> inv(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar l = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) l += z[i] * a(i, j);
    if (l == 0) raise(ErrorKind::OnArrangement, "column form " + std::to_string(j + 1) + " vanishes at the point");
    inv[j] = 1 / l;
  }
  return multiply(a, inv);
}

bool projectively_equal(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) return false;
  // All 2x2 minors of the pair vanish.
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t k = i + 1; k < u.size(); ++k)
      if (u[i] * v[k] != u[k] * v[i]) return false;
  const bool u_zero = std::all_of(u.begin(), u.end(), [](const Scalar& s) { return s == 0; });
  const bool v_zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
  return u_zero == v_zero;
}

}  // namespace entropic
