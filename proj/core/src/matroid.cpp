#include "entropic/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "entropic/budget.hpp"
#include "entropic/errors.hpp"

namespace entropic {

ColumnSet make_set(std::span<const std::size_t> columns) {
  ColumnSet s = 0;
  for (auto c : columns) {
    if (c >= kMaxColumns) raise(ErrorKind::TooLarge, "column index beyond the bitmask width");
    s |= ColumnSet{1} << c;
  }
  return s;
}

std::vector<std::size_t> members(ColumnSet set) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; set != 0; ++j, set >>= 1)
    if (set & 1u) out.push_back(j);
  return out;
}

std::vector<Scalar> SpanBasis::reduce(std::span<const Scalar> v) const {
  std::vector<Scalar> r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (r[p] == 0) continue;
    const Scalar f = r[p];
    for (std::size_t k = p; k < dim_; ++k) r[k] -= f * rows_[i][k];
  }
  return r;
}

bool SpanBasis::add(std::span<const Scalar> v) {
  auto r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return s != 0; });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const Scalar inv = 1 / r[p];
  for (std::size_t k = p; k < dim_; ++k) r[k] *= inv;
  // Keep earlier rows reduced against the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Scalar f = row[p];
    for (std::size_t k = p; k < dim_; ++k) row[k] -= f * r[k];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBasis::contains(std::span<const Scalar> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s == 0; });
}

namespace {

std::vector<Scalar> primitive_integer(std::vector<Scalar> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return s != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t i = 1; i <= std::min(n, k); ++i) total += binomial(static_cast<long>(n), static_cast<long>(i)).get_ui();
  return total;
}

struct ContractedMatrix {
  ExactMatrix matrix;
  std::vector<std::size_t> columns;
  std::vector<std::size_t> dropped;
};

ContractedMatrix contract_matrix(const Matroid& m, ColumnSet j) {
  const auto& a = m.matrix();
  const auto in_j = members(j);
  ExactMatrix p = left_kernel_basis(a.select_columns(in_j));
  ContractedMatrix out;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (j & (ColumnSet{1} << c)) continue;
    auto col = multiply(p, a.column(c));
    if (std::all_of(col.begin(), col.end(), [](const Scalar& s) { return s == 0; })) {
      out.dropped.push_back(c);
      continue;
    }
    out.columns.push_back(c);
    cols.push_back(std::move(col));
  }
  out.matrix = ExactMatrix(p.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < p.rows(); ++r) out.matrix(r, c) = cols[c][r];
  return out;
}

}  // namespace

Matroid::Matroid(ExactMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols() > kMaxColumns) {
    raise(ErrorKind::TooLarge, "matroids are limited to " + std::to_string(kMaxColumns) + " columns");
  }
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    columns_.push_back(matrix_.column(j));
    if (std::all_of(columns_.back().begin(), columns_.back().end(), [](const Scalar& s) { return s == 0; })) {
      raise(ErrorKind::ZeroColumn, "column " + std::to_string(j + 1) + " is zero");
    }
  }
  if (entropic::rank(matrix_) != matrix_.rows()) raise(ErrorKind::RankDeficient, "matrix rank is below its row count");
  enumerate_circuits();
  enumerate_flats();
  compute_mobius();
}

std::size_t Matroid::rank_of(ColumnSet set) const {
  SpanBasis basis(rank());
  for (auto j : members(set)) {
    basis.add(columns_[j]);
    if (basis.dimension() == rank()) break;
  }
  return basis.dimension();
}

ColumnSet Matroid::closure(ColumnSet set) const {
  SpanBasis basis(rank());
  for (auto j : members(set)) basis.add(columns_[j]);
  ColumnSet out = set;
  for (std::size_t j = 0; j < size(); ++j)
    if (basis.contains(columns_[j])) out |= ColumnSet{1} << j;
  return out;
}

void Matroid::enumerate_circuits() {
  const std::size_t n = size();
  check_budget(subsets_up_to(n, rank() + 1), "circuit enumeration");
  for (std::size_t k = 1; k <= std::min(n, rank() + 1); ++k) {
    // Gosper's hack walks the k-subsets of an n-set in increasing order.
    ColumnSet s = (ColumnSet{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      const bool contains_circuit =
          std::any_of(circuits_.begin(), circuits_.end(), [s](const Circuit& c) { return is_subset(c.support, s); });
      if (!contains_circuit && rank_of(s) < k) {
        const auto idx = members(s);
        const auto kernel = kernel_basis(matrix_.select_columns(idx));
        std::vector<Scalar> v(n, Scalar(0));
        for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = kernel(0, i);
        circuits_.push_back({s, primitive_integer(std::move(v))});
      }
      const ColumnSet c = s & (~s + 1);
      const std::uint64_t r = std::uint64_t{s} + c;
      if (r >= limit) break;
      s = static_cast<ColumnSet>(((static_cast<ColumnSet>(r) ^ s) >> 2) / c) | static_cast<ColumnSet>(r);
    }
  }
}

void Matroid::enumerate_flats() {
  const std::size_t d = rank();
  flats_.assign(d + 1, {});
  flats_[0].push_back({closure(0), 0});
  for (std::size_t r = 0; r < d; ++r) {
    std::set<ColumnSet> next;
    for (const auto& f : flats_[r]) {
      SpanBasis base(d);
      for (auto j : members(f.members)) base.add(columns_[j]);
      ColumnSet covered = f.members;
      for (std::size_t j = 0; j < size(); ++j) {
        if (covered & (ColumnSet{1} << j)) continue;
        SpanBasis grown = base;
        grown.add(columns_[j]);
        ColumnSet g = f.members;
        for (std::size_t k = 0; k < size(); ++k)
          if (!(g & (ColumnSet{1} << k)) && grown.contains(columns_[k])) g |= ColumnSet{1} << k;
        covered |= g;
        next.insert(g);
      }
    }
    for (auto g : next) flats_[r + 1].push_back({g, r + 1});
  }
}

void Matroid::compute_mobius() {
  const std::size_t d = rank();
  chi_.assign(d + 1, Integer(0));
  for (std::size_t r = 0; r <= d; ++r) {
    for (const auto& f : flats_[r]) {
      Integer value = 0;
      if (r == 0) {
        value = 1;
      } else {
        for (std::size_t s = 0; s < r; ++s)
          for (const auto& g : flats_[s])
            if (is_subset(g.members, f.members)) value -= mobius_.at(g.members);
      }
      chi_[d - r] += value;
      mobius_.emplace(f.members, std::move(value));
    }
  }
}

std::size_t Matroid::flat_count() const {
  std::size_t total = 0;
  for (const auto& level : flats_) total += level.size();
  return total;
}

const Integer& Matroid::mobius(ColumnSet flat) const {
  auto it = mobius_.find(flat);
  if (it == mobius_.end()) raise(ErrorKind::NotAFlat, "column set is not a flat");
  return it->second;
}

Polynomial Matroid::char_poly() const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < chi_.size(); ++k) terms.push_back({Monomial::variable(0, static_cast<unsigned>(k)), Scalar(chi_[k])});
  return Polynomial::from_terms(1, std::move(terms));
}

Integer mobius_invariant(const Matroid& m) {
  const Integer& c0 = m.char_poly_coefficients()[0];
  return m.rank() % 2 == 0 ? c0 : Integer(-c0);
}

std::size_t parallel_class_count(const ExactMatrix& a) {
  std::set<std::vector<Scalar>> directions;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto col = a.column(j);
    auto first = std::find_if(col.begin(), col.end(), [](const Scalar& s) { return s != 0; });
    if (first == col.end()) continue;
    const Scalar inv = 1 / *first;
    for (auto& x : col) x *= inv;
    directions.insert(std::move(col));
  }
  return directions.size();
}

bool is_basic(const Matroid& m) { return parallel_class_count(m.matrix()) == m.rank(); }

Integer delta_invariant(const Matroid& m) {
  const auto& chi = m.char_poly_coefficients();
  const Integer c0 = chi[0];
  const Integer c1 = chi.size() > 1 ? chi[1] : Integer(0);
  Integer value = 2 * (Integer(static_cast<long>(m.rank())) * c0 + c1);
  return m.rank() % 2 == 0 ? value : Integer(-value);
}

Integer entropic_degree(const Matroid& m) {
  if (is_basic(m)) raise(ErrorKind::BasicMatrix, "basic matrix: the entropic discriminant is not a hypersurface");
  return delta_invariant(m);
}

Integer entropic_degree_crosscheck(const Matroid& m) {
  if (is_basic(m)) raise(ErrorKind::BasicMatrix, "basic matrix: the entropic discriminant is not a hypersurface");
  const std::size_t d = m.rank();
  Integer sum = 0;
  for (const auto& h : m.flats_by_rank()[d - 1]) sum += mobius_invariant(restriction(m, h.members).matroid);
  return 2 * Integer(static_cast<long>(d)) * mobius_invariant(m) - 2 * sum;
}

Integer generic_degree(long d, long n) {
  if (d < 2 || n <= d) raise(ErrorKind::InvalidInput, "generic degree needs n > d >= 2");
  return 2 * Integer(n - d) * binomial(n - 1, d - 2);
}

Minor restriction(const Matroid& m, ColumnSet j) {
  const auto idx = members(j & m.ground());
  ExactMatrix sub = m.matrix().select_columns(idx);
  const auto rows = independent_rows(sub);
  return Minor{Matroid(sub.select_rows(rows)), idx, {}};
}

Minor contraction(const Matroid& m, ColumnSet j) {
  auto c = contract_matrix(m, j & m.ground());
  return Minor{Matroid(std::move(c.matrix)), std::move(c.columns), std::move(c.dropped)};
}

Minor deletion(const Matroid& m, std::size_t e) {
  if (e >= m.size()) raise(ErrorKind::InvalidInput, "column index out of range");
  return restriction(m, m.ground() & ~(ColumnSet{1} << e));
}

bool is_isthmus(const Matroid& m, std::size_t e) {
  if (e >= m.size()) raise(ErrorKind::InvalidInput, "column index out of range");
  return m.rank_of(m.ground() & ~(ColumnSet{1} << e)) < m.rank();
}

DeltaCheck delta_recurrence_check(const Matroid& m, std::size_t e) {
  if (is_isthmus(m, e)) raise(ErrorKind::IsthmusElement, "column " + std::to_string(e + 1) + " is an isthmus");
  DeltaCheck out;
  out.whole = delta_invariant(m);
  out.deleted = delta_invariant(deletion(m, e).matroid);
  const auto con = contraction(m, ColumnSet{1} << e);
  if (con.dropped.empty()) {
    out.contracted = delta_invariant(con.matroid);
    out.contracted_mobius = mobius_invariant(con.matroid);
  }
  out.holds = out.whole == out.deleted + out.contracted + 2 * out.contracted_mobius;
  return out;
}

std::vector<RealLocusComponent> real_locus_components(const Matroid& m) {
  if (is_basic(m)) raise(ErrorKind::BasicMatrix, "basic matrix: the entropic discriminant is not a hypersurface");
  std::vector<RealLocusComponent> out;
  if (m.rank() < 2) return out;
  for (const auto& f : m.flats_by_rank()[m.rank() - 2]) {
    const auto c = contract_matrix(m, f.members);
    if (parallel_class_count(c.matrix) == c.matrix.rows()) continue;
    const auto idx = members(f.members);
    const auto sub = m.matrix().select_columns(idx);
    RealLocusComponent comp;
    comp.flat = f.members;
    for (auto p : independent_columns(sub)) comp.spanning_columns.push_back(idx[p]);
    comp.span = m.matrix().select_columns(comp.spanning_columns).transpose();
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace entropic
