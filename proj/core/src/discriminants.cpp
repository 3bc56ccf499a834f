#include "entropic/discriminants.hpp"

#include <map>
#include <mutex>

#include "entropic/errors.hpp"
#include "entropic/matroid.hpp"
#include "entropic/reciprocal.hpp"
#include "entropic/resultant.hpp"

namespace entropic {

namespace {

void require_no_parallel_columns(const ExactMatrix& a) {
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (rank(a.select_columns(std::vector<std::size_t>{i, j})) < 2) {
        raise(ErrorKind::ParallelColumns,
              "columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are parallel");
      }
    }
  }
}

Polynomial drop_last_variable(const Polynomial& p) {
  const std::size_t keep = p.arity() - 1;
  if (p.degree_in(keep) > 0) raise(ErrorKind::InvalidInput, "polynomial still depends on the eliminated variable");
  std::vector<std::size_t> map(p.arity());
  for (std::size_t i = 0; i < keep; ++i) map[i] = i;
  map[keep] = 0;
  return p.remap(keep, map);
}

void require_nonbasic(const ExactMatrix& a) {
  if (parallel_class_count(a) == rank(a)) {
    raise(ErrorKind::BasicMatrix, "basic matrix: the entropic discriminant is not a hypersurface");
  }
}

}  // namespace

Polynomial d2_critical_polynomial(const ExactMatrix& a) {
  if (a.rows() != 2) raise(ErrorKind::InvalidInput, "the d = 2 regime needs a 2-row matrix");
  const Polynomial f = arrangement_form(a);
  // Images of (z1, z2) in the ring (b1, b2, t).
  std::vector<Polynomial> images{Polynomial::variable(3, 2), Polynomial::constant(3, 1)};
  const Polynomial f1 = f.derivative(0).substitute(images);
  const Polynomial f2 = f.derivative(1).substitute(images);
  return Polynomial::variable(3, 1) * f1 - Polynomial::variable(3, 0) * f2;
}

EntropicPoly disc_d2(const ExactMatrix& a) {
  if (a.rows() != 2) raise(ErrorKind::InvalidInput, "the d = 2 regime needs a 2-row matrix");
  if (a.cols() < 3) raise(ErrorKind::InvalidInput, "the d = 2 regime needs at least three columns");
  if (rank(a) != 2) raise(ErrorKind::RankDeficient, "matrix rank is below its row count");
  require_no_parallel_columns(a);
  const auto p = UnivariatePoly::from_polynomial(d2_critical_polynomial(a), 2);
  const int n = static_cast<int>(a.cols());
  if (p.degree() != n - 1) raise(ErrorKind::DegreeDrop, "critical polynomial lost degree");
  const Polynomial disc = discriminant(p);
  if (disc.is_zero()) raise(ErrorKind::DegreeDrop, "discriminant vanished identically");
  return {primitive_normalize(drop_last_variable(disc)), Regime::D2};
}

Scalar plucker_sos_eval(const ExactMatrix& a, std::span<const Scalar> b) {
  if (a.rows() != 2 || b.size() != 2) raise(ErrorKind::InvalidInput, "Plucker sums need a 2-row matrix and b in Q^2");
  const std::size_t n = a.cols();
  if (n != 3 && n != 4) raise(ErrorKind::UnsupportedN, "Plucker sums exist for n = 3 and n = 4 only");
  // Columns 1..n of A followed by b, one-based.
  auto col = [&](std::size_t k, std::size_t r) -> Scalar { return k <= n ? a(r, k - 1) : b[r]; };
  auto p = [&](std::size_t i, std::size_t j) -> Scalar { return col(i, 0) * col(j, 1) - col(j, 0) * col(i, 1); };
  auto sq = [](const Scalar& s) { return s * s; };
  if (n == 3) return sq(p(1, 2) * p(3, 4)) + sq(p(1, 3) * p(2, 4)) + sq(p(2, 3) * p(1, 4));
  const Scalar seven_halves(7, 2);
  return sq(p(1, 2) * p(1, 2) * p(3, 4) * p(3, 5) * p(4, 5)) + sq(p(1, 3) * p(1, 3) * p(2, 4) * p(2, 5) * p(4, 5)) +
         sq(p(1, 4) * p(1, 4) * p(2, 3) * p(2, 5) * p(3, 5)) + sq(p(1, 4) * p(2, 3) * p(2, 3) * p(1, 5) * p(4, 5)) +
         sq(p(1, 3) * p(2, 4) * p(2, 4) * p(1, 5) * p(3, 5)) + sq(p(1, 2) * p(3, 4) * p(3, 4) * p(1, 5) * p(2, 5)) +
         seven_halves * sq(p(2, 3) * p(2, 4) * p(3, 4) * p(1, 5) * p(1, 5)) +
         seven_halves * sq(p(1, 3) * p(1, 4) * p(3, 4) * p(2, 5) * p(2, 5)) +
         seven_halves * sq(p(1, 2) * p(1, 4) * p(2, 4) * p(3, 5) * p(3, 5)) +
         seven_halves * sq(p(1, 2) * p(1, 3) * p(2, 3) * p(4, 5) * p(4, 5));
}

ExactMatrix all_ones_plus_identity(std::size_t d) {
  ExactMatrix e(d, d, Scalar(1));
  for (std::size_t i = 0; i < d; ++i) e(i, i) = 2;
  return e;
}

Polynomial special_char_poly(std::size_t d) {
  const std::size_t arity = d + 1;
  const Polynomial t = Polynomial::variable(arity, d);
  PolyMatrix m(d, d, Polynomial(arity));
  const ExactMatrix e = all_ones_plus_identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = t * e(i, j);
    m(i, i) += Polynomial::variable(arity, i);
  }
  return determinant(m);
}

const Polynomial& special_corank_one_disc(std::size_t d) {
  if (d < 2 || d > 6) raise(ErrorKind::TooLarge, "corank-one discriminants are supported for 2 <= d <= 6");
  static std::mutex mutex;
  static std::map<std::size_t, Polynomial> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    const auto p = UnivariatePoly::from_polynomial(special_char_poly(d), d);
    it = cache.emplace(d, primitive_normalize(drop_last_variable(discriminant(p)))).first;
  }
  return it->second;
}

CorankOneReduction corank_one_reduction(const ExactMatrix& a) {
  const std::size_t d = a.rows();
  if (a.cols() != d + 1 || rank(a) != d) raise(ErrorKind::NotCorankOne, "matrix is not d x (d+1) of rank d");
  const ExactMatrix k = kernel_basis(a);
  CorankOneReduction out;
  out.kernel = k.row(0);
  for (std::size_t i = 0; i < out.kernel.size(); ++i) {
    if (out.kernel[i] == 0) {
      raise(ErrorKind::KernelZeroCoordinate,
            "kernel vector vanishes at coordinate " + std::to_string(i + 1) +
                "; delete that column and treat the smaller matrix, whose discriminant agrees");
    }
  }
  // S = U'^{-1} A diag(v) = [I | -1] with U' the first d columns of A diag(v).
  ExactMatrix u(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(i, j) = a(i, j) * out.kernel[j];
  out.inverse_u = inverse(u);
  return out;
}

EntropicPoly corank_one_disc(const ExactMatrix& a) {
  const auto red = corank_one_reduction(a);
  const std::size_t d = a.rows();
  const Polynomial& hs = special_corank_one_disc(d);
  if (red.inverse_u == identity_matrix(d)) return {hs, Regime::CorankOne};
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial form(d);
    for (std::size_t j = 0; j < d; ++j)
      if (red.inverse_u(i, j) != 0) form += Polynomial::variable(d, j) * red.inverse_u(i, j);
    images.push_back(std::move(form));
  }
  return {primitive_normalize(hs.substitute(images)), Regime::CorankOne};
}

EntropicPoly entropic_discriminant(const ExactMatrix& a) {
  if (a.rows() == 2) return entropic_discriminant(a, Regime::D2);
  if (a.cols() == a.rows() + 1) return entropic_discriminant(a, Regime::CorankOne);
  raise(ErrorKind::InvalidInput, "no exact regime applies: need d = 2 or n = d + 1");
}

EntropicPoly entropic_discriminant(const ExactMatrix& a, Regime regime) {
  if (rank(a) != a.rows()) raise(ErrorKind::RankDeficient, "matrix rank is below its row count");
  require_nonbasic(a);
  return regime == Regime::D2 ? disc_d2(a) : corank_one_disc(a);
}

std::pair<Scalar, Scalar> derivative_disc_check(std::span<const Scalar> roots) {
  const std::size_t n = roots.size();
  if (n < 3) raise(ErrorKind::InvalidInput, "the derivative check needs at least three roots");
  Polynomial f = Polynomial::constant(1, 1);
  const Polynomial t = Polynomial::variable(1, 0);
  for (const auto& r : roots) f = f * (t - Polynomial::constant(1, r));
  const auto fp = UnivariatePoly::from_polynomial(f.derivative(0), 0);
  const Scalar lhs = discriminant(fp).constant_term();
  std::vector<Scalar> b;
  for (std::size_t i = 0; i + 1 < n; ++i) b.push_back(roots[n - 1] - roots[i]);
  const Scalar rhs = special_corank_one_disc(n - 1).evaluate(b);
  return {lhs, rhs};
}

}  // namespace entropic
