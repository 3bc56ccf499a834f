#include "entropic/series.hpp"

#include "entropic/errors.hpp"
#include "entropic/graphs.hpp"

namespace entropic {

namespace {

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly add(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

TPoly scale(const TPoly& a, const Scalar& c) {
  TPoly out = a;
  for (auto& v : out) v *= c;
  trim(out);
  return out;
}

// power series in x truncated after x^order, coefficients in Q[t]
using Series = std::vector<TPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i <= order && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  return out;
}

}  // namespace

std::vector<TPoly> stanley_egf_charpolys(std::size_t d_max) {
  if (d_max > 8) raise(ErrorKind::InvalidInput, "series check limited to d_max <= 8");
  const std::size_t order = d_max;

  // u = e^x - 1
  Series u(order + 1);
  for (std::size_t k = 1; k <= order; ++k) u[k] = {Scalar(1, factorial(static_cast<unsigned>(k)))};

  // log(1 + 2u) = sum_m (-1)^(m+1) (2u)^m / m
  Series log_part(order + 1);
  Series power = u;
  for (std::size_t m = 1; m <= order; ++m) {
    const Scalar c = Scalar(m % 2 == 1 ? 1 : -1) * Scalar(Integer(1) << static_cast<mp_bitcnt_t>(m)) / Scalar(static_cast<long>(m));
    for (std::size_t k = 0; k <= order; ++k) log_part[k] = add(log_part[k], scale(power[k], c));
    power = series_mul(power, u, order);
  }

  // f = ((t - 1)/2) log(1 + 2u); exp(f) = sum_m f^m / m!
  const TPoly s{Scalar(-1, 2), Scalar(1, 2)};
  Series f(order + 1);
  for (std::size_t k = 0; k <= order; ++k) f[k] = mul(s, log_part[k]);

  Series e(order + 1);
  e[0] = {Scalar(1)};
  Series fm = f;
  for (std::size_t m = 1; m <= order; ++m) {
    const Scalar inv(1, factorial(static_cast<unsigned>(m)));
    for (std::size_t k = 0; k <= order; ++k) e[k] = add(e[k], scale(fm[k], inv));
    fm = series_mul(fm, f, order);
  }

  // times (1 + x), then d! [x^d]
  std::vector<TPoly> out(order + 1);
  for (std::size_t d = 0; d <= order; ++d) {
    TPoly c = e[d];
    if (d > 0) c = add(c, e[d - 1]);
    out[d] = scale(c, Scalar(factorial(static_cast<unsigned>(d))));
  }
  return out;
}

bool zaslavsky_egf_check(std::size_t d_max) {
  const auto series = stanley_egf_charpolys(d_max);
  for (std::size_t d = 1; d <= d_max; ++d) {
    const auto chi = zaslavsky_charpoly_coefficients(d);
    TPoly expected;
    for (const auto& c : chi) expected.emplace_back(c);
    trim(expected);
    if (series[d] != expected) return false;
  }
  return true;
}

}  // namespace entropic
