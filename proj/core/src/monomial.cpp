#include "entropic/monomial.hpp"

#include <cstring>
#include <string>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

void check_index(std::size_t index) {
  if (index >= kMaxArity) {
    raise(ErrorKind::TooLarge, "variable index " + std::to_string(index) + " exceeds the supported arity");
  }
}

std::uint8_t checked_exponent(unsigned value) {
  if (value > kMaxExponent) raise(ErrorKind::TooLarge, "exponent " + std::to_string(value) + " exceeds 255");
  return static_cast<std::uint8_t>(value);
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxArity) raise(ErrorKind::TooLarge, "too many variables for a monomial");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exps_[i] = checked_exponent(exponents[i]);
    m.degree_ = static_cast<std::uint16_t>(m.degree_ + exponents[i]);
  }
  return m;
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t index, unsigned exponent) {
  check_index(index);
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[index] + exponent);
  exps_[index] = checked_exponent(exponent);
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kMaxArity; ++i) {
    const unsigned sum = unsigned{exps_[i]} + other.exps_[i];
    if (sum > kMaxExponent) raise(ErrorKind::TooLarge, "exponent overflow in monomial product");
    exps_[i] = static_cast<std::uint8_t>(sum);
  }
  degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return *this;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxArity; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
  Monomial out = numerator;
  for (std::size_t i = 0; i < kMaxArity; ++i) out.exps_[i] = static_cast<std::uint8_t>(out.exps_[i] - exps_[i]);
  out.degree_ = static_cast<std::uint16_t>(numerator.degree_ - degree_);
  return out;
}

std::vector<unsigned> Monomial::exponents(std::size_t arity) const {
  std::vector<unsigned> out(arity);
  for (std::size_t i = 0; i < arity; ++i) out[i] = exps_[i];
  return out;
}

std::size_t Monomial::support_width() const {
  for (std::size_t i = kMaxArity; i > 0; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace entropic
