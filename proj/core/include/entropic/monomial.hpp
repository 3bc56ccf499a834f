#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace entropic {

// Upper bound on the number of variables a polynomial may carry. The largest
// rings in use are the circuit-polynomial rings x_1..x_n with n <= 20.
inline constexpr std::size_t kMaxArity = 24;
inline constexpr unsigned kMaxExponent = 255;

// Dense exponent vector of fixed capacity; entries past the owning
// polynomial's arity are always zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t index) const { return exps_[index]; }
  unsigned degree() const { return degree_; }
  void set(std::size_t index, unsigned exponent);

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

  bool divides(const Monomial& other) const;
  // Requires divides(numerator).
  Monomial divide_into(const Monomial& numerator) const;

  std::vector<unsigned> exponents(std::size_t arity) const;
  // Highest index with a nonzero exponent plus one.
  std::size_t support_width() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic with x_1 > x_2 > ... ; "greater" means earlier in
  // canonical (descending) output.
  friend std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }
  friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxArity> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace entropic
