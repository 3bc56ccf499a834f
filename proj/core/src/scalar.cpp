#include "entropic/scalar.hpp"

#include <cctype>
#include <cmath>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) raise(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  std::size_t start = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
  if (start == digits.size()) raise(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      raise(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string buffer(digits.front() == '+' ? digits.substr(1) : digits);
  return Integer(buffer, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto token = trim(text);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(token, text));
  Integer num = parse_integer(trim(token.substr(0, slash)), text);
  Integer den = parse_integer(trim(token.substr(slash + 1)), text);
  if (den == 0) raise(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

long double to_long_double(const Scalar& value) {
  // mpq_get_d truncates to double; recover the extra bits of long double
  // from the residual.
  const double head = value.get_d();
  if (!std::isfinite(head)) return head;
  Scalar residual = value - Scalar(head);
  return static_cast<long double>(head) + static_cast<long double>(residual.get_d());
}

Scalar power(const Scalar& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Scalar(num, den);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace entropic
