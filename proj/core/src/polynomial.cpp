#include "entropic/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

void check_arity(std::size_t arity) {
  if (arity > kMaxArity) raise(ErrorKind::TooLarge, "polynomial arity " + std::to_string(arity) + " exceeds the limit");
}

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) {
    raise(ErrorKind::InvalidInput, "arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grlex_compare(a.monomial, b.monomial) > 0;
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) { check_arity(arity); }

Polynomial Polynomial::constant(std::size_t arity, const Scalar& value) {
  Polynomial p(arity);
  if (value != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) raise(ErrorKind::InvalidInput, "variable index out of range");
  return monomial(arity, Monomial::variable(index), Scalar(1));
}

Polynomial Polynomial::monomial(std::size_t arity, const Monomial& m, const Scalar& coefficient) {
  Polynomial p(arity);
  if (m.support_width() > arity) raise(ErrorKind::InvalidInput, "monomial uses variables beyond the arity");
  if (coefficient != 0) p.terms_.push_back({m, coefficient});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  Polynomial p(arity);
  for (const auto& t : terms) {
    if (t.monomial.support_width() > arity) raise(ErrorKind::InvalidInput, "monomial uses variables beyond the arity");
  }
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0); }

int Polynomial::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }

int Polynomial::degree_in(std::size_t var) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) best = std::max(best, static_cast<int>(t.monomial[var]));
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) raise(ErrorKind::ZeroInput, "leading term of the zero polynomial");
  return terms_.front();
}

const Polynomial::Term& Polynomial::lex_leading_term() const {
  if (terms_.empty()) raise(ErrorKind::ZeroInput, "leading term of the zero polynomial");
  return *std::max_element(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return lex_compare(a.monomial, b.monomial) < 0;
  });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial{}); }

void Polynomial::add_scaled(const Polynomial& other, int sign) {
  require_same_arity(*this, other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && grlex_compare(a->monomial, b->monomial) > 0)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_compare(a->monomial, b->monomial) < 0) {
      out.push_back({b->monomial, sign > 0 ? b->coefficient : Scalar(-b->coefficient)});
      ++b;
    } else {
      Scalar c = sign > 0 ? Scalar(a->coefficient + b->coefficient) : Scalar(a->coefficient - b->coefficient);
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= factor;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  Polynomial out(a.arity());
  if (a.is_zero() || b.is_zero()) return out;
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& many = a.size() == 1 ? b : a;
    out.terms_.reserve(many.size());
    // Multiplying by a monomial preserves the term order.
    for (const auto& t : many.terms_) out.terms_.push_back({t.monomial * single.monomial, t.coefficient * single.coefficient});
    return out;
  }
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  Scalar product;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(product.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      if (inserted) {
        it->second = product;
      } else {
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), product.get_mpq_t());
      }
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(arity_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= arity_) raise(ErrorKind::InvalidInput, "derivative variable out of range");
  Polynomial out(arity_);
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.terms_.push_back({m, t.coefficient * e});
  }
  // Lowering one exponent can reorder terms of different degrees.
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity_) raise(ErrorKind::InvalidInput, "evaluation point has the wrong dimension");
  std::vector<std::vector<Scalar>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(Scalar(1));
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar value = t.coefficient;
    for (std::size_t i = 0; i < arity_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      value *= cache[e];
    }
    sum += value;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) raise(ErrorKind::InvalidInput, "evaluation point has the wrong dimension");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double value = t.coefficient.get_d();
    for (std::size_t i = 0; i < arity_; ++i) {
      for (unsigned e = t.monomial[i]; e > 0; --e) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

namespace {

// Horner scheme in variable var over terms[lo, hi), which agree on the
// exponents of all earlier variables and are sorted lex descending.
Polynomial substitute_range(const std::vector<Polynomial::Term>& terms, std::size_t lo, std::size_t hi,
                            std::size_t var, std::span<const Polynomial> images, std::size_t target) {
  if (var == images.size()) {
    Scalar sum = 0;
    for (std::size_t i = lo; i < hi; ++i) sum += terms[i].coefficient;
    return Polynomial::constant(target, sum);
  }
  Polynomial acc(target);
  unsigned previous = terms[lo].monomial[var];
  std::size_t i = lo;
  while (i < hi) {
    const unsigned e = terms[i].monomial[var];
    std::size_t j = i;
    while (j < hi && terms[j].monomial[var] == e) ++j;
    for (unsigned k = e; k < previous; ++k) acc = acc * images[var];
    previous = e;
    acc += substitute_range(terms, i, j, var + 1, images, target);
    i = j;
  }
  for (unsigned k = 0; k < previous; ++k) acc = acc * images[var];
  return acc;
}

}  // namespace

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != arity_) raise(ErrorKind::InvalidInput, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().arity();
  for (const auto& img : images) require_same_arity(img, images.front());
  if (terms_.empty()) return Polynomial(target);
  if (arity_ == 0) return constant(target, terms_.front().coefficient);
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Term& a, const Term& b) { return lex_compare(a.monomial, b.monomial) > 0; });
  return substitute_range(sorted, 0, sorted.size(), 0, images, target);
}

Polynomial Polynomial::remap(std::size_t new_arity, std::span<const std::size_t> index_map) const {
  if (index_map.size() != arity_) raise(ErrorKind::InvalidInput, "remap needs one target per variable");
  Polynomial out(new_arity);
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= new_arity) raise(ErrorKind::InvalidInput, "remap target out of range");
      m.set(index_map[i], m[index_map[i]] + t.monomial[i]);
    }
    out.terms_.push_back({m, t.coefficient});
  }
  out.canonicalize();
  return out;
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  require_same_arity(dividend, divisor);
  if (divisor.is_zero()) raise(ErrorKind::ZeroInput, "division by the zero polynomial");
  if (divisor.is_constant()) {
    return dividend * Scalar(1 / divisor.leading_term().coefficient);
  }
  const auto& lead = divisor.leading_term();
  const Scalar lead_inverse = 1 / lead.coefficient;
  std::map<Monomial, Scalar, GrlexGreater> remainder;
  for (const auto& t : dividend.terms()) remainder.emplace(t.monomial, t.coefficient);
  std::vector<Polynomial::Term> quotient;
  Scalar product;
  while (!remainder.empty()) {
    auto top = remainder.begin();
    if (!lead.monomial.divides(top->first)) raise(ErrorKind::DivisionNotExact, "divisor does not divide dividend");
    const Monomial qm = lead.monomial.divide_into(top->first);
    const Scalar qc = top->second * lead_inverse;
    remainder.erase(top);
    for (auto t = std::next(divisor.terms().begin()); t != divisor.terms().end(); ++t) {
      mpq_mul(product.get_mpq_t(), qc.get_mpq_t(), t->coefficient.get_mpq_t());
      auto [it, inserted] = remainder.try_emplace(qm * t->monomial);
      if (inserted) {
        it->second = -product;
      } else {
        mpq_sub(it->second.get_mpq_t(), it->second.get_mpq_t(), product.get_mpq_t());
        if (it->second == 0) remainder.erase(it);
      }
    }
    quotient.push_back({qm, qc});
  }
  return Polynomial::from_terms(dividend.arity(), std::move(quotient));
}

bool divides(const Polynomial& divisor, const Polynomial& dividend) {
  try {
    (void)divide_exact(dividend, divisor);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionNotExact) return false;
    throw;
  }
}

Polynomial primitive_normalize(const Polynomial& p) {
  if (p.is_zero()) raise(ErrorKind::ZeroInput, "cannot normalize the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    Integer scaled = t.coefficient.get_num() * (den_lcm / t.coefficient.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_term().coefficient < 0) factor = -factor;
  return p * factor;
}

bool proportional(const Polynomial& p, const Polynomial& q, Scalar* ratio) {
  if (p.arity() != q.arity()) return false;
  if (p.is_zero() || q.is_zero()) return false;
  if (p.size() != q.size()) return false;
  const Scalar r = p.terms().front().coefficient / q.terms().front().coefficient;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p.terms()[i];
    const auto& b = q.terms()[i];
    if (!(a.monomial == b.monomial) || a.coefficient != r * b.coefficient) return false;
  }
  if (ratio) *ratio = r;
  return true;
}

std::vector<std::string> default_variable_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  if (names.size() < p.arity()) raise(ErrorKind::InvalidInput, "not enough variable names");
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    bool wrote = false;
    if (!unit || t.monomial.degree() == 0) {
      out << to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < p.arity(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out << "*";
      out << names[i];
      if (e > 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

std::string to_string(const Polynomial& p) {
  const auto names = default_variable_names("x", p.arity());
  return to_string(p, names);
}

}  // namespace entropic

namespace entropic {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::InvalidInput, what + " at offset " + std::to_string(pos_) + " in polynomial text");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') acc += term();
      else acc -= term();
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        Polynomial divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        acc *= Scalar(1 / divisor.constant_term());
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(names_.size(), Scalar(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return ExpressionParser(text, names).parse();
}

}  // namespace entropic
