#include "entropic/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "entropic/errors.hpp"

namespace entropic {

Polynomial elementary_symmetric(std::size_t arity, std::size_t k) {
  if (k > arity) return Polynomial(arity);
  std::vector<Polynomial::Term> terms;
  std::vector<bool> pick(arity, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Monomial m;
    for (std::size_t i = 0; i < arity; ++i)
      if (pick[i]) m.set(i, 1);
    terms.push_back({m, Scalar(1)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Polynomial::from_terms(arity, std::move(terms));
}

namespace {

Polynomial permuted(const Polynomial& p, const std::vector<std::size_t>& map) {
  return p.remap(p.arity(), map);
}

}  // namespace

bool is_symmetric(const Polynomial& p) {
  const std::size_t n = p.arity();
  if (n < 2) return true;
  // A transposition and a full cycle generate the symmetric group.
  std::vector<std::size_t> swap12(n);
  std::iota(swap12.begin(), swap12.end(), 0);
  std::swap(swap12[0], swap12[1]);
  std::vector<std::size_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permuted(p, swap12) == p && permuted(p, cycle) == p;
}

Polynomial to_elementary(const Polynomial& p) {
  if (!is_symmetric(p)) raise(ErrorKind::NotSymmetric, "polynomial is not symmetric");
  const std::size_t d = p.arity();
  std::vector<Polynomial> e;
  for (std::size_t k = 1; k <= d; ++k) e.push_back(elementary_symmetric(d, k));
  std::vector<std::vector<Polynomial>> powers(d);
  for (std::size_t k = 0; k < d; ++k) powers[k].push_back(Polynomial::constant(d, 1));

  Polynomial rest = p;
  std::vector<Polynomial::Term> result;
  while (!rest.is_zero()) {
    const auto lead = rest.lex_leading_term();
    // Lex-leading exponents of a symmetric polynomial are non-increasing.
    Monomial target;
    Polynomial product = Polynomial::constant(d, lead.coefficient);
    for (std::size_t k = 0; k < d; ++k) {
      const unsigned next = k + 1 < d ? lead.monomial[k + 1] : 0;
      const unsigned exp = lead.monomial[k] - next;
      if (exp == 0) continue;
      target.set(k, exp);
      auto& cache = powers[k];
      while (cache.size() <= exp) cache.push_back(cache.back() * e[k]);
      product = product * cache[exp];
    }
    result.push_back({target, lead.coefficient});
    rest -= product;
  }
  return Polynomial::from_terms(d, std::move(result));
}

Polynomial from_elementary(const Polynomial& q, std::size_t arity) {
  std::vector<Polynomial> images;
  for (std::size_t k = 1; k <= q.arity(); ++k) images.push_back(elementary_symmetric(arity, k));
  return q.substitute(images);
}

}  // namespace entropic
