#pragma once

#include <string>
#include <vector>

#include "entropic/linalg.hpp"

namespace entropic {

// Symmetric m x m matrix of indeterminates x_ij (i <= j), variables ordered
// x11, x12, ..., x1m, x22, ..., xmm.
PolyMatrix symbolic_symmetric(std::size_t m);
std::vector<std::string> symbolic_symmetric_names(std::size_t m);

// Gram matrix of Z -> E^{-1} X Z - Z X E^{-1} on the skew basis
// W_ij = e_i e_j^T - e_j e_i^T (i < j, lexicographic), under the inner
// product <P, Q> = trace(P^T E Q E). NotPositiveDefinite unless E is.
ExactMatrix commutator_gram(const ExactMatrix& x, const ExactMatrix& e);
PolyMatrix commutator_gram(const PolyMatrix& x, const ExactMatrix& e);

// det(G) / (2^{C(m,2)} det(E)^{m-1}).
Scalar symdisc(const ExactMatrix& x, const ExactMatrix& e);
Polynomial symdisc(const PolyMatrix& x, const ExactMatrix& e);

// disc_t det(t E - X).
Scalar generalized_char_disc(const ExactMatrix& x, const ExactMatrix& e);
Polynomial generalized_char_disc(const PolyMatrix& x, const ExactMatrix& e);

struct SosCertificate {
  // det(Q_I)^2 prod_{i in I} D_ii over the maximal minors of Q = L^T R,
  // where K = L D L^T is the Gram matrix of the symmetric basis and R
  // represents the commutator map in that basis.
  std::vector<Scalar> terms;
  Scalar gram_determinant;
};
SosCertificate sos_certificate(const ExactMatrix& x, const ExactMatrix& e);

}  // namespace entropic
