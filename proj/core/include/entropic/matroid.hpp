#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/polynomial.hpp"

namespace entropic {

// Bit j set <=> column j (0-based) belongs to the set.
using ColumnSet = std::uint32_t;

ColumnSet make_set(std::span<const std::size_t> columns);
std::vector<std::size_t> members(ColumnSet set);
inline std::size_t cardinality(ColumnSet set) { return static_cast<std::size_t>(__builtin_popcount(set)); }
inline bool is_subset(ColumnSet a, ColumnSet b) { return (a & ~b) == 0; }

// Incremental echelon basis of a subspace of Q^dim.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}
  // Returns true when v enlarged the span.
  bool add(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;

  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

struct Circuit {
  ColumnSet support = 0;
  // Full-length kernel vector: primitive integers, first nonzero positive.
  std::vector<Scalar> vector;
};

struct Flat {
  ColumnSet members = 0;
  std::size_t rank = 0;
};

class Matroid {
 public:
  // Requires full row rank and no zero columns (RankDeficient, ZeroColumn);
  // at most kMaxColumns columns (TooLarge).
  explicit Matroid(ExactMatrix matrix);

  const ExactMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }
  std::size_t size() const { return matrix_.cols(); }
  ColumnSet ground() const { return size() == 0 ? 0 : static_cast<ColumnSet>((std::uint64_t{1} << size()) - 1); }

  std::size_t rank_of(ColumnSet set) const;
  ColumnSet closure(ColumnSet set) const;
  bool is_flat(ColumnSet set) const { return closure(set) == set; }

  const std::vector<Circuit>& circuits() const { return circuits_; }
  // flats_by_rank()[r] lists the flats of rank r in increasing bitmask order.
  const std::vector<std::vector<Flat>>& flats_by_rank() const { return flats_; }
  std::size_t flat_count() const;

  // mu(empty closure, F) in the lattice of flats; NotAFlat otherwise.
  const Integer& mobius(ColumnSet flat) const;

  // coefficient k multiplies t^k; length rank()+1.
  const std::vector<Integer>& char_poly_coefficients() const { return chi_; }
  // Polynomial in one variable t.
  Polynomial char_poly() const;

 private:
  void enumerate_circuits();
  void enumerate_flats();
  void compute_mobius();

  ExactMatrix matrix_;
  std::vector<std::vector<Scalar>> columns_;
  std::vector<Circuit> circuits_;
  std::vector<std::vector<Flat>> flats_;
  std::unordered_map<ColumnSet, Integer> mobius_;
  std::vector<Integer> chi_;
};

// (-1)^d chi(0).
Integer mobius_invariant(const Matroid& m);
std::size_t parallel_class_count(const ExactMatrix& a);
bool is_basic(const Matroid& m);

// 2(-1)^d (d chi(0) + chi'(0)); BasicMatrix for basic input.
Integer entropic_degree(const Matroid& m);
// 2 d mu(A) - 2 sum of mu(A_J) over hyperplane flats J; BasicMatrix as above.
Integer entropic_degree_crosscheck(const Matroid& m);
// 2(n-d) C(n-1, d-2).
Integer generic_degree(long d, long n);

struct Minor {
  Matroid matroid;
  // Original indices of the columns kept in matroid, in order.
  std::vector<std::size_t> columns;
  // Original indices of columns that became zero (loops) and were removed.
  std::vector<std::size_t> dropped;
};

Minor restriction(const Matroid& m, ColumnSet j);
Minor contraction(const Matroid& m, ColumnSet j);
Minor deletion(const Matroid& m, std::size_t e);

bool is_isthmus(const Matroid& m, std::size_t e);

// 2(-1)^r (r chi(0) + chi'(0)) for any matroid; zero when loops are present.
Integer delta_invariant(const Matroid& m);

struct DeltaCheck {
  Integer whole;
  Integer deleted;
  Integer contracted;
  Integer contracted_mobius;
  bool holds = false;
};
// delta(M) = delta(M\e) + delta(M/e) + 2 mu(M/e), where contractions with
// loops contribute zero to both terms. IsthmusElement for an isthmus.
DeltaCheck delta_recurrence_check(const Matroid& m, std::size_t e);

struct RealLocusComponent {
  ColumnSet flat = 0;
  // Original column indices forming a basis of span(A_j : j in flat).
  std::vector<std::size_t> spanning_columns;
  // The basis vectors themselves, one per row.
  ExactMatrix span;
};

// Rank d-2 flats whose contraction is non-basic. BasicMatrix for basic input.
std::vector<RealLocusComponent> real_locus_components(const Matroid& m);

}  // namespace entropic
