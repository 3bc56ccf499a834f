#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/polynomial.hpp"
#include "entropic/scalar.hpp"

namespace entropic {

enum class Signing { Oriented, AllNegative };

struct GraphModel {
  std::size_t nodes = 0;
  // 1-based endpoints; an oriented edge (i, j) leaves i and enters j
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  Signing signing = Signing::Oriented;
};

// SelfLoop, DuplicateEdge (in either orientation), InvalidInput for bad nodes.
void validate(const GraphModel& g);

GraphModel complete_graph(std::size_t d, Signing signing);
GraphModel cycle_graph(std::size_t n, Signing signing);

// Oriented: +1 at the tail, -1 at the head. All-negative: 1 at both ends.
// Dependent rows are dropped (last first) so the result has full row rank.
ExactMatrix incidence_matrix(const GraphModel& g);

Integer stirling2(long n, long k);

// Characteristic polynomial of -K_d from the Stirling-number formula;
// coefficient k multiplies t^k.
std::vector<Integer> zaslavsky_charpoly_coefficients(std::size_t d);
Polynomial zaslavsky_charpoly(std::size_t d);

struct RetinaRow {
  std::size_t d = 0;
  Integer degree;
  Integer mu;
};
// Rows d = 4..d_max, 4 <= d_max <= 10.
std::vector<RetinaRow> retina_table(std::size_t d_max);
RetinaRow retina_row(std::size_t d);

}  // namespace entropic
