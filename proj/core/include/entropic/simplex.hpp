#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/scalar.hpp"

namespace entropic {

// Phase-one simplex over the rationals with Bland's rule.
// Returns some x >= 0 with m x = rhs, or nullopt when none exists.
std::optional<std::vector<Scalar>> nonnegative_solution(const ExactMatrix& m,
                                                        std::span<const Scalar> rhs);

}  // namespace entropic
