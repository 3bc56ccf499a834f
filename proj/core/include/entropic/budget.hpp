#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace entropic {

// Column sets are bitmasks; this bounds every subset enumeration.
inline constexpr std::size_t kMaxColumns = 20;

// Maximum number of subsets any single enumeration may visit. Read from
// ENTROPIC_BUDGET when set, otherwise a default of 4'000'000.
std::uint64_t enumeration_budget();

// Raises TooLarge when count exceeds the budget.
void check_budget(std::uint64_t count, std::string_view what);

}  // namespace entropic
