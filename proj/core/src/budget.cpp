#include "entropic/budget.hpp"

#include <cstdlib>
#include <string>

#include "entropic/errors.hpp"

namespace entropic {

std::uint64_t enumeration_budget() {
  constexpr std::uint64_t kDefault = 4'000'000;
  const char* env = std::getenv("ENTROPIC_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return kDefault;
  return value;
}

void check_budget(std::uint64_t count, std::string_view what) {
  const auto budget = enumeration_budget();
  if (count > budget) {
    raise(ErrorKind::TooLarge, std::string(what) + " needs " + std::to_string(count) +
                                   " subsets, over the budget of " + std::to_string(budget));
  }
}

}  // namespace entropic
