#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entropic::tools {

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  std::string fixture_dir;
  std::uint64_t seed = 20100;
};

// One entry per acceptance item, in order; a thrown error counts as a failure.
std::vector<CheckResult> run_checks(const CheckOptions& options);

std::string format_line(const CheckResult& r);

}  // namespace entropic::tools
