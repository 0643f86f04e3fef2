#pragma once

#include <cstdint>
#include <string>

namespace braceforge {

/// Cap on the number of candidates an exhaustive search may visit.
struct Budget {
  std::uint64_t max_candidates = 200'000'000;

  /// Reads BRACEFORGE_BUDGET if set, otherwise the default.
  static Budget from_env();

  /// Throws BudgetExceeded when `count` is over the cap.
  void check(std::uint64_t count, const std::string& what) const;
};

/// Saturating product, for estimating search-space sizes.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace braceforge
