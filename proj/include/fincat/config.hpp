#pragma once

#include <cstddef>
#include <cstdint>

namespace fincat {

/// Enumeration limits shared by every exhaustive search in the library.
struct Budget {
  /// Maximum number of arrows a constructed category may carry.
  std::size_t max_arrows = 10'000;
  /// Maximum number of cones enumerated (and certified) per diagram.
  std::size_t max_cones = 10'000;
  /// Maximum carrier size of any constructed finite set.
  std::size_t max_carrier = 4'096;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

}  // namespace fincat
