#pragma once

#include <cstdint>

namespace inflation {

/// Enumeration limits shared by every exhaustive routine. Exceeding one is
/// reported, never silently truncated.
struct Budgets {
  std::uint64_t colorings = 10'000'000;
  std::uint64_t tuples = 10'000'000;
  std::uint64_t oracle_nodes = 1'000'000;
  unsigned workers = 1;
};

}  // namespace inflation
