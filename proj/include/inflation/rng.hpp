#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace inflation {

// mt19937_64 output is fixed by the standard; the helpers below avoid
// std::uniform_int_distribution so sampled results do not depend on the
// standard library in use.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection. bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

}  // namespace inflation
