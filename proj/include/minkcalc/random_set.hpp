#pragma once

#include <cstdint>

#include "minkcalc/compact_set.hpp"
#include "minkcalc/grid.hpp"

namespace minkcalc {

/// SplitMix64, pinned by its constants so every implementation of the
/// file formats reproduces identical sets from identical seeds.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Exact Bernoulli draw: true with probability num/den
  /// (decides next() * den < num * 2^64 in 128-bit arithmetic).
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(next()) * den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(num) << 64;
    return lhs < rhs;
  }
};

/// Random union of dyadic intervals: starting from [0,1], each level
/// splits every surviving interval in two and keeps each child with
/// probability keep_num/keep_den, drawing left-to-right. If a level
/// would go extinct its first candidate child is kept instead.
CompactSet random_cantor_like(std::uint64_t seed, unsigned depth, std::uint64_t keep_num,
                              std::uint64_t keep_den);

/// Random nonempty subset of the stage grid, each midpoint kept with
/// probability keep_num/keep_den (first midpoint forced when the draw
/// leaves none), fattened by g.eps/2. Members of U_n by construction.
CompactSet random_grid_fattened(std::uint64_t seed, const GridSpec& g, std::uint64_t keep_num,
                                std::uint64_t keep_den);

}  // namespace minkcalc
