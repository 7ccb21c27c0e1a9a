#ifndef LOOPCALC_RANDOM_LOOPS_HPP
#define LOOPCALC_RANDOM_LOOPS_HPP

#include <random>
#include <span>

#include "loopcalc/loop.hpp"

namespace loopcalc {

using Rng = std::mt19937_64;

/// A random walk through regions, closed up by a shortest path back to its start.
/// Positions are random, distinct per edge, and avoid those of `avoid`.
CombinatorialLoop random_loop(const StarFilledSurface& s, Rng& rng, std::size_t max_transits = 12,
                              std::span<const CombinatorialLoop> avoid = {});

/// A random class-preserving move; fresh positions avoid those of `others`.
Move random_move(const StarFilledSurface& s, const CombinatorialLoop& loop, Rng& rng,
                 std::span<const CombinatorialLoop> others = {});

}  // namespace loopcalc

#endif  // LOOPCALC_RANDOM_LOOPS_HPP
