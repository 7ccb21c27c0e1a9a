#ifndef LOOPCALC_LOOP_HPP
#define LOOPCALC_LOOP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "loopcalc/linear_combination.hpp"
#include "loopcalc/surface.hpp"
#include "loopcalc/word.hpp"

namespace loopcalc {

/// Rank of a crossing along its edge; smaller is closer to the star centre.
using Position = boost::rational<std::int64_t>;

/// One passage of a loop through a star disk, crossing `edge` once.
/// sign +1: enters through gate(star, edge) and leaves through gate(star, edge-1);
/// sign -1: enters through gate(star, edge-1) and leaves through gate(star, edge).
struct Transit {
  std::size_t star = 0;
  int edge = 0;
  int sign = 1;
  Position pos{0};
  bool operator==(const Transit&) const = default;
};

/// A cyclic sequence of transits. The empty sequence is the contractible loop sitting in
/// `anchor_region`.
struct CombinatorialLoop {
  std::vector<Transit> transits;
  std::size_t anchor_region = 0;
  bool operator==(const CombinatorialLoop&) const = default;
};

std::size_t entry_gate(const StarFilledSurface& s, const Transit& t);
std::size_t exit_gate(const StarFilledSurface& s, const Transit& t);

ValidationReport validate_loop(const StarFilledSurface& s, const CombinatorialLoop& loop);
/// Throws InvalidInput when the loop is not valid.
void require_valid(const StarFilledSurface& s, const CombinatorialLoop& loop);

/// Unreduced gate-letter word: transit i contributes letters 2i (in) and 2i+1 (out).
Word letter_word(const StarFilledSurface& s, const CombinatorialLoop& loop);

HomotopyClass to_class(const StarFilledSurface& s, const CombinatorialLoop& loop);
/// <a>_0: the class as a one-term sum, or zero when contractible.
FormalSum class_or_zero(const StarFilledSurface& s, const CombinatorialLoop& loop);
FormalSum class_or_zero(const HomotopyClass& c);

/// <a_p b_q>: a based at transit p, followed by b based at transit q (same star).
HomotopyClass graft(const StarFilledSurface& s, const CombinatorialLoop& a, std::size_t p,
                    const CombinatorialLoop& b, std::size_t q);
/// <a_{p1,p2}>: a from transit p1 forward to transit p2, closed inside the star.
HomotopyClass subloop(const StarFilledSurface& s, const CombinatorialLoop& a, std::size_t p1, std::size_t p2);

namespace move {
/// Two transits (star, edge, sign) then (star, edge, -sign), inserted before index `at`.
/// Their positions go into the gap just above `after` (or beyond every used position).
struct InsertCancellingPair {
  std::size_t at = 0;
  std::size_t star = 0;
  int edge = 0;
  int sign = 1;
  std::optional<Position> after;
};
/// Removes transits at `at` and `at+1` (cyclically).
struct RemoveCancellingPair {
  std::size_t at = 0;
};
/// Replaces all positions, in transit order.
struct Reposition {
  std::vector<Position> positions;
};
struct RotateBasepoint {
  std::size_t by = 0;
};
}  // namespace move

using Move = std::variant<move::InsertCancellingPair, move::RemoveCancellingPair, move::Reposition, move::RotateBasepoint>;

/// Applies a class-preserving move. Fresh positions avoid those of `loop` and of `others`.
CombinatorialLoop apply_move(const StarFilledSurface& s, const CombinatorialLoop& loop, const Move& m,
                             std::span<const CombinatorialLoop> others = {});

/// True when no (star, edge, pos) is shared between the loops.
bool positions_disjoint(const CombinatorialLoop& a, const CombinatorialLoop& b);
/// Copy of `moving` with colliding positions nudged so that it is disjoint from `fixed`.
CombinatorialLoop make_disjoint(const CombinatorialLoop& fixed, CombinatorialLoop moving);

using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Signed crossing counts a·e of one star, indexed by edge.
CountVector edge_counts(const CombinatorialLoop& loop, std::size_t star, int edge_count);

}  // namespace loopcalc

#endif  // LOOPCALC_LOOP_HPP
