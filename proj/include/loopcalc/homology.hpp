#ifndef LOOPCALC_HOMOLOGY_HPP
#define LOOPCALC_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "loopcalc/surface.hpp"
#include "loopcalc/word.hpp"

namespace loopcalc {

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Signed letter counts per gate: +1 for each outward crossing, -1 for each inward one.
IntVector gate_counts(std::span<const Letter> w, std::size_t gate_count);

/// Breadth-first spanning tree of the dual graph, rooted at the first star.
struct SpanningTree {
  std::vector<bool> in_tree;  ///< per gate
  std::vector<std::size_t> cotree;  ///< gates not in the tree, ascending
};

SpanningTree spanning_tree(const StarFilledSurface& s);

/// The abelianization h: classes -> Z^(#gates - #vertices + 1), read as the signed
/// counts on the gates outside a spanning tree of the dual graph.
class Abelianization {
public:
  explicit Abelianization(const StarFilledSurface& s);
  int rank() const { return static_cast<int>(tree_.cotree.size()); }
  IntVector operator()(std::span<const Letter> w) const;
  IntVector operator()(const HomotopyClass& c) const { return (*this)(c.word()); }
  const SpanningTree& tree() const { return tree_; }

private:
  std::size_t gate_count_;
  SpanningTree tree_;
};

/// Row-style Hermite reduction: U unimodular with U * M = H in row echelon form.
struct HermiteForm {
  IntMatrix U;
  IntMatrix H;
  int rank = 0;
};

HermiteForm row_hermite(const IntMatrix& M);

/// For relations given as the columns of R, an integer map Z^m -> Z^(m - rank R) whose kernel
/// contains every column; it is onto the free part of the quotient Z^m / im R.
IntMatrix quotient_projection(const IntMatrix& R);

}  // namespace loopcalc

#endif  // LOOPCALC_HOMOLOGY_HPP
