#ifndef LOOPCALC_CLOSED_SURFACE_HPP
#define LOOPCALC_CLOSED_SURFACE_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopcalc/homology.hpp"
#include "loopcalc/loop.hpp"
#include "loopcalc/star_calculus.hpp"

namespace loopcalc {

struct FillingVertex {
  std::string id;
  std::vector<std::string> rotation;  ///< incident edge ids, counterclockwise
  bool operator==(const FillingVertex&) const = default;
};

struct FillingEdge {
  std::string id;
  std::string blue;
  std::string red;
  bool operator==(const FillingEdge&) const = default;
};

struct FillingGraphSpec {
  std::vector<FillingVertex> blue;
  std::vector<FillingVertex> red;
  std::vector<FillingEdge> edges;
  bool operator==(const FillingGraphSpec&) const = default;
};

/// A triangulated closed oriented surface. Each triangle lists its three sides
/// counterclockwise by signed label ("a" or "-a"); side j runs from corner j to corner j+1
/// and "-a" means that side is glued to a against the direction of a.
struct Triangulation {
  std::vector<std::array<std::string, 3>> triangles;
};

/// Triangles given by vertex labels (u, v, w), counterclockwise.
Triangulation simplicial_triangulation(const std::vector<std::array<std::string, 3>>& triangles);

/// Blue vertices of the triangulation, red centers of its triangles, one edge per corner.
FillingGraphSpec from_triangulation(const Triangulation& t);

/// Caps every boundary circle of a bounded surface with a red vertex.
FillingGraphSpec cap_boundaries(const StarFilledSurface& s);

/// Exchange of colours.
FillingGraphSpec dual_spec(const FillingGraphSpec& spec);

/// A filling graph of a closed surface: the bounded surface obtained by
/// removing disks around red vertices, with one star per blue vertex, together with a
/// presentation of the closed surface group.
class FillingGraph {
public:
  /// Throws InvalidInput for non-bipartite input, broken rotations, or oversize faces.
  static FillingGraph build(const FillingGraphSpec& spec);

  const FillingGraphSpec& spec() const { return spec_; }
  const StarFilledSurface& surface() const { return surface_; }
  const std::vector<std::vector<std::string>>& faces() const { return faces_; }
  int euler_characteristic() const;
  int genus() const { return (2 - euler_characteristic()) / 2; }

  /// Star index and edge index on the bounded surface of the end of `edge` at its blue vertex.
  std::pair<std::size_t, int> blue_end(const std::string& edge) const;
  /// Loop around the disk of a red vertex, read along its rotation.
  const std::vector<CombinatorialLoop>& relator_loops() const { return relators_; }

private:
  FillingGraphSpec spec_;
  StarFilledSurface surface_;
  std::vector<std::vector<std::string>> faces_;
  std::map<std::string, std::pair<std::size_t, int>> blue_end_;
  std::vector<CombinatorialLoop> relators_;
};

/// Free homotopy classes of the closed surface, written as strings: "1" for the trivial
/// class, "(p,q)" in genus 1, a word in g1..gN (capital letters for inverses) otherwise.
class ClosedGroup {
public:
  explicit ClosedGroup(const FillingGraph& fg);

  int genus() const { return genus_; }
  /// Relators as words over 1..rank.
  const std::vector<Word>& relators() const { return relators_; }
  int rank() const { return static_cast<int>(cotree_.size()); }

  /// The class of a dual-graph word of the bounded surface as a generator word.
  Word generator_word(std::span<const Letter> gate_word) const;
  std::string normalize(const HomotopyClass& c, int bound = 8) const;
  std::string normalize_word(std::span<const Letter> generator_word, int bound = 8) const;
  /// Dehn-reduced cyclic word (genus >= 2 only).
  Word dehn_reduce(std::span<const Letter> generator_word) const;

private:
  int genus_ = 0;
  std::vector<int> generator_of_gate_;  // 0 for tree gates
  std::vector<std::size_t> cotree_;
  std::vector<Word> relators_;
  std::vector<Word> relator_cycles_;  // all rotations of relators and their inverses
  IntMatrix projection_;              // genus 1
};

using ClosedSum = LinearCombination<std::string>;
using ClosedTensorSum = LinearCombination<std::pair<std::string, std::string>>;

/// 2 x._Phi y and its half, computed on the bounded surface.
Aggregate<Coefficient> closed_form(const FillingGraph& fg, const CombinatorialLoop& a, const CombinatorialLoop& b);
/// Star-filling bracket with every term class normalized in the closed surface group.
Aggregate<ClosedSum> closed_bracket(const FillingGraph& fg, const ClosedGroup& group, const CombinatorialLoop& a,
                                    const CombinatorialLoop& b, int bound = 8);
/// Star-filling cobracket; tensor terms with a factor trivial in the closed surface are dropped.
Aggregate<ClosedTensorSum> closed_cobracket(const FillingGraph& fg, const ClosedGroup& group,
                                            const CombinatorialLoop& a, int bound = 8);

/// Transports a loop on the bounded surface of fg to the bounded surface of the dual graph.
CombinatorialLoop to_dual_loop(const FillingGraph& fg, const FillingGraph& dual, const CombinatorialLoop& a);

/// The torus of the worked example: blue O, red A, edges e1..e4, and its loops a and b.
FillingGraphSpec torus_example_spec();
std::pair<CombinatorialLoop, CombinatorialLoop> torus_example_loops(const FillingGraph& fg);

}  // namespace loopcalc

#endif  // LOOPCALC_CLOSED_SURFACE_HPP
