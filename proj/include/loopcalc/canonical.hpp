#ifndef LOOPCALC_CANONICAL_HPP
#define LOOPCALC_CANONICAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopcalc/loop.hpp"
#include "loopcalc/surface.hpp"

namespace loopcalc {

struct NamedLoop {
  std::string name;
  CombinatorialLoop loop;
};

/// A surface together with loops based in a common region, usable as free generators.
struct GeneratorSet {
  StarFilledSurface surface;
  std::size_t base_region = 0;
  std::vector<NamedLoop> generators;
  /// Extra names resolving to generators (e.g. "x" for "x1" on a one-holed torus).
  std::map<std::string, std::string> aliases;

  const CombinatorialLoop& generator(const std::string& name) const;
  bool has(const std::string& name) const;
};

/// One-star model of the genus-g surface with b boundary circles: n = max(2, 4g+2(b-1))
/// edges, handle bands on gates (4k, 4k+2), (4k+1, 4k+3) and boundary bands on adjacent
/// gate pairs after them. Generators x1,y1,...,xg,yg,z1,...,z(b-1) are based in region r0,
/// with x_k ·y_k = +1. The disk (0,1) is only built when `allow_disk` is set.
GeneratorSet canonical_surface(int genus, int boundary, bool allow_disk = false);

using GeneratorWord = std::vector<std::pair<std::string, int>>;

/// Parses "x y X", "x y^-1", "x*y", or compact "xyXY" (uppercase = inverse of a
/// one-letter generator). "1" and the empty string denote the empty word.
GeneratorWord parse_generator_word(const std::string& text, const GeneratorSet& gens);

CombinatorialLoop reversed(const CombinatorialLoop& loop);

/// Concatenation at the common base region, with positions renumbered 0,1,2,... per edge.
CombinatorialLoop compile_word(const GeneratorSet& gens, const GeneratorWord& word);
CombinatorialLoop compile_word(const GeneratorSet& gens, const std::string& text);

}  // namespace loopcalc

#endif  // LOOPCALC_CANONICAL_HPP
