#ifndef LOOPCALC_FUZZ_HPP
#define LOOPCALC_FUZZ_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "loopcalc/canonical.hpp"
#include "loopcalc/json_io.hpp"
#include "loopcalc/random_loops.hpp"
#include "loopcalc/star_calculus.hpp"

namespace loopcalc {

/// Pass/fail counts per named property.
struct CheckTally {
  std::map<std::string, std::size_t> passed;
  std::map<std::string, std::size_t> failed;

  /// Returns ok.
  bool record(const std::string& name, bool ok);
  bool ok() const { return failed.empty(); }
  std::size_t total_passed() const;
  std::size_t total_failed() const;
  void merge(const CheckTally& o);
};

struct PropertyOptions {
  /// Gate counts up to this size are checked over every orientation; larger ones are sampled.
  std::size_t exhaustive_gates = 6;
  std::size_t sampled_orientations = 16;
  ExpandOptions expand;
};

/// Property groups over one disjoint loop pair. Names are prefixed by the group.
void check_method_agreement(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                            CheckTally& t, const PropertyOptions& opt = {});
void check_omega_independence(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                              Rng& rng, CheckTally& t, const PropertyOptions& opt = {});
void check_identities(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b, Rng& rng,
                      CheckTally& t, const PropertyOptions& opt = {});
void check_evenness(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                    CheckTally& t, const PropertyOptions& opt = {});
void check_abelian_shadows(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                           CheckTally& t);
/// Applies `moves` random moves to each loop and compares every output with the original.
void check_homotopy_invariance(const StarFilledSurface& s, const CombinatorialLoop& a, const CombinatorialLoop& b,
                               std::size_t moves, Rng& rng, CheckTally& t);

/// "g1b1" style surface names.
GeneratorSet parse_surface_name(const std::string& name);

struct FuzzOptions {
  std::string surface = "g1b1";
  std::size_t pairs = 100;
  std::size_t moves = 10;
  std::uint64_t seed = 1;
  std::size_t max_transits = 12;
  bool inject_bug = false;
};

struct FuzzReport {
  CheckTally tally;
  json_io::Json json;
  bool ok() const { return tally.ok(); }
};

/// Deterministic in the options; pair i draws from its own stream seeded by (seed, i).
FuzzReport run_fuzz(const FuzzOptions& opt);

}  // namespace loopcalc

#endif  // LOOPCALC_FUZZ_HPP
