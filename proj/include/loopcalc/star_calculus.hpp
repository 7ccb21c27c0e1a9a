#ifndef LOOPCALC_STAR_CALCULUS_HPP
#define LOOPCALC_STAR_CALCULUS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopcalc/gate_calculus.hpp"
#include "loopcalc/loop.hpp"

namespace loopcalc {

struct ExpandOptions {
  /// Lists the p'' points of a gate before its p' points. Deliberately wrong; used only to
  /// check that the fuzz harness catches a broken evaluator.
  bool swap_prime_order = false;
};

/// Gate configuration of the core made of the single star disk: transit p through edge e
/// gives p' on gate(s,e) with sign mu_p and p'' on gate(s,e-1) with sign -mu_p. On gate(s,e)
/// the p' points of edge e come first, outermost first, then the p'' points of edge e+1,
/// innermost first.
GateConfiguration expand_to_gates(const StarFilledSurface& s, std::size_t star,
                                  std::span<const CombinatorialLoop> loops, ExpandOptions opt = {});

/// a ._s b = sum over edges of (a.e)(b.e+) - (b.e)(a.e+).
Coefficient star_form(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a,
                      const CombinatorialLoop& b);
/// [a,b]_s; a and b must not share a (star, edge, pos).
FormalSum star_bracket(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a,
                       const CombinatorialLoop& b);
TensorSum star_cobracket(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a);

class OddCoefficient : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

template <typename V>
struct Aggregate {
  std::vector<std::pair<std::string, V>> per_star;
  V sum{};     ///< the doubled operation
  V halved{};  ///< the operation itself, when `even`
  bool even = true;
};

/// Sums over all stars of the filling; throws OddCoefficient if the sum is not even.
Aggregate<Coefficient> aggregate_form(const StarFilledSurface& s, const CombinatorialLoop& a,
                                      const CombinatorialLoop& b);
Aggregate<FormalSum> aggregate_bracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                       const CombinatorialLoop& b);
Aggregate<TensorSum> aggregate_cobracket(const StarFilledSurface& s, const CombinatorialLoop& a);

/// Orientation of the gates of one star, cut out of a surface-wide orientation.
GateOrientation star_orientation(const StarFilledSurface& s, std::size_t star, const GateOrientation& global);

/// The same sums evaluated through expand_to_gates and the gate calculus, with the given
/// surface-wide orientation (empty = reference). `omega_part` selects the w-dependent
/// operation instead of its skew part; such sums need not be even, so they never throw.
struct GateRouteOptions {
  GateOrientation omega;
  bool omega_part = false;
  ExpandOptions expand;
};

Aggregate<Coefficient> gate_route_form(const StarFilledSurface& s, const CombinatorialLoop& a,
                                       const CombinatorialLoop& b, const GateRouteOptions& opt = {});
Aggregate<FormalSum> gate_route_bracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                        const CombinatorialLoop& b, const GateRouteOptions& opt = {});
Aggregate<TensorSum> gate_route_cobracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                          const GateRouteOptions& opt = {});

}  // namespace loopcalc

#endif  // LOOPCALC_STAR_CALCULUS_HPP
