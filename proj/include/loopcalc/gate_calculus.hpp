#ifndef LOOPCALC_GATE_CALCULUS_HPP
#define LOOPCALC_GATE_CALCULUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "loopcalc/linear_combination.hpp"
#include "loopcalc/word.hpp"

namespace loopcalc {

/// A point where a loop meets a gate.
struct GateCrossing {
  int owner = 0;          ///< 0 for a, 1 for b
  int sign = 1;           ///< +1 when the loop enters the core here
  int slot = 0;           ///< rank along the gate in the reference order
  std::size_t link = 0;   ///< index of the matching gate letter in the owner's word
  std::size_t transit = 0;
  bool primed = true;     ///< origin: the p' (true) or p'' (false) point of a star transit
};

struct Gate {
  std::string id;
  Letter letter = 0;  ///< outward letter of this gate in the loop words
  std::vector<GateCrossing> crossings;  ///< sorted by slot
};

/// Crossing data of one or two loops with the gates of a core, plus the loops' letter words
/// so that grafts and chord subloops can be traced.
struct GateConfiguration {
  std::vector<Gate> gates;
  std::vector<Word> words;
  /// Optional display names, indexed by |letter|.
  std::vector<std::string> letter_names;

  std::size_t loop_count() const { return words.size(); }
};

/// Signs eps(w, k) relative to the reference orientation, one per gate.
using GateOrientation = std::vector<int>;

/// Throws InvalidInput when slots repeat on a gate, a link misses its letter, or signs disagree.
void validate_configuration(const GateConfiguration& c);

GateOrientation reference_orientation(const GateConfiguration& c);
/// The opposite orientation (every gate reversed).
GateOrientation opposite(const GateOrientation& w);
/// w with gate l reversed.
GateOrientation flipped(GateOrientation w, std::size_t l);
/// All 2^#gates orientations (only for small gate counts).
std::vector<GateOrientation> all_orientations(std::size_t gates);

/// Exchanges the roles of a and b.
GateConfiguration swap_owners(GateConfiguration c);

namespace gate {

/// v_k(x): sum of the signs of the owner's crossings with gate k.
Coefficient v(const GateConfiguration& c, std::size_t k, int owner);

HomotopyClass graft(const GateConfiguration& c, const GateCrossing& p, const GateCrossing& q);
/// Class of the owner's loop from crossing p1 forward to p2, closed along the gate.
HomotopyClass subloop(const GateConfiguration& c, const GateCrossing& p1, const GateCrossing& p2);

Coefficient form_omega(const GateConfiguration& c, const GateOrientation& w);
Coefficient form(const GateConfiguration& c, const GateOrientation& w);
Coefficient form(const GateConfiguration& c);

/// Both sides of x.(lw)y = x.w y - eps(w,l) v_l(x) v_l(y).
std::pair<Coefficient, Coefficient> flip_check(const GateConfiguration& c, const GateOrientation& w, std::size_t l);

FormalSum bracket_omega(const GateConfiguration& c, const GateOrientation& w);
FormalSum bracket(const GateConfiguration& c, const GateOrientation& w);
FormalSum bracket(const GateConfiguration& c);

FormalSum mu(const GateConfiguration& c, std::size_t k);

/// Single-loop configurations only.
TensorSum cobracket_omega(const GateConfiguration& c, const GateOrientation& w);
TensorSum cobracket(const GateConfiguration& c, const GateOrientation& w);
TensorSum cobracket(const GateConfiguration& c);

}  // namespace gate

}  // namespace loopcalc

#endif  // LOOPCALC_GATE_CALCULUS_HPP
