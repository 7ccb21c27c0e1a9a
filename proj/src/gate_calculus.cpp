#include "loopcalc/gate_calculus.hpp"

#include <algorithm>
#include <set>

#include "loopcalc/surface.hpp"

namespace loopcalc {

namespace {

void require_two(const GateConfiguration& c) {
  if (c.loop_count() != 2) throw InvalidInput("operation needs a two-loop gate configuration");
}

void require_one(const GateConfiguration& c) {
  if (c.loop_count() != 1) throw InvalidInput("cobracket needs a single-loop gate configuration");
}

void require_orientation(const GateConfiguration& c, const GateOrientation& w) {
  if (w.size() != c.gates.size()) throw InvalidInput("gate orientation must assign every gate");
  for (int e : w) {
    if (e != 1 && e != -1) throw InvalidInput("gate orientation signs must be +1 or -1");
  }
}

// Crossings of gate k in the order <_w.
std::vector<const GateCrossing*> ordered(const Gate& g, int eps) {
  std::vector<const GateCrossing*> out;
  out.reserve(g.crossings.size());
  for (const auto& x : g.crossings) out.push_back(&x);
  if (eps < 0) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

void validate_configuration(const GateConfiguration& c) {
  if (c.loop_count() < 1 || c.loop_count() > 2) throw InvalidInput("a gate configuration carries one or two loops");
  for (const auto& g : c.gates) {
    std::set<int> slots;
    for (const auto& x : g.crossings) {
      if (!slots.insert(x.slot).second) throw InvalidInput("gate " + g.id + ": two crossings share a slot");
      if (x.owner < 0 || static_cast<std::size_t>(x.owner) >= c.loop_count()) {
        throw InvalidInput("gate " + g.id + ": crossing owner out of range");
      }
      const Word& w = c.words[static_cast<std::size_t>(x.owner)];
      if (x.link >= w.size() || std::abs(w[x.link]) != std::abs(g.letter)) {
        throw InvalidInput("gate " + g.id + ": crossing link does not point at a letter of this gate");
      }
      if (x.sign != (w[x.link] > 0 ? -1 : 1)) {
        throw InvalidInput("gate " + g.id + ": crossing sign disagrees with the direction of its letter");
      }
    }
    if (!std::is_sorted(g.crossings.begin(), g.crossings.end(),
                        [](const GateCrossing& x, const GateCrossing& y) { return x.slot < y.slot; })) {
      throw InvalidInput("gate " + g.id + ": crossings must be listed by slot");
    }
  }
}

GateOrientation reference_orientation(const GateConfiguration& c) { return GateOrientation(c.gates.size(), 1); }

GateOrientation opposite(const GateOrientation& w) {
  GateOrientation out = w;
  for (int& e : out) e = -e;
  return out;
}

GateOrientation flipped(GateOrientation w, std::size_t l) {
  w.at(l) = -w.at(l);
  return w;
}

std::vector<GateOrientation> all_orientations(std::size_t gates) {
  if (gates > 20) throw InvalidInput("too many gates to enumerate orientations");
  std::vector<GateOrientation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gates); ++mask) {
    GateOrientation w(gates);
    for (std::size_t k = 0; k < gates; ++k) w[k] = (mask >> k) & 1 ? -1 : 1;
    out.push_back(std::move(w));
  }
  return out;
}

GateConfiguration swap_owners(GateConfiguration c) {
  require_two(c);
  std::swap(c.words[0], c.words[1]);
  for (auto& g : c.gates) {
    for (auto& x : g.crossings) x.owner = 1 - x.owner;
  }
  return c;
}

namespace gate {

Coefficient v(const GateConfiguration& c, std::size_t k, int owner) {
  if (k >= c.gates.size()) throw InvalidInput("unknown gate");
  Coefficient total = 0;
  for (const auto& x : c.gates[k].crossings) {
    if (x.owner == owner) total += x.sign;
  }
  return total;
}

HomotopyClass graft(const GateConfiguration& c, const GateCrossing& p, const GateCrossing& q) {
  const Word& wa = c.words[static_cast<std::size_t>(p.owner)];
  const Word& wb = c.words[static_cast<std::size_t>(q.owner)];
  const bool same_direction = wa[p.link] == wb[q.link];
  return HomotopyClass::of(concat(rotate(wa, p.link + 1), rotate(wb, same_direction ? q.link + 1 : q.link)));
}

HomotopyClass subloop(const GateConfiguration& c, const GateCrossing& p1, const GateCrossing& p2) {
  if (p1.owner != p2.owner) throw InvalidInput("subloop endpoints lie on different loops");
  const Word& w = c.words[static_cast<std::size_t>(p1.owner)];
  Word piece = cyclic_segment(w, p1.link + 1, p2.link);
  if (w[p2.link] == w[p1.link]) piece.push_back(w[p1.link]);
  return HomotopyClass::of(piece);
}

Coefficient form_omega(const GateConfiguration& c, const GateOrientation& w) {
  require_two(c);
  require_orientation(c, w);
  Coefficient total = 0;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    // Running sum of b-signs seen so far in the <_w order.
    Coefficient b_before = 0;
    Coefficient term = 0;
    for (const GateCrossing* x : ordered(c.gates[k], w[k])) {
      if (x->owner == 1) {
        b_before += x->sign;
      } else {
        term += x->sign * b_before;
      }
    }
    total += w[k] * term;
  }
  return total;
}

Coefficient form(const GateConfiguration& c, const GateOrientation& w) {
  return form_omega(c, w) - form_omega(swap_owners(c), w);
}

Coefficient form(const GateConfiguration& c) { return form(c, reference_orientation(c)); }

std::pair<Coefficient, Coefficient> flip_check(const GateConfiguration& c, const GateOrientation& w, std::size_t l) {
  if (l >= c.gates.size()) throw InvalidInput("unknown gate");
  const Coefficient lhs = form_omega(c, flipped(w, l));
  const Coefficient rhs = form_omega(c, w) - w[l] * v(c, l, 0) * v(c, l, 1);
  return {lhs, rhs};
}

FormalSum bracket_omega(const GateConfiguration& c, const GateOrientation& w) {
  require_two(c);
  require_orientation(c, w);
  FormalSum out;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const auto order = ordered(c.gates[k], w[k]);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i]->owner != 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (order[j]->owner != 1) continue;
        out.add(graft(c, *order[i], *order[j]), w[k] * order[i]->sign * order[j]->sign);
      }
    }
  }
  return out;
}

FormalSum bracket(const GateConfiguration& c, const GateOrientation& w) {
  return bracket_omega(c, w) - bracket_omega(swap_owners(c), w);
}

FormalSum bracket(const GateConfiguration& c) { return bracket(c, reference_orientation(c)); }

FormalSum mu(const GateConfiguration& c, std::size_t k) {
  require_two(c);
  if (k >= c.gates.size()) throw InvalidInput("unknown gate");
  FormalSum out;
  for (const auto& p : c.gates[k].crossings) {
    if (p.owner != 0) continue;
    for (const auto& q : c.gates[k].crossings) {
      if (q.owner == 1) out.add(graft(c, p, q), p.sign * q.sign);
    }
  }
  return out;
}

TensorSum cobracket_omega(const GateConfiguration& c, const GateOrientation& w) {
  require_one(c);
  require_orientation(c, w);
  TensorSum out;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const auto order = ordered(c.gates[k], w[k]);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const GateCrossing& p1 = *order[i];
        const GateCrossing& p2 = *order[j];
        const HomotopyClass left = subloop(c, p2, p1);
        const HomotopyClass right = subloop(c, p1, p2);
        if (left.trivial() || right.trivial()) continue;
        out.add({left, right}, w[k] * p1.sign * p2.sign);
      }
    }
  }
  return out;
}

TensorSum cobracket(const GateConfiguration& c, const GateOrientation& w) {
  const TensorSum nu = cobracket_omega(c, w);
  return nu - transpose(nu);
}

TensorSum cobracket(const GateConfiguration& c) { return cobracket(c, reference_orientation(c)); }

}  // namespace gate

}  // namespace loopcalc
