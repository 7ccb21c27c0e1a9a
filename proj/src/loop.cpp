#include "loopcalc/loop.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace loopcalc {

namespace {

using PositionKey = std::tuple<std::size_t, int, Position>;

int wrap(int e, int n) { return ((e % n) + n) % n; }

std::set<Position> used_positions(std::size_t star, int edge, const CombinatorialLoop& loop,
                                  std::span<const CombinatorialLoop> others) {
  std::set<Position> used;
  auto collect = [&](const CombinatorialLoop& l) {
    for (const auto& t : l.transits) {
      if (t.star == star && t.edge == edge) used.insert(t.pos);
    }
  };
  collect(loop);
  for (const auto& o : others) collect(o);
  return used;
}

// Two fresh positions in the gap just above `after`, or above everything used.
std::pair<Position, Position> fresh_pair(const std::set<Position>& used, const std::optional<Position>& after) {
  if (used.empty()) return {Position(1), Position(2)};
  Position lo = after ? *after : *used.rbegin();
  auto next = used.upper_bound(lo);
  Position hi = next == used.end() ? lo + 1 : *next;
  Position step = (hi - lo) / 3;
  return {lo + step, lo + 2 * step};
}

std::size_t region_before(const StarFilledSurface& s, const CombinatorialLoop& loop, std::size_t at) {
  if (loop.transits.empty()) return loop.anchor_region;
  const std::size_t n = loop.transits.size();
  return s.gate_region(exit_gate(s, loop.transits[(at + n - 1) % n]));
}

}  // namespace

std::size_t entry_gate(const StarFilledSurface& s, const Transit& t) {
  const int n = s.edge_count(t.star);
  return s.gate(t.star, t.sign > 0 ? t.edge : wrap(t.edge - 1, n));
}

std::size_t exit_gate(const StarFilledSurface& s, const Transit& t) {
  const int n = s.edge_count(t.star);
  return s.gate(t.star, t.sign > 0 ? wrap(t.edge - 1, n) : t.edge);
}

ValidationReport validate_loop(const StarFilledSurface& s, const CombinatorialLoop& loop) {
  ValidationReport report;
  auto violate = [&](std::string code, std::string subject, std::string message) {
    report.violations.push_back({std::move(code), std::move(subject), std::move(message)});
  };
  if (loop.transits.empty()) {
    if (loop.anchor_region >= s.region_count()) violate("anchor", "loop", "empty loop must be anchored in a region");
    return report;
  }
  bool shape_ok = true;
  for (std::size_t i = 0; i < loop.transits.size(); ++i) {
    const auto& t = loop.transits[i];
    const std::string who = "transit " + std::to_string(i);
    if (t.star >= s.star_count()) {
      violate("unknown_star", who, "star index out of range");
      shape_ok = false;
    } else if (t.edge < 0 || t.edge >= s.edge_count(t.star)) {
      violate("bad_edge", who, "edge out of range");
      shape_ok = false;
    }
    if (t.sign != 1 && t.sign != -1) {
      violate("bad_sign", who, "sign must be +1 or -1");
      shape_ok = false;
    }
  }
  if (!shape_ok) return report;

  std::set<PositionKey> seen;
  const std::size_t n = loop.transits.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = loop.transits[i];
    if (!seen.emplace(t.star, t.edge, t.pos).second) {
      violate("repeated_point", "transit " + std::to_string(i), "loop traverses the same point of a star twice");
    }
    const auto& next = loop.transits[(i + 1) % n];
    if (s.gate_region(exit_gate(s, t)) != s.gate_region(entry_gate(s, next))) {
      violate("incompatible", "transit " + std::to_string(i),
              "exit gate and the next entry gate lie on different regions");
    }
  }
  return report;
}

void require_valid(const StarFilledSurface& s, const CombinatorialLoop& loop) {
  auto r = validate_loop(s, loop);
  if (!r.valid()) {
    throw InvalidInput("invalid loop: [" + r.violations.front().code + " " + r.violations.front().subject + "] " +
                       r.violations.front().message);
  }
}

Word letter_word(const StarFilledSurface& s, const CombinatorialLoop& loop) {
  Word w;
  w.reserve(2 * loop.transits.size());
  for (const auto& t : loop.transits) {
    w.push_back(StarFilledSurface::in_letter(entry_gate(s, t)));
    w.push_back(StarFilledSurface::out_letter(exit_gate(s, t)));
  }
  return w;
}

HomotopyClass to_class(const StarFilledSurface& s, const CombinatorialLoop& loop) {
  require_valid(s, loop);
  return HomotopyClass::of(letter_word(s, loop));
}

FormalSum class_or_zero(const HomotopyClass& c) {
  FormalSum out;
  if (!c.trivial()) out.add(c, 1);
  return out;
}

FormalSum class_or_zero(const StarFilledSurface& s, const CombinatorialLoop& loop) {
  return class_or_zero(to_class(s, loop));
}

HomotopyClass graft(const StarFilledSurface& s, const CombinatorialLoop& a, std::size_t p,
                    const CombinatorialLoop& b, std::size_t q) {
  if (p >= a.transits.size() || q >= b.transits.size()) throw InvalidInput("graft: transit index out of range");
  if (a.transits[p].star != b.transits[q].star) throw InvalidInput("graft: transits lie in different stars");
  const Word wa = letter_word(s, a);
  const Word wb = letter_word(s, b);
  return HomotopyClass::of(concat(rotate(wa, 2 * p + 1), rotate(wb, 2 * q + 1)));
}

HomotopyClass subloop(const StarFilledSurface& s, const CombinatorialLoop& a, std::size_t p1, std::size_t p2) {
  if (p1 >= a.transits.size() || p2 >= a.transits.size()) throw InvalidInput("subloop: transit index out of range");
  if (p1 == p2) throw InvalidInput("subloop: endpoints must be distinct transits");
  if (a.transits[p1].star != a.transits[p2].star) throw InvalidInput("subloop: transits lie in different stars");
  const Word wa = letter_word(s, a);
  return HomotopyClass::of(cyclic_segment(wa, 2 * p1 + 1, 2 * p2 + 1));
}

CombinatorialLoop apply_move(const StarFilledSurface& s, const CombinatorialLoop& loop, const Move& m,
                             std::span<const CombinatorialLoop> others) {
  CombinatorialLoop out = loop;
  auto& ts = out.transits;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, move::InsertCancellingPair>) {
          if (mv.at > ts.size()) throw InvalidInput("insert position out of range");
          if (mv.star >= s.star_count()) throw InvalidInput("unknown star");
          Transit first{mv.star, mv.edge, mv.sign, Position(0)};
          if (mv.edge < 0 || mv.edge >= s.edge_count(mv.star) || (mv.sign != 1 && mv.sign != -1)) {
            throw InvalidInput("bad cancelling pair");
          }
          if (s.gate_region(entry_gate(s, first)) != region_before(s, loop, mv.at)) {
            throw InvalidInput("cancelling pair does not start in the region the loop occupies");
          }
          auto [p1, p2] = fresh_pair(used_positions(mv.star, mv.edge, loop, others), mv.after);
          first.pos = p1;
          Transit second{mv.star, mv.edge, -mv.sign, p2};
          ts.insert(ts.begin() + static_cast<std::ptrdiff_t>(mv.at), {first, second});
        } else if constexpr (std::is_same_v<T, move::RemoveCancellingPair>) {
          const std::size_t n = ts.size();
          if (n < 2 || mv.at >= n) throw InvalidInput("no transit pair at that index");
          const std::size_t j = (mv.at + 1) % n;
          const Transit& x = ts[mv.at];
          const Transit& y = ts[j];
          if (x.star != y.star || x.edge != y.edge || x.sign != -y.sign) {
            throw InvalidInput("transits do not form a cancelling pair");
          }
          const std::size_t anchor = s.gate_region(entry_gate(s, x));
          if (j > mv.at) {
            ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(mv.at), ts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          } else {
            ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(mv.at));
            ts.erase(ts.begin());
          }
          if (ts.empty()) out.anchor_region = anchor;
        } else if constexpr (std::is_same_v<T, move::Reposition>) {
          if (mv.positions.size() != ts.size()) throw InvalidInput("reposition needs one position per transit");
          for (std::size_t i = 0; i < ts.size(); ++i) ts[i].pos = mv.positions[i];
        } else if constexpr (std::is_same_v<T, move::RotateBasepoint>) {
          if (!ts.empty()) std::rotate(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(mv.by % ts.size()), ts.end());
        }
      },
      m);
  require_valid(s, out);
  return out;
}

bool positions_disjoint(const CombinatorialLoop& a, const CombinatorialLoop& b) {
  std::set<PositionKey> pa;
  for (const auto& t : a.transits) pa.emplace(t.star, t.edge, t.pos);
  for (const auto& t : b.transits) {
    if (pa.count({t.star, t.edge, t.pos})) return false;
  }
  return true;
}

CombinatorialLoop make_disjoint(const CombinatorialLoop& fixed, CombinatorialLoop moving) {
  std::set<PositionKey> taken;
  for (const auto& t : fixed.transits) taken.emplace(t.star, t.edge, t.pos);
  for (const auto& t : moving.transits) taken.emplace(t.star, t.edge, t.pos);
  std::set<PositionKey> fixed_keys;
  for (const auto& t : fixed.transits) fixed_keys.emplace(t.star, t.edge, t.pos);
  for (auto& t : moving.transits) {
    if (!fixed_keys.count({t.star, t.edge, t.pos})) continue;
    Position step(1, 2);
    Position candidate = t.pos + step;
    while (taken.count({t.star, t.edge, candidate})) {
      step /= 2;
      candidate = t.pos + step;
    }
    t.pos = candidate;
    taken.emplace(t.star, t.edge, candidate);
  }
  return moving;
}

CountVector edge_counts(const CombinatorialLoop& loop, std::size_t star, int edge_count) {
  CountVector c = CountVector::Zero(edge_count);
  for (const auto& t : loop.transits) {
    if (t.star == star) c(t.edge) += t.sign;
  }
  return c;
}

}  // namespace loopcalc
