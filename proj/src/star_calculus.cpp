#include "loopcalc/star_calculus.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace loopcalc {

namespace {

int wrap(int e, int n) { return ((e % n) + n) % n; }

struct Point {
  int owner;
  std::size_t transit;
  Position pos;
  int sign;
  std::size_t link;
};

// v with entries moved one step down: out(e) = v(e+1).
CountVector shifted(const CountVector& v) {
  CountVector out(v.size());
  if (v.size() == 0) return out;
  out.head(v.size() - 1) = v.tail(v.size() - 1);
  out(v.size() - 1) = v(0);
  return out;
}

std::vector<std::size_t> transits_on(const CombinatorialLoop& l, std::size_t star) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.transits.size(); ++i) {
    if (l.transits[i].star == star) out.push_back(i);
  }
  return out;
}

template <typename V>
void finish(Aggregate<V>& agg, bool throw_on_odd) {
  agg.even = all_even(agg.sum);
  if (agg.even) {
    if constexpr (std::is_same_v<V, Coefficient>) {
      agg.halved = agg.sum / 2;
    } else {
      agg.halved = agg.sum.halved();
    }
  } else if (throw_on_odd) {
    throw OddCoefficient("star-filling sum has an odd coefficient");
  }
}

}  // namespace

GateConfiguration expand_to_gates(const StarFilledSurface& s, std::size_t star,
                                  std::span<const CombinatorialLoop> loops, ExpandOptions opt) {
  if (star >= s.star_count()) throw InvalidInput("star index out of range");
  const int n = s.edge_count(star);
  GateConfiguration c;
  std::set<std::pair<int, Position>> used;
  // primes[e]: points p' on gate(s,e); seconds[e]: points p'' on gate(s,e-1) from edge e.
  std::vector<std::vector<Point>> primes(static_cast<std::size_t>(n)), seconds(static_cast<std::size_t>(n));
  for (std::size_t o = 0; o < loops.size(); ++o) {
    require_valid(s, loops[o]);
    c.words.push_back(letter_word(s, loops[o]));
    for (std::size_t ti = 0; ti < loops[o].transits.size(); ++ti) {
      const Transit& t = loops[o].transits[ti];
      if (t.star != star) continue;
      if (!used.emplace(t.edge, t.pos).second) throw InvalidInput("loops are not generic: a point of the star is shared");
      const std::size_t in = 2 * ti;
      const std::size_t out = 2 * ti + 1;
      const int owner = static_cast<int>(o);
      primes[static_cast<std::size_t>(t.edge)].push_back({owner, ti, t.pos, t.sign, t.sign > 0 ? in : out});
      seconds[static_cast<std::size_t>(t.edge)].push_back({owner, ti, t.pos, -t.sign, t.sign > 0 ? out : in});
    }
  }
  for (int e = 0; e < n; ++e) {
    Gate g;
    g.id = s.star(star).id + ":" + std::to_string(e);
    g.letter = StarFilledSurface::out_letter(s.gate(star, e));
    auto first = primes[static_cast<std::size_t>(e)];
    auto second = seconds[static_cast<std::size_t>(wrap(e + 1, n))];
    std::sort(first.begin(), first.end(), [](const Point& x, const Point& y) { return x.pos > y.pos; });
    std::sort(second.begin(), second.end(), [](const Point& x, const Point& y) { return x.pos < y.pos; });
    auto emit = [&](const std::vector<Point>& pts, bool primed) {
      for (const auto& p : pts) {
        g.crossings.push_back({p.owner, p.sign, static_cast<int>(g.crossings.size()), p.link, p.transit, primed});
      }
    };
    if (opt.swap_prime_order) {
      emit(second, false);
      emit(first, true);
    } else {
      emit(first, true);
      emit(second, false);
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

Coefficient star_form(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a,
                      const CombinatorialLoop& b) {
  require_valid(s, a);
  require_valid(s, b);
  const int n = s.edge_count(star);
  const CountVector ca = edge_counts(a, star, n);
  const CountVector cb = edge_counts(b, star, n);
  return ca.dot(shifted(cb)) - cb.dot(shifted(ca));
}

FormalSum star_bracket(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a,
                       const CombinatorialLoop& b) {
  require_valid(s, a);
  require_valid(s, b);
  if (!positions_disjoint(a, b)) throw InvalidInput("loops share a point of a star");
  const int n = s.edge_count(star);
  FormalSum out;
  for (std::size_t p : transits_on(a, star)) {
    const Transit& tp = a.transits[p];
    for (std::size_t q : transits_on(b, star)) {
      const Transit& tq = b.transits[q];
      const int mu = tp.sign * tq.sign;
      if (tq.edge == wrap(tp.edge + 1, n)) out.add(graft(s, a, p, b, q), mu);
      if (tp.edge == wrap(tq.edge + 1, n)) out.add(graft(s, a, p, b, q), -mu);
    }
  }
  return out;
}

TensorSum star_cobracket(const StarFilledSurface& s, std::size_t star, const CombinatorialLoop& a) {
  require_valid(s, a);
  const int n = s.edge_count(star);
  TensorSum out;
  const auto on = transits_on(a, star);
  for (std::size_t p1 : on) {
    for (std::size_t p2 : on) {
      if (a.transits[p2].edge != wrap(a.transits[p1].edge + 1, n)) continue;
      const HomotopyClass forward = subloop(s, a, p1, p2);
      const HomotopyClass back = subloop(s, a, p2, p1);
      if (forward.trivial() || back.trivial()) continue;
      const int mu = a.transits[p1].sign * a.transits[p2].sign;
      out.add({forward, back}, mu);
      out.add({back, forward}, -mu);
    }
  }
  return out;
}

Aggregate<Coefficient> aggregate_form(const StarFilledSurface& s, const CombinatorialLoop& a,
                                      const CombinatorialLoop& b) {
  Aggregate<Coefficient> agg;
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const Coefficient v = star_form(s, i, a, b);
    agg.per_star.emplace_back(s.star(i).id, v);
    agg.sum += v;
  }
  finish(agg, true);
  return agg;
}

Aggregate<FormalSum> aggregate_bracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                       const CombinatorialLoop& b) {
  Aggregate<FormalSum> agg;
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    FormalSum v = star_bracket(s, i, a, b);
    agg.sum += v;
    agg.per_star.emplace_back(s.star(i).id, std::move(v));
  }
  finish(agg, true);
  return agg;
}

Aggregate<TensorSum> aggregate_cobracket(const StarFilledSurface& s, const CombinatorialLoop& a) {
  Aggregate<TensorSum> agg;
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    TensorSum v = star_cobracket(s, i, a);
    agg.sum += v;
    agg.per_star.emplace_back(s.star(i).id, std::move(v));
  }
  finish(agg, true);
  return agg;
}

GateOrientation star_orientation(const StarFilledSurface& s, std::size_t star, const GateOrientation& global) {
  const int n = s.edge_count(star);
  GateOrientation w(static_cast<std::size_t>(n), 1);
  if (global.empty()) return w;
  if (global.size() != s.gate_count()) throw InvalidInput("gate orientation must assign every gate of the surface");
  for (int e = 0; e < n; ++e) w[static_cast<std::size_t>(e)] = global[s.gate(star, e)];
  return w;
}

Aggregate<Coefficient> gate_route_form(const StarFilledSurface& s, const CombinatorialLoop& a,
                                       const CombinatorialLoop& b, const GateRouteOptions& opt) {
  Aggregate<Coefficient> agg;
  const CombinatorialLoop pair[] = {a, b};
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const GateConfiguration c = expand_to_gates(s, i, pair, opt.expand);
    const GateOrientation w = star_orientation(s, i, opt.omega);
    const Coefficient v = opt.omega_part ? gate::form_omega(c, w) : gate::form(c, w);
    agg.per_star.emplace_back(s.star(i).id, v);
    agg.sum += v;
  }
  finish(agg, !opt.omega_part);
  return agg;
}

Aggregate<FormalSum> gate_route_bracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                        const CombinatorialLoop& b, const GateRouteOptions& opt) {
  Aggregate<FormalSum> agg;
  const CombinatorialLoop pair[] = {a, b};
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const GateConfiguration c = expand_to_gates(s, i, pair, opt.expand);
    const GateOrientation w = star_orientation(s, i, opt.omega);
    FormalSum v = opt.omega_part ? gate::bracket_omega(c, w) : gate::bracket(c, w);
    agg.sum += v;
    agg.per_star.emplace_back(s.star(i).id, std::move(v));
  }
  finish(agg, !opt.omega_part);
  return agg;
}

Aggregate<TensorSum> gate_route_cobracket(const StarFilledSurface& s, const CombinatorialLoop& a,
                                          const GateRouteOptions& opt) {
  Aggregate<TensorSum> agg;
  const CombinatorialLoop single[] = {a};
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    const GateConfiguration c = expand_to_gates(s, i, single, opt.expand);
    const GateOrientation w = star_orientation(s, i, opt.omega);
    TensorSum v = opt.omega_part ? gate::cobracket_omega(c, w) : gate::cobracket(c, w);
    agg.sum += v;
    agg.per_star.emplace_back(s.star(i).id, std::move(v));
  }
  finish(agg, !opt.omega_part);
  return agg;
}

}  // namespace loopcalc
