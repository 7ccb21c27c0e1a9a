#include "loopcalc/random_loops.hpp"

#include <deque>
#include <map>
#include <set>

namespace loopcalc {

namespace {

int wrap(int e, int n) { return ((e % n) + n) % n; }

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// A transit entering through gate g, in direction `sign`.
Transit through(const StarFilledSurface& s, std::size_t g, int sign) {
  const std::size_t star = s.gate_star(g);
  const int e = s.gate_edge(g);
  return {star, sign > 0 ? e : wrap(e + 1, s.edge_count(star)), sign, Position(0)};
}

using EdgeKey = std::pair<std::size_t, int>;

std::map<EdgeKey, std::set<Position>> taken_positions(std::span<const CombinatorialLoop> loops) {
  std::map<EdgeKey, std::set<Position>> taken;
  for (const auto& l : loops) {
    for (const auto& t : l.transits) taken[{t.star, t.edge}].insert(t.pos);
  }
  return taken;
}

// Fresh random positions for every transit, distinct per edge and away from `taken`.
std::vector<Position> random_positions(const std::vector<Transit>& ts, Rng& rng,
                                       std::map<EdgeKey, std::set<Position>> taken) {
  std::vector<Position> out;
  std::uniform_int_distribution<std::int64_t> num(-60, 60);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  for (const auto& t : ts) {
    auto& used = taken[{t.star, t.edge}];
    Position p;
    do {
      p = Position(num(rng), den(rng));
    } while (used.count(p));
    used.insert(p);
    out.push_back(p);
  }
  return out;
}

}  // namespace

CombinatorialLoop random_loop(const StarFilledSurface& s, Rng& rng, std::size_t max_transits,
                              std::span<const CombinatorialLoop> avoid) {
  const std::size_t R = s.region_count();
  // Shortest transit paths between regions: BFS tree towards each target, computed lazily.
  auto path_back = [&](std::size_t from, std::size_t to) {
    std::vector<long> parent_gate(R, -1);
    std::vector<int> parent_sign(R, 0);
    std::vector<std::size_t> parent_region(R, 0);
    std::vector<bool> seen(R, false);
    std::deque<std::size_t> q{from};
    seen[from] = true;
    while (!q.empty()) {
      const std::size_t r = q.front();
      q.pop_front();
      for (std::size_t g : s.region_gates(r)) {
        for (int sign : {1, -1}) {
          const Transit t = through(s, g, sign);
          const std::size_t next = s.gate_region(exit_gate(s, t));
          if (seen[next]) continue;
          seen[next] = true;
          parent_gate[next] = static_cast<long>(g);
          parent_sign[next] = sign;
          parent_region[next] = r;
          q.push_back(next);
        }
      }
    }
    std::vector<Transit> path;
    for (std::size_t r = to; r != from; r = parent_region[r]) {
      path.push_back(through(s, static_cast<std::size_t>(parent_gate[r]), parent_sign[r]));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, max_transits));
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0;; ++attempt) {
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, R - 1)(rng);
    std::size_t region = start;
    std::vector<Transit> ts;
    const std::size_t walk = attempt < 50 ? len(rng) : 1;
    for (std::size_t i = 0; i < walk; ++i) {
      const std::size_t g = pick(s.region_gates(region), rng);
      ts.push_back(through(s, g, coin(rng) ? 1 : -1));
      region = s.gate_region(exit_gate(s, ts.back()));
    }
    const auto back = path_back(region, start);
    ts.insert(ts.end(), back.begin(), back.end());
    if (ts.size() > max_transits && attempt < 200) continue;
    CombinatorialLoop loop{ts, start};
    const auto pos = random_positions(ts, rng, taken_positions(avoid));
    for (std::size_t i = 0; i < ts.size(); ++i) loop.transits[i].pos = pos[i];
    require_valid(s, loop);
    return loop;
  }
}

Move random_move(const StarFilledSurface& s, const CombinatorialLoop& loop, Rng& rng,
                 std::span<const CombinatorialLoop> others) {
  const auto& ts = loop.transits;
  const std::size_t n = ts.size();
  const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  if (kind == 0 || n == 0) {
    move::InsertCancellingPair m;
    m.at = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    const std::size_t region = n == 0 ? loop.anchor_region : s.gate_region(exit_gate(s, ts[(m.at + n - 1) % n]));
    const std::size_t g = pick(s.region_gates(region), rng);
    const Transit t = through(s, g, std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
    m.star = t.star;
    m.edge = t.edge;
    m.sign = t.sign;
    std::vector<Position> on_edge;
    for (const auto& x : ts) {
      if (x.star == t.star && x.edge == t.edge) on_edge.push_back(x.pos);
    }
    for (const auto& o : others) {
      for (const auto& x : o.transits) {
        if (x.star == t.star && x.edge == t.edge) on_edge.push_back(x.pos);
      }
    }
    if (!on_edge.empty() && std::bernoulli_distribution(0.7)(rng)) m.after = pick(on_edge, rng);
    return m;
  }
  if (kind == 1) {
    std::vector<std::size_t> cancelling;
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
      const Transit& x = ts[i];
      const Transit& y = ts[(i + 1) % n];
      if (x.star == y.star && x.edge == y.edge && x.sign == -y.sign) cancelling.push_back(i);
    }
    if (!cancelling.empty()) return move::RemoveCancellingPair{pick(cancelling, rng)};
  }
  if (kind == 2) {
    return move::Reposition{random_positions(ts, rng, taken_positions(others))};
  }
  return move::RotateBasepoint{std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)};
}

}  // namespace loopcalc
