#include "loopcalc/closed_surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace loopcalc {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct SideUse {
  std::size_t triangle;
  int side;
  int sign;
};

std::pair<std::string, int> parse_side(const std::string& s) {
  if (s.empty() || s == "-") throw InvalidInput("empty side label");
  if (s[0] == '-') return {s.substr(1), -1};
  if (s[0] == '+') return {s.substr(1), 1};
  return {s, 1};
}

// Occurrence of `sub` in the cyclic word `w`, or -1.
long find_cyclic(const Word& w, const Word& sub) {
  const std::size_t n = w.size();
  if (sub.size() > n || sub.empty()) return -1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    while (k < sub.size() && w[(i + k) % n] == sub[k]) ++k;
    if (k == sub.size()) return static_cast<long>(i);
  }
  return -1;
}

long find_linear(const Word& w, const Word& sub, std::size_t from = 0) {
  if (sub.empty() || sub.size() > w.size()) return -1;
  for (std::size_t i = from; i + sub.size() <= w.size(); ++i) {
    if (std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return static_cast<long>(i);
  }
  return -1;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << (w[i] > 0 ? 'g' : 'G') << std::abs(w[i]);
  }
  return os.str();
}

}  // namespace

Triangulation simplicial_triangulation(const std::vector<std::array<std::string, 3>>& triangles) {
  Triangulation t;
  for (const auto& tri : triangles) {
    std::array<std::string, 3> sides;
    for (int j = 0; j < 3; ++j) {
      const std::string& u = tri[static_cast<std::size_t>(j)];
      const std::string& v = tri[static_cast<std::size_t>((j + 1) % 3)];
      if (u == v) throw InvalidInput("degenerate triangle");
      sides[static_cast<std::size_t>(j)] = u < v ? u + "~" + v : "-" + v + "~" + u;
    }
    t.triangles.push_back(sides);
  }
  return t;
}

FillingGraphSpec from_triangulation(const Triangulation& t) {
  const std::size_t T = t.triangles.size();
  if (T == 0) throw InvalidInput("empty triangulation");
  std::map<std::string, std::vector<SideUse>> uses;
  for (std::size_t i = 0; i < T; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto [label, sign] = parse_side(t.triangles[i][static_cast<std::size_t>(j)]);
      uses[label].push_back({i, j, sign});
    }
  }
  for (const auto& [label, u] : uses) {
    if (u.size() != 2) {
      throw InvalidInput("side '" + label + "' is used " + std::to_string(u.size()) + " times; a closed surface needs 2");
    }
    if (u[0].sign == u[1].sign) throw InvalidInput("side '" + label + "' is glued without reversing orientation");
  }
  auto corner = [](std::size_t tri, int c) { return 3 * tri + static_cast<std::size_t>((c % 3 + 3) % 3); };
  UnionFind uf(3 * T);
  for (const auto& [label, u] : uses) {
    auto tail = [&](const SideUse& s) { return corner(s.triangle, s.sign > 0 ? s.side : s.side + 1); };
    auto head = [&](const SideUse& s) { return corner(s.triangle, s.sign > 0 ? s.side + 1 : s.side); };
    uf.unite(tail(u[0]), tail(u[1]));
    uf.unite(head(u[0]), head(u[1]));
  }
  // The other use of side (tri, side).
  std::map<std::pair<std::size_t, int>, SideUse> across;
  for (const auto& [label, u] : uses) {
    across[{u[0].triangle, u[0].side}] = u[1];
    across[{u[1].triangle, u[1].side}] = u[0];
  }

  FillingGraphSpec spec;
  auto edge_id = [](std::size_t tri, int c) { return "t" + std::to_string(tri) + "." + std::to_string(c); };
  std::map<std::size_t, std::string> vertex_name;
  std::map<std::size_t, std::size_t> blue_of_root;
  for (std::size_t c = 0; c < 3 * T; ++c) {
    const std::size_t root = uf.find(c);
    if (!vertex_name.count(root)) {
      vertex_name[root] = "v" + std::to_string(vertex_name.size());
      blue_of_root[root] = spec.blue.size();
      spec.blue.push_back({vertex_name[root], {}});
    }
  }
  for (std::size_t i = 0; i < T; ++i) {
    FillingVertex red{"t" + std::to_string(i), {}};
    for (int c = 0; c < 3; ++c) {
      spec.edges.push_back({edge_id(i, c), vertex_name[uf.find(corner(i, c))], red.id});
      red.rotation.push_back(edge_id(i, c));
    }
    spec.red.push_back(std::move(red));
  }
  // Walk around each vertex: from corner c of a triangle, cross side c-1.
  std::set<std::size_t> done;
  for (std::size_t c0 = 0; c0 < 3 * T; ++c0) {
    const std::size_t root = uf.find(c0);
    auto& blue = spec.blue[blue_of_root[root]];
    if (!blue.rotation.empty()) continue;
    std::size_t c = c0;
    do {
      done.insert(c);
      const std::size_t tri = c / 3;
      const int k = static_cast<int>(c % 3);
      blue.rotation.push_back(edge_id(tri, k));
      const SideUse next = across.at({tri, (k + 2) % 3});
      c = corner(next.triangle, next.side);
    } while (c != c0);
  }
  for (std::size_t c = 0; c < 3 * T; ++c) {
    if (!done.count(c)) throw InvalidInput("vertex link is not a single circle; not a closed surface");
  }
  return spec;
}

FillingGraphSpec cap_boundaries(const StarFilledSurface& s) {
  FillingGraphSpec spec;
  auto edge_id = [&](std::size_t star, int e) { return s.star(star).id + ":" + std::to_string(e); };
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    FillingVertex v{s.star(i).id, {}};
    for (int e = 0; e < s.edge_count(i); ++e) v.rotation.push_back(edge_id(i, e));
    spec.blue.push_back(std::move(v));
  }
  // Leaf cycles, traced as in surface validation.
  std::set<std::pair<std::size_t, int>> visited;
  for (std::size_t i = 0; i < s.star_count(); ++i) {
    for (int e = 0; e < s.edge_count(i); ++e) {
      if (visited.count({i, e})) continue;
      FillingVertex red{"w" + std::to_string(spec.red.size()), {}};
      std::pair<std::size_t, int> cur{i, e};
      while (!visited.count(cur)) {
        visited.insert(cur);
        red.rotation.push_back(edge_id(cur.first, cur.second));
        spec.edges.push_back({edge_id(cur.first, cur.second), s.star(cur.first).id, red.id});
        const std::size_t g = s.gate(cur.first, cur.second);
        const auto& gates = s.region_gates(s.gate_region(g));
        // Gates alternate with arcs, so the item two steps on is the next gate.
        const auto at = std::find(gates.begin(), gates.end(), g) - gates.begin();
        const std::size_t next = gates[static_cast<std::size_t>(at + 1) % gates.size()];
        cur = {s.gate_star(next), (s.gate_edge(next) + 1) % s.edge_count(s.gate_star(next))};
      }
      std::reverse(red.rotation.begin(), red.rotation.end());
      spec.red.push_back(std::move(red));
    }
  }
  return spec;
}

FillingGraphSpec dual_spec(const FillingGraphSpec& spec) {
  FillingGraphSpec out;
  out.blue = spec.red;
  out.red = spec.blue;
  for (const auto& e : spec.edges) out.edges.push_back({e.id, e.red, e.blue});
  return out;
}

FillingGraph FillingGraph::build(const FillingGraphSpec& spec) {
  std::map<std::string, const FillingEdge*> edges;
  for (const auto& e : spec.edges) {
    if (!edges.emplace(e.id, &e).second) throw InvalidInput("edge id '" + e.id + "' repeats");
  }
  std::set<std::string> blue_ids, red_ids;
  for (const auto& v : spec.blue) {
    if (!blue_ids.insert(v.id).second) throw InvalidInput("vertex id '" + v.id + "' repeats");
  }
  for (const auto& v : spec.red) {
    if (!red_ids.insert(v.id).second || blue_ids.count(v.id)) throw InvalidInput("vertex id '" + v.id + "' repeats");
  }
  for (const auto& e : spec.edges) {
    const bool b_blue = blue_ids.count(e.blue) > 0, b_red = red_ids.count(e.blue) > 0;
    const bool r_blue = blue_ids.count(e.red) > 0, r_red = red_ids.count(e.red) > 0;
    if (!(b_blue || b_red) || !(r_blue || r_red)) throw InvalidInput("edge '" + e.id + "' names an unknown vertex");
    if (!b_blue || !r_red) {
      throw InvalidInput("edge '" + e.id + "' does not join a blue vertex to a red vertex; the graph is not bipartite");
    }
  }
  // Rotations must list exactly the incident edges, once each.
  std::map<std::string, std::vector<std::string>> incident;
  for (const auto& e : spec.edges) {
    incident[e.blue].push_back(e.id);
    incident[e.red].push_back(e.id);
  }
  auto check_rotation = [&](const FillingVertex& v) {
    auto listed = v.rotation;
    auto actual = incident[v.id];
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual) throw InvalidInput("rotation of vertex '" + v.id + "' does not list its incident edges once each");
    if (listed.empty()) throw InvalidInput("vertex '" + v.id + "' is isolated");
  };
  for (const auto& v : spec.blue) check_rotation(v);
  for (const auto& v : spec.red) check_rotation(v);
  for (const auto& v : spec.blue) {
    if (v.rotation.size() < 2) throw InvalidInput("blue vertex '" + v.id + "' has degree 1; its star needs 2 edges");
  }

  // Successor of an edge in the rotation at a vertex, and the edge's index there.
  std::map<std::pair<std::string, std::string>, std::string> succ;
  std::map<std::pair<std::string, std::string>, int> index_at;
  for (const auto* list : {&spec.blue, &spec.red}) {
    for (const auto& v : *list) {
      for (std::size_t i = 0; i < v.rotation.size(); ++i) {
        succ[{v.id, v.rotation[i]}] = v.rotation[(i + 1) % v.rotation.size()];
        index_at[{v.id, v.rotation[i]}] = static_cast<int>(i);
      }
    }
  }
  auto other_end = [&](const std::string& edge, const std::string& v) {
    const FillingEdge* e = edges.at(edge);
    return e->blue == v ? e->red : e->blue;
  };

  FillingGraph fg;
  fg.spec_ = spec;
  SurfaceData data;
  for (const auto& v : spec.blue) data.stars.push_back({v.id, static_cast<int>(v.rotation.size())});
  // Faces: arriving at v through e, leave through the successor of e at v.
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto* list : {&spec.blue, &spec.red}) {
    for (const auto& v0 : *list) {
      for (const auto& e0 : v0.rotation) {
        if (seen.count({v0.id, e0})) continue;
        Region region{"f" + std::to_string(fg.faces_.size()), {}};
        std::vector<std::string> face_edges;
        std::string v = v0.id, e = e0;
        while (seen.insert({v, e}).second) {
          const std::string next = succ.at({v, e});
          if (blue_ids.count(v)) {
            region.boundary.push_back(GateRef{v, index_at.at({v, e})});
          } else {
            region.boundary.push_back(BoundaryArc{});
          }
          face_edges.push_back(next);
          v = other_end(next, v);
          e = next;
        }
        if (face_edges.size() > 4) {
          throw InvalidInput("face " + region.id + " traverses " + std::to_string(face_edges.size()) +
                             " edges; a filling graph allows at most 4");
        }
        fg.faces_.push_back(std::move(face_edges));
        data.regions.push_back(std::move(region));
      }
    }
  }
  const int chi = fg.euler_characteristic();
  if (chi > 2 || chi % 2 != 0) throw InvalidInput("Euler characteristic " + std::to_string(chi) + " is not that of a closed oriented surface");
  data.genus = (2 - chi) / 2;
  data.boundary = static_cast<int>(spec.red.size());
  fg.surface_ = StarFilledSurface::create(std::move(data));

  for (const auto& v : spec.blue) {
    const std::size_t star = fg.surface_.star_index(v.id);
    for (std::size_t i = 0; i < v.rotation.size(); ++i) fg.blue_end_[v.rotation[i]] = {star, static_cast<int>(i)};
  }
  for (const auto& w : spec.red) {
    CombinatorialLoop r;
    for (const auto& e : w.rotation) {
      const auto [star, idx] = fg.blue_end_.at(e);
      r.transits.push_back({star, idx, +1, Position(0)});
    }
    require_valid(fg.surface_, r);
    fg.relators_.push_back(std::move(r));
  }
  return fg;
}

int FillingGraph::euler_characteristic() const {
  return static_cast<int>(spec_.blue.size() + spec_.red.size()) - static_cast<int>(spec_.edges.size()) +
         static_cast<int>(faces_.size());
}

std::pair<std::size_t, int> FillingGraph::blue_end(const std::string& edge) const {
  auto it = blue_end_.find(edge);
  if (it == blue_end_.end()) throw InvalidInput("unknown edge '" + edge + "'");
  return it->second;
}

ClosedGroup::ClosedGroup(const FillingGraph& fg) : genus_(fg.genus()) {
  const StarFilledSurface& s = fg.surface();
  const SpanningTree tree = spanning_tree(s);
  cotree_ = tree.cotree;
  generator_of_gate_.assign(s.gate_count(), 0);
  for (std::size_t i = 0; i < cotree_.size(); ++i) generator_of_gate_[cotree_[i]] = static_cast<int>(i) + 1;
  for (const auto& r : fg.relator_loops()) {
    Word w = cyclic_reduce(generator_word(letter_word(s, r)));
    if (!w.empty()) relators_.push_back(std::move(w));
  }
  if (genus_ == 1) {
    IntMatrix R = IntMatrix::Zero(rank(), static_cast<Eigen::Index>(relators_.size()));
    for (std::size_t j = 0; j < relators_.size(); ++j) {
      for (Letter l : relators_[j]) R(std::abs(l) - 1, static_cast<Eigen::Index>(j)) += l > 0 ? 1 : -1;
    }
    projection_ = quotient_projection(R);
    if (projection_.rows() != 2) throw InvalidInput("relators do not present a torus group");
  }
  for (const Word& r : relators_) {
    for (const Word& base : {r, inverse(r)}) {
      for (std::size_t i = 0; i < base.size(); ++i) relator_cycles_.push_back(rotate(base, i));
    }
  }
  std::sort(relator_cycles_.begin(), relator_cycles_.end());
  relator_cycles_.erase(std::unique(relator_cycles_.begin(), relator_cycles_.end()), relator_cycles_.end());
}

Word ClosedGroup::generator_word(std::span<const Letter> gate_word) const {
  Word out;
  for (Letter l : gate_word) {
    const int g = generator_of_gate_.at(StarFilledSurface::letter_gate(l));
    if (g) out.push_back(l > 0 ? g : -g);
  }
  return out;
}

Word ClosedGroup::dehn_reduce(std::span<const Letter> generator_word) const {
  Word u = cyclic_reduce(generator_word);
  bool changed = true;
  while (changed && !u.empty()) {
    changed = false;
    for (const Word& r : relator_cycles_) {
      const std::size_t L = r.size();
      for (std::size_t m = std::min(L, u.size()); 2 * m > L; --m) {
        const Word piece(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
        const long at = find_cyclic(u, piece);
        if (at < 0) continue;
        const Word v = rotate(u, static_cast<std::size_t>(at));
        Word replaced = inverse(Word(r.begin() + static_cast<std::ptrdiff_t>(m), r.end()));
        replaced.insert(replaced.end(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
        u = cyclic_reduce(replaced);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return u;
}

std::string ClosedGroup::normalize(const HomotopyClass& c, int bound) const {
  return normalize_word(generator_word(c.word()), bound);
}

std::string ClosedGroup::normalize_word(std::span<const Letter> generator_word, int bound) const {
  if (genus_ == 0) return "1";
  if (genus_ == 1) {
    IntVector h = IntVector::Zero(rank());
    for (Letter l : generator_word) h(std::abs(l) - 1) += l > 0 ? 1 : -1;
    const IntVector p = projection_ * h;
    if (p.isZero()) return "1";
    return "(" + std::to_string(p(0)) + "," + std::to_string(p(1)) + ")";
  }

  const Word start = least_rotation(dehn_reduce(generator_word));
  if (start.empty()) return "1";
  // Conjugators: cyclic subwords of the relators up to the bound.
  std::set<Word> conjugators;
  for (const Word& r : relator_cycles_) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(static_cast<std::size_t>(std::max(bound, 0)), r.size() - 1); ++m) {
      conjugators.insert(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m)));
    }
  }
  constexpr std::size_t kOrbitCap = 256;
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  Word best = start;
  auto visit = [&](const Word& w) {
    Word c = least_rotation(dehn_reduce(w));
    if (c.empty() || c.size() > start.size() || seen.size() >= kOrbitCap) return;
    if (seen.insert(c).second) {
      if (shortlex_less(c, best)) best = c;
      queue.push_back(std::move(c));
    }
  };
  while (!queue.empty() && seen.size() < kOrbitCap) {
    const Word u = queue.front();
    queue.pop_front();
    // Half-relator swaps.
    for (const Word& r : relator_cycles_) {
      if (r.size() % 2 != 0 || r.size() / 2 > u.size()) continue;
      const std::size_t m = r.size() / 2;
      const Word piece(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
      for (std::size_t i = 0; i < u.size(); ++i) {
        const Word v = rotate(u, i);
        if (!std::equal(piece.begin(), piece.end(), v.begin())) continue;
        Word w = inverse(Word(r.begin() + static_cast<std::ptrdiff_t>(m), r.end()));
        w.insert(w.end(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
        visit(w);
      }
    }
    // Conjugation by short relator pieces, reduced before the conjugator can cancel freely.
    for (const Word& g : conjugators) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        Word w = concat(g, rotate(u, i));
        const Word gi = inverse(g);
        w.insert(w.end(), gi.begin(), gi.end());
        w = free_reduce(w);
        // Linear Dehn step: replace any long relator piece that does not wrap.
        bool changed = true;
        while (changed) {
          changed = false;
          for (const Word& r : relator_cycles_) {
            for (std::size_t m = std::min(r.size(), w.size()); 2 * m > r.size(); --m) {
              const Word piece(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
              const long at = find_linear(w, piece);
              if (at < 0) continue;
              Word x(w.begin(), w.begin() + at);
              const Word rep = inverse(Word(r.begin() + static_cast<std::ptrdiff_t>(m), r.end()));
              x.insert(x.end(), rep.begin(), rep.end());
              x.insert(x.end(), w.begin() + at + static_cast<std::ptrdiff_t>(m), w.end());
              w = free_reduce(x);
              changed = true;
              break;
            }
            if (changed) break;
          }
        }
        visit(w);
      }
    }
  }
  return word_string(best);
}

Aggregate<Coefficient> closed_form(const FillingGraph& fg, const CombinatorialLoop& a, const CombinatorialLoop& b) {
  return aggregate_form(fg.surface(), a, b);
}

Aggregate<ClosedSum> closed_bracket(const FillingGraph& fg, const ClosedGroup& group, const CombinatorialLoop& a,
                                    const CombinatorialLoop& b, int bound) {
  const auto on_gamma = aggregate_bracket(fg.surface(), a, b);
  auto norm = [&](const HomotopyClass& c) { return group.normalize(c, bound); };
  Aggregate<ClosedSum> out;
  for (const auto& [id, v] : on_gamma.per_star) out.per_star.emplace_back(id, v.map_keys(norm));
  out.sum = on_gamma.sum.map_keys(norm);
  out.even = out.sum.all_even();
  if (!out.even) throw OddCoefficient("closed-surface bracket has an odd coefficient");
  out.halved = out.sum.halved();
  return out;
}

Aggregate<ClosedTensorSum> closed_cobracket(const FillingGraph& fg, const ClosedGroup& group,
                                            const CombinatorialLoop& a, int bound) {
  const auto on_gamma = aggregate_cobracket(fg.surface(), a);
  auto push = [&](const TensorSum& t) {
    ClosedTensorSum out;
    for (const auto& [k, c] : t) {
      std::string u = group.normalize(k.first, bound);
      std::string w = group.normalize(k.second, bound);
      if (u != "1" && w != "1") out.add({std::move(u), std::move(w)}, c);
    }
    return out;
  };
  Aggregate<ClosedTensorSum> out;
  for (const auto& [id, v] : on_gamma.per_star) out.per_star.emplace_back(id, push(v));
  out.sum = push(on_gamma.sum);
  out.even = out.sum.all_even();
  if (!out.even) throw OddCoefficient("closed-surface cobracket has an odd coefficient");
  out.halved = out.sum.halved();
  return out;
}

CombinatorialLoop to_dual_loop(const FillingGraph& fg, const FillingGraph& dual, const CombinatorialLoop& a) {
  CombinatorialLoop out;
  for (const Transit& t : a.transits) {
    const auto& blue = fg.spec().blue;
    const std::string& vid = fg.surface().star(t.star).id;
    auto v = std::find_if(blue.begin(), blue.end(), [&](const FillingVertex& x) { return x.id == vid; });
    const std::string& edge = v->rotation.at(static_cast<std::size_t>(t.edge));
    const auto [star, idx] = dual.blue_end(edge);
    out.transits.push_back({star, idx, -t.sign, -t.pos});
  }
  require_valid(dual.surface(), out);
  return out;
}

FillingGraphSpec torus_example_spec() {
  FillingGraphSpec spec;
  const std::vector<std::string> e{"e1", "e2", "e3", "e4"};
  spec.blue.push_back({"O", e});
  spec.red.push_back({"A", e});
  for (const auto& id : e) spec.edges.push_back({id, "O", "A"});
  return spec;
}

std::pair<CombinatorialLoop, CombinatorialLoop> torus_example_loops(const FillingGraph& fg) {
  auto transit = [&](const std::string& edge, int sign, std::int64_t pos) {
    const auto [star, idx] = fg.blue_end(edge);
    return Transit{star, idx, sign, Position(pos)};
  };
  CombinatorialLoop a{{transit("e1", -1, 1), transit("e2", -1, 1)}, 0};
  CombinatorialLoop b{{transit("e1", +1, 2), transit("e4", +1, 2)}, 0};
  require_valid(fg.surface(), a);
  require_valid(fg.surface(), b);
  return {a, b};
}

}  // namespace loopcalc
