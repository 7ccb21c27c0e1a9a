#include "loopcalc/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace loopcalc {

namespace {

std::string gate_name(const GateRef& g) { return g.star + ":" + std::to_string(g.edge); }

std::string summarize(const ValidationReport& r) {
  std::ostringstream os;
  os << "invalid surface:";
  for (const auto& v : r.violations) os << " [" << v.code << " " << v.subject << "] " << v.message << ";";
  return os.str();
}

template <typename T>
std::vector<T> least_cyclic_shift(const std::vector<T>& v) {
  std::vector<T> best = v;
  std::vector<T> cur = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

InvalidSurface::InvalidSurface(ValidationReport r) : InvalidInput(summarize(r)), report_(std::move(r)) {}

ValidationReport validate_surface(const SurfaceData& data) {
  ValidationReport report;
  auto violate = [&](std::string code, std::string subject, std::string message) {
    report.violations.push_back({std::move(code), std::move(subject), std::move(message)});
  };

  std::map<std::string, int> edges_of;
  for (const auto& s : data.stars) {
    if (!edges_of.emplace(s.id, s.edge_count).second) violate("duplicate_id", s.id, "star id appears more than once");
    if (s.edge_count < 2) violate("star_edges", s.id, "a star needs at least 2 edges");
  }
  std::set<std::string> region_ids;
  for (const auto& r : data.regions) {
    if (!region_ids.insert(r.id).second) violate("duplicate_id", r.id, "region id appears more than once");
  }

  // Gate occurrences and per-region shape.
  std::map<GateRef, std::vector<std::string>> seen;
  bool shape_ok = true;
  for (const auto& r : data.regions) {
    int arcs = 0;
    for (const auto& item : r.boundary) {
      if (std::holds_alternative<BoundaryArc>(item)) {
        ++arcs;
        continue;
      }
      const auto& g = std::get<GateRef>(item);
      auto it = edges_of.find(g.star);
      if (it == edges_of.end()) {
        violate("unknown_star", r.id, "boundary names unknown star '" + g.star + "'");
        shape_ok = false;
        continue;
      }
      if (g.edge < 0 || g.edge >= it->second) {
        violate("bad_edge", r.id, "gate " + gate_name(g) + " is out of range");
        shape_ok = false;
        continue;
      }
      seen[g].push_back(r.id);
    }
    if (arcs < 1 || arcs > 2) {
      violate("arc_count", r.id, "region meets the boundary in " + std::to_string(arcs) + " segments; expected 1 or 2");
      shape_ok = false;
    }
    const std::size_t n = r.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (r.boundary[i].index() == r.boundary[(i + 1) % n].index()) {
        violate("alternation", r.id, "gates and boundary arcs must alternate along the region boundary");
        shape_ok = false;
        break;
      }
    }
  }

  std::size_t gate_total = 0;
  for (const auto& s : data.stars) {
    if (s.edge_count < 2) continue;
    for (int e = 0; e < s.edge_count; ++e) {
      ++gate_total;
      GateRef g{s.id, e};
      auto it = seen.find(g);
      if (it == seen.end()) {
        violate("gate_missing", gate_name(g), "gate lies on no region");
        shape_ok = false;
      } else if (it->second.size() > 1) {
        violate("gate_multiplicity", gate_name(g),
                "gate appears " + std::to_string(it->second.size()) + " times in region boundaries");
        shape_ok = false;
      }
    }
  }
  report.euler_characteristic =
      static_cast<int>(data.stars.size()) + static_cast<int>(data.regions.size()) - static_cast<int>(gate_total);

  if (!report.valid() || !shape_ok) return report;

  // Connectivity of the dual graph.
  std::map<std::string, std::size_t> star_idx;
  std::map<std::string, std::size_t> region_idx;
  for (std::size_t i = 0; i < data.stars.size(); ++i) star_idx[data.stars[i].id] = i;
  for (std::size_t i = 0; i < data.regions.size(); ++i) region_idx[data.regions[i].id] = i;
  UnionFind uf(data.stars.size() + data.regions.size());
  for (const auto& [g, regions] : seen) uf.unite(star_idx[g.star], data.stars.size() + region_idx[regions.front()]);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < data.stars.size() + data.regions.size(); ++v) roots.insert(uf.find(v));
  if (roots.size() != 1) {
    violate("disconnected", "surface", "dual graph has " + std::to_string(roots.size()) + " components");
    return report;
  }

  // Boundary circles: leaf (s,e) continues through gate(s,e), the arc after it in the
  // region, and the next gate (s',e') into leaf (s',e'+1).
  std::map<GateRef, std::pair<std::size_t, std::size_t>> where;  // region, position
  for (std::size_t ri = 0; ri < data.regions.size(); ++ri) {
    const auto& b = data.regions[ri].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (auto* g = std::get_if<GateRef>(&b[i])) where[*g] = {ri, i};
    }
  }
  std::set<GateRef> visited;
  int circles = 0;
  for (const auto& s : data.stars) {
    for (int e = 0; e < s.edge_count; ++e) {
      GateRef leaf{s.id, e};
      if (visited.count(leaf)) continue;
      ++circles;
      GateRef cur = leaf;
      while (!visited.count(cur)) {
        visited.insert(cur);
        auto [ri, pos] = where.at(cur);
        const auto& b = data.regions[ri].boundary;
        const auto& next = std::get<GateRef>(b[(pos + 2) % b.size()]);
        cur = GateRef{next.star, (next.edge + 1) % edges_of.at(next.star)};
      }
    }
  }
  report.boundary_components = circles;

  const int chi = report.euler_characteristic;
  const int twice_genus = 2 - chi - circles;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    violate("euler", "surface", "Euler characteristic " + std::to_string(chi) + " with " + std::to_string(circles) +
                                    " boundary circles is not an orientable surface");
  }
  if (data.genus && data.boundary && chi != 2 - 2 * *data.genus - *data.boundary) {
    violate("euler", "surface",
            "Euler characteristic " + std::to_string(chi) + " does not match genus " + std::to_string(*data.genus) +
                " with " + std::to_string(*data.boundary) + " boundary components");
  }
  if (data.boundary && *data.boundary != circles) {
    violate("boundary_count", "surface",
            "traced " + std::to_string(circles) + " boundary circles, expected " + std::to_string(*data.boundary));
  }
  if (data.genus && twice_genus >= 0 && twice_genus / 2 != *data.genus) {
    violate("genus", "surface", "traced genus " + std::to_string(twice_genus / 2) + ", expected " +
                                    std::to_string(*data.genus));
  }
  return report;
}

SurfaceData canonicalize(SurfaceData data) {
  std::sort(data.stars.begin(), data.stars.end(), [](const Star& a, const Star& b) { return a.id < b.id; });
  for (auto& r : data.regions) r.boundary = least_cyclic_shift(r.boundary);
  std::sort(data.regions.begin(), data.regions.end(), [](const Region& a, const Region& b) { return a.id < b.id; });
  return data;
}

StarFilledSurface StarFilledSurface::create(SurfaceData data) {
  ValidationReport report = validate_surface(data);
  if (!report.valid()) throw InvalidSurface(std::move(report));

  StarFilledSurface s;
  s.data_ = canonicalize(std::move(data));
  s.report_ = std::move(report);
  for (std::size_t i = 0; i < s.data_.stars.size(); ++i) {
    s.star_by_id_[s.data_.stars[i].id] = i;
    s.gate_offset_.push_back(s.gate_star_.size());
    for (int e = 0; e < s.data_.stars[i].edge_count; ++e) {
      s.gate_star_.push_back(i);
      s.gate_edge_.push_back(e);
    }
  }
  s.gate_region_.assign(s.gate_star_.size(), 0);
  s.region_gates_.resize(s.data_.regions.size());
  for (std::size_t r = 0; r < s.data_.regions.size(); ++r) {
    s.region_by_id_[s.data_.regions[r].id] = r;
    for (const auto& item : s.data_.regions[r].boundary) {
      if (const auto* g = std::get_if<GateRef>(&item)) {
        std::size_t gi = s.gate(s.star_index(g->star), g->edge);
        s.gate_region_[gi] = r;
        s.region_gates_[r].push_back(gi);
      }
    }
  }
  return s;
}

std::size_t StarFilledSurface::star_index(const std::string& id) const {
  auto it = star_by_id_.find(id);
  if (it == star_by_id_.end()) throw InvalidInput("unknown star '" + id + "'");
  return it->second;
}

std::size_t StarFilledSurface::region_index(const std::string& id) const {
  auto it = region_by_id_.find(id);
  if (it == region_by_id_.end()) throw InvalidInput("unknown region '" + id + "'");
  return it->second;
}

std::size_t StarFilledSurface::gate(std::size_t star, int edge) const {
  if (star >= data_.stars.size()) throw InvalidInput("star index out of range");
  const int n = data_.stars[star].edge_count;
  if (edge < 0 || edge >= n) throw InvalidInput("unknown gate " + data_.stars[star].id + ":" + std::to_string(edge));
  return gate_offset_[star] + static_cast<std::size_t>(edge);
}

std::string DualGraph::to_dot() const {
  std::ostringstream os;
  os << "graph dual {\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << vertex_labels[v] << "\", shape=" << (v < star_vertices ? "box" : "ellipse")
       << "];\n";
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    os << "  v" << edges[e].first << " -- v" << edges[e].second << " [label=\"" << edge_labels[e] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

DualGraph dual_graph(const StarFilledSurface& surface) {
  DualGraph g;
  g.star_vertices = surface.star_count();
  g.region_vertices = surface.region_count();
  for (std::size_t i = 0; i < surface.star_count(); ++i) g.vertex_labels.push_back(surface.star(i).id);
  for (std::size_t i = 0; i < surface.region_count(); ++i) g.vertex_labels.push_back(surface.region(i).id);
  for (std::size_t k = 0; k < surface.gate_count(); ++k) {
    g.edges.emplace_back(surface.gate_star(k), g.star_vertices + surface.gate_region(k));
    g.edge_labels.push_back(gate_name(surface.gate_ref(k)));
  }
  return g;
}

GateRef StarGateStructure::successor(const GateRef& g) const {
  return GateRef{g.star, (g.edge + 1) % static_cast<int>(gates.size())};
}

StarGateStructure star_gate_structure(const Star& star) {
  StarGateStructure out;
  for (int e = 0; e < star.edge_count; ++e) {
    out.gates.push_back({star.id, e});
    out.reference_signs.push_back(+1);
  }
  return out;
}

}  // namespace loopcalc
