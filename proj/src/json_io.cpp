#include "loopcalc/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace loopcalc::json_io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json letter_json(Letter l, const StarFilledSurface& s) {
  const GateRef g = s.gate_ref(StarFilledSurface::letter_gate(l));
  return {{"star", g.star}, {"edge", g.edge}, {"dir", l > 0 ? "out" : "in"}};
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

SurfaceData parse_surface(const Json& j) {
  return guarded("surface", [&] {
    SurfaceData d;
    for (const auto& s : j.at("stars")) d.stars.push_back({s.at("id").get<std::string>(), s.at("edges").get<int>()});
    for (const auto& r : j.at("regions")) {
      Region region{r.at("id").get<std::string>(), {}};
      for (const auto& item : r.at("boundary")) {
        if (item.is_string()) {
          if (item.get<std::string>() != "arc") throw InvalidInput("boundary items are \"arc\" or {\"gate\":...}");
          region.boundary.push_back(BoundaryArc{});
        } else {
          const auto& g = item.at("gate");
          region.boundary.push_back(GateRef{g.at("star").get<std::string>(), g.at("edge").get<int>()});
        }
      }
      d.regions.push_back(std::move(region));
    }
    if (j.contains("genus")) d.genus = j.at("genus").get<int>();
    if (j.contains("boundary")) d.boundary = j.at("boundary").get<int>();
    return d;
  });
}

Json to_json(const SurfaceData& data) {
  const SurfaceData c = canonicalize(data);
  Json j;
  j["stars"] = Json::array();
  for (const auto& s : c.stars) j["stars"].push_back({{"id", s.id}, {"edges", s.edge_count}});
  j["regions"] = Json::array();
  for (const auto& r : c.regions) {
    Json items = Json::array();
    for (const auto& item : r.boundary) {
      if (const auto* g = std::get_if<GateRef>(&item)) {
        items.push_back({{"gate", {{"star", g->star}, {"edge", g->edge}}}});
      } else {
        items.push_back("arc");
      }
    }
    j["regions"].push_back({{"id", r.id}, {"boundary", items}});
  }
  if (c.genus) j["genus"] = *c.genus;
  if (c.boundary) j["boundary"] = *c.boundary;
  return j;
}

Json to_json(const StarFilledSurface& s) { return to_json(s.data()); }

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["euler_characteristic"] = r.euler_characteristic;
  if (r.boundary_components) j["boundary_components"] = *r.boundary_components;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
  return j;
}

Position parse_position(const Json& j) {
  if (j.is_number_integer()) return Position(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidInput("position must be an integer or a \"num/den\" string");
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Position(std::stoll(s));
    const std::int64_t den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("position has zero denominator");
    return Position(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw InvalidInput("bad position '" + s + "'");
  }
}

std::string position_string(const Position& p) {
  return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

CombinatorialLoop parse_loop(const Json& j, const StarFilledSurface& s, const FillingGraph* graph) {
  return guarded("loop", [&] {
    CombinatorialLoop loop;
    const Json* transits = &j;
    if (j.is_object()) {
      transits = &j.at("transits");
      if (j.contains("anchor")) loop.anchor_region = s.region_index(j.at("anchor").get<std::string>());
    }
    for (const auto& t : *transits) {
      Transit tr;
      if (t.at("edge").is_string()) {
        if (!graph) throw InvalidInput("edge names are only understood for filling graphs");
        const auto [star, idx] = graph->blue_end(t.at("edge").get<std::string>());
        tr.star = star;
        tr.edge = idx;
        if (t.contains("star") && s.star(star).id != t.at("star").get<std::string>()) {
          throw InvalidInput("edge '" + t.at("edge").get<std::string>() + "' does not meet star '" +
                             t.at("star").get<std::string>() + "'");
        }
      } else {
        tr.star = s.star_index(t.at("star").get<std::string>());
        tr.edge = t.at("edge").get<int>();
      }
      tr.sign = t.at("sign").get<int>();
      tr.pos = t.contains("pos") ? parse_position(t.at("pos")) : Position(0);
      loop.transits.push_back(tr);
    }
    require_valid(s, loop);
    return loop;
  });
}

Json to_json(const CombinatorialLoop& loop, const StarFilledSurface& s) {
  Json ts = Json::array();
  for (const auto& t : loop.transits) {
    ts.push_back({{"star", s.star(t.star).id}, {"edge", t.edge}, {"sign", t.sign}, {"pos", position_string(t.pos)}});
  }
  if (!loop.transits.empty()) return ts;
  return {{"transits", ts}, {"anchor", s.region(loop.anchor_region).id}};
}

Json to_json(const GeneratorSet& gens) {
  Json j;
  j["surface"] = to_json(gens.surface);
  j["base_region"] = gens.surface.region(gens.base_region).id;
  j["generators"] = Json::object();
  for (const auto& g : gens.generators) j["generators"][g.name] = to_json(g.loop, gens.surface);
  j["aliases"] = Json::object();
  for (const auto& [alias, name] : gens.aliases) j["aliases"][alias] = name;
  return j;
}

Json class_json(const HomotopyClass& c, const StarFilledSurface& s) {
  Json j = Json::array();
  for (Letter l : c.word()) j.push_back(letter_json(l, s));
  return j;
}

Json to_json(const FormalSum& f, const StarFilledSurface& s) {
  Json j = Json::array();
  for (const auto& [c, k] : f) j.push_back({{"class", class_json(c, s)}, {"coef", k}});
  return j;
}

Json to_json(const TensorSum& t, const StarFilledSurface& s) {
  Json j = Json::array();
  for (const auto& [p, k] : t) j.push_back({{"left", class_json(p.first, s)}, {"right", class_json(p.second, s)}, {"coef", k}});
  return j;
}

Json to_json(const ClosedSum& f) {
  Json j = Json::array();
  for (const auto& [c, k] : f) j.push_back({{"class", c}, {"coef", k}});
  return j;
}

Json to_json(const ClosedTensorSum& t) {
  Json j = Json::array();
  for (const auto& [p, k] : t) j.push_back({{"left", p.first}, {"right", p.second}, {"coef", k}});
  return j;
}

RawConfiguration parse_gate_configuration(const Json& j) {
  return guarded("gate configuration", [&] {
    RawConfiguration raw;
    auto& c = raw.config;
    std::map<std::string, Letter> letter_of;
    c.letter_names.push_back("");
    for (const auto& g : j.at("gates")) {
      const std::string id = g.at("id").get<std::string>();
      if (letter_of.count(id)) throw InvalidInput("gate id '" + id + "' repeats");
      letter_of[id] = static_cast<Letter>(c.letter_names.size());
      c.letter_names.push_back(id);
    }
    auto parse_word = [&](const Json& w) {
      Word out;
      for (const auto& l : w) {
        std::string name = l.get<std::string>();
        int sign = 1;
        if (!name.empty() && name[0] == '-') {
          sign = -1;
          name = name.substr(1);
        }
        if (name.empty()) throw InvalidInput("empty letter");
        auto it = letter_of.find(name);
        if (it == letter_of.end()) {
          it = letter_of.emplace(name, static_cast<Letter>(c.letter_names.size())).first;
          c.letter_names.push_back(name);
        }
        out.push_back(sign * it->second);
      }
      return out;
    };
    const Json& loops = j.at("loops");
    c.words.push_back(parse_word(loops.at("a")));
    if (loops.contains("b")) c.words.push_back(parse_word(loops.at("b")));
    for (const auto& g : j.at("gates")) {
      Gate gate;
      gate.id = g.at("id").get<std::string>();
      gate.letter = letter_of.at(gate.id);
      raw.omega.push_back(g.value("eps_omega", 1));
      for (const auto& x : g.at("crossings")) {
        GateCrossing cr;
        const std::string owner = x.at("owner").get<std::string>();
        if (owner != "a" && owner != "b") throw InvalidInput("crossing owner must be \"a\" or \"b\"");
        cr.owner = owner == "a" ? 0 : 1;
        cr.sign = x.at("eps").get<int>();
        cr.slot = x.at("slot").get<int>();
        cr.link = x.at("link").get<std::size_t>();
        cr.transit = cr.link / 2;
        gate.crossings.push_back(cr);
      }
      std::sort(gate.crossings.begin(), gate.crossings.end(),
                [](const GateCrossing& a, const GateCrossing& b) { return a.slot < b.slot; });
      c.gates.push_back(std::move(gate));
    }
    validate_configuration(c);
    return raw;
  });
}

Json class_json(const HomotopyClass& c, const GateConfiguration& config) {
  Json j = Json::array();
  for (Letter l : c.word()) {
    const auto idx = static_cast<std::size_t>(std::abs(l));
    const std::string name = idx < config.letter_names.size() ? config.letter_names[idx] : std::to_string(idx);
    j.push_back(l > 0 ? name : "-" + name);
  }
  return j;
}

Json to_json(const FormalSum& f, const GateConfiguration& config) {
  Json j = Json::array();
  for (const auto& [c, k] : f) j.push_back({{"class", class_json(c, config)}, {"coef", k}});
  return j;
}

Json to_json(const TensorSum& t, const GateConfiguration& config) {
  Json j = Json::array();
  for (const auto& [p, k] : t) {
    j.push_back({{"left", class_json(p.first, config)}, {"right", class_json(p.second, config)}, {"coef", k}});
  }
  return j;
}

FillingGraphSpec parse_filling_graph(const Json& j) {
  return guarded("filling graph", [&] {
    FillingGraphSpec spec;
    auto vertices = [](const Json& list) {
      std::vector<FillingVertex> out;
      for (const auto& v : list) out.push_back({v.at("id").get<std::string>(), v.at("rotation").get<std::vector<std::string>>()});
      return out;
    };
    spec.blue = vertices(j.at("blue"));
    spec.red = vertices(j.at("red"));
    for (const auto& e : j.at("edges")) {
      spec.edges.push_back({e.at("id").get<std::string>(), e.at("blue").get<std::string>(), e.at("red").get<std::string>()});
    }
    return spec;
  });
}

Json to_json(const FillingGraphSpec& spec) {
  Json j;
  auto vertices = [](const std::vector<FillingVertex>& list) {
    Json out = Json::array();
    for (const auto& v : list) out.push_back({{"id", v.id}, {"rotation", v.rotation}});
    return out;
  };
  j["blue"] = vertices(spec.blue);
  j["red"] = vertices(spec.red);
  j["edges"] = Json::array();
  for (const auto& e : spec.edges) j["edges"].push_back({{"id", e.id}, {"blue", e.blue}, {"red", e.red}});
  return j;
}

Triangulation parse_triangulation(const Json& j) {
  return guarded("triangulation", [&] {
    const Json& tris = j.at("triangles");
    std::vector<std::array<std::string, 3>> rows;
    bool by_vertex = false;
    for (const auto& t : tris) {
      if (t.size() != 3) throw InvalidInput("triangles have three entries");
      std::array<std::string, 3> row;
      for (std::size_t i = 0; i < 3; ++i) {
        if (t[i].is_number_integer()) {
          by_vertex = true;
          row[i] = std::to_string(t[i].get<long long>());
        } else {
          row[i] = t[i].get<std::string>();
        }
      }
      rows.push_back(row);
    }
    if (by_vertex || j.value("kind", std::string()) == "simplicial") return simplicial_triangulation(rows);
    return Triangulation{rows};
  });
}

}  // namespace loopcalc::json_io
