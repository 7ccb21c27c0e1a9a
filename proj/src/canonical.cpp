#include "loopcalc/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loopcalc {

namespace {

int wrap(int e, int n) { return ((e % n) + n) % n; }

// Transits through the single star from gate `from` to gate `to`, taking the shorter way
// round (clockwise on ties).
std::vector<Transit> route(int from, int to, int n) {
  std::vector<Transit> out;
  const int cw = wrap(from - to, n);
  const int ccw = wrap(to - from, n);
  if (cw <= ccw) {
    for (int k = 0; k < cw; ++k) out.push_back({0, wrap(from - k, n), +1, Position(0)});
  } else {
    for (int k = 1; k <= ccw; ++k) out.push_back({0, wrap(from + k, n), -1, Position(0)});
  }
  return out;
}

void renumber_positions(CombinatorialLoop& loop) {
  std::map<std::pair<std::size_t, int>, std::int64_t> next;
  for (auto& t : loop.transits) t.pos = Position(next[{t.star, t.edge}]++);
}

}  // namespace

const CombinatorialLoop& GeneratorSet::generator(const std::string& name) const {
  std::string key = name;
  if (auto a = aliases.find(name); a != aliases.end()) key = a->second;
  for (const auto& g : generators) {
    if (g.name == key) return g.loop;
  }
  throw InvalidInput("unknown generator '" + name + "'");
}

bool GeneratorSet::has(const std::string& name) const {
  if (aliases.count(name)) return true;
  return std::any_of(generators.begin(), generators.end(), [&](const NamedLoop& g) { return g.name == name; });
}

GeneratorSet canonical_surface(int genus, int boundary, bool allow_disk) {
  if (genus < 0 || boundary < 1) throw InvalidInput("unsupported surface: need genus >= 0 and boundary >= 1");
  if (genus == 0 && boundary == 1 && !allow_disk) throw InvalidInput("the disk has no nontrivial loops");

  const int n = std::max(2, 4 * genus + 2 * (boundary - 1));
  SurfaceData data;
  data.stars.push_back({"s", n});
  data.genus = genus;
  data.boundary = boundary;

  // Bands as (exit gate, re-entry gate); the generator of a band crosses it in that order.
  std::vector<std::pair<int, int>> bands;
  for (int k = 0; k < genus; ++k) {
    bands.emplace_back(4 * k, 4 * k + 2);
    bands.emplace_back(4 * k + 1, 4 * k + 3);
  }
  for (int j = 0; j + 1 < boundary; ++j) bands.emplace_back(4 * genus + 2 * j + 1, 4 * genus + 2 * j);

  int region = 0;
  auto region_id = [&] { return "r" + std::to_string(region++); };
  for (const auto& [i, j] : bands) {
    data.regions.push_back({region_id(), {GateRef{"s", std::min(i, j)}, BoundaryArc{}, GateRef{"s", std::max(i, j)},
                                          BoundaryArc{}}});
  }
  if (bands.empty()) {
    for (int e = 0; e < n; ++e) data.regions.push_back({region_id(), {GateRef{"s", e}, BoundaryArc{}}});
  }

  GeneratorSet gens{StarFilledSurface::create(std::move(data)), 0, {}, {}};
  gens.base_region = gens.surface.region_index("r0");

  const int base_gate = 0;
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const auto [out_gate, in_gate] = bands[b];
    CombinatorialLoop loop;
    auto first = route(base_gate, out_gate, n);
    auto second = route(in_gate, base_gate, n);
    loop.transits = first;
    loop.transits.insert(loop.transits.end(), second.begin(), second.end());
    loop.anchor_region = gens.base_region;
    renumber_positions(loop);
    std::string name;
    if (b < 2 * static_cast<std::size_t>(genus)) {
      name = (b % 2 == 0 ? "x" : "y") + std::to_string(b / 2 + 1);
    } else {
      name = "z" + std::to_string(b - 2 * static_cast<std::size_t>(genus) + 1);
    }
    require_valid(gens.surface, loop);
    gens.generators.push_back({name, std::move(loop)});
  }
  if (genus == 1) {
    gens.aliases["x"] = "x1";
    gens.aliases["y"] = "y1";
  }
  if (boundary == 2) gens.aliases["z"] = "z1";
  if (genus == 0 && boundary == 2) {
    gens.aliases["a"] = "z1";
    gens.aliases["core"] = "z1";
  }
  return gens;
}

GeneratorWord parse_generator_word(const std::string& text, const GeneratorSet& gens) {
  GeneratorWord out;
  std::string cleaned = text;
  std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == '*' || c == '.' || c == ','; }, ' ');
  std::istringstream is(cleaned);
  std::string token;
  while (is >> token) {
    if (token == "1") continue;
    std::string name = token;
    int power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        std::size_t used = 0;
        power = std::stoi(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidInput("bad exponent in '" + token + "'");
      }
    }
    if (gens.has(name)) {
      if (power != 0) out.emplace_back(name, power);
      continue;
    }
    // Compact form: one-letter generators, uppercase for inverses.
    GeneratorWord letters;
    for (char c : name) {
      const std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      if (!gens.has(lower)) throw InvalidInput("unknown generator '" + name + "'");
      letters.emplace_back(lower, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1);
    }
    if (letters.empty()) continue;
    letters.back().second *= power;
    for (auto& l : letters) {
      if (l.second != 0) out.push_back(l);
    }
  }
  return out;
}

CombinatorialLoop reversed(const CombinatorialLoop& loop) {
  CombinatorialLoop out = loop;
  std::reverse(out.transits.begin(), out.transits.end());
  for (auto& t : out.transits) t.sign = -t.sign;
  return out;
}

CombinatorialLoop compile_word(const GeneratorSet& gens, const GeneratorWord& word) {
  const auto& s = gens.surface;
  CombinatorialLoop out;
  out.anchor_region = gens.base_region;
  for (const auto& [name, power] : word) {
    const CombinatorialLoop& g = gens.generator(name);
    if (!g.transits.empty()) {
      if (s.gate_region(entry_gate(s, g.transits.front())) != gens.base_region ||
          s.gate_region(exit_gate(s, g.transits.back())) != gens.base_region) {
        throw InvalidInput("generator '" + name + "' is not based in the common region");
      }
    }
    const CombinatorialLoop piece = power < 0 ? reversed(g) : g;
    for (int k = 0; k < std::abs(power); ++k) {
      out.transits.insert(out.transits.end(), piece.transits.begin(), piece.transits.end());
    }
  }
  renumber_positions(out);
  require_valid(s, out);
  return out;
}

CombinatorialLoop compile_word(const GeneratorSet& gens, const std::string& text) {
  return compile_word(gens, parse_generator_word(text, gens));
}

}  // namespace loopcalc
