#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "loopcalc/canonical.hpp"
#include "loopcalc/closed_surface.hpp"
#include "loopcalc/fuzz.hpp"
#include "loopcalc/json_io.hpp"
#include "loopcalc/star_calculus.hpp"

using namespace loopcalc;
using json_io::Json;

namespace {

constexpr int kValidation = 2;
constexpr int kMismatch = 3;
constexpr int kOdd = 4;

// Exit with a JSON report on stdout.
struct Exit {
  int code;
  Json report;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "g1b1" style names, unless a file of that name exists.
bool is_canonical_name(const std::string& s) {
  return s.size() >= 4 && s[0] == 'g' && s.find('b') != std::string::npos && !std::ifstream(s);
}

Json parse_inline_or_file(const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) {
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("cannot parse loop JSON: ") + e.what());
    }
  }
  return json_io::read_file(text);
}

StarFilledSurface load_surface(const std::string& path) {
  const SurfaceData data = json_io::parse_surface(json_io::read_file(path));
  const ValidationReport r = validate_surface(data);
  if (!r.valid()) throw Exit{kValidation, json_io::to_json(r)};
  return StarFilledSurface::create(data);
}

// Per-gate signs: "+-+-", "1,-1,1" or empty for the reference orientation.
GateOrientation parse_omega(const std::string& spec, std::size_t gates) {
  GateOrientation w;
  if (spec.empty()) return w;
  if (spec.find_first_not_of("+-") == std::string::npos) {
    for (char c : spec) w.push_back(c == '+' ? 1 : -1);
  } else {
    std::stringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      const int v = std::stoi(tok);
      if (v != 1 && v != -1) throw InvalidInput("--omega entries must be +1 or -1");
      w.push_back(v);
    }
  }
  if (w.size() != gates) {
    throw InvalidInput("--omega needs " + std::to_string(gates) + " signs, got " + std::to_string(w.size()));
  }
  return w;
}

struct ComputeArgs {
  std::string op;
  std::string a, b;
  std::string method = "both";
  std::string omega;
  bool halve = false;
  std::string surface = "g1b1";
  std::string graph;
  std::string config;
  int bound = 8;
};

// Star and gate routes on a bounded surface, with value rendering left to `render`.
template <typename V, typename StarF, typename GateF, typename R>
Json dual_route(const ComputeArgs& args, StarF&& star, GateF&& gate, R&& render) {
  Json out;
  std::optional<Aggregate<V>> s, g;
  if (args.method != "gate") {
    s = star();
    out["star"] = json_io::aggregate_json(args.op, *s, render);
  }
  if (args.method != "star") {
    g = gate();
    out["gate"] = json_io::aggregate_json(args.op, *g, render);
  }
  const Aggregate<V>& main = s ? *s : *g;
  if (s && g) out["methods_agree"] = s->sum == g->sum && s->per_star == g->per_star;
  out["sum"] = render(main.sum);
  if (args.halve) out["halved"] = render(main.halved);
  return out;
}

// Computes on a bounded surface; `g` may carry generator names for word loops.
Json compute_bounded(const ComputeArgs& args, const StarFilledSurface& s, const GeneratorSet* g) {
  auto loop = [&](const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
    const bool json_like = !text.empty() && (text[0] == '[' || text[0] == '{' || std::ifstream(text).good());
    if (g && !json_like) return compile_word(*g, text);
    return json_io::parse_loop(parse_inline_or_file(text), s);
  };
  const CombinatorialLoop a = loop(args.a, "--a");
  GateRouteOptions gopt;
  gopt.omega = parse_omega(args.omega, s.gate_count());
  Json out{{"op", args.op}, {"method", args.method}};
  auto fs = [&](const FormalSum& f) { return json_io::to_json(f, s); };
  auto ts = [&](const TensorSum& t) { return json_io::to_json(t, s); };
  auto num = [](Coefficient k) { return Json(k); };
  if (args.op == "cobracket") {
    out.update(dual_route<TensorSum>(
        args, [&] { return aggregate_cobracket(s, a); }, [&] { return gate_route_cobracket(s, a, gopt); }, ts));
    if (!gopt.omega.empty()) {
      GateRouteOptions w = gopt;
      w.omega_part = true;
      out["omega_value"] = ts(gate_route_cobracket(s, a, w).sum);
    }
    return out;
  }
  CombinatorialLoop b = loop(args.b, "--b");
  if (!positions_disjoint(a, b)) b = make_disjoint(a, b);
  GateRouteOptions w = gopt;
  w.omega_part = true;
  if (args.op == "form") {
    out.update(dual_route<Coefficient>(
        args, [&] { return aggregate_form(s, a, b); }, [&] { return gate_route_form(s, a, b, gopt); }, num));
    if (!gopt.omega.empty()) out["omega_value"] = gate_route_form(s, a, b, w).sum;
  } else {
    out.update(dual_route<FormalSum>(
        args, [&] { return aggregate_bracket(s, a, b); }, [&] { return gate_route_bracket(s, a, b, gopt); }, fs));
    if (!gopt.omega.empty()) out["omega_value"] = fs(gate_route_bracket(s, a, b, w).sum);
  }
  return out;
}

Json compute_closed(const ComputeArgs& args) {
  const bool builtin = args.graph == "torus";
  FillingGraphSpec spec = torus_example_spec();
  if (!builtin) {
    const Json j = json_io::read_file(args.graph);
    spec = j.contains("triangles") ? from_triangulation(json_io::parse_triangulation(j))
                                   : json_io::parse_filling_graph(j);
  }
  const FillingGraph fg = FillingGraph::build(spec);
  const ClosedGroup group(fg);
  const StarFilledSurface& s = fg.surface();
  std::optional<std::pair<CombinatorialLoop, CombinatorialLoop>> named;
  if (builtin) named = torus_example_loops(fg);
  auto loop = [&](const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
    if (named && text == "a") return named->first;
    if (named && text == "b") return named->second;
    return json_io::parse_loop(parse_inline_or_file(text), s, &fg);
  };
  const CombinatorialLoop a = loop(args.a, "--a");
  Json relators = Json::array();
  for (const Word& r : group.relators()) {
    std::string text;
    for (Letter l : r) text += (text.empty() ? "" : " ") + (l > 0 ? "g" + std::to_string(l) : "G" + std::to_string(-l));
    relators.push_back(text);
  }
  Json out{{"op", args.op},
           {"method", args.method},
           {"genus", fg.genus()},
           {"presentation", {{"generators", group.rank()}, {"relators", relators}}},
           {"conjugacy_bound", args.bound}};
  GateRouteOptions gopt;
  gopt.omega = parse_omega(args.omega, s.gate_count());
  bool agree = true;
  if (args.op == "cobracket") {
    const auto c = closed_cobracket(fg, group, a, args.bound);
    out["per_star"] = Json::array();
    for (const auto& [id, v] : c.per_star) out["per_star"].push_back({{"star", id}, {"value", json_io::to_json(v)}});
    out["sum"] = json_io::to_json(c.sum);
    if (args.halve) out["halved"] = json_io::to_json(c.halved);
    if (args.method != "star") agree = aggregate_cobracket(s, a).sum == gate_route_cobracket(s, a, gopt).sum;
  } else {
    CombinatorialLoop b = loop(args.b, "--b");
    if (!positions_disjoint(a, b)) b = make_disjoint(a, b);
    if (args.op == "form") {
      const auto c = closed_form(fg, a, b);
      out["per_star"] = Json::array();
      for (const auto& [id, v] : c.per_star) out["per_star"].push_back({{"star", id}, {"value", v}});
      out["sum"] = c.sum;
      if (args.halve) out["halved"] = c.halved;
      if (args.method != "star") agree = c.sum == gate_route_form(s, a, b, gopt).sum;
    } else {
      const auto c = closed_bracket(fg, group, a, b, args.bound);
      out["per_star"] = Json::array();
      for (const auto& [id, v] : c.per_star) out["per_star"].push_back({{"star", id}, {"value", json_io::to_json(v)}});
      out["sum"] = json_io::to_json(c.sum);
      if (args.halve) out["halved"] = json_io::to_json(c.halved);
      if (args.method != "star") agree = aggregate_bracket(s, a, b).sum == gate_route_bracket(s, a, b, gopt).sum;
    }
  }
  if (args.method != "star") out["methods_agree"] = agree;
  return out;
}

Json compute_config(const ComputeArgs& args) {
  const auto raw = json_io::parse_gate_configuration(json_io::read_file(args.config));
  const GateConfiguration& c = raw.config;
  const GateOrientation w = args.omega.empty() ? raw.omega : parse_omega(args.omega, c.gates.size());
  Json out{{"op", args.op}, {"method", "gate"}, {"omega", w}};
  if (args.op == "form") {
    out["omega_value"] = gate::form_omega(c, w);
    out["value"] = gate::form(c, w);
  } else if (args.op == "bracket") {
    out["omega_value"] = json_io::to_json(gate::bracket_omega(c, w), c);
    out["value"] = json_io::to_json(gate::bracket(c, w), c);
  } else {
    out["omega_value"] = json_io::to_json(gate::cobracket_omega(c, w), c);
    out["value"] = json_io::to_json(gate::cobracket(c, w), c);
  }
  return out;
}

int run_compute(const ComputeArgs& args) {
  Json out;
  try {
    if (!args.config.empty()) {
      out = compute_config(args);
    } else if (!args.graph.empty()) {
      out = compute_closed(args);
    } else if (is_canonical_name(args.surface)) {
      const GeneratorSet g = parse_surface_name(args.surface);
      out = compute_bounded(args, g.surface, &g);
      out["surface"] = args.surface;
    } else {
      out = compute_bounded(args, load_surface(args.surface), nullptr);
    }
  } catch (const OddCoefficient& e) {
    emit({{"op", args.op}, {"error", "odd_coefficient"}, {"message", e.what()}});
    return kOdd;
  }
  emit(out);
  if (out.contains("methods_agree") && !out["methods_agree"].get<bool>()) {
    std::cerr << "star and gate routes disagree\n";
    return kMismatch;
  }
  return 0;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LOOPCALC_SEED")) return std::stoull(env);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection form, Goldman bracket and Turaev cobracket of loops on surfaces"};
  app.require_subcommand(1);

  auto* surface = app.add_subcommand("surface", "Build, load, validate and inspect star-filled surfaces");
  surface->require_subcommand(1);
  int genus = 1, boundary = 1;
  auto* s_new = surface->add_subcommand("new", "Canonical one-star surface with generators");
  s_new->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
  s_new->add_option("--boundary", boundary)->check(CLI::NonNegativeNumber);
  std::string file;
  auto* s_load = surface->add_subcommand("load", "Validate a surface file and print its canonical form");
  s_load->add_option("file", file)->required();
  auto* s_validate = surface->add_subcommand("validate", "Print the validation report of a surface file");
  s_validate->add_option("file", file)->required();
  std::string dual_source = "g1b1";
  bool dot = false;
  auto* s_dual = surface->add_subcommand("dual", "Dual graph of a surface (gXbY name or file)");
  s_dual->add_option("source", dual_source);
  s_dual->add_flag("--dot", dot, "Emit Graphviz text instead of JSON");

  ComputeArgs cargs;
  auto* compute = app.add_subcommand("compute", "Evaluate form, bracket or cobracket");
  compute->add_option("op", cargs.op)->required()->check(CLI::IsMember({"form", "bracket", "cobracket"}));
  compute->add_option("--a", cargs.a, "Generator word, loop JSON, or loop file");
  compute->add_option("--b", cargs.b, "Second loop (form and bracket)");
  compute->add_option("--method", cargs.method)->check(CLI::IsMember({"star", "gate", "both"}));
  compute->add_option("--omega", cargs.omega, "Gate orientation signs, e.g. +-++ or 1,-1,1,1");
  compute->add_flag("--halve", cargs.halve, "Also report the halved value; odd sums exit 4");
  compute->add_option("--surface", cargs.surface, "gXbY or a surface file");
  compute->add_option("--graph", cargs.graph, "Filling-graph or triangulation file, or \"torus\" for the built-in example");
  compute->add_option("--config", cargs.config, "Raw gate-configuration file");
  compute->add_option("--conjugacy-bound", cargs.bound)->check(CLI::NonNegativeNumber);

  FuzzOptions fopt;
  fopt.seed = default_seed();
  auto* fuzz = app.add_subcommand("fuzz", "Randomized property checks");
  fuzz->add_option("--surface", fopt.surface);
  fuzz->add_option("--pairs", fopt.pairs);
  fuzz->add_option("--moves", fopt.moves);
  fuzz->add_option("--seed", fopt.seed, "Defaults to LOOPCALC_SEED or 1");
  fuzz->add_option("--max-transits", fopt.max_transits);
  fuzz->add_flag("--inject-bug", fopt.inject_bug, "Swap the crossing order on gates (harness self-test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s_new) {
      emit(json_io::to_json(canonical_surface(genus, boundary, true)));
    } else if (*s_load) {
      emit(json_io::to_json(load_surface(file)));
    } else if (*s_validate) {
      const ValidationReport r = validate_surface(json_io::parse_surface(json_io::read_file(file)));
      emit(json_io::to_json(r));
      return r.valid() ? 0 : kValidation;
    } else if (*s_dual) {
      const StarFilledSurface s =
          is_canonical_name(dual_source) ? parse_surface_name(dual_source).surface : load_surface(dual_source);
      const DualGraph d = dual_graph(s);
      if (dot) {
        std::cout << d.to_dot();
      } else {
        Json j{{"vertices", d.vertex_labels}, {"edges", Json::array()}, {"betti_number", d.betti_number()}};
        for (std::size_t e = 0; e < d.edges.size(); ++e) {
          j["edges"].push_back({{"label", d.edge_labels[e]},
                                {"from", d.vertex_labels[d.edges[e].first]},
                                {"to", d.vertex_labels[d.edges[e].second]}});
        }
        emit(j);
      }
    } else if (*compute) {
      return run_compute(cargs);
    } else if (*fuzz) {
      const FuzzReport r = run_fuzz(fopt);
      emit(r.json);
      return r.ok() ? 0 : kMismatch;
    }
  } catch (const Exit& e) {
    emit(e.report);
    return e.code;
  } catch (const InvalidSurface& e) {
    emit(json_io::to_json(e.report()));
    return kValidation;
  } catch (const InvalidInput& e) {
    emit({{"error", "invalid_input"}, {"message", e.what()}});
    return kValidation;
  }
  return 0;
}
