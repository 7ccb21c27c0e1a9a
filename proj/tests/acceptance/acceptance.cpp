// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// Usage: loopcalc_acceptance [criterion...]
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "loopcalc/canonical.hpp"
#include "loopcalc/closed_surface.hpp"
#include "loopcalc/fuzz.hpp"
#include "loopcalc/json_io.hpp"

using namespace loopcalc;

namespace {

const std::vector<std::string> kSurfaces{"g0b2", "g0b3", "g1b1", "g2b1"};

struct Instance {
  const GeneratorSet* gens;
  CombinatorialLoop a, b;
};

// Seeded random pairs spread evenly over the surfaces.
std::vector<Instance> instances(const std::vector<GeneratorSet>& surfaces, std::size_t count, std::uint64_t seed) {
  std::vector<Instance> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const GeneratorSet& g = surfaces[i % surfaces.size()];
    CombinatorialLoop a = random_loop(g.surface, rng, 12);
    CombinatorialLoop b = random_loop(g.surface, rng, 12, std::span(&a, 1));
    out.push_back({&g, std::move(a), std::move(b)});
  }
  return out;
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_tally(const CheckTally& t, const std::string& prefix = "") {
  std::size_t pass = 0, fail = 0;
  std::string failed;
  for (const auto& [k, v] : t.passed) {
    if (k.rfind(prefix, 0) == 0) pass += v;
  }
  for (const auto& [k, v] : t.failed) {
    if (k.rfind(prefix, 0) == 0) {
      fail += v;
      failed += " " + k + "=" + std::to_string(v);
    }
  }
  return {fail == 0 && pass > 0,
          std::to_string(pass) + " checks passed, " + std::to_string(fail) + " failed" + failed};
}

json_io::RawConfiguration config(const std::string& name) {
  return json_io::parse_gate_configuration(json_io::read_file(std::string(LOOPCALC_TEST_DATA "/") + name));
}

bool vanishes(const std::string& pair_file, const std::string& single_file) {
  const auto two = config(pair_file);
  const auto one = config(single_file);
  return gate::form_omega(two.config, two.omega) == 0 && gate::form(two.config, two.omega) == 0 &&
         gate::bracket_omega(two.config, two.omega).zero() && gate::bracket(two.config, two.omega).zero() &&
         gate::cobracket_omega(one.config, one.omega).zero() && gate::cobracket(one.config, one.omega).zero();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  std::vector<GeneratorSet> surfaces;
  for (const auto& name : kSurfaces) surfaces.push_back(parse_surface_name(name));
  // Shared fuzz corpus for criteria 3, 6 and 9.
  const std::vector<Instance> corpus = instances(surfaces, 1000, 20261015);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"torus example closed form is 2, halved 1",
       [] {
         const FillingGraph fg = FillingGraph::build(torus_example_spec());
         const auto [a, b] = torus_example_loops(fg);
         const auto f = closed_form(fg, a, b);
         return Outcome{f.sum == 2 && f.halved == 1,
                        "doubled " + std::to_string(f.sum) + ", halved " + std::to_string(f.halved)};
       }},
      {"vanishing gate examples, nonzero anti-aligned instance",
       [] {
         const bool one = vanishes("one_gate.json", "one_gate_single.json");
         const bool two = vanishes("two_gate_aligned.json", "two_gate_single.json");
         const auto anti = config("two_gate_anti_aligned.json");
         const Coefficient f = gate::form_omega(anti.config, anti.omega);
         return Outcome{one && two && f != 0, std::string("one-gate ") + (one ? "0" : "nonzero") + ", aligned " +
                                                  (two ? "0" : "nonzero") + ", anti-aligned form_w " +
                                                  std::to_string(f)};
       }},
      {"star and gate routes agree on 1000 pairs",
       [&] {
         CheckTally t;
         for (const auto& x : corpus) check_method_agreement(x.gens->surface, x.a, x.b, t);
         return from_tally(t, "method.");
       }},
      {"omega independence over all orientations",
       [&] {
         CheckTally t;
         PropertyOptions opt;
         // Also exhaustive on the 8-gate genus-two surface, which costs little.
         opt.exhaustive_gates = 8;
         std::string used;
         Rng rng(4);
         for (const auto& g : surfaces) {
           used += " " + std::to_string(g.surface.gate_count());
           for (int i = 0; i < 100; ++i) {
             const CombinatorialLoop a = random_loop(g.surface, rng, 12);
             const CombinatorialLoop b = random_loop(g.surface, rng, 12, std::span(&a, 1));
             check_omega_independence(g.surface, a, b, rng, t, opt);
           }
         }
         Outcome o = from_tally(t, "omega.");
         o.detail += "; gate counts" + used;
         return o;
       }},
      {"identity suite on 500 instances",
       [&] {
         CheckTally t;
         Rng rng(5);
         for (const auto& x : instances(surfaces, 500, 55)) check_identities(x.gens->surface, x.a, x.b, rng, t);
         return from_tally(t, "identity.");
       }},
      {"aggregated coefficients are even",
       [&] {
         CheckTally t;
         for (const auto& x : corpus) check_evenness(x.gens->surface, x.a, x.b, t);
         return from_tally(t, "evenness.");
       }},
      {"invariance under 50-step move sequences, 200 instances",
       [&] {
         CheckTally t;
         Rng rng(7);
         for (const auto& x : instances(surfaces, 200, 77)) check_homotopy_invariance(x.gens->surface, x.a, x.b, 50, rng, t);
         return from_tally(t, "homotopy.");
       }},
      {"one-holed torus symplectic basis values",
       [&] {
         const GeneratorSet& g = surfaces[2];
         const StarFilledSurface& s = g.surface;
         const auto x = g.generator("x");
         const auto y = make_disjoint(x, g.generator("y"));
         const FormalSum xy(to_class(s, compile_word(g, "x y")), 2);
         const bool form = aggregate_form(s, x, y).sum == 2 && gate_route_form(s, x, y).sum == 2;
         const bool bracket = aggregate_bracket(s, x, y).sum == xy && gate_route_bracket(s, x, y).sum == xy;
         const bool cobracket = aggregate_cobracket(s, x).sum.zero() && aggregate_cobracket(s, y).sum.zero() &&
                                gate_route_cobracket(s, x).sum.zero() && gate_route_cobracket(s, y).sum.zero();
         return Outcome{form && bracket && cobracket, std::string("form ") + (form ? "ok" : "wrong") + ", bracket " +
                                                          (bracket ? "ok" : "wrong") + ", cobracket " +
                                                          (cobracket ? "ok" : "wrong")};
       }},
      {"abelianization shadows",
       [&] {
         CheckTally t;
         for (const auto& x : corpus) check_abelian_shadows(x.gens->surface, x.a, x.b, t);
         return from_tally(t, "abelian.");
       }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s (%s; %.2f s)\n", n, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
