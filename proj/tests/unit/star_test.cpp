#include "doctest.h"

#include "loopcalc/canonical.hpp"
#include "loopcalc/random_loops.hpp"
#include "loopcalc/star_calculus.hpp"

using namespace loopcalc;

TEST_SUITE("star") {
  TEST_CASE("annulus core expands to one crossing per gate") {
    const GeneratorSet gens = canonical_surface(0, 2);
    const CombinatorialLoop core = gens.generator("core");
    const GateConfiguration c = expand_to_gates(gens.surface, 0, std::span(&core, 1));
    REQUIRE(c.gates.size() == 2);
    REQUIRE(c.gates[0].crossings.size() == 1);
    REQUIRE(c.gates[1].crossings.size() == 1);
    CHECK(c.gates[0].crossings[0].sign == 1);
    CHECK(c.gates[1].crossings[0].sign == -1);
    CHECK(gate::v(c, 0, 0) == 1);
    CHECK(gate::v(c, 1, 0) == -1);
  }

  TEST_CASE("core squared") {
    const GeneratorSet gens = canonical_surface(0, 2);
    const CombinatorialLoop c2 = compile_word(gens, "core^2");
    const GateConfiguration c = expand_to_gates(gens.surface, 0, std::span(&c2, 1));
    CHECK(gate::v(c, 0, 0) == 2);
    CHECK(aggregate_cobracket(gens.surface, c2).sum.zero());
  }

  TEST_CASE("shared positions are rejected by the expansion") {
    const GeneratorSet gens = canonical_surface(0, 2);
    const CombinatorialLoop pair[] = {gens.generator("core"), gens.generator("core")};
    CHECK_THROWS(expand_to_gates(gens.surface, 0, pair));
  }

  TEST_CASE("symplectic basis of the one-holed torus") {
    const GeneratorSet gens = canonical_surface(1, 1);
    const StarFilledSurface& s = gens.surface;
    const CombinatorialLoop x = gens.generator("x");
    const CombinatorialLoop y = make_disjoint(x, gens.generator("y"));
    const auto form = aggregate_form(s, x, y);
    CHECK(form.sum == 2);
    CHECK(form.halved == 1);
    CHECK(aggregate_form(s, y, x).sum == -2);
    const auto br = aggregate_bracket(s, x, y);
    FormalSum expect;
    expect.add(to_class(s, compile_word(gens, "x y")), 2);
    CHECK(br.sum == expect);
    CHECK(aggregate_cobracket(s, x).sum.zero());
    CHECK(aggregate_cobracket(s, y).sum.zero());
  }

  TEST_CASE("generator pairs of higher genus") {
    const GeneratorSet gens = canonical_surface(2, 1);
    const StarFilledSurface& s = gens.surface;
    auto form = [&](const char* a, const char* b) {
      const CombinatorialLoop x = gens.generator(a);
      return aggregate_form(s, x, make_disjoint(x, gens.generator(b))).halved;
    };
    CHECK(form("x1", "y1") == 1);
    CHECK(form("x2", "y2") == 1);
    CHECK(form("x1", "y2") == 0);
    CHECK(form("x1", "x2") == 0);
  }

  TEST_CASE("star form matches the shifted count formula") {
    const StarFilledSurface& s = canonical_surface(1, 2).surface;
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const CombinatorialLoop a = random_loop(s, rng);
      const CombinatorialLoop b = random_loop(s, rng, 12, std::span(&a, 1));
      const int n = s.edge_count(0);
      const CountVector ca = edge_counts(a, 0, n), cb = edge_counts(b, 0, n);
      Coefficient expect = 0;
      for (int e = 0; e < n; ++e) expect += ca(e) * cb((e + 1) % n) - cb(e) * ca((e + 1) % n);
      CHECK(star_form(s, 0, a, b) == expect);
    }
  }

  TEST_CASE("both routes agree and the swapped order does not") {
    const StarFilledSurface& s = canonical_surface(1, 1).surface;
    Rng rng(8);
    GateRouteOptions broken;
    broken.expand.swap_prime_order = true;
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const CombinatorialLoop a = random_loop(s, rng);
      const CombinatorialLoop b = random_loop(s, rng, 12, std::span(&a, 1));
      CHECK(aggregate_form(s, a, b).sum == gate_route_form(s, a, b).sum);
      CHECK(aggregate_bracket(s, a, b).sum == gate_route_bracket(s, a, b).sum);
      CHECK(aggregate_cobracket(s, a).sum == gate_route_cobracket(s, a).sum);
      if (gate_route_form(s, a, b, broken).sum != aggregate_form(s, a, b).sum) ++disagreements;
    }
    CHECK(disagreements > 0);
  }

  TEST_CASE("star orientation slices a global orientation") {
    const StarFilledSurface& s = canonical_surface(1, 1).surface;
    const GateOrientation global{1, -1, 1, -1};
    CHECK(star_orientation(s, 0, global) == global);
  }
}
