#include "doctest.h"

#include "loopcalc/canonical.hpp"
#include "loopcalc/json_io.hpp"

using namespace loopcalc;

TEST_SUITE("surface") {
  TEST_CASE("canonical surfaces have the requested topology") {
    for (int g = 0; g <= 3; ++g) {
      for (int b = 1; b <= 3; ++b) {
        CAPTURE(g);
        CAPTURE(b);
        const GeneratorSet gens = canonical_surface(g, b, true);
        const StarFilledSurface& s = gens.surface;
        CHECK(s.genus() == g);
        CHECK(s.boundary_components() == b);
        CHECK(s.euler_characteristic() == 2 - 2 * g - b);
        CHECK(gens.generators.size() == static_cast<std::size_t>(2 * g + b - 1));
        CHECK(dual_graph(s).betti_number() == 2 * g + b - 1);
      }
    }
  }

  TEST_CASE("annulus") {
    const GeneratorSet gens = canonical_surface(0, 2);
    CHECK(gens.surface.star_count() == 1);
    CHECK(gens.surface.edge_count(0) == 2);
    CHECK(gens.surface.region_count() == 1);
    CHECK(gens.has("core"));
    CHECK(gens.has("a"));
  }

  TEST_CASE("three boundary arcs are rejected and the region is named") {
    const auto data = json_io::parse_surface(json_io::read_file(LOOPCALC_TEST_DATA "/bad_three_arcs.json"));
    const ValidationReport r = validate_surface(data);
    REQUIRE_FALSE(r.valid());
    bool named = false;
    for (const auto& v : r.violations) named = named || (v.code == "arc_count" && v.subject == "r0");
    CHECK(named);
    CHECK_THROWS_AS(StarFilledSurface::create(data), InvalidSurface);
  }

  TEST_CASE("missing and repeated gates are rejected") {
    SurfaceData d;
    d.stars = {{"s", 2}};
    d.regions = {{"r", {GateRef{"s", 0}, BoundaryArc{}, GateRef{"s", 0}, BoundaryArc{}}}};
    CHECK_FALSE(validate_surface(d).valid());
    d.regions = {{"r", {GateRef{"s", 0}, BoundaryArc{}}}};
    CHECK_FALSE(validate_surface(d).valid());
  }

  TEST_CASE("gate structure") {
    const StarGateStructure g = star_gate_structure(Star{"s", 4});
    REQUIRE(g.gates.size() == 4);
    CHECK(g.successor(GateRef{"s", 3}) == GateRef{"s", 0});
    CHECK(g.successor(GateRef{"s", 1}) == GateRef{"s", 2});
    for (int e : g.reference_signs) CHECK(e == 1);
    const StarGateStructure two = star_gate_structure(Star{"t", 2});
    CHECK(two.successor(GateRef{"t", 1}) == GateRef{"t", 0});
  }

  TEST_CASE("surface JSON round trip is idempotent") {
    for (auto [g, b] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
      const StarFilledSurface& s = canonical_surface(g, b).surface;
      const auto once = json_io::to_json(s);
      const auto again = json_io::to_json(StarFilledSurface::create(json_io::parse_surface(once)));
      CHECK(once.dump() == again.dump());
    }
  }

  TEST_CASE("dual graph text") {
    const std::string dot = dual_graph(canonical_surface(1, 1).surface).to_dot();
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
  }
}
