#include "doctest.h"

#include "loopcalc/canonical.hpp"
#include "loopcalc/json_io.hpp"
#include "loopcalc/random_loops.hpp"

using namespace loopcalc;
using json_io::Json;

TEST_SUITE("json") {
  TEST_CASE("positions") {
    CHECK(json_io::parse_position(Json(3)) == Position(3));
    CHECK(json_io::parse_position(Json("3/2")) == Position(3, 2));
    CHECK(json_io::parse_position(Json("-6/4")) == Position(-3, 2));
    CHECK(json_io::position_string(Position(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(json_io::parse_position(Json("x")), InvalidInput);
  }

  TEST_CASE("loop round trip") {
    const StarFilledSurface& s = canonical_surface(2, 1).surface;
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const CombinatorialLoop l = random_loop(s, rng);
      const Json j = json_io::to_json(l, s);
      const CombinatorialLoop back = json_io::parse_loop(j, s);
      CHECK(back.transits == l.transits);
      CHECK(json_io::to_json(back, s).dump() == j.dump());
    }
  }

  TEST_CASE("object loop form with an anchor") {
    const StarFilledSurface& s = canonical_surface(1, 1).surface;
    const CombinatorialLoop l = json_io::parse_loop(Json::parse(R"({"transits": [], "anchor": "r1"})"), s);
    CHECK(l.transits.empty());
    CHECK(l.anchor_region == s.region_index("r1"));
  }

  TEST_CASE("invalid loops are reported") {
    const StarFilledSurface& s = canonical_surface(1, 1).surface;
    CHECK_THROWS_AS(json_io::parse_loop(Json::parse(R"([{"star": "q", "edge": 0, "sign": 1, "pos": 0}])"), s),
                    InvalidInput);
    CHECK_THROWS_AS(json_io::parse_loop(Json::parse(R"([{"star": "s", "edge": 9, "sign": 1, "pos": 0}])"), s),
                    InvalidInput);
  }

  TEST_CASE("generator set output") {
    const Json j = json_io::to_json(canonical_surface(1, 1));
    CHECK(j["generators"].contains("x1"));
    CHECK(j["aliases"]["x"] == "x1");
    CHECK(j["surface"]["genus"] == 1);
  }

  TEST_CASE("filling graph round trip") {
    const FillingGraphSpec spec = torus_example_spec();
    CHECK(json_io::parse_filling_graph(json_io::to_json(spec)) == spec);
  }
}
