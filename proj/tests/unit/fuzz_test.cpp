#include "doctest.h"

#include "loopcalc/fuzz.hpp"

using namespace loopcalc;

TEST_SUITE("fuzz") {
  TEST_CASE("surface names") {
    CHECK(parse_surface_name("g2b1").surface.genus() == 2);
    CHECK(parse_surface_name("g0b3").surface.boundary_components() == 3);
    CHECK_THROWS_AS(parse_surface_name("torus"), InvalidInput);
  }

  TEST_CASE("reports are deterministic in the seed") {
    FuzzOptions opt;
    opt.pairs = 20;
    opt.seed = 42;
    const FuzzReport a = run_fuzz(opt), b = run_fuzz(opt);
    CHECK(a.ok());
    CHECK(a.json.dump() == b.json.dump());
    opt.seed = 43;
    CHECK(run_fuzz(opt).json["seed"] == 43);
  }

  TEST_CASE("an injected ordering bug is caught and shrunk") {
    FuzzOptions opt;
    opt.pairs = 30;
    opt.inject_bug = true;
    const FuzzReport r = run_fuzz(opt);
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.json["counterexample"].is_null());
    CHECK(r.json["counterexample"]["a"].size() <= 4);
  }

  TEST_CASE("tally bookkeeping") {
    CheckTally t;
    CHECK(t.record("x", true));
    CHECK_FALSE(t.record("y", false));
    CheckTally u;
    u.record("x", true);
    t.merge(u);
    CHECK(t.passed["x"] == 2);
    CHECK(t.total_failed() == 1);
    CHECK_FALSE(t.ok());
  }
}
