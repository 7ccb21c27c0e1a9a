#include "doctest.h"

#include "loopcalc/json_io.hpp"

using namespace loopcalc;

namespace {

json_io::RawConfiguration load(const std::string& name) {
  return json_io::parse_gate_configuration(json_io::read_file(std::string(LOOPCALC_TEST_DATA "/") + name));
}

}  // namespace

TEST_SUITE("gate") {
  TEST_CASE("one-gate configuration vanishes") {
    const auto raw = load("one_gate.json");
    for (const auto& w : all_orientations(1)) {
      CHECK(gate::form_omega(raw.config, w) == 0);
      CHECK(gate::form(raw.config, w) == 0);
      CHECK(gate::bracket_omega(raw.config, w).zero());
      CHECK(gate::bracket(raw.config, w).zero());
    }
    const auto single = load("one_gate_single.json");
    CHECK(gate::cobracket_omega(single.config, single.omega).zero());
    CHECK(gate::cobracket(single.config, single.omega).zero());
  }

  TEST_CASE("aligned two-gate configuration vanishes") {
    const auto raw = load("two_gate_aligned.json");
    CHECK(raw.omega == GateOrientation{1, -1});
    CHECK(gate::form_omega(raw.config, raw.omega) == 0);
    CHECK(gate::bracket_omega(raw.config, raw.omega).zero());
    CHECK(gate::form(raw.config) == 0);
    CHECK(gate::bracket(raw.config).zero());
    const auto single = load("two_gate_single.json");
    CHECK(gate::cobracket_omega(single.config, single.omega).zero());
    CHECK(gate::cobracket(single.config).zero());
  }

  TEST_CASE("anti-aligned two-gate configuration has a nonzero omega part") {
    const auto raw = load("two_gate_anti_aligned.json");
    CHECK(gate::form_omega(raw.config, raw.omega) == 1);
    CHECK_FALSE(gate::bracket_omega(raw.config, raw.omega).zero());
    CHECK(gate::form(raw.config, raw.omega) == 0);
  }

  TEST_CASE("v counts signed crossings") {
    const auto raw = load("two_gate_aligned.json");
    CHECK(gate::v(raw.config, 0, 0) == 1);
    CHECK(gate::v(raw.config, 1, 0) == -1);
    CHECK(gate::v(raw.config, 1, 1) == -1);
  }

  TEST_CASE("orientation helpers") {
    CHECK(all_orientations(3).size() == 8);
    CHECK(opposite(GateOrientation{1, -1}) == GateOrientation{-1, 1});
    CHECK(flipped(GateOrientation{1, 1}, 1) == GateOrientation{1, -1});
    const auto raw = load("two_gate_aligned.json");
    CHECK(reference_orientation(raw.config) == GateOrientation{1, 1});
    const GateConfiguration sw = swap_owners(raw.config);
    CHECK(sw.words[0] == raw.config.words[1]);
    CHECK(sw.gates[0].crossings[0].owner == 1);
  }

  TEST_CASE("flip formula on the examples") {
    for (const char* f : {"one_gate.json", "two_gate_aligned.json", "two_gate_anti_aligned.json"}) {
      const auto raw = load(f);
      for (const auto& w : all_orientations(raw.config.gates.size())) {
        for (std::size_t l = 0; l < raw.config.gates.size(); ++l) {
          const auto [lhs, rhs] = gate::flip_check(raw.config, w, l);
          CHECK(lhs == rhs);
        }
      }
    }
  }

  TEST_CASE("malformed configurations are rejected") {
    auto j = json_io::read_file(LOOPCALC_TEST_DATA "/one_gate.json");
    j["gates"][0]["crossings"][1]["slot"] = 0;
    CHECK_THROWS_AS(json_io::parse_gate_configuration(j), InvalidInput);
    j = json_io::read_file(LOOPCALC_TEST_DATA "/one_gate.json");
    j["gates"][0]["crossings"][0]["link"] = 2;
    CHECK_THROWS_AS(json_io::parse_gate_configuration(j), InvalidInput);
    j = json_io::read_file(LOOPCALC_TEST_DATA "/one_gate.json");
    j["gates"][0]["crossings"][0]["owner"] = "c";
    CHECK_THROWS_AS(json_io::parse_gate_configuration(j), InvalidInput);
  }
}
