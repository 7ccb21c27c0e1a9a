#include "doctest.h"

#include <algorithm>
#include <map>

#include "loopcalc/canonical.hpp"
#include "loopcalc/homology.hpp"
#include "loopcalc/random_loops.hpp"

using namespace loopcalc;

namespace {

// Conjugacy normal form in the free group on the generator indices, by plain list surgery.
std::vector<int> free_conjugacy_oracle(std::vector<int> w) {
  std::vector<int> st;
  for (int l : w) {
    if (!st.empty() && st.back() == -l) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  while (st.size() >= 2 && st.front() == -st.back()) st = std::vector<int>(st.begin() + 1, st.end() - 1);
  std::vector<int> best = st;
  for (std::size_t i = 1; i < st.size(); ++i) {
    std::vector<int> r(st.begin() + static_cast<std::ptrdiff_t>(i), st.end());
    r.insert(r.end(), st.begin(), st.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::min(best, r);
  }
  return best;
}

// Every word up to `max_len` over the generators, as index words and as generator words.
void check_against_oracle(const GeneratorSet& gens, std::size_t max_len) {
  const std::size_t k = gens.generators.size();
  std::map<std::vector<int>, HomotopyClass> by_oracle;
  std::map<HomotopyClass, std::vector<int>> by_class;
  std::vector<std::vector<int>> frontier{{}};
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      GeneratorWord gw;
      for (int l : w) gw.emplace_back(gens.generators[static_cast<std::size_t>(std::abs(l)) - 1].name, l > 0 ? 1 : -1);
      const CombinatorialLoop loop = compile_word(gens, gw);
      REQUIRE(validate_loop(gens.surface, loop).valid());
      const HomotopyClass c = to_class(gens.surface, loop);
      const auto o = free_conjugacy_oracle(w);
      CHECK(c.trivial() == o.empty());
      if (auto [it, fresh] = by_oracle.emplace(o, c); !fresh) CHECK(it->second == c);
      if (auto [it, fresh] = by_class.emplace(c, o); !fresh) CHECK(it->second == o);
      ++checked;
      if (len < max_len) {
        for (int g = 1; g <= static_cast<int>(k); ++g) {
          for (int l : {g, -g}) {
            auto v = w;
            v.push_back(l);
            next.push_back(std::move(v));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_SUITE("loop") {
  TEST_CASE("annulus core") {
    const GeneratorSet gens = canonical_surface(0, 2);
    const StarFilledSurface& s = gens.surface;
    const CombinatorialLoop core{{Transit{0, 0, 1, Position(0)}}, 0};
    CHECK(validate_loop(s, core).valid());
    CHECK(gens.generator("core") == core);
    const HomotopyClass c = to_class(s, core);
    CHECK(c.word() == least_rotation(Word{StarFilledSurface::in_letter(s.gate(0, 0)),
                                          StarFilledSurface::out_letter(s.gate(0, 1))}));
    CHECK_FALSE(c.trivial());
    CHECK_FALSE(class_or_zero(s, core).zero());
  }

  TEST_CASE("shared positions are invalid") {
    const StarFilledSurface& s = canonical_surface(0, 2).surface;
    const CombinatorialLoop twice{{Transit{0, 0, 1, Position(0)}, Transit{0, 0, 1, Position(0)}}, 0};
    CHECK_FALSE(validate_loop(s, twice).valid());
    CHECK_THROWS_AS(require_valid(s, twice), InvalidInput);
  }

  TEST_CASE("consecutive gates in different regions are invalid") {
    const StarFilledSurface& s = canonical_surface(1, 1).surface;
    REQUIRE(s.region_count() == 2);
    bool found = false;
    for (int e = 0; e < s.edge_count(0) && !found; ++e) {
      for (int f = 0; f < s.edge_count(0) && !found; ++f) {
        const CombinatorialLoop l{{Transit{0, e, 1, Position(0)}, Transit{0, f, 1, Position(1)}}, 0};
        found = !validate_loop(s, l).valid();
      }
    }
    CHECK(found);
  }

  TEST_CASE("compiled words match the free-group conjugacy oracle") {
    check_against_oracle(canonical_surface(1, 1), 6);
    check_against_oracle(canonical_surface(0, 3), 6);
  }

  TEST_CASE("word parsing") {
    const GeneratorSet gens = canonical_surface(1, 1);
    const GeneratorWord expect{{"x", 1}, {"y", 1}, {"x", -1}};
    CHECK(parse_generator_word("xyX", gens) == expect);
    CHECK(parse_generator_word("x y x^-1", gens) == expect);
    CHECK(parse_generator_word("x*y*X", gens) == expect);
    CHECK(parse_generator_word("1", gens).empty());
    CHECK_THROWS_AS(parse_generator_word("q", gens), InvalidInput);
  }

  TEST_CASE("reversal inverts the class") {
    const GeneratorSet gens = canonical_surface(2, 1);
    const CombinatorialLoop l = compile_word(gens, "x1 y2 x1^-1");
    CHECK(to_class(gens.surface, reversed(l)) == to_class(gens.surface, l).inverse());
  }

  TEST_CASE("moves preserve the class") {
    for (auto [g, b] : {std::pair{0, 3}, std::pair{1, 1}, std::pair{2, 1}}) {
      const StarFilledSurface& s = canonical_surface(g, b).surface;
      Rng rng(5);
      for (int trial = 0; trial < 50; ++trial) {
        CombinatorialLoop l = random_loop(s, rng);
        const HomotopyClass c = to_class(s, l);
        for (int k = 0; k < 30; ++k) {
          l = apply_move(s, l, random_move(s, l, rng));
          REQUIRE(validate_loop(s, l).valid());
        }
        CHECK(to_class(s, l) == c);
      }
    }
  }

  TEST_CASE("explicit moves") {
    const GeneratorSet gens = canonical_surface(1, 1);
    const StarFilledSurface& s = gens.surface;
    const CombinatorialLoop x = gens.generator("x");
    const std::size_t g = s.region_gates(s.gate_region(exit_gate(s, x.transits.back())))[0];
    const CombinatorialLoop grown =
        apply_move(s, x, move::InsertCancellingPair{0, s.gate_star(g), s.gate_edge(g), 1, std::nullopt});
    CHECK(grown.transits.size() == x.transits.size() + 2);
    CHECK(to_class(s, grown) == to_class(s, x));
    const CombinatorialLoop shrunk = apply_move(s, grown, move::RemoveCancellingPair{0});
    CHECK(to_class(s, shrunk) == to_class(s, x));
    const CombinatorialLoop rotated = apply_move(s, x, move::RotateBasepoint{1});
    CHECK(to_class(s, rotated) == to_class(s, x));
  }

  TEST_CASE("random loops avoid given positions") {
    const StarFilledSurface& s = canonical_surface(1, 2).surface;
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const CombinatorialLoop a = random_loop(s, rng, 12);
      const CombinatorialLoop b = random_loop(s, rng, 12, std::span(&a, 1));
      CHECK(a.transits.size() <= 12);
      CHECK(positions_disjoint(a, b));
    }
  }

  TEST_CASE("abelianization of grafts and subloops") {
    const StarFilledSurface& s = canonical_surface(2, 1).surface;
    const Abelianization h(s);
    CHECK(h.rank() == 4);
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const CombinatorialLoop a = random_loop(s, rng);
      const CombinatorialLoop b = random_loop(s, rng, 12, std::span(&a, 1));
      const IntVector ha = h(to_class(s, a)), hb = h(to_class(s, b));
      for (std::size_t p = 0; p < a.transits.size(); ++p) {
        for (std::size_t q = 0; q < b.transits.size(); ++q) {
          if (a.transits[p].star != b.transits[q].star) continue;
          CHECK(h(graft(s, a, p, b, q)) == ha + hb);
        }
        for (std::size_t p2 = 0; p2 < a.transits.size(); ++p2) {
          if (p2 == p) continue;
          CHECK(h(subloop(s, a, p, p2)) + h(subloop(s, a, p2, p)) == ha);
        }
      }
    }
  }
}
