#include "doctest.h"

#include <algorithm>
#include <random>

#include "loopcalc/word.hpp"

using namespace loopcalc;

namespace {

Word brute_least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t i = 0; i < w.size(); ++i) best = std::min(best, rotate(w, i));
  return best;
}

}  // namespace

TEST_SUITE("word") {
  TEST_CASE("least rotation agrees with brute force") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(0, 12), letter(-3, 3);
    for (int trial = 0; trial < 2000; ++trial) {
      Word w(len(rng));
      for (auto& l : w) {
        do l = letter(rng); while (l == 0);
      }
      CHECK(least_rotation(w) == brute_least_rotation(w));
    }
  }

  TEST_CASE("periodic words") {
    CHECK(least_rotation(Word{2, 1, 2, 1}) == Word{1, 2, 1, 2});
    CHECK(least_rotation(Word{1, 1, 1}) == Word{1, 1, 1});
    CHECK(least_rotation(Word{}).empty());
  }

  TEST_CASE("free and cyclic reduction") {
    CHECK(free_reduce(Word{1, 2, -2, -1, 3}) == Word{3});
    CHECK(free_reduce(Word{1, -1}).empty());
    CHECK(cyclic_reduce(Word{-1, 2, 3, 1}) == Word{2, 3});
    CHECK(cyclic_reduce(Word{1, 2, -2, -1}).empty());
    CHECK(inverse(Word{1, -2, 3}) == Word{-3, 2, -1});
  }

  TEST_CASE("cyclic segments and concatenation") {
    const Word w{1, 2, 3, 4};
    CHECK(cyclic_segment(w, 1, 3) == Word{2, 3});
    CHECK(cyclic_segment(w, 3, 1) == Word{4, 1});
    CHECK(cyclic_segment(w, 2, 2).empty());
    CHECK(concat(Word{1}, Word{2, 3}) == Word{1, 2, 3});
  }

  TEST_CASE("homotopy classes are conjugacy invariant") {
    const HomotopyClass c = HomotopyClass::of(Word{1, 2, -1, 3});
    CHECK(HomotopyClass::of(Word{2, -1, 3, 1}) == c);
    CHECK(HomotopyClass::of(Word{4, 1, 2, -1, 3, -4}) == c);
    CHECK(HomotopyClass::of(Word{1, 2, 3}) != HomotopyClass::of(Word{-3, -2, -1}));
    CHECK(c.inverse() == HomotopyClass::of(inverse(Word{1, 2, -1, 3})));
    CHECK(HomotopyClass::of(Word{5, -5}).trivial());
  }
}
