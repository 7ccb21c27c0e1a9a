#include "doctest.h"

#include <random>

#include <Eigen/LU>

#include "loopcalc/canonical.hpp"
#include "loopcalc/homology.hpp"

using namespace loopcalc;

namespace {

bool row_echelon(const IntMatrix& H, int rank) {
  Eigen::Index lead = -1;
  for (Eigen::Index r = 0; r < H.rows(); ++r) {
    Eigen::Index c = 0;
    while (c < H.cols() && H(r, c) == 0) ++c;
    if (c == H.cols()) {
      if (r < rank) return false;
      continue;
    }
    if (c <= lead || H(r, c) < 0) return false;
    lead = c;
  }
  return true;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Hermite reduction is unimodular and echelon") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix M(dim(rng), dim(rng));
      for (Eigen::Index i = 0; i < M.size(); ++i) M(i) = entry(rng);
      const HermiteForm f = row_hermite(M);
      CHECK(f.U * M == f.H);
      const Eigen::MatrixXd Ud = f.U.cast<double>();
      CHECK(std::abs(std::abs(Ud.determinant()) - 1.0) < 1e-9);
      CHECK(row_echelon(f.H, f.rank));
      CHECK(f.rank == Eigen::FullPivLU<Eigen::MatrixXd>(M.cast<double>()).rank());
    }
  }

  TEST_CASE("quotient projection kills the relations") {
    IntMatrix R(3, 1);
    R << 1, -1, 0;
    const IntMatrix P = quotient_projection(R);
    CHECK(P.rows() == 2);
    CHECK(P.cols() == 3);
    CHECK((P * R).isZero());
  }

  TEST_CASE("gate counts") {
    const IntVector c = gate_counts(Word{1, 2, -1, 1, -3}, 3);
    CHECK(c(0) == 1);
    CHECK(c(1) == 1);
    CHECK(c(2) == -1);
  }

  TEST_CASE("abelianization rank") {
    for (auto [g, b] : {std::pair{0, 2}, std::pair{0, 3}, std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}}) {
      const GeneratorSet gens = canonical_surface(g, b);
      const Abelianization h(gens.surface);
      CHECK(h.rank() == 2 * g + b - 1);
      IntMatrix images(h.rank(), static_cast<Eigen::Index>(gens.generators.size()));
      for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        images.col(static_cast<Eigen::Index>(i)) = h(to_class(gens.surface, gens.generators[i].loop));
      }
      // Generators form a basis of homology.
      CHECK(std::abs(std::abs(images.cast<double>().determinant()) - 1.0) < 1e-9);
    }
  }
}
