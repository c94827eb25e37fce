#include <gtest/gtest.h>

#include <compare>

#include "oracles.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/lexsegment.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {
namespace {

TEST(DeltaLex, Examples) {
  const auto lex = delta_lex(FVector{{3, 2}}, 3);
  EXPECT_EQ(minimal_nonfaces(lex), (std::vector<Face>{Face{1, 2}}));
  EXPECT_TRUE(lex.contains(Face{1, 3}));
  EXPECT_TRUE(lex.contains(Face{2, 3}));

  const auto simplex = delta_lex(FVector{{4, 6, 4, 1}}, 4);
  EXPECT_EQ(simplex.size(), 16u);

  const auto points = delta_lex(FVector{{5}}, 5);
  EXPECT_EQ(points.size(), 6u);
  EXPECT_EQ(ideal_degree_slice(points, 2).monomials.size(), 10u);
}

TEST(DeltaLex, RejectsImpossibleVectors) {
  EXPECT_THROW(delta_lex(FVector{{3, 4}}, 3), std::invalid_argument);
  EXPECT_THROW(delta_lex(FVector{{1, 1, 1, 1}}, 3), std::invalid_argument);
  // a triangle needs all three edges
  EXPECT_THROW(delta_lex(FVector{{3, 2, 1}}, 3), std::logic_error);
}

TEST(DeltaLex, PropertiesOnRandomComplexes) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const auto c = random_complex(n, 0.05 + 0.04 * static_cast<double>(seed % 6), seed);
    const auto lex = delta_lex(c);
    EXPECT_EQ(f_vector(lex), f_vector(c));
    EXPECT_TRUE(oracle::shifted_by_definition(lex));
    EXPECT_EQ(delta_lex(lex), lex);
    // segment: no face is lex-greater than a non-face of the same size
    for (int d = 1; d <= n; ++d) {
      const auto nonfaces = ideal_degree_slice(lex, d).monomials;
      for (Face f : lex.faces_of_size(d)) {
        for (Face g : nonfaces) ASSERT_TRUE(std::is_lt(lex_compare(f, g)));
      }
    }
  }
}

TEST(DeltaLex, DominatesCombinatorialShiftings) {
  const PrimeField field(32003);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const auto c = random_complex(n, 0.15, seed);
    const BettiTable lex = shifted_betti(delta_lex(c));
    EXPECT_EQ(lex, hochster_betti(delta_lex(c), field));
    for (auto s : {ShiftStrategy::sweep(), ShiftStrategy::random(seed)}) {
      EXPECT_TRUE(betti_leq(shifted_betti(shift_to_shifted(c, s).complex), lex));
    }
    EXPECT_TRUE(betti_leq(hochster_betti(c, field), lex));
  }
}

}  // namespace
}  // namespace shiftlab
