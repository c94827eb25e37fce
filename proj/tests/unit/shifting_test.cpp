#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {
namespace {

SimplicialComplex make(int n, std::initializer_list<Face> facets) {
  const std::vector<Face> list(facets);
  return SimplicialComplex::from_facets(n, list);
}

std::vector<Face> sorted_facets(const SimplicialComplex& c) {
  std::vector<Face> f(c.facets().begin(), c.facets().end());
  std::sort(f.begin(), f.end());
  return f;
}

// C_ij applied face by face, straight from the definition.
std::set<std::uint64_t> shift_by_definition(const SimplicialComplex& c, int i, int j) {
  std::set<std::uint64_t> out;
  for (Face s : c.faces()) {
    Face image = s;
    if (s.contains(i) && !s.contains(j) && !c.contains(s.exchange(i, j))) image = s.exchange(i, j);
    out.insert(image.bits());
  }
  return out;
}

TEST(ShiftIj, Examples) {
  const auto c = make(3, {Face{1, 2}, Face{3}});
  EXPECT_EQ(sorted_facets(shift_ij(c, 1, 3)), (std::vector<Face>{Face{1}, Face{2, 3}}));
  const auto c4 = make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  EXPECT_EQ(shift_ij(c4, 1, 3), c4);
  EXPECT_THROW(shift_ij(c4, 3, 3), std::invalid_argument);
  EXPECT_THROW(shift_ij(c4, 2, 5), std::invalid_argument);
  EXPECT_THROW(shift_ij(c4, 0, 2), std::invalid_argument);
}

TEST(ShiftIj, MatchesDefinitionAndPreservesFVector) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : oracle::all_complexes(n)) {
      for (ShiftPair p : all_pairs(n)) {
        const auto s = shift_ij(c, p);
        std::set<std::uint64_t> got;
        for (Face f : s.faces()) got.insert(f.bits());
        ASSERT_EQ(got, shift_by_definition(c, p.i, p.j));
        EXPECT_EQ(f_vector(s), f_vector(c));
        EXPECT_TRUE(s.strict());
      }
    }
  }
}

TEST(ShiftIj, FVectorPreservedOnLargerRandomComplexes) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const auto c = random_complex(n, 0.15, seed);
    for (ShiftPair p : all_pairs(n)) EXPECT_EQ(f_vector(shift_ij(c, p)), f_vector(c));
  }
}

TEST(ShiftIj, FixesShiftedComplexes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_shifted(6, 3, rng);
    for (ShiftPair p : all_pairs(6)) {
      EXPECT_FALSE(shift_moves(c, p));
      EXPECT_EQ(shift_ij(c, p), c);
    }
  }
}

TEST(ShiftToShifted, ShiftedInputIsIdentity) {
  const auto c = make(3, {Face{1, 3}, Face{2, 3}});
  for (auto strategy : {ShiftStrategy::sweep(), ShiftStrategy::random(5)}) {
    const ShiftResult r = shift_to_shifted(c, strategy);
    EXPECT_EQ(r.complex, c);
    EXPECT_TRUE(r.sequence.empty());
  }
}

TEST(ShiftToShifted, PathGraph) {
  const auto c = make(3, {Face{1, 2}, Face{1, 3}});
  const ShiftResult r = shift_to_shifted(c, ShiftStrategy::sweep());
  EXPECT_EQ(sorted_facets(r.complex), (std::vector<Face>{Face{1, 3}, Face{2, 3}}));
}

TEST(ShiftToShifted, ReplayReproducesResult) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = random_complex(3 + static_cast<int>(seed % 5), 0.2, seed);
    for (auto strategy : {ShiftStrategy::sweep(), ShiftStrategy::random(seed)}) {
      const ShiftResult r = shift_to_shifted(c, strategy);
      EXPECT_TRUE(oracle::shifted_by_definition(r.complex));
      EXPECT_EQ(f_vector(r.complex), f_vector(c));
      EXPECT_EQ(replay(c, r.sequence), r.complex);
    }
  }
}

TEST(ShiftToShifted, RandomStrategyIsDeterministicPerSeed) {
  const auto c = random_complex(7, 0.1, 99);
  const auto a = shift_to_shifted(c, ShiftStrategy::random(4));
  const auto b = shift_to_shifted(c, ShiftStrategy::random(4));
  EXPECT_EQ(a.complex, b.complex);
  EXPECT_EQ(a.sequence, b.sequence);
}

TEST(ShiftToShifted, IterationLimit) {
  const auto c = make(3, {Face{1, 2}, Face{1, 3}});
  EXPECT_THROW(shift_to_shifted(c, ShiftStrategy::sweep(), 0), ShiftLimitExceeded);
}

TEST(ShiftToShifted, MonotoneUnderReplayedSequences) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const auto big = random_complex(n, 0.3, seed);
    std::vector<Face> kept;
    for (Face f : big.facets()) {
      if (rng() & 1u) kept.push_back(f);
    }
    for (int v = 1; v <= n; ++v) kept.push_back(Face{v});
    const auto small = SimplicialComplex::from_facets(n, kept);
    ASSERT_TRUE(small.is_subcomplex_of(big));
    const ShiftResult r = shift_to_shifted(big, ShiftStrategy::sweep());
    EXPECT_TRUE(replay(small, r.sequence).is_subcomplex_of(r.complex));
    for (ShiftPair p : all_pairs(n)) EXPECT_TRUE(shift_ij(small, p).is_subcomplex_of(shift_ij(big, p)));
  }
}

TEST(EnumerateShifted, Examples) {
  const auto shifted = make(3, {Face{1, 3}, Face{2, 3}});
  EXPECT_EQ(enumerate_shifted(shifted, 10), std::vector<SimplicialComplex>{shifted});
  const auto path = make(3, {Face{1, 2}, Face{1, 3}});
  EXPECT_EQ(enumerate_shifted(path, 10), std::vector<SimplicialComplex>{shifted});
  const auto c4 = make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  EXPECT_THROW(enumerate_shifted(c4, 1), ShiftLimitExceeded);
}

TEST(EnumerateShifted, ContainsEveryStrategyResult) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto c = random_complex(5, 0.2, seed);
    const auto all = enumerate_shifted(c, 100000);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto r = shift_to_shifted(c, ShiftStrategy::random(s)).complex;
      EXPECT_NE(std::find(all.begin(), all.end(), r), all.end());
    }
    for (const auto& x : all) EXPECT_TRUE(oracle::shifted_by_definition(x));
  }
}

TEST(SijZero, Examples) {
  // J = (e1 e3) on n = 3 with all its multiples
  const std::vector<DegreeSlice> j{{2, {Face{1, 3}}}, {3, {Face{1, 2, 3}}}};
  EXPECT_EQ(s_ij_zero(j, 1, 2), j);
  const std::vector<DegreeSlice> k{{2, {Face{2, 3}}}};
  EXPECT_EQ(s_ij_zero(k, 1, 2)[0].monomials, (std::vector<Face>{Face{1, 3}}));
  EXPECT_THROW(s_ij_zero(k, 2, 2), std::invalid_argument);
}

TEST(SijZero, EqualsShiftAtIdealLevelExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& c : oracle::all_complexes(n)) {
      const auto slices = face_ideal(c);
      for (ShiftPair p : all_pairs(n)) {
        ASSERT_EQ(s_ij_zero(slices, p.i, p.j), face_ideal(shift_ij(c, p)))
            << "n=" << n << " pair " << p.i << "," << p.j;
      }
    }
  }
}

}  // namespace
}  // namespace shiftlab
