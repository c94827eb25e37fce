#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {
namespace {

SimplicialComplex make(int n, std::initializer_list<Face> facets, Mode mode = Mode::strict) {
  const std::vector<Face> list(facets);
  return SimplicialComplex::from_facets(n, list, mode);
}

const PrimeField kGF2(2);
const PrimeField kGF3(3);
const PrimeField kGFp(32003);

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> cells) {
  BettiTable t;
  for (auto [i, j, v] : cells) t.set(i, j, v);
  return t;
}

TEST(Boundary, Examples) {
  const auto triangle = make(3, {Face{1, 2}, Face{2, 3}, Face{1, 3}});
  const FieldMatrix d1 = boundary_matrix(triangle, 1, kGFp);
  EXPECT_EQ(d1.rows(), 3u);
  EXPECT_EQ(d1.cols(), 3u);
  EXPECT_EQ(rank(d1), 2u);
  const FieldMatrix d0 = boundary_matrix(make(1, {Face{1}}), 0, kGFp);
  EXPECT_EQ(d0.rows(), 1u);
  EXPECT_EQ(d0(0, 0), 1u);
  EXPECT_THROW(boundary_matrix(triangle, -1, kGFp), std::invalid_argument);
}

TEST(Boundary, SquaresToZero) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = random_complex(6, 0.3, seed);
    for (const PrimeField& f : {kGF2, kGF3, kGFp}) {
      for (int k = 1; k <= c.dimension() + 1; ++k) {
        const FieldMatrix product = boundary_matrix(c, k - 1, f).multiply(boundary_matrix(c, k, f));
        EXPECT_EQ(rank(product), 0u);
      }
    }
  }
}

TEST(Homology, Examples) {
  const auto c4 = make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  const HomologyProfile h = reduced_homology_dims(c4, kGFp);
  EXPECT_EQ(h.at(-1), 0u);
  EXPECT_EQ(h.at(0), 0u);
  EXPECT_EQ(h.at(1), 1u);
  EXPECT_EQ(reduced_homology_dims(make(2, {Face{1}, Face{2}}), kGF2).at(0), 1u);
  const auto empty = restriction(c4, Face{});
  EXPECT_EQ(reduced_homology_dims(empty, kGF2).dims, std::vector<std::uint64_t>{1});
}

TEST(Homology, TorsionDependsOnCharacteristic) {
  // Six-vertex real projective plane: H~_1 = Z/2.
  const auto rp2 = make(6, {Face{1, 2, 3}, Face{1, 3, 4}, Face{1, 4, 5}, Face{1, 5, 6}, Face{1, 2, 6},
                            Face{2, 3, 5}, Face{3, 4, 6}, Face{2, 4, 5}, Face{2, 4, 6}, Face{3, 5, 6}});
  EXPECT_EQ(reduced_homology_dims(rp2, kGF2).at(1), 1u);
  EXPECT_EQ(reduced_homology_dims(rp2, kGF2).at(2), 1u);
  EXPECT_EQ(reduced_homology_dims(rp2, kGF3).at(1), 0u);
  EXPECT_EQ(reduced_homology_dims(rp2, kGFp).at(2), 0u);
}

TEST(Homology, MatchesOracleAndEulerCharacteristic) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = random_complex(3 + static_cast<int>(seed % 5), 0.25, seed);
    for (std::int64_t p : {2, 32003}) {
      const HomologyProfile h = reduced_homology_dims(c, PrimeField(static_cast<std::uint32_t>(p)));
      const auto expected = oracle::reduced_homology({c.faces().begin(), c.faces().end()}, p);
      for (int k = -1; k + 1 < static_cast<int>(expected.size()); ++k) {
        EXPECT_EQ(h.at(k), expected[static_cast<std::size_t>(k + 1)]);
      }
      std::int64_t euler_h = 0;
      for (int k = -1; k <= c.dimension(); ++k) {
        euler_h += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.at(k));
      }
      std::int64_t euler_f = -1;
      const FVector f = f_vector(c);
      for (int i = 0; i < static_cast<int>(f.entries.size()); ++i) {
        euler_f += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f.at(i));
      }
      EXPECT_EQ(euler_h, euler_f);
    }
  }
}

TEST(Hochster, Examples) {
  const auto c4 = make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  EXPECT_EQ(hochster_betti(c4, kGFp), table({{0, 2, 2}, {1, 3, 1}}));
  EXPECT_TRUE(hochster_betti(make(4, {Face::ground(4)}), kGF2).empty());
  EXPECT_EQ(hochster_betti(make(3, {Face{1, 3}, Face{2, 3}}), kGF2), table({{0, 2, 1}}));
  EXPECT_THROW(hochster_betti(make(3, {Face{1, 2}}, Mode::relaxed), kGF2), std::invalid_argument);
}

TEST(Hochster, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = random_complex(3 + static_cast<int>(seed % 4), 0.25, seed);
    EXPECT_EQ(hochster_betti(c, kGF2), oracle::hochster(c, 2));
    EXPECT_EQ(hochster_betti(c, kGFp), oracle::hochster(c, 32003));
  }
}

TEST(ShiftedBetti, Examples) {
  EXPECT_EQ(shifted_betti(make(3, {Face{1, 3}, Face{2, 3}})), table({{0, 2, 1}}));
  EXPECT_EQ(shifted_betti(make(4, {Face{1, 4}, Face{2, 3, 4}})), table({{0, 2, 2}, {1, 2, 1}}));
  EXPECT_TRUE(shifted_betti(make(5, {Face::ground(5)})).empty());
  EXPECT_THROW(shifted_betti(make(3, {Face{1, 2}, Face{1, 3}})), std::invalid_argument);
}

TEST(ShiftedBetti, EqualsHochsterAndStableOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    const auto c = oracle::random_shifted(n, 1 + trial % 4, rng);
    const BettiTable formula = shifted_betti(c);
    EXPECT_EQ(formula, hochster_betti(c, kGF2));
    EXPECT_EQ(formula, hochster_betti(c, kGFp));
    EXPECT_EQ(formula, oracle::squarefree_stable_betti(c));
  }
}

TEST(BettiLeq, Basics) {
  const auto a = table({{0, 2, 1}});
  EXPECT_TRUE(betti_leq(a, a));
  EXPECT_TRUE(betti_leq(BettiTable{}, a));
  EXPECT_FALSE(betti_leq(a, BettiTable{}));
  const auto v = betti_violations(table({{0, 2, 3}, {1, 3, 1}}), table({{0, 2, 2}, {1, 3, 4}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].i, 0);
  EXPECT_EQ(v[0].j, 2);
  EXPECT_EQ(v[0].lhs, 3u);
  EXPECT_EQ(v[0].rhs, 2u);
}

TEST(BettiLeq, FourCycleAgainstItsShifting) {
  const auto c4 = make(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  const auto shifted = shift_to_shifted(c4, ShiftStrategy::sweep()).complex;
  EXPECT_TRUE(betti_leq(hochster_betti(c4, kGFp), hochster_betti(shifted, kGFp)));
  EXPECT_TRUE(betti_leq(hochster_betti(c4, kGFp), shifted_betti(shifted)));
}

// dim H~_k(Delta) <= dim H~_k(Shift_ij(Delta)) and Betti numbers grow under one shift.
void check_single_shift(const SimplicialComplex& c, bool with_betti) {
  for (ShiftPair p : all_pairs(c.n())) {
    const auto s = shift_ij(c, p);
    for (const PrimeField& f : {kGF2, kGF3, kGFp}) {
      const auto before = reduced_homology_dims(c, f);
      const auto after = reduced_homology_dims(s, f);
      for (int k = -1; k <= c.n(); ++k) ASSERT_LE(before.at(k), after.at(k));
    }
    if (with_betti) ASSERT_TRUE(betti_leq(hochster_betti(c, kGF2), hochster_betti(s, kGF2)));
  }
}

TEST(SingleShift, HomologyAndBettiGrowExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& c : oracle::all_complexes(n)) check_single_shift(c, n <= 4);
  }
}

TEST(SingleShift, BettiGrowsOnAllFiveVertexComplexes) {
  for (const auto& c : oracle::all_complexes(5)) {
    for (ShiftPair p : all_pairs(5)) {
      if (!shift_moves(c, p)) continue;
      ASSERT_TRUE(betti_leq(hochster_betti(c, kGFp), hochster_betti(shift_ij(c, p), kGFp)));
    }
  }
}

TEST(SingleShift, SixVertexSamples) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto c = random_complex(6, 0.05 + 0.05 * static_cast<double>(seed % 5), seed);
    check_single_shift(c, true);
  }
}

}  // namespace
}  // namespace shiftlab
