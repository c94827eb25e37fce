#include <gtest/gtest.h>

#include <compare>

#include "oracles.hpp"
#include "shiftlab/face.hpp"

namespace shiftlab {
namespace {

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

TEST(Face, BasicQueries) {
  const Face f{1, 3, 4};
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(f.contains(3));
  EXPECT_FALSE(f.contains(2));
  EXPECT_EQ(f.max_vertex(), 4);
  EXPECT_EQ(f.min_vertex(), 1);
  EXPECT_EQ(f.to_string(), "{1,3,4}");
  EXPECT_EQ(f.exchange(1, 2), (Face{2, 3, 4}));
  EXPECT_EQ(Face{}.max_vertex(), 0);
  EXPECT_EQ(Face::interval(2, 4), (Face{2, 3, 4}));
  EXPECT_TRUE(f.contains(Face{1, 4}));
  EXPECT_FALSE(f.contains(Face{1, 2}));
}

TEST(Face, RejectsOutOfRangeVertices) {
  EXPECT_THROW((Face{0}), std::invalid_argument);
  EXPECT_THROW((Face{65}), std::invalid_argument);
}

TEST(Face, LexExamples) {
  EXPECT_TRUE(std::is_gt(lex_compare(Face{1, 2}, Face{1, 3})));
  EXPECT_TRUE(std::is_gt(lex_compare(Face{1, 12, 13}, Face{2, 3, 4})));
  EXPECT_TRUE(std::is_eq(lex_compare(Face{2, 5}, Face{2, 5})));
  EXPECT_THROW(lex_compare(Face{1}, Face{1, 2}), std::invalid_argument);
}

TEST(Face, RevlexExamples) {
  EXPECT_TRUE(std::is_gt(revlex_compare(Face{1, 2}, Face{1, 3})));
  EXPECT_TRUE(std::is_gt(revlex_compare(Face{2, 3}, Face{1, 4})));
  EXPECT_TRUE(std::is_eq(revlex_compare(Face{3}, Face{3})));
  EXPECT_THROW(revlex_compare(Face{1, 2}, Face{1}), std::invalid_argument);
}

TEST(Face, OrdersMatchExponentVectorComparators) {
  for (int d = 1; d <= 5; ++d) {
    const auto layer = subsets_of_size(Face::ground(5), d);
    for (Face a : layer) {
      for (Face b : layer) {
        EXPECT_EQ(sign(lex_compare(a, b)), oracle::lex_by_exponents(a, b, 5));
        EXPECT_EQ(sign(revlex_compare(a, b)), oracle::revlex_by_exponents(a, b, 5));
      }
    }
  }
}

TEST(Face, RevlexDescendingIsIncreasingMask) {
  for (int d = 1; d <= 6; ++d) {
    const auto layer = subsets_of_size(Face::ground(6), d);
    for (std::size_t k = 1; k < layer.size(); ++k) {
      EXPECT_LT(layer[k - 1].bits(), layer[k].bits());
      EXPECT_TRUE(std::is_gt(revlex_compare(layer[k - 1], layer[k])));
    }
  }
}

TEST(Face, RevlexThresholdProperty) {
  // m(tau) <= i  iff  {i-d+1, ..., i} <=_rev tau
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (int i = d; i <= n; ++i) {
        const Face threshold = top_interval(i, d);
        for (Face tau : subsets_of_size(Face::ground(n), d)) {
          EXPECT_EQ(tau.max_vertex() <= i, revlex_compare(threshold, tau) <= 0)
              << "n=" << n << " d=" << d << " i=" << i << " tau=" << tau.to_string();
        }
      }
    }
  }
}

TEST(Face, Binomial) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(3, -1), 0u);
  EXPECT_EQ(binomial(-1, 0), 0u);
  EXPECT_EQ(binomial(15, 8), 6435u);
}

TEST(Face, SubsetsOfSize) {
  const auto s = subsets_of_size(Face{2, 4, 7}, 2);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (Face{2, 4}));
  EXPECT_EQ(s[2], (Face{4, 7}));
  EXPECT_EQ(subsets_of_size(Face::ground(4), 0), std::vector<Face>{Face{}});
  EXPECT_TRUE(subsets_of_size(Face::ground(3), 4).empty());
}

TEST(Face, SortLexDescending) {
  std::vector<Face> v{Face{2, 3}, Face{1, 3}, Face{1, 2}, Face{3, 4}};
  sort_lex_descending(v);
  EXPECT_EQ(v, (std::vector<Face>{Face{1, 2}, Face{1, 3}, Face{2, 3}, Face{3, 4}}));
}

}  // namespace
}  // namespace shiftlab
