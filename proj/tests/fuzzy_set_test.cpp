#include <gtest/gtest.h>

#include "rfal/fuzzy_set.hpp"
#include "rfal/oracle.hpp"
#include "test_support.hpp"

namespace rfal {
namespace {

using testing::q;

const Algebra L = Algebra::lukasiewicz();
const Algebra P = Algebra::product();

TEST(FuzzySet, ZeroEntriesAreNotStored) {
  FuzzySet s{{"p", q(1, 2)}, {"q", Rational::zero()}};
  EXPECT_EQ(s.size(), 1u);
  EXPECT_FALSE(s.contains_var(VarId("q")));
  s.set(VarId("p"), Rational::zero());
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s, FuzzySet{});
}

TEST(FuzzySet, CanonicalOrderAndText) {
  FuzzySet s{{"q", Rational::one()}, {"p", q(7, 10)}};
  EXPECT_EQ(s.to_string(), "{p:7/10, q:1}");
  EXPECT_EQ(FuzzySet{}.to_string(), "{}");
  EXPECT_THROW((FuzzySet{{"p", q(1, 2)}, {"p", q(1, 3)}}), std::invalid_argument);
  EXPECT_THROW(VarId("1p"), std::invalid_argument);
}

TEST(FuzzySet, Union) {
  const FuzzySet a{{"p", q(1, 2)}};
  const FuzzySet b{{"p", q(3, 4)}, {"q", q(1, 4)}};
  EXPECT_EQ(set_union(a, b), (FuzzySet{{"p", q(3, 4)}, {"q", q(1, 4)}}));
  EXPECT_EQ(set_union(std::span<const FuzzySet>{}), FuzzySet{});
  EXPECT_EQ(set_union(b, b), b);
}

TEST(FuzzySet, Intersection) {
  const FuzzySet a{{"p", q(1, 2)}, {"q", Rational::one()}};
  const FuzzySet b{{"p", q(3, 4)}};
  EXPECT_EQ(set_intersection(a, b), (FuzzySet{{"p", q(1, 2)}}));
  const FuzzySet one[] = {a};
  EXPECT_EQ(set_intersection(one), a);
  EXPECT_EQ(set_intersection(a, FuzzySet{}), FuzzySet{});
  EXPECT_THROW(set_intersection(std::span<const FuzzySet>{}), std::invalid_argument);
}

TEST(FuzzySet, ScalarMultiple) {
  EXPECT_EQ(scalar_multiple(L, q(1, 2), FuzzySet{{"p", Rational::one()}, {"q", q(3, 10)}}), (FuzzySet{{"p", q(1, 2)}}));
  EXPECT_EQ(scalar_multiple(P, q(1, 2), FuzzySet{{"p", q(4, 5)}}), (FuzzySet{{"p", q(2, 5)}}));
  const FuzzySet a{{"p", q(2, 3)}, {"r", q(1, 9)}};
  for (Algebra alg : {L, P, Algebra::goedel()}) EXPECT_EQ(scalar_multiple(alg, Rational::one(), a), a);
}

TEST(FuzzySet, ScalarShift) {
  const std::vector<VarId> p = {VarId("p")};
  EXPECT_EQ(scalar_shift(L, q(1, 2), FuzzySet{{"p", q(3, 10)}}, p), (FuzzySet{{"p", q(4, 5)}}));
  EXPECT_EQ(scalar_shift(P, q(1, 2), FuzzySet{{"p", q(1, 4)}}, p), (FuzzySet{{"p", q(1, 2)}}));
  for (Algebra alg : {L, P}) {
    EXPECT_EQ(scalar_shift(alg, Rational::zero(), FuzzySet{{"p", q(1, 3)}}, p), (FuzzySet{{"p", Rational::one()}}));
    EXPECT_EQ(scalar_shift(alg, Rational::zero(), FuzzySet{}, p), (FuzzySet{{"p", Rational::one()}}));
  }
  // Outside the universe the shift of an absent variable stays implicit.
  EXPECT_EQ(scalar_shift(L, q(1, 2), FuzzySet{}, {}), FuzzySet{});
}

TEST(FuzzySet, Subsethood) {
  EXPECT_EQ(subsethood(L, FuzzySet{{"p", q(4, 5)}}, FuzzySet{{"p", q(1, 2)}}), q(7, 10));
  EXPECT_EQ(subsethood(P, FuzzySet{}, FuzzySet{{"p", q(1, 3)}}), Rational::one());
  // Value confirmed by the pointwise oracle below.
  const FuzzySet a{{"p", q(1, 2)}, {"q", Rational::one()}};
  const FuzzySet b{{"p", q(1, 4)}, {"q", Rational::one()}};
  EXPECT_EQ(subsethood(P, a, b), q(1, 2));
  EXPECT_EQ(testing::brute_subsethood(P, a, b, testing::first_vars(5)), q(1, 2));
}

TEST(FuzzySet, IsContained) {
  EXPECT_TRUE(is_contained(FuzzySet{{"p", q(1, 2)}}, FuzzySet{{"p", q(1, 2)}, {"q", Rational::one()}}));
  EXPECT_FALSE(is_contained(FuzzySet{{"p", q(3, 4)}}, FuzzySet{{"p", q(1, 2)}}));
  EXPECT_TRUE(is_contained(FuzzySet{}, FuzzySet{{"p", q(1, 2)}}));
}

class SetLaws : public ::testing::TestWithParam<Algebra> {};

TEST_P(SetLaws, SubsethoodMatchesPointwiseOracle) {
  const Algebra alg = GetParam();
  Rng rng(21);
  const auto universe = testing::first_vars(5);
  for (int i = 0; i < 2'000; ++i) {
    const FuzzySet a = testing::random_set(rng, universe), b = testing::random_set(rng, universe);
    ASSERT_EQ(subsethood(alg, a, b), testing::brute_subsethood(alg, a, b, universe));
    ASSERT_EQ(subsethood(alg, a, b).is_one(), is_contained(a, b));
  }
}

TEST_P(SetLaws, GradedInclusionIsTransitive) {
  const Algebra alg = GetParam();
  Rng rng(22);
  const auto universe = testing::first_vars(4);
  for (int i = 0; i < 2'000; ++i) {
    const FuzzySet a = testing::random_set(rng, universe), b = testing::random_set(rng, universe),
                   c = testing::random_set(rng, universe);
    ASSERT_GE(subsethood(alg, a, c), tnorm(alg, subsethood(alg, a, b), subsethood(alg, b, c)));
  }
}

TEST_P(SetLaws, MultipleDistributesOverUnion) {
  const Algebra alg = GetParam();
  Rng rng(23);
  const auto universe = testing::first_vars(4);
  for (int i = 0; i < 2'000; ++i) {
    const FuzzySet a = testing::random_set(rng, universe), b = testing::random_set(rng, universe);
    const Rational c = rng.degree(12);
    ASSERT_EQ(scalar_multiple(alg, c, set_union(a, b)), set_union(scalar_multiple(alg, c, a), scalar_multiple(alg, c, b)));
  }
}

TEST_P(SetLaws, DirectedUnionSubsethood) {
  // For finite A and a directed family B, S(A, ∪B) = max over B of S(A, B).
  const Algebra alg = GetParam();
  Rng rng(24);
  const auto universe = testing::first_vars(4);
  for (int i = 0; i < 500; ++i) {
    const FuzzySet a = testing::random_set(rng, universe);
    std::vector<FuzzySet> family;
    for (std::size_t n = 1 + rng.below(4); n > 0; --n) family.push_back(testing::random_set(rng, universe));
    // Close under pairwise unions to make the family directed.
    for (std::size_t x = 0, n = family.size(); x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) family.push_back(set_union(family[x], family[y]));
    }
    family.push_back(set_union(family));
    Rational best = Rational::zero();
    for (const auto& b : family) best = join(best, subsethood(alg, a, b));
    ASSERT_EQ(subsethood(alg, a, set_union(family)), best);
  }
}

INSTANTIATE_TEST_SUITE_P(LukasiewiczProduct, SetLaws, ::testing::Values(L, P),
                         [](const auto& info) { return std::string(algebra_name(info.param)); });

}  // namespace
}  // namespace rfal
