#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "otid/errors.hpp"
#include "otid/measures.hpp"

using namespace otid;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an otid::Error";
  return ErrorKind::kIo;
}

}  // namespace

TEST(MakeDiscrete, MergesEqualValues) {
  const auto d = make_discrete({{1, 0.5}, {1, 0.3}, {2, 0.2}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.atoms()[0].value, 1.0);
  EXPECT_NEAR(d.atoms()[0].prob, 0.8, 1e-15);
  EXPECT_NEAR(d.atoms()[1].prob, 0.2, 1e-15);
}

TEST(MakeDiscrete, RenormalizesDirac) {
  const auto d = make_discrete({{3, 2.0}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.atoms()[0], (Atom{3.0, 1.0}));
}

TEST(MakeDiscrete, CanonicalInputUnchanged) {
  const auto d = make_discrete({{0, 0.25}, {1, 0.75}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0], (Atom{0.0, 0.25}));
  EXPECT_EQ(d.atoms()[1], (Atom{1.0, 0.75}));
}

TEST(MakeDiscrete, SortsAndMergesWithinTolerance) {
  const auto d = make_discrete({{2.0, 1.0}, {-1.0, 1.0}, {2.0 + 5e-13, 2.0}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0].value, -1.0);
  EXPECT_NEAR(d.atoms()[1].prob, 0.75, 1e-15);
}

TEST(MakeDiscrete, Idempotent) {
  const auto d = make_discrete({{0.3, 0.1}, {-2, 0.7}, {0.3, 0.2}, {5, 1.0 / 3.0}, {1e-3, 0.123}});
  std::vector<Atom> again(d.atoms().begin(), d.atoms().end());
  EXPECT_EQ(make_discrete(again), d);
}

TEST(MakeDiscrete, Errors) {
  EXPECT_EQ(kind_of([] { make_discrete({}); }), ErrorKind::kInvalidDistribution);
  EXPECT_EQ(kind_of([] { make_discrete({{1, -0.1}, {2, 1.1}}); }), ErrorKind::kInvalidDistribution);
  EXPECT_EQ(kind_of([] { make_discrete({{1, 0.0}}); }), ErrorKind::kInvalidDistribution);
}

TEST(DiscreteDist, MomentsAndScaling) {
  const auto d = make_discrete({{-1, 0.25}, {3, 0.75}});
  EXPECT_DOUBLE_EQ(d.mean(), 2.0);
  EXPECT_DOUBLE_EQ(d.second_moment(), 7.0);
  const auto s = d.scaled(-2.0);
  EXPECT_EQ(s.atoms()[0], (Atom{-6.0, 0.75}));
  EXPECT_EQ(s.atoms()[1], (Atom{2.0, 0.25}));
}

TEST(DiscretizeGaussian, TwoAtomsSymmetric) {
  const auto d = discretize_gaussian({0.0, 1.0}, 2);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.atoms()[0].value, -d.atoms()[1].value);
  EXPECT_DOUBLE_EQ(d.atoms()[0].prob, 0.5);
  EXPECT_DOUBLE_EQ(d.atoms()[1].prob, 0.5);
  // Half-normal mean sqrt(2/pi).
  EXPECT_NEAR(d.atoms()[1].value, std::sqrt(2.0 / M_PI), 1e-14);
}

TEST(DiscretizeGaussian, ZeroSdIsDirac) {
  const auto d = discretize_gaussian({5.0, 0.0}, 7);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.atoms()[0], (Atom{5.0, 1.0}));
}

TEST(DiscretizeGaussian, SecondMomentMatchesReference) {
  // Reference from scipy.stats bin means at n = 400.
  const auto d = discretize_gaussian({0.0, 1.0}, 400);
  EXPECT_NEAR(d.second_moment(), 0.9995586195981749, 1e-12);
  EXPECT_NEAR(d.mean(), 0.0, 1e-15);
  const auto shifted = discretize_gaussian({1.5, 2.0}, 400);
  EXPECT_NEAR(shifted.mean(), 1.5, 1e-13);
}

TEST(DiscretizeGaussian, DeterministicAndIncreasing) {
  const auto a = discretize_gaussian({0.3, 1.7}, 101);
  const auto b = discretize_gaussian({0.3, 1.7}, 101);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 101u);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a.atoms()[i - 1].value, a.atoms()[i].value);
}

TEST(DiscretizeGaussian, RejectsZeroAtoms) {
  EXPECT_EQ(kind_of([] { discretize_gaussian({0, 1}, 0); }), ErrorKind::kInvalidArgument);
}

TEST(ConditionalLawTable, RenormalizesWeights) {
  std::vector<ConditionalRow> rows;
  rows.push_back({2.0, DiscreteDist::dirac(1), DiscreteDist::bernoulli(0.3), "a"});
  rows.push_back({6.0, DiscreteDist::dirac(2), DiscreteDist::bernoulli(0.6), std::nullopt});
  const ConditionalLawTable t(std::move(rows));
  EXPECT_DOUBLE_EQ(t.rows()[0].weight, 0.25);
  EXPECT_DOUBLE_EQ(t.rows()[1].weight, 0.75);
  EXPECT_EQ(t.rows()[0].label, "a");
}

TEST(ConditionalLawTable, RejectsEmptyOrNegative) {
  EXPECT_EQ(kind_of([] { ConditionalLawTable t({}); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] {
              ConditionalLawTable t({{-1.0, DiscreteDist::dirac(0), DiscreteDist::dirac(0), {}}});
            }),
            ErrorKind::kInvalidArgument);
}
