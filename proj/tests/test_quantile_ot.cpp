#include <gtest/gtest.h>

#include <random>

#include "otid/errors.hpp"
#include "otid/measures.hpp"
#include "otid/oracle.hpp"
#include "otid/quantile_ot.hpp"

using namespace otid;

namespace {

DiscreteDist random_law(std::mt19937_64& rng, int atoms) {
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::uniform_real_distribution<double> pr(0.01, 1.0);
  std::vector<Atom> a;
  for (int i = 0; i < atoms; ++i) a.push_back({val(rng), pr(rng)});
  return make_discrete(a);
}

Eigen::VectorXd probs(const DiscreteDist& d) {
  Eigen::VectorXd p(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) p(i) = d.atoms()[i].prob;
  return p;
}

Eigen::MatrixXd product_cost(const DiscreteDist& v, const DiscreteDist& w, double sign) {
  Eigen::MatrixXd c(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      c(i, j) = sign * v.atoms()[i].value * w.atoms()[j].value;
  return c;
}

}  // namespace

TEST(StepQuantile, Examples) {
  auto q = to_step_quantile(make_discrete({{0, 0.4}, {1, 0.6}}));
  ASSERT_EQ(q.steps.size(), 2u);
  EXPECT_NEAR(q.steps[0].u_upper, 0.4, 1e-15);
  EXPECT_EQ(q.steps[0].value, 0.0);
  EXPECT_EQ(q.steps[1], (StepQuantile::Step{1.0, 1.0}));

  q = to_step_quantile(DiscreteDist::dirac(7));
  ASSERT_EQ(q.steps.size(), 1u);
  EXPECT_EQ(q.steps[0], (StepQuantile::Step{1.0, 7.0}));

  q = to_step_quantile(make_discrete({{-1, 0.2}, {0, 0.3}, {2, 0.5}}));
  ASSERT_EQ(q.steps.size(), 3u);
  EXPECT_NEAR(q.steps[0].u_upper, 0.2, 1e-15);
  EXPECT_NEAR(q.steps[1].u_upper, 0.5, 1e-15);
  EXPECT_EQ(q.steps[2].u_upper, 1.0);
  EXPECT_EQ(q.steps[2].value, 2.0);
}

TEST(Comonotone, Constants) {
  EXPECT_DOUBLE_EQ(comonotone_integral(DiscreteDist::dirac(2), DiscreteDist::dirac(3)), 6.0);
}

TEST(Comonotone, Bernoulli) {
  const auto b = DiscreteDist::bernoulli(0.5);
  EXPECT_DOUBLE_EQ(comonotone_integral(b, b), 0.5);
}

TEST(Comonotone, FiveAtomReference) {
  // Reference from an external LP solver with cost -v*w.
  const auto v = make_discrete({{-1.5, 0.1}, {0.2, 0.25}, {0.7, 0.3}, {2.0, 0.2}, {3.1, 0.15}});
  const auto w = make_discrete({{-0.4, 0.3}, {0.0, 0.1}, {1.1, 0.2}, {1.6, 0.25}, {2.5, 0.15}});
  EXPECT_NEAR(comonotone_integral(v, w), 2.0565, 1e-12);
  EXPECT_NEAR(-brute_force_ot(product_cost(v, w, -1.0), probs(v), probs(w)), 2.0565, 1e-9);
}

TEST(Antitone, Bernoulli) {
  EXPECT_NEAR(antitone_integral(DiscreteDist::bernoulli(0.7), DiscreteDist::bernoulli(0.6)), 0.3,
              1e-15);
}

TEST(Antitone, DiracFactor) {
  const auto w = make_discrete({{-1, 0.2}, {0.5, 0.3}, {4, 0.5}});
  EXPECT_NEAR(antitone_integral(DiscreteDist::dirac(1.5), w), 1.5 * w.mean(), 1e-15);
  EXPECT_NEAR(comonotone_integral(DiscreteDist::dirac(1.5), w), 1.5 * w.mean(), 1e-15);
}

TEST(Antitone, SixAtomReference) {
  const auto v = make_discrete(
      {{-2.0, 0.05}, {-0.5, 0.2}, {0.3, 0.15}, {0.9, 0.25}, {1.4, 0.2}, {2.2, 0.15}});
  const auto w = make_discrete(
      {{-1.0, 0.2}, {-0.2, 0.1}, {0.1, 0.3}, {0.8, 0.1}, {1.7, 0.2}, {3.0, 0.1}});
  EXPECT_NEAR(antitone_integral(v, w), -0.8515, 1e-12);
}

TEST(Frechet, Examples) {
  auto [lo, hi] = frechet_bounds(0.3, 0.4);
  EXPECT_DOUBLE_EQ(lo, 0.0);
  EXPECT_DOUBLE_EQ(hi, 0.3);
  std::tie(lo, hi) = frechet_bounds(0.7, 0.6);
  EXPECT_NEAR(lo, 0.3, 1e-15);
  EXPECT_DOUBLE_EQ(hi, 0.6);
  EXPECT_THROW(frechet_bounds(1.2, 0.1), Error);
  EXPECT_THROW(frechet_bounds(0.1, -0.01), Error);
}

TEST(Frechet, MatchesBernoulliIntegralsOnGrid) {
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      const double p = a / 20.0;
      const double q = b / 20.0;
      const auto [lo, hi] = frechet_bounds(p, q);
      const auto bp = DiscreteDist::bernoulli(p);
      const auto bq = DiscreteDist::bernoulli(q);
      EXPECT_NEAR(comonotone_integral(bp, bq), hi, 1e-14) << p << "," << q;
      EXPECT_NEAR(antitone_integral(bp, bq), lo, 1e-14) << p << "," << q;
    }
}

TEST(QuantileOt, GaussianSelfCouplingConverges) {
  const auto d = discretize_gaussian({0.0, 1.0}, 400);
  EXPECT_NEAR(comonotone_integral(d, d), 1.0, 1e-3);
}

TEST(QuantileOt, PropertiesOnRandomLaws) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> na(1, 8);
  for (int rep = 0; rep < 200; ++rep) {
    const auto v = random_law(rng, na(rng));
    const auto w = random_law(rng, na(rng));
    const double co = comonotone_integral(v, w);
    const double anti = antitone_integral(v, w);
    EXPECT_GE(co, anti - 1e-12);
    EXPECT_NEAR(co, comonotone_integral(w, v), 1e-12);
    EXPECT_NEAR(anti, antitone_integral(w, v), 1e-12);
    EXPECT_NEAR(comonotone_integral(v.scaled(2.5), w), 2.5 * co, 1e-11);
    EXPECT_NEAR(antitone_integral(v.scaled(2.5), w), 2.5 * anti, 1e-11);
    // A negative factor swaps the two couplings.
    EXPECT_NEAR(comonotone_integral(v.scaled(-1.0), w), -anti, 1e-12);
  }
}

TEST(QuantileOt, MatchesLpOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> na(1, 6);
  for (int rep = 0; rep < 60; ++rep) {
    const auto v = random_law(rng, na(rng));
    const auto w = random_law(rng, na(rng));
    EXPECT_NEAR(-brute_force_ot(product_cost(v, w, -1.0), probs(v), probs(w)),
                comonotone_integral(v, w), 1e-9);
    EXPECT_NEAR(brute_force_ot(product_cost(v, w, 1.0), probs(v), probs(w)),
                antitone_integral(v, w), 1e-9);
  }
}

TEST(CoupledIntegral, ReducesToProducts) {
  const auto v = make_discrete({{0, 0.3}, {1, 0.3}, {2.5, 0.4}});
  const auto w = make_discrete({{-1, 0.5}, {3, 0.5}});
  const auto prod = [](double a, double b) { return a * b; };
  EXPECT_NEAR(coupled_integral(v, w, prod, false), comonotone_integral(v, w), 1e-15);
  EXPECT_NEAR(coupled_integral(v, w, prod, true), antitone_integral(v, w), 1e-15);
}
