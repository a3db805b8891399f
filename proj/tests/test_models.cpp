#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "otid/errors.hpp"
#include "otid/models.hpp"
#include "otid/quantile_ot.hpp"
#include "otid/setapprox.hpp"

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

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t J) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(J);
  double s = 0.0;
  for (double& v : p) s += (v = u(rng));
  for (double& v : p) v /= s;
  return p;
}

DdModel random_dd(std::mt19937_64& rng, std::size_t J, std::size_t nx) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<DdRow> rows;
  for (std::size_t i = 0; i < nx; ++i) rows.push_back({u(rng) + 0.1, u(rng), random_simplex(rng, J)});
  return DdModel(rows);
}

TprdModel random_tprd(std::mt19937_64& rng, std::size_t J, std::size_t nx) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TprdRow> rows;
  for (std::size_t i = 0; i < nx; ++i) {
    const double r1 = u(rng);
    const double s = u(rng);
    rows.push_back({u(rng) + 0.1, r1 * s, r1 * (1.0 - s), random_simplex(rng, J)});
  }
  return TprdModel(rows);
}

// Simulation-1 style model: Y0 ~ N(0, [[1,rho],[rho,1]]) independent of
// X, Y1 | x ~ N(x, 3 + 2 rho), X on a small symmetric grid with constant.
LinearProjectionModel gaussian_model(double rho, LinearProjectionOptions opt = {}) {
  std::vector<LinearProjectionRow> rows;
  const double xs[] = {-1.5, -0.5, 0.5, 1.5};
  Eigen::Matrix2d cov;
  cov << 1.0, rho, rho, 1.0;
  for (double x : xs)
    rows.push_back({0.25, Eigen::Vector2d(1.0, x), GaussianSpec{x, std::sqrt(3.0 + 2.0 * rho)},
                    GaussianVector{Eigen::Vector2d::Zero(), cov}});
  return LinearProjectionModel(rows, opt);
}

}  // namespace

// ---------------------------------------------------------------- demographic disparity

TEST(DdModel, Validation) {
  EXPECT_EQ(kind_of([] { DdModel({{1.0, 0.5, {0.3, 0.3}}}); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { DdModel({{1.0, 1.5, {0.5, 0.5}}}); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { DdModel({{1.0, 0.5, {0.5, 0.5}}}, std::vector<double>{0.4, 0.6}); }),
            ErrorKind::kInvalidArgument);
  const DdModel m({{1.0, 0.5, {0.25, 0.75}}, {3.0, 0.2, {0.5, 0.5}}});
  EXPECT_NEAR(m.class_probs()[0], 0.25 * 0.25 + 0.75 * 0.5, 1e-15);
}

TEST(DdInterval, TwoPointExample) {
  const DdModel m({{0.5, 0.6, {0.5, 0.5}}, {0.5, 0.2, {0.5, 0.5}}});
  const auto [lo, hi] = dd_interval(m, 0, 1);
  EXPECT_NEAR(lo, -0.6, 1e-15);
  EXPECT_NEAR(hi, 0.6, 1e-15);
  // Same endpoints from the per-x contrast LP.
  double lp_hi = 0.0, lp_lo = 0.0;
  for (const auto& r : m.rows()) {
    const DdCell cell{r.p_y1, r.p_class};
    lp_hi += r.weight * kallus_dd_lp({1.0}, cell, m.class_probs());
    lp_lo -= r.weight * kallus_dd_lp({-1.0}, cell, m.class_probs());
  }
  EXPECT_NEAR(lp_hi, 0.6, 1e-12);
  EXPECT_NEAR(lp_lo, -0.6, 1e-12);
}

TEST(DdInterval, NoPositiveDecisions) {
  const DdModel m({{0.5, 0.0, {0.3, 0.7}}, {0.5, 0.0, {0.6, 0.4}}});
  const auto [lo, hi] = dd_interval(m, 0, 1);
  EXPECT_EQ(lo, 0.0);
  EXPECT_EQ(hi, 0.0);
  EXPECT_EQ(kind_of([&] { dd_interval(m, 1, 1); }), ErrorKind::kInvalidArgument);
}

TEST(DdSupport, EqualClassesAllPositive) {
  const DdModel m({{1.0, 1.0, {0.5, 0.5}}});
  const auto E = DisparityMatrix::single(2, 0, 1);
  EXPECT_NEAR(dd_support(m, E, {1.0}), 0.0, 1e-15);
  EXPECT_NEAR(dd_support(m, E, {-1.0}), 0.0, 1e-15);
}

TEST(DdSupport, DualityWithInterval) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t J = 2 + rep % 4;
    const DdModel m = random_dd(rng, J, 5);
    const std::size_t j = rep % J;
    const std::size_t jd = (j + 1) % J;
    const auto E = DisparityMatrix::single(J, j, jd);
    const auto [lo, hi] = dd_interval(m, j, jd);
    EXPECT_NEAR(hi, dd_support(m, E, {1.0}), 1e-12);
    EXPECT_NEAR(lo, -dd_support(m, E, {-1.0}), 1e-12);
    EXPECT_LE(lo, hi);
    EXPECT_GE(lo, -1.0);
    EXPECT_LE(hi, 1.0);
  }
}

TEST(DdSupport, MatchesContrastLp) {
  std::mt19937_64 rng(8);
  for (std::size_t J = 2; J <= 5; ++J) {
    const DdModel m = random_dd(rng, J, 4);
    const auto E = DisparityMatrix::against_last(J);
    for (const auto& p : sample_sphere(J - 1, 5, 100 + J)) {
      std::vector<double> pv(p.data(), p.data() + p.size());
      double lp = 0.0;
      for (const auto& r : m.rows()) lp += r.weight * kallus_dd_lp(pv, {r.p_y1, r.p_class}, m.class_probs());
      EXPECT_NEAR(dd_support(m, E, pv), lp, 1e-8);
    }
  }
}

TEST(DdSupport, DegenerateClass) {
  const DdModel m({{1.0, 0.5, {1.0, 0.0}}});
  EXPECT_EQ(kind_of([&] { dd_support(m, DisparityMatrix::single(2, 0, 1), {1.0}); }),
            ErrorKind::kDegenerateClass);
}

TEST(DdSupport, NonnegativeWidth) {
  std::mt19937_64 rng(9);
  const DdModel m = random_dd(rng, 4, 6);
  const auto E = DisparityMatrix::against_last(4);
  for (const auto& p : sample_sphere(3, 50, 3)) {
    std::vector<double> a(p.data(), p.data() + 3), b(3);
    for (int k = 0; k < 3; ++k) b[k] = -a[k];
    EXPECT_GE(dd_support(m, E, a) + dd_support(m, E, b), -1e-12);
  }
}

// ---------------------------------------------------------------- TPRD

TEST(TprdInstance, RowConvention) {
  const TprdRow row{1.0, 0.3, 0.2, {0.6, 0.4}};
  const auto inst = tprd_instance(row, {1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(inst.pi[1], (std::vector<double>{-1.0, -3.0}));
  EXPECT_EQ(inst.pi[0], (std::vector<double>{-2.0, -4.0}));
  EXPECT_EQ(inst.gamma1[0], 0.2);
  EXPECT_EQ(inst.gamma1[1], 0.3);
}

TEST(TprdSupport, CoordinateDirectionsAreFrechetBounds) {
  std::mt19937_64 rng(10);
  for (std::size_t J = 2; J <= 4; ++J) {
    const TprdModel m = random_tprd(rng, J, 5);
    const ThetaBounds b = tprd_theta_bounds(m);
    for (std::size_t k = 0; k < 2 * J; ++k) {
      std::vector<double> e(2 * J, 0.0);
      e[k] = 1.0;
      EXPECT_NEAR(tprd_theta_support(m, e), b.upper[k], 1e-12) << k;
      e[k] = -1.0;
      EXPECT_NEAR(-tprd_theta_support(m, e), b.lower[k], 1e-12) << k;
    }
  }
}

TEST(TprdSupport, PerRowDreamMatchesLp) {
  std::mt19937_64 rng(11);
  for (std::size_t J = 2; J <= 6; ++J) {
    const TprdModel m = random_tprd(rng, J, 3);
    for (const auto& qv : sample_sphere(2 * J, 6, J)) {
      std::vector<double> q(qv.data(), qv.data() + qv.size());
      for (const auto& r : m.rows()) {
        const auto inst = tprd_instance(r, q);
        EXPECT_NEAR(solve_dream(inst).cost, brute_force_partial_ot(inst), 1e-9);
      }
    }
  }
}

TEST(TprdMap, Examples) {
  EXPECT_DOUBLE_EQ(tprd_map({0.25, 0.25, 0.25, 0.25}, {{0, 1}})[0], 0.0);
  EXPECT_DOUBLE_EQ(tprd_map({0.3, 0.0, 0.0, 0.4}, {{0, 1}})[0], 1.0);
  const std::vector<double> th{0.1, 0.3, 0.25, 0.05};
  const std::vector<double> sc{0.2, 0.6, 0.025, 0.005};
  EXPECT_NEAR(tprd_map(th, {{0, 1}})[0], tprd_map(sc, {{0, 1}})[0], 1e-15);
  EXPECT_EQ(kind_of([] { tprd_map({0.0, 0.0, 0.2, 0.2}, {{0, 1}}); }), ErrorKind::kDegenerateDenominator);
}

TEST(TprdInterval, IndependentModelMatchesCanonicalDirections) {
  // Y1r = 1 always, Y1s and Y0 independent of X.
  const TprdModel m({{0.5, 0.35, 0.65, {0.4, 0.6}}, {0.5, 0.35, 0.65, {0.4, 0.6}}});
  const ThetaBounds b = tprd_theta_bounds(m);
  const auto [lo, hi] = tprd_interval(m, 0, 1);
  // Unconditional Frechet forms.
  const double U1 = std::min(0.35, 0.4), L2 = std::max(0.65 + 0.4 - 1.0, 0.0);
  const double L3 = std::max(0.35 + 0.6 - 1.0, 0.0), U4 = std::min(0.65, 0.6);
  EXPECT_NEAR(hi, U1 / (U1 + L2) - L3 / (L3 + U4), 1e-14);
  // The canonical direction attains all four bounds at once.
  const double n = 2.0;
  EXPECT_NEAR(n * tprd_theta_support(m, {0.5, -0.5, -0.5, 0.5}),
              b.upper[0] - b.lower[1] - b.lower[2] + b.upper[3], 1e-12);
  EXPECT_NEAR(-n * tprd_theta_support(m, {-0.5, 0.5, 0.5, -0.5}),
              b.lower[0] - b.upper[1] - b.upper[2] + b.lower[3], 1e-12);
  EXPECT_LE(lo, hi);
}

TEST(TprdInterval, PointIdentifiedWhenBoundsCoincide) {
  // Y0 determined by X: each row has a single class.
  const TprdModel m({{0.5, 0.3, 0.4, {1.0, 0.0}}, {0.5, 0.2, 0.5, {0.0, 1.0}}});
  const auto [lo, hi] = tprd_interval(m, 0, 1);
  EXPECT_NEAR(lo, hi, 1e-15);
  EXPECT_NEAR(hi, 0.3 / 0.7 - 0.2 / 0.7, 1e-15);
}

TEST(TprdInterval, EndpointTupleInsideSet) {
  std::mt19937_64 rng(12);
  const TprdModel m = random_tprd(rng, 2, 6);
  const ThetaBounds b = tprd_theta_bounds(m);
  std::vector<Halfspace> hs;
  for (const auto& q : sample_sphere(4, 300, 5)) {
    std::vector<double> qv(q.data(), q.data() + 4);
    hs.push_back({q, tprd_theta_support(m, qv)});
  }
  Eigen::Vector4d upper_tuple(b.upper[0], b.lower[1], b.lower[2], b.upper[3]);
  Eigen::Vector4d lower_tuple(b.lower[0], b.upper[1], b.upper[2], b.lower[3]);
  const auto approx = filter_candidates({upper_tuple, lower_tuple}, hs, 1e-8);
  EXPECT_TRUE(approx.accepted[0]);
  EXPECT_TRUE(approx.accepted[1]);
}

TEST(TprdProject, TotalsAreCouplingFree) {
  std::mt19937_64 rng(33);
  const TprdModel m = random_tprd(rng, 3, 5);
  const auto totals = tprd_totals(m);
  // Opposite sums of the s=1 (and s=0) coordinates have zero width.
  EXPECT_NEAR(tprd_theta_support(m, {1, 0, 1, 0, 1, 0}), totals[0], 1e-14);
  EXPECT_NEAR(-tprd_theta_support(m, {-1, 0, -1, 0, -1, 0}), totals[0], 1e-14);
  EXPECT_NEAR(tprd_theta_support(m, {0, 1, 0, 1, 0, 1}), totals[1], 1e-14);
  const Eigen::VectorXd theta = (Eigen::VectorXd(6) << 0.9, 0.1, 0.2, 0.4, 0.7, 0.3).finished();
  const Eigen::VectorXd p = tprd_project(m, theta);
  EXPECT_NEAR(p(0) + p(2) + p(4), totals[0], 1e-15);
  EXPECT_NEAR(p(1) + p(3) + p(5), totals[1], 1e-15);
  // Projection is idempotent and moves along the constraint normals only.
  EXPECT_LT((tprd_project(m, p) - p).norm(), 1e-15);
  const Eigen::VectorXd d = theta - p;
  EXPECT_NEAR(d(0), d(2), 1e-15);
  EXPECT_NEAR(d(1), d(5), 1e-15);
}

// ---------------------------------------------------------------- linear projection

TEST(LinearProjection, MomentsFromRows) {
  const auto m = gaussian_model(0.5);
  EXPECT_NEAR(m.moment()(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(m.moment()(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(m.moment()(3, 3), 1.25, 1e-15);
  EXPECT_NEAR(m.cross_moment()(1), 1.25, 1e-15);
  EXPECT_NEAR(m.cross_moment()(0), 0.0, 1e-15);
}

TEST(LinearProjection, RejectsNonPsdMoment) {
  std::vector<LinearProjectionRow> rows{
      {1.0, Eigen::VectorXd::Ones(1), GaussianSpec{0, 1}, GaussianVector{Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Ones(1, 1)}}};
  Eigen::Matrix2d bad;
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_EQ(kind_of([&] { LinearProjectionModel(rows, {}, bad); }), ErrorKind::kInvalidArgument);
}

TEST(LinearProjection, ZeroT0Halfspace) {
  const auto m = gaussian_model(0.3);
  const Eigen::Vector4d t(0.0, 0.0, 0.6, 0.8);
  const Halfspace h = lp_halfspace(m, t);
  EXPECT_NEAR(h.offset, t.tail(2).dot(m.cross_moment()), 1e-15);
}

TEST(LinearProjection, GaussianComonotoneOffset) {
  const auto m = gaussian_model(0.0);
  const Halfspace h = lp_halfspace(m, Eigen::Vector4d(1, 0, 0, 0));
  EXPECT_NEAR(h.offset, std::sqrt(3.0), 1e-14);
  const auto disc = m.with_options({400, false});
  EXPECT_NEAR(lp_halfspace(disc, Eigen::Vector4d(1, 0, 0, 0)).offset, std::sqrt(3.0), 2e-3);
}

TEST(LinearProjection, SupportAnalyticVsDiscretized) {
  const auto m = gaussian_model(0.0);
  const Eigen::Vector4d e1(1, 0, 0, 0);
  // Support of the ellipse alpha' alpha <= 3 in direction e1.
  EXPECT_NEAR(lp_support(m, e1), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(lp_support(m.with_options({400, false}), e1), lp_support(m, e1), 2e-3);
}

TEST(LinearProjection, SupportOfEllipse) {
  // With beta pinned at (0,1) the set is alpha' Sigma alpha <= 3 + 2 rho.
  const double rho = 0.5;
  const auto m = gaussian_model(rho);
  Eigen::Matrix2d S;
  S << 1.0, rho, rho, 1.0;
  for (const auto& q : sample_sphere(2, 20, 4)) {
    Eigen::Vector4d full = Eigen::Vector4d::Zero();
    full.head(2) = q;
    const double expected = std::sqrt((3.0 + 2.0 * rho) * q.dot(S.inverse() * q));
    EXPECT_NEAR(lp_support(m, full), expected, 1e-12);
  }
}

TEST(LinearProjection, SingularMoment) {
  const auto m = gaussian_model(1.0);
  EXPECT_EQ(kind_of([&] { lp_support(m, Eigen::Vector4d(1, 0, 0, 0)); }), ErrorKind::kSingularMoment);
  // The halfspace route still works and bounds alpha_a + alpha_b.
  const Eigen::Vector2d t0 = Eigen::Vector2d(1, 1).normalized();
  const auto h = lp_profiled_halfspace(m, t0);
  ASSERT_TRUE(h.has_value());
  EXPECT_NEAR(h->offset / h->normal(0), std::sqrt(5.0), 1e-12);
  EXPECT_FALSE(lp_profiled_halfspace(m, Eigen::Vector2d(1, -1).normalized()).has_value());
}

TEST(LinearProjection, ProfiledBeta) {
  const auto m = gaussian_model(0.25);
  const Eigen::VectorXd beta = lp_profiled_beta(m, Eigen::Vector2d(1, 1));
  EXPECT_NEAR(beta(0), 0.0, 1e-14);
  EXPECT_NEAR(beta(1), 1.0, 1e-14);
}

TEST(LinearProjection, ProfiledHalfspacesMatchSupport) {
  // For invertible M the profiled halfspace at t0 is tight at the support
  // point of the projected set in direction S t0.
  const auto m = gaussian_model(0.4);
  const Eigen::Matrix2d S = m.moment().topLeftCorner(2, 2);
  for (const auto& t0 : sample_sphere(2, 10, 9)) {
    const auto h = lp_profiled_halfspace(m, t0);
    ASSERT_TRUE(h.has_value());
    Eigen::Vector4d q = Eigen::Vector4d::Zero();
    q.head(2) = h->normal;
    EXPECT_NEAR(lp_support(m, q), h->offset, 1e-12);
  }
}

TEST(LinearProjection, DiracY0PointIdentified) {
  std::vector<LinearProjectionRow> rows;
  const double xs[] = {-1.0, 0.0, 0.5, 2.0};
  for (double x : xs) {
    AtomCloud y0{Eigen::MatrixXd::Constant(1, 1, x * x), Eigen::VectorXd::Ones(1)};
    rows.push_back({1.0, Eigen::Vector2d(1.0, x), make_discrete({{x - 1, 0.5}, {x + 2, 0.5}}), y0});
  }
  const LinearProjectionModel m(rows);
  for (const auto& q : sample_sphere(3, 50, 12))
    EXPECT_NEAR(lp_support(m, q) + lp_support(m, -q), 0.0, 1e-8);
}

TEST(LinearProjection, ScalarY0OpposingHalfspaces) {
  // d0 = 1 and Y1 independent of X: t and -t bound a strip.
  std::vector<LinearProjectionRow> rows;
  for (double x : {-1.0, 1.0})
    rows.push_back({0.5, Eigen::VectorXd::Ones(1), make_discrete({{0, 0.5}, {2, 0.5}}),
                    AtomCloud{(Eigen::MatrixXd(3, 1) << -1, 0, 1.0 + x).finished(), Eigen::Vector3d(1, 1, 1)}});
  const LinearProjectionModel m(rows);
  const Eigen::Vector2d t(1.0, 0.0);
  const Halfspace up = lp_halfspace(m, t);
  const Halfspace down = lp_halfspace(m, -t);
  EXPECT_NEAR(up.normal(0), -down.normal(0), 1e-15);
  double co = 0.0, anti = 0.0;
  for (const auto& r : m.rows()) {
    const auto& c = std::get<AtomCloud>(r.y0);
    const auto v = make_discrete({{c.values(0, 0), 1}, {c.values(1, 0), 1}, {c.values(2, 0), 1}});
    co += r.weight * comonotone_integral(v, std::get<DiscreteDist>(r.y1));
    anti += r.weight * antitone_integral(v, std::get<DiscreteDist>(r.y1));
  }
  EXPECT_NEAR(up.offset, co, 1e-15);
  EXPECT_NEAR(down.offset, -anti, 1e-15);
}

TEST(LinearProjection, BatchTermsMatchSingle) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> z;
  std::vector<LinearProjectionRow> rows;
  for (double x : {-1.0, 0.0, 2.0}) {
    Eigen::MatrixXd v(60, 2);
    for (Eigen::Index i = 0; i < v.rows(); ++i) v.row(i) << z(rng) + x, std::round(4 * z(rng)) / 4;
    rows.push_back({1.0, Eigen::Vector2d(1.0, x), GaussianSpec{x, 1.5}, AtomCloud{v, Eigen::VectorXd::Ones(60)}});
  }
  rows.push_back({0.5, Eigen::Vector2d(1.0, 0.3), make_discrete({{0, 0.3}, {1, 0.7}}),
                  GaussianVector{Eigen::Vector2d(0.1, 0.2), Eigen::Matrix2d::Identity()}});
  const LinearProjectionModel m(rows, {50, true});
  std::vector<Eigen::VectorXd> t0s;
  for (int k = 0; k < 40; ++k) t0s.push_back(Eigen::Vector2d(std::cos(0.16 * k), std::sin(0.16 * k)));
  t0s.push_back(Eigen::Vector2d::Zero());
  t0s.push_back(Eigen::Vector2d(0.0, 2.0));
  const auto batch = m.comonotone_terms(t0s);
  ASSERT_EQ(batch.size(), t0s.size());
  for (std::size_t d = 0; d < t0s.size(); ++d) EXPECT_NEAR(batch[d], m.comonotone_term(t0s[d]), 1e-12) << d;

  const auto hs = lp_profiled_halfspaces(m, t0s);
  for (std::size_t d = 0; d < t0s.size(); ++d) {
    const auto single = lp_profiled_halfspace(m, t0s[d]);
    ASSERT_EQ(hs[d].has_value(), single.has_value()) << d;
    if (single) EXPECT_NEAR(hs[d]->offset, single->offset, 1e-12);
  }
}

// ---------------------------------------------------------------- supermodular

TEST(Supermodular, ProductReducesToQuantileIntegrals) {
  const auto l1 = make_discrete({{0, 0.2}, {1, 0.5}, {3, 0.3}});
  const auto l0 = make_discrete({{-1, 0.6}, {2, 0.4}});
  const ConditionalLawTable t({{1.0, l1, l0, {}}});
  const auto [lo, hi] = supermodular_interval([](double a, double b) { return a * b; }, t);
  EXPECT_NEAR(lo, antitone_integral(l1, l0), 1e-15);
  EXPECT_NEAR(hi, comonotone_integral(l1, l0), 1e-15);
}

TEST(Supermodular, AdditiveIsCouplingFree) {
  const ConditionalLawTable t({{0.3, make_discrete({{0, 0.5}, {1, 0.5}}), make_discrete({{2, 1}}), {}},
                               {0.7, make_discrete({{5, 0.1}, {6, 0.9}}), make_discrete({{-1, 0.3}, {1, 0.7}}), {}}});
  const auto [lo, hi] = supermodular_interval([](double a, double b) { return a + b; }, t);
  const double expected = 0.3 * (0.5 + 2.0) + 0.7 * (5.9 + 0.4);
  EXPECT_NEAR(lo, expected, 1e-14);
  EXPECT_NEAR(hi, expected, 1e-14);
}

TEST(Supermodular, MinMatchesLp) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> p(0.05, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Atom> a, b;
    for (int k = 0; k < 4; ++k) a.push_back({u(rng), p(rng)});
    for (int k = 0; k < 5; ++k) b.push_back({u(rng), p(rng)});
    const auto v = make_discrete(a), w = make_discrete(b);
    const auto [lo, hi] = supermodular_interval([](double x, double y) { return std::min(x, y); },
                                                ConditionalLawTable({{1.0, v, w, {}}}));
    Eigen::MatrixXd c(v.size(), w.size());
    Eigen::VectorXd pv(v.size()), pw(w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      pv(i) = v.atoms()[i].prob;
      for (std::size_t j = 0; j < w.size(); ++j) c(i, j) = std::min(v.atoms()[i].value, w.atoms()[j].value);
    }
    for (std::size_t j = 0; j < w.size(); ++j) pw(j) = w.atoms()[j].prob;
    EXPECT_NEAR(lo, brute_force_ot(c, pv, pw), 1e-9);
    EXPECT_NEAR(hi, -brute_force_ot(-c, pv, pw), 1e-9);
  }
}
