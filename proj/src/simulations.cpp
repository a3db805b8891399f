#include "otid/simulations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "otid/errors.hpp"
#include "otid/measures.hpp"
#include "otid/random.hpp"

namespace otid {

namespace {

bool satisfies(const std::vector<Halfspace>& hs, const Eigen::VectorXd& p, double tol) {
  for (const auto& h : hs)
    if (h.normal.dot(p) > h.offset + tol) return false;
  return true;
}

double safe_hull_area(const IdentifiedSetApprox& a) {
  return accepted_count(a) == 0 ? 0.0 : hull_area_2d(a).value_or(0.0);
}

}  // namespace

LinearProjectionModel sim1_model(double rho, const SimOptions& opt) {
  if (!(std::abs(rho) <= 1.0)) fail(ErrorKind::kInvalidArgument, "rho must lie in [-1,1]");
  const DiscreteDist x = discretize_gaussian({0.0, 1.0}, opt.x_nodes);
  Eigen::Matrix2d cov;
  cov << 1.0, rho, rho, 1.0;
  const double sd1 = std::sqrt(3.0 + 2.0 * rho);
  std::vector<LinearProjectionRow> rows;
  for (const Atom& a : x.atoms())
    rows.push_back({a.prob, Eigen::Vector2d(1.0, a.value), GaussianSpec{a.value, sd1},
                    GaussianVector{Eigen::Vector2d::Zero(), cov}});
  return LinearProjectionModel(std::move(rows), {opt.gaussian_atoms, true});
}

LinearProjectionModel sim2_model(double sigma_a, double sigma_b, const SimOptions& opt) {
  if (opt.draws_per_node == 0) fail(ErrorKind::kInvalidArgument, "draws_per_node must be >= 1");
  const DiscreteDist x = discretize_gaussian({0.0, 2.0}, opt.x_nodes);
  Rng rng(opt.seed);
  const std::size_t n = opt.draws_per_node;
  std::vector<LinearProjectionRow> rows;
  for (const Atom& a : x.atoms()) {
    AtomCloud y0{Eigen::MatrixXd(n, 2), Eigen::VectorXd::Constant(n, 1.0 / double(n))};
    std::vector<Atom> y1(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double ya = a.value * a.value + sigma_a * rng.normal();
      const double yb = ya * ya + sigma_b * rng.normal();
      y0.values(k, 0) = ya;
      y0.values(k, 1) = yb;
      y1[k] = {ya + 0.2 * yb + 1.0 + a.value + rng.normal(), 1.0 / double(n)};
    }
    rows.push_back({a.prob, Eigen::Vector2d(1.0, a.value), make_discrete(std::move(y1)), std::move(y0)});
  }
  return LinearProjectionModel(std::move(rows), {opt.gaussian_atoms, true});
}

std::vector<Halfspace> profiled_halfspaces(const LinearProjectionModel& model, bool restricted,
                                           std::size_t directions, std::uint64_t seed) {
  const std::size_t d0 = model.d0();
  std::vector<Eigen::VectorXd> t0s;
  for (std::size_t k = 0; k < d0; ++k)
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd t0 = Eigen::VectorXd::Zero(d0);
      t0(k) = s;
      t0s.push_back(std::move(t0));
    }
  if (!restricted) {
    std::vector<Eigen::VectorXd> sampled;
    for (const auto& t : sample_sphere(d0 + model.dx(), directions, seed)) {
      const Eigen::VectorXd t0 = t.head(d0);
      const double norm = t0.norm();
      if (norm >= 1e-12) sampled.push_back(t0 / norm);
    }
    // Neighbouring directions keep the batch evaluation's sort orders warm.
    if (d0 == 2)
      std::stable_sort(sampled.begin(), sampled.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0));
      });
    t0s.insert(t0s.end(), sampled.begin(), sampled.end());
  }
  std::vector<Halfspace> out;
  for (auto& h : lp_profiled_halfspaces(model, t0s))
    if (h) out.push_back(std::move(*h));
  return out;
}

PanelResult run_panel(const LinearProjectionModel& model, const Eigen::Vector2d& truth,
                      std::string label, const SimOptions& opt) {
  if (model.d0() != 2) fail(ErrorKind::kInvalidArgument, "panels need two Y0 coefficients");
  PanelResult r;
  r.label = std::move(label);
  r.truth = truth;
  const auto restricted_hs = profiled_halfspaces(model, true, 0, opt.seed);
  const auto ours_hs = profiled_halfspaces(model, false, opt.directions, opt.seed);

  const double L = opt.clip_limit;
  const Box limit{{-L, L}, {-L, L}};
  if (opt.box) {
    r.box = *opt.box;
  } else {
    const auto poly = clip_polygon(limit, restricted_hs);
    r.box = poly.empty() ? limit : bounding_box(poly, opt.margin);
  }
  auto candidates = grid_in_box(r.box, opt.grid, opt.grid);
  r.ours = filter_candidates(candidates, ours_hs, opt.tol);
  r.restricted = filter_candidates(std::move(candidates), restricted_hs, opt.tol);
  for (std::size_t i = 0; i < r.ours.accepted.size(); ++i)
    if (r.ours.accepted[i] && !r.restricted.accepted[i]) ++r.containment_violations;
  r.truth_in_ours = satisfies(ours_hs, truth, opt.tol);
  r.truth_in_restricted = satisfies(restricted_hs, truth, opt.tol);
  r.hull_area_ours = safe_hull_area(r.ours);
  r.hull_area_restricted = safe_hull_area(r.restricted);
  r.polygon_area_ours = polygon_area(clip_polygon(r.box, ours_hs));
  r.polygon_area_restricted = polygon_area(clip_polygon(r.box, restricted_hs));

  const Eigen::Vector2d diag = Eigen::Vector2d(1.0, 1.0).normalized();
  const auto up = lp_profiled_halfspace(model, diag);
  const auto down = lp_profiled_halfspace(model, -diag);
  if (up && down && std::abs(up->normal(0) - up->normal(1)) <= 1e-9 * up->normal.norm())
    r.sum_interval = {-down->offset / -down->normal(0), up->offset / up->normal(0)};
  else
    r.sum_interval = {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < r.ours.accepted.size(); ++i) {
    if (!r.ours.accepted[i]) continue;
    const double sum = r.ours.candidates[i].sum();
    if (sum < r.sum_interval.first - 1e-8 || sum > r.sum_interval.second + 1e-8) ++r.sum_violations;
  }
  return r;
}

}  // namespace otid
