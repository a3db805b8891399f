#include "otid/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "otid/errors.hpp"
#include "otid/quantile_ot.hpp"

namespace otid {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kDenominatorFloor = 1e-12;
constexpr double kRowSumTol = 1e-9;

std::size_t y0_dimension(const Y0Law& law) {
  if (const auto* g = std::get_if<GaussianVector>(&law)) return static_cast<std::size_t>(g->mean.size());
  return static_cast<std::size_t>(std::get<AtomCloud>(law).values.cols());
}

double y1_mean(const Y1Law& law) {
  if (const auto* g = std::get_if<GaussianSpec>(&law)) return g->mean;
  return std::get<DiscreteDist>(law).mean();
}

// E[Y0 Y0' | x] and E[Y0 | x].
std::pair<Eigen::MatrixXd, Eigen::VectorXd> y0_moments(const Y0Law& law) {
  if (const auto* g = std::get_if<GaussianVector>(&law))
    return {g->cov + g->mean * g->mean.transpose(), g->mean};
  const auto& c = std::get<AtomCloud>(law);
  const Eigen::MatrixXd weighted = c.values.transpose() * c.probs.asDiagonal();
  return {weighted * c.values, weighted.rowwise().sum()};
}

void check_moment_matrix(const Eigen::MatrixXd& M) {
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    fail(ErrorKind::kInvalidArgument, "moment matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(M, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10 * scale)
    fail(ErrorKind::kInvalidArgument, "moment matrix is not positive semidefinite");
}

double condition_number(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  return smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

void check_class_probs(const std::vector<double>& probs) {
  for (std::size_t j = 0; j < probs.size(); ++j)
    if (!(probs[j] >= kDenominatorFloor))
      fail(ErrorKind::kDegenerateClass, "class " + std::to_string(j) + " has probability " +
                                            std::to_string(probs[j]));
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorKind::kInvalidArgument, std::string(what) + " must lie in [0,1]");
}

void check_class_row(const std::vector<double>& p, std::size_t J) {
  if (p.size() != J) fail(ErrorKind::kInvalidArgument, "rows disagree on the number of classes");
  double s = 0.0;
  for (double v : p) {
    check_probability(v, "class probability");
    s += v;
  }
  if (std::abs(s - 1.0) > kRowSumTol)
    fail(ErrorKind::kInvalidArgument, "per-row class probabilities sum to " + std::to_string(s));
}

double ratio(double num, double den) {
  if (!(den > kDenominatorFloor))
    fail(ErrorKind::kDegenerateDenominator, "ratio denominator " + std::to_string(den));
  return num / den;
}

}  // namespace

// ---------------------------------------------------------------- linear projection

LinearProjectionModel::LinearProjectionModel(std::vector<LinearProjectionRow> rows,
                                             LinearProjectionOptions options,
                                             std::optional<Eigen::MatrixXd> moment,
                                             std::optional<Eigen::VectorXd> cross_moment)
    : rows_(std::move(rows)), options_(options) {
  if (rows_.empty()) fail(ErrorKind::kInvalidArgument, "linear projection model needs rows");
  if (options_.gaussian_atoms == 0) fail(ErrorKind::kInvalidArgument, "gaussian_atoms must be >= 1");
  dx_ = static_cast<std::size_t>(rows_.front().x.size());
  d0_ = y0_dimension(rows_.front().y0);
  if (d0_ == 0) fail(ErrorKind::kInvalidArgument, "Y0 must have dimension >= 1");

  std::vector<double> w;
  for (auto& r : rows_) {
    if (static_cast<std::size_t>(r.x.size()) != dx_ || y0_dimension(r.y0) != d0_)
      fail(ErrorKind::kInvalidArgument, "rows disagree on dimensions");
    if (auto* g = std::get_if<GaussianVector>(&r.y0)) {
      if (static_cast<std::size_t>(g->cov.rows()) != d0_ || static_cast<std::size_t>(g->cov.cols()) != d0_)
        fail(ErrorKind::kInvalidArgument, "Y0 covariance has the wrong shape");
      check_moment_matrix(g->cov);
    } else {
      auto& c = std::get<AtomCloud>(r.y0);
      if (c.probs.size() != c.values.rows() || c.values.rows() == 0)
        fail(ErrorKind::kInvalidArgument, "Y0 atoms and probabilities disagree");
      std::vector<double> p(c.probs.data(), c.probs.data() + c.probs.size());
      normalize_weights(p, "Y0 atom probabilities");
      c.probs = Eigen::Map<Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
    }
    if (const auto* g = std::get_if<GaussianSpec>(&r.y1); g && !(g->sd >= 0.0))
      fail(ErrorKind::kInvalidArgument, "Y1 sd must be >= 0");
    w.push_back(r.weight);
  }
  normalize_weights(w, "linear projection rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].weight = w[i];

  const std::size_t k = d0_ + dx_;
  if (moment) {
    if (static_cast<std::size_t>(moment->rows()) != k || static_cast<std::size_t>(moment->cols()) != k)
      fail(ErrorKind::kInvalidArgument, "moment matrix has the wrong shape");
    M_ = *moment;
  } else {
    M_ = Eigen::MatrixXd::Zero(k, k);
    for (const auto& r : rows_) {
      const auto [yy, y] = y0_moments(r.y0);
      M_.topLeftCorner(d0_, d0_) += r.weight * yy;
      M_.topRightCorner(d0_, dx_) += r.weight * y * r.x.transpose();
      M_.bottomRightCorner(dx_, dx_) += r.weight * r.x * r.x.transpose();
    }
    M_.bottomLeftCorner(dx_, d0_) = M_.topRightCorner(d0_, dx_).transpose();
  }
  check_moment_matrix(M_);
  if (cross_moment) {
    if (static_cast<std::size_t>(cross_moment->size()) != dx_)
      fail(ErrorKind::kInvalidArgument, "cross moment has the wrong length");
    ey1x_ = *cross_moment;
  } else {
    ey1x_ = Eigen::VectorXd::Zero(dx_);
    for (const auto& r : rows_) ey1x_ += r.weight * y1_mean(r.y1) * r.x;
  }
}

LinearProjectionModel LinearProjectionModel::with_options(LinearProjectionOptions options) const {
  LinearProjectionModel copy = *this;
  if (options.gaussian_atoms == 0) fail(ErrorKind::kInvalidArgument, "gaussian_atoms must be >= 1");
  copy.options_ = options;
  return copy;
}

double LinearProjectionModel::comonotone_term(const Eigen::VectorXd& t0) const {
  if (static_cast<std::size_t>(t0.size()) != d0_)
    fail(ErrorKind::kInvalidArgument, "t0 has the wrong length");
  if (t0.isZero(0.0)) return 0.0;
  const std::size_t n = options_.gaussian_atoms;
  double total = 0.0;
  for (const auto& r : rows_) {
    double term;
    const auto* gy1 = std::get_if<GaussianSpec>(&r.y1);
    if (const auto* g = std::get_if<GaussianVector>(&r.y0)) {
      const double mv = t0.dot(g->mean);
      const double sv = std::sqrt(std::max(t0.dot(g->cov * t0), 0.0));
      if (gy1 && options_.analytic_gaussian) {
        term = mv * gy1->mean + sv * gy1->sd;
      } else {
        const DiscreteDist v = discretize_gaussian({mv, sv}, n);
        term = gy1 ? comonotone_integral(v, discretize_gaussian(*gy1, n))
                   : comonotone_integral(v, std::get<DiscreteDist>(r.y1));
      }
    } else {
      const auto& c = std::get<AtomCloud>(r.y0);
      const Eigen::VectorXd proj = c.values * t0;
      std::vector<Atom> atoms(static_cast<std::size_t>(proj.size()));
      for (Eigen::Index i = 0; i < proj.size(); ++i) atoms[i] = {proj(i), c.probs(i)};
      const DiscreteDist v = make_discrete(std::move(atoms));
      term = gy1 ? comonotone_integral(v, discretize_gaussian(*gy1, n))
                 : comonotone_integral(v, std::get<DiscreteDist>(r.y1));
    }
    total += r.weight * term;
  }
  return total;
}

namespace {

// Comonotone integral of the law putting mass p[order[k]] at v[order[k]]
// (ascending in k) against w.
double comonotone_sorted(const Eigen::VectorXd& v, const Eigen::VectorXd& p,
                         const std::vector<Eigen::Index>& order, const DiscreteDist& w) {
  const auto aw = w.atoms();
  std::size_t k = 0;
  std::size_t i = 0;
  double cum_v = p(order[0]);
  double cum_w = aw[0].prob;
  double u = 0.0;
  double total = 0.0;
  const std::size_t n = order.size();
  while (k < n && i < aw.size()) {
    const double end = std::min(cum_v, cum_w);
    if (end > u) {
      total += v(order[k]) * aw[i].value * (end - u);
      u = end;
    }
    const bool adv_v = cum_v <= cum_w;
    const bool adv_w = cum_w <= cum_v;
    if (adv_v && ++k < n) cum_v += p(order[k]);
    if (adv_w && ++i < aw.size()) cum_w += aw[i].prob;
  }
  if (u < 1.0) total += v(order[n - 1]) * aw.back().value * (1.0 - u);
  return total;
}

}  // namespace

std::vector<double> LinearProjectionModel::comonotone_terms(
    const std::vector<Eigen::VectorXd>& t0s) const {
  std::vector<double> out(t0s.size(), 0.0);
  for (const auto& t0 : t0s)
    if (static_cast<std::size_t>(t0.size()) != d0_)
      fail(ErrorKind::kInvalidArgument, "t0 has the wrong length");
  for (const auto& r : rows_) {
    const auto* cloud = std::get_if<AtomCloud>(&r.y0);
    if (!cloud) {
      LinearProjectionModel single = *this;
      single.rows_ = {r};
      single.rows_[0].weight = 1.0;
      for (std::size_t d = 0; d < t0s.size(); ++d) out[d] += r.weight * single.comonotone_term(t0s[d]);
      continue;
    }
    const DiscreteDist w = std::holds_alternative<GaussianSpec>(r.y1)
                               ? discretize_gaussian(std::get<GaussianSpec>(r.y1), options_.gaussian_atoms)
                               : std::get<DiscreteDist>(r.y1);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(cloud->values.rows()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    bool first = true;
    for (std::size_t d = 0; d < t0s.size(); ++d) {
      if (t0s[d].isZero(0.0)) continue;
      const Eigen::VectorXd proj = cloud->values * t0s[d];
      const auto less = [&](Eigen::Index a, Eigen::Index b) {
        return proj(a) < proj(b) || (proj(a) == proj(b) && a < b);
      };
      if (first) {
        std::sort(order.begin(), order.end(), less);
        first = false;
      } else {
        // Insertion sort: cheap when the previous direction was close.
        for (std::size_t k = 1; k < order.size(); ++k) {
          const Eigen::Index key = order[k];
          std::size_t m = k;
          while (m > 0 && less(key, order[m - 1])) {
            order[m] = order[m - 1];
            --m;
          }
          order[m] = key;
        }
      }
      out[d] += r.weight * comonotone_sorted(proj, cloud->probs, order, w);
    }
  }
  return out;
}

Halfspace lp_halfspace(const LinearProjectionModel& model, const Eigen::VectorXd& t) {
  const std::size_t d0 = model.d0();
  if (static_cast<std::size_t>(t.size()) != d0 + model.dx())
    fail(ErrorKind::kInvalidArgument, "direction has the wrong length");
  Halfspace h;
  h.normal = model.moment() * t;
  h.offset = model.comonotone_term(t.head(d0)) + t.tail(model.dx()).dot(model.cross_moment());
  return h;
}

double lp_support(const LinearProjectionModel& model, const Eigen::VectorXd& q) {
  const std::size_t d0 = model.d0();
  if (static_cast<std::size_t>(q.size()) != d0 + model.dx())
    fail(ErrorKind::kInvalidArgument, "direction has the wrong length");
  const double cond = condition_number(model.moment());
  if (!(cond <= kConditionLimit))
    fail(ErrorKind::kSingularMoment,
         "moment matrix condition number " + std::to_string(cond) +
             " exceeds 1e12; use halfspace filtering (set command) instead");
  const Eigen::VectorXd v = model.moment().ldlt().solve(q);
  return model.comonotone_term(v.head(d0)) + v.tail(model.dx()).dot(model.cross_moment());
}

namespace {

struct Profile {
  Eigen::MatrixXd schur;   // M00 - M0X MXX^-1 MX0
  Eigen::VectorXd shift;   // M0X MXX^-1 E[Y1 X]
  Eigen::MatrixXd gain;    // MXX^-1 MX0
  Eigen::VectorXd base;    // MXX^-1 E[Y1 X]
};

Profile profile(const LinearProjectionModel& model) {
  const auto d0 = static_cast<Eigen::Index>(model.d0());
  const auto dx = static_cast<Eigen::Index>(model.dx());
  const Eigen::MatrixXd& M = model.moment();
  Profile p;
  if (dx == 0) {
    p.schur = M;
    p.shift = Eigen::VectorXd::Zero(d0);
    p.gain = Eigen::MatrixXd::Zero(0, d0);
    p.base = Eigen::VectorXd::Zero(0);
    return p;
  }
  const Eigen::MatrixXd Mxx = M.bottomRightCorner(dx, dx);
  if (!(condition_number(Mxx) <= kConditionLimit))
    fail(ErrorKind::kSingularMoment, "covariate second-moment block is singular");
  const auto ldlt = Mxx.ldlt();
  p.gain = ldlt.solve(M.bottomLeftCorner(dx, d0));
  p.base = ldlt.solve(model.cross_moment());
  p.schur = M.topLeftCorner(d0, d0) - M.topRightCorner(d0, dx) * p.gain;
  p.schur = 0.5 * (p.schur + p.schur.transpose());
  p.shift = M.topRightCorner(d0, dx) * p.base;
  return p;
}

}  // namespace

std::optional<Halfspace> lp_profiled_halfspace(const LinearProjectionModel& model,
                                               const Eigen::VectorXd& t0) {
  if (static_cast<std::size_t>(t0.size()) != model.d0())
    fail(ErrorKind::kInvalidArgument, "t0 has the wrong length");
  const Profile p = profile(model);
  Halfspace h;
  h.normal = p.schur * t0;
  const double scale = std::max(1.0, p.schur.cwiseAbs().maxCoeff()) * t0.norm();
  if (h.normal.norm() <= 1e-12 * scale) return std::nullopt;
  h.offset = model.comonotone_term(t0) - t0.dot(p.shift);
  return h;
}

std::vector<std::optional<Halfspace>> lp_profiled_halfspaces(const LinearProjectionModel& model,
                                                             const std::vector<Eigen::VectorXd>& t0s) {
  const Profile p = profile(model);
  const std::vector<double> terms = model.comonotone_terms(t0s);
  const double scale = std::max(1.0, p.schur.cwiseAbs().maxCoeff());
  std::vector<std::optional<Halfspace>> out(t0s.size());
  for (std::size_t d = 0; d < t0s.size(); ++d) {
    Halfspace h;
    h.normal = p.schur * t0s[d];
    if (h.normal.norm() <= 1e-12 * scale * t0s[d].norm()) continue;
    h.offset = terms[d] - t0s[d].dot(p.shift);
    out[d] = std::move(h);
  }
  return out;
}

Eigen::VectorXd lp_profiled_beta(const LinearProjectionModel& model, const Eigen::VectorXd& alpha) {
  if (static_cast<std::size_t>(alpha.size()) != model.d0())
    fail(ErrorKind::kInvalidArgument, "alpha has the wrong length");
  const Profile p = profile(model);
  return p.base - p.gain * alpha;
}

// ---------------------------------------------------------------- demographic disparity

DdModel::DdModel(std::vector<DdRow> rows, std::optional<std::vector<double>> class_probs)
    : rows_(std::move(rows)) {
  if (rows_.empty()) fail(ErrorKind::kInvalidArgument, "DD model needs rows");
  const std::size_t J = rows_.front().p_class.size();
  if (J < 2) fail(ErrorKind::kInvalidArgument, "DD model needs at least two classes");
  std::vector<double> w;
  for (const auto& r : rows_) {
    check_probability(r.p_y1, "Pr(Y1=1|x)");
    check_class_row(r.p_class, J);
    w.push_back(r.weight);
  }
  normalize_weights(w, "DD rows");
  class_probs_.assign(J, 0.0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].weight = w[i];
    for (std::size_t j = 0; j < J; ++j) class_probs_[j] += w[i] * rows_[i].p_class[j];
  }
  if (class_probs) {
    if (class_probs->size() != J) fail(ErrorKind::kInvalidArgument, "class_probs has the wrong length");
    for (std::size_t j = 0; j < J; ++j)
      if (std::abs((*class_probs)[j] - class_probs_[j]) > 1e-10)
        fail(ErrorKind::kInvalidArgument,
             "class_probs disagree with the row mixture at class " + std::to_string(j));
    class_probs_ = *class_probs;
  }
}

Eigen::MatrixXd DisparityMatrix::dense() const {
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pairs.size()),
                                            static_cast<Eigen::Index>(classes));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    E(k, pairs[k].first) = 1.0;
    E(k, pairs[k].second) = -1.0;
  }
  return E;
}

std::vector<double> DisparityMatrix::transpose_times(const std::vector<double>& p) const {
  if (p.size() != pairs.size()) fail(ErrorKind::kInvalidArgument, "direction length must equal rows of E");
  std::vector<double> q(classes, 0.0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    q[pairs[k].first] += p[k];
    q[pairs[k].second] -= p[k];
  }
  return q;
}

DisparityMatrix DisparityMatrix::single(std::size_t classes, std::size_t j, std::size_t j_dag) {
  if (j >= classes || j_dag >= classes || j == j_dag)
    fail(ErrorKind::kInvalidArgument, "contrast needs two distinct valid classes");
  return {classes, {{j, j_dag}}};
}

DisparityMatrix DisparityMatrix::against_last(std::size_t classes) {
  DisparityMatrix E{classes, {}};
  for (std::size_t j = 0; j + 1 < classes; ++j) E.pairs.emplace_back(j, classes - 1);
  return E;
}

double dd_support(const DdModel& model, const DisparityMatrix& E, const std::vector<double>& p) {
  if (E.classes != model.classes()) fail(ErrorKind::kInvalidArgument, "E has the wrong number of columns");
  const auto& pi = model.class_probs();
  check_class_probs(pi);
  const std::vector<double> q = E.transpose_times(p);
  const std::size_t J = q.size();
  std::vector<double> scaled(J);
  for (std::size_t j = 0; j < J; ++j) scaled[j] = q[j] / pi[j];
  double total = 0.0;
  std::vector<Atom> atoms(J);
  for (const auto& r : model.rows()) {
    for (std::size_t j = 0; j < J; ++j) atoms[j] = {scaled[j], r.p_class[j]};
    const DiscreteDist dq = make_discrete(atoms);
    total += r.weight * comonotone_integral(DiscreteDist::bernoulli(r.p_y1), dq);
  }
  return total;
}

ThetaBounds dd_theta_bounds(const DdModel& model) {
  const auto& pi = model.class_probs();
  check_class_probs(pi);
  const std::size_t J = model.classes();
  ThetaBounds b{std::vector<double>(J, 0.0), std::vector<double>(J, 0.0)};
  for (const auto& r : model.rows())
    for (std::size_t j = 0; j < J; ++j) {
      const auto [lo, hi] = frechet_bounds(r.p_y1, r.p_class[j]);
      b.lower[j] += r.weight * lo;
      b.upper[j] += r.weight * hi;
    }
  for (std::size_t j = 0; j < J; ++j) {
    b.lower[j] /= pi[j];
    b.upper[j] /= pi[j];
  }
  return b;
}

std::pair<double, double> dd_interval(const DdModel& model, std::size_t j, std::size_t j_dag) {
  if (j == j_dag || j >= model.classes() || j_dag >= model.classes())
    fail(ErrorKind::kInvalidArgument, "dd_interval needs two distinct valid classes");
  const ThetaBounds b = dd_theta_bounds(model);
  return {b.lower[j] - b.upper[j_dag], b.upper[j] - b.lower[j_dag]};
}

// ---------------------------------------------------------------- true-positive rate disparity

TprdModel::TprdModel(std::vector<TprdRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) fail(ErrorKind::kInvalidArgument, "TPRD model needs rows");
  classes_ = rows_.front().p_class.size();
  if (classes_ < 1) fail(ErrorKind::kInvalidArgument, "TPRD model needs classes");
  std::vector<double> w;
  for (const auto& r : rows_) {
    check_probability(r.p_s1_r1, "Pr(Y1s=1,Y1r=1|x)");
    check_probability(r.p_s0_r1, "Pr(Y1s=0,Y1r=1|x)");
    if (r.p_s1_r1 + r.p_s0_r1 > 1.0 + 1e-12)
      fail(ErrorKind::kInvalidArgument, "Pr(Y1r=1|x) exceeds one");
    check_class_row(r.p_class, classes_);
    w.push_back(r.weight);
  }
  normalize_weights(w, "TPRD rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].weight = w[i];
}

std::array<double, 2> tprd_totals(const TprdModel& model) {
  std::array<double, 2> t{0.0, 0.0};
  for (const auto& r : model.rows()) {
    t[0] += r.weight * r.p_s1_r1;
    t[1] += r.weight * r.p_s0_r1;
  }
  return t;
}

Eigen::VectorXd tprd_project(const TprdModel& model, const Eigen::VectorXd& theta) {
  const std::size_t J = model.classes();
  if (static_cast<std::size_t>(theta.size()) != 2 * J) fail(ErrorKind::kInvalidArgument, "theta must have length 2J");
  const auto totals = tprd_totals(model);
  Eigen::VectorXd out = theta;
  for (std::size_t s = 0; s < 2; ++s) {
    double sum = 0.0;
    for (std::size_t j = 0; j < J; ++j) sum += theta(2 * j + s);
    const double shift = (sum - totals[s]) / static_cast<double>(J);
    for (std::size_t j = 0; j < J; ++j) out(2 * j + s) -= shift;
  }
  return out;
}

PartialOtInstance tprd_instance(const TprdRow& row, const std::vector<double>& q) {
  const std::size_t J = row.p_class.size();
  if (q.size() != 2 * J) fail(ErrorKind::kInvalidArgument, "TPRD direction must have length 2J");
  PartialOtInstance inst;
  inst.pi = {std::vector<double>(J), std::vector<double>(J)};
  for (std::size_t j = 0; j < J; ++j) {
    inst.pi[1][j] = -q[2 * j];
    inst.pi[0][j] = -q[2 * j + 1];
  }
  inst.gamma1 = {row.p_s0_r1, row.p_s1_r1};
  inst.gamma0 = row.p_class;
  return inst;
}

double tprd_theta_support(const TprdModel& model, const std::vector<double>& q) {
  double total = 0.0;
  for (const auto& r : model.rows()) total -= r.weight * solve_dream(tprd_instance(r, q)).cost;
  return total;
}

ThetaBounds tprd_theta_bounds(const TprdModel& model) {
  const std::size_t J = model.classes();
  ThetaBounds b{std::vector<double>(2 * J, 0.0), std::vector<double>(2 * J, 0.0)};
  for (const auto& r : model.rows())
    for (std::size_t j = 0; j < J; ++j) {
      const auto [lo1, hi1] = frechet_bounds(r.p_s1_r1, r.p_class[j]);
      const auto [lo0, hi0] = frechet_bounds(r.p_s0_r1, r.p_class[j]);
      b.lower[2 * j] += r.weight * lo1;
      b.upper[2 * j] += r.weight * hi1;
      b.lower[2 * j + 1] += r.weight * lo0;
      b.upper[2 * j + 1] += r.weight * hi0;
    }
  return b;
}

std::vector<double> tprd_map(const std::vector<double>& theta,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& [j, jd] : pairs) {
    if (2 * std::max(j, jd) + 1 >= theta.size())
      fail(ErrorKind::kInvalidArgument, "class index outside theta");
    out.push_back(ratio(theta[2 * j], theta[2 * j] + theta[2 * j + 1]) -
                  ratio(theta[2 * jd], theta[2 * jd] + theta[2 * jd + 1]));
  }
  return out;
}

std::pair<double, double> tprd_interval(const TprdModel& model, std::size_t j, std::size_t j_dag) {
  if (j == j_dag || j >= model.classes() || j_dag >= model.classes())
    fail(ErrorKind::kInvalidArgument, "tprd_interval needs two distinct valid classes");
  const ThetaBounds b = tprd_theta_bounds(model);
  const auto& L = b.lower;
  const auto& U = b.upper;
  const std::size_t a = 2 * j;
  const std::size_t c = 2 * j_dag;
  const double upper = ratio(U[a], U[a] + L[a + 1]) - ratio(L[c], L[c] + U[c + 1]);
  const double lower = ratio(L[a], L[a] + U[a + 1]) - ratio(U[c], U[c] + L[c + 1]);
  return {lower, upper};
}

// ---------------------------------------------------------------- supermodular expectations

std::pair<double, double> supermodular_interval(const std::function<double(double, double)>& h,
                                                const ConditionalLawTable& table) {
  double lower = 0.0;
  double upper = 0.0;
  for (const auto& r : table.rows()) {
    lower += r.weight * coupled_integral(r.law1, r.law0, h, true);
    upper += r.weight * coupled_integral(r.law1, r.law0, h, false);
  }
  return {lower, upper};
}

}  // namespace otid
