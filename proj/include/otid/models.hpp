#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "otid/dream.hpp"
#include "otid/measures.hpp"
#include "otid/oracle.hpp"
#include "otid/setapprox.hpp"

namespace otid {

// Class indices are 0-based throughout the library.

// ---------------------------------------------------------------- linear projection

struct GaussianVector {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Discrete multivariate law: one row of `values` per atom.
struct AtomCloud {
  Eigen::MatrixXd values;
  Eigen::VectorXd probs;
};

using Y1Law = std::variant<DiscreteDist, GaussianSpec>;
using Y0Law = std::variant<AtomCloud, GaussianVector>;

struct LinearProjectionRow {
  double weight;
  Eigen::VectorXd x;
  Y1Law y1;
  Y0Law y0;
};

struct LinearProjectionOptions {
  /// Atoms per Gaussian law when a quantile integral has to be discretized.
  std::size_t gaussian_atoms = 400;
  /// Use mu_V mu_W + sd_V sd_W when both conditional laws are Gaussian.
  bool analytic_gaussian = true;
};

class LinearProjectionModel {
 public:
  /// Moments default to those of the row table. Throws InvalidArgument on
  /// inconsistent dimensions or a moment matrix that is not symmetric PSD.
  LinearProjectionModel(std::vector<LinearProjectionRow> rows, LinearProjectionOptions options = {},
                        std::optional<Eigen::MatrixXd> moment = std::nullopt,
                        std::optional<Eigen::VectorXd> cross_moment = std::nullopt);

  std::size_t d0() const { return d0_; }
  std::size_t dx() const { return dx_; }
  const Eigen::MatrixXd& moment() const { return M_; }
  const Eigen::VectorXd& cross_moment() const { return ey1x_; }
  const std::vector<LinearProjectionRow>& rows() const { return rows_; }
  const LinearProjectionOptions& options() const { return options_; }
  LinearProjectionModel with_options(LinearProjectionOptions options) const;

  /// Integral over x of the comonotone coupling of t0'Y0|x and Y1|x.
  double comonotone_term(const Eigen::VectorXd& t0) const;
  /// Same for many directions. Atom-cloud rows reuse the previous sort
  /// order, so callers should pass nearby directions consecutively.
  std::vector<double> comonotone_terms(const std::vector<Eigen::VectorXd>& t0s) const;

 private:
  std::vector<LinearProjectionRow> rows_;
  LinearProjectionOptions options_;
  std::size_t d0_ = 0;
  std::size_t dx_ = 0;
  Eigen::MatrixXd M_;
  Eigen::VectorXd ey1x_;
};

/// Halfspace (M t) . theta <= comonotone_term(t0) + tX . E[Y1 X].
Halfspace lp_halfspace(const LinearProjectionModel& model, const Eigen::VectorXd& t);

/// Support function at q; throws SingularMoment when cond(M) > 1e12.
double lp_support(const LinearProjectionModel& model, const Eigen::VectorXd& q);

/// Halfspace in the Y0-coefficient space after eliminating the covariate
/// coefficients, which the t0 = 0 directions pin down exactly. Returns
/// nullopt when the normal vanishes (a direction the set does not bound).
std::optional<Halfspace> lp_profiled_halfspace(const LinearProjectionModel& model,
                                               const Eigen::VectorXd& t0);

/// Covariate coefficients implied by given Y0 coefficients.
/// Batch form of lp_profiled_halfspace.
std::vector<std::optional<Halfspace>> lp_profiled_halfspaces(const LinearProjectionModel& model,
                                                             const std::vector<Eigen::VectorXd>& t0s);

Eigen::VectorXd lp_profiled_beta(const LinearProjectionModel& model, const Eigen::VectorXd& alpha);

// ---------------------------------------------------------------- demographic disparity

struct DdRow {
  double weight;
  double p_y1;                  // Pr(Y1 = 1 | x)
  std::vector<double> p_class;  // Pr(Y0 = a_j | x)
};

class DdModel {
 public:
  /// Throws InvalidArgument if per-row class probabilities do not sum to 1
  /// or if supplied class probabilities disagree with the row mixture.
  explicit DdModel(std::vector<DdRow> rows,
                   std::optional<std::vector<double>> class_probs = std::nullopt);

  std::size_t classes() const { return class_probs_.size(); }
  const std::vector<double>& class_probs() const { return class_probs_; }
  const std::vector<DdRow>& rows() const { return rows_; }

 private:
  std::vector<DdRow> rows_;
  std::vector<double> class_probs_;
};

/// Rows e_plus(j) - e_minus(j'), stored as index pairs.
struct DisparityMatrix {
  std::size_t classes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t rows() const { return pairs.size(); }
  Eigen::MatrixXd dense() const;
  /// E^T p.
  std::vector<double> transpose_times(const std::vector<double>& p) const;

  static DisparityMatrix single(std::size_t classes, std::size_t j, std::size_t j_dag);
  /// Every class against the last one.
  static DisparityMatrix against_last(std::size_t classes);
};

double dd_support(const DdModel& model, const DisparityMatrix& E, const std::vector<double>& p);

struct ThetaBounds {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Per-class bounds on Pr(Y1 = 1 | Y0 = a_j).
ThetaBounds dd_theta_bounds(const DdModel& model);

std::pair<double, double> dd_interval(const DdModel& model, std::size_t j, std::size_t j_dag);

// ---------------------------------------------------------------- true-positive rate disparity

struct TprdRow {
  double weight;
  double p_s1_r1;               // Pr(Y1s = 1, Y1r = 1 | x)
  double p_s0_r1;               // Pr(Y1s = 0, Y1r = 1 | x)
  std::vector<double> p_class;  // Pr(Y0 = a_j | x)
};

class TprdModel {
 public:
  explicit TprdModel(std::vector<TprdRow> rows);

  std::size_t classes() const { return classes_; }
  const std::vector<TprdRow>& rows() const { return rows_; }

 private:
  std::vector<TprdRow> rows_;
  std::size_t classes_ = 0;
};

/// Partial transport data for one row and direction q (length 2J). Entry
/// q[2j] belongs to the (Y1s = 1, class j) coordinate and q[2j+1] to
/// (Y1s = 0, class j).
PartialOtInstance tprd_instance(const TprdRow& row, const std::vector<double>& q);

double tprd_theta_support(const TprdModel& model, const std::vector<double>& q);

/// Fréchet bounds on each of the 2J coordinates, in the order of q above.
ThetaBounds tprd_theta_bounds(const TprdModel& model);

/// Ratio differences for each pair; throws DegenerateDenominator when a
/// referenced theta[2j] + theta[2j+1] is at most 1e-12.
std::vector<double> tprd_map(const std::vector<double>& theta,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Every coupling gives sum_j theta[2j] = Pr(Y1s=1, Y1r=1) and
/// sum_j theta[2j+1] = Pr(Y1s=0, Y1r=1), so the set lies in a codimension-2
/// affine subspace. Returns those two totals.
std::array<double, 2> tprd_totals(const TprdModel& model);

/// Orthogonal projection of theta onto that subspace.
Eigen::VectorXd tprd_project(const TprdModel& model, const Eigen::VectorXd& theta);

std::pair<double, double> tprd_interval(const TprdModel& model, std::size_t j, std::size_t j_dag);

// ---------------------------------------------------------------- supermodular expectations

/// (antitone, comonotone) aggregation of h over the table. The order of the
/// pair is only meaningful when h is supermodular.
std::pair<double, double> supermodular_interval(const std::function<double(double, double)>& h,
                                                const ConditionalLawTable& table);

}  // namespace otid
