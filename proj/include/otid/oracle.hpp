#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "otid/dream.hpp"

namespace otid {

/// min c'x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x >= 0.
struct LpProblem {
  Eigen::VectorXd objective;
  Eigen::MatrixXd eq_matrix;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ub_matrix;
  Eigen::VectorXd ub_rhs;

  std::size_t variables() const { return static_cast<std::size_t>(objective.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  Eigen::VectorXd point;
};

enum class LpMethod {
  /// Vertex enumeration when the basis count is small, simplex otherwise.
  kAuto,
  /// Enumerate every basis of the standard-form polytope. Guarded by
  /// n <= 24 and at most 40 constraint rows.
  kEnumerate,
  /// Dense two-phase tableau simplex (Dantzig pricing, Bland after stalls).
  kSimplex,
};

/// Throws TooLarge when the chosen method's size guard is exceeded and
/// InvalidArgument on inconsistent dimensions.
LpResult solve_lp_exact(const LpProblem& p, LpMethod method = LpMethod::kAuto);

/// Minimal <cost, plan> over couplings of the two marginals.
/// Throws InvalidArgument when the totals differ by more than 1e-12.
double brute_force_ot(const Eigen::MatrixXd& cost, const Eigen::VectorXd& marg_row,
                      const Eigen::VectorXd& marg_col, LpMethod method = LpMethod::kAuto);

/// Exact minimum of the 2 x J partial transport program.
double brute_force_partial_ot(const PartialOtInstance& inst, LpMethod method = LpMethod::kAuto);

/// One covariate cell of a binary-outcome model.
struct DdCell {
  double p_y1;                   // Pr(Y1 = 1 | x)
  std::vector<double> p_class;   // Pr(Y0 = a_j | x), j = 1..J
};

/// Per-x value of the contrast LP against the last class with direction
/// p (length J-1). Throws DegenerateClass if any class probability is
/// below 1e-12.
double kallus_dd_lp(const std::vector<double>& p, const DdCell& cell,
                    const std::vector<double>& class_probs, LpMethod method = LpMethod::kAuto);

}  // namespace otid
