#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "otid/models.hpp"
#include "otid/setapprox.hpp"

namespace otid {

struct SimOptions {
  std::size_t directions = 2000;
  /// Candidate lattice points per axis.
  std::size_t grid = 200;
  /// Quadrature nodes for X.
  std::size_t x_nodes = 101;
  std::size_t gaussian_atoms = 400;
  /// Monte Carlo draws per X node (second simulation only).
  std::size_t draws_per_node = 2000;
  std::uint64_t seed = 1;
  double tol = kDefaultAcceptTol;
  /// Unbounded sets are clipped to [-clip_limit, clip_limit]^2 when sizing the box.
  double clip_limit = 25.0;
  double margin = 0.1;
  std::optional<Box> box;
};

/// Y0 ~ N(0, [[1, rho], [rho, 1]]) independent of X ~ N(0, 1),
/// Y1 = Y0a + Y0b + X + eps. Covariates are (1, X).
LinearProjectionModel sim1_model(double rho, const SimOptions& opt);

/// X ~ N(0, 4), Y0a = X^2 + eta_a, Y0b = Y0a^2 + eta_b,
/// Y1 = Y0a + 0.2 Y0b + 1 + X + eps. Conditional laws at each X node come
/// from draws_per_node joint draws shared by Y1 and Y0, so the discretized
/// model is the exact law of one joint distribution.
LinearProjectionModel sim2_model(double sigma_a, double sigma_b, const SimOptions& opt);

inline const std::vector<double> kSim1Rhos{0.0, 0.25, 0.5, 0.75, 0.9, 1.0};
inline const std::vector<std::pair<double, double>> kSim2Sigmas{
    {2.0, 40.0}, {2.0, 20.0}, {2.0, 2.0}, {0.5, 20.0}, {0.5, 4.0}, {0.5, 0.1}};

struct PanelResult {
  std::string label;
  Box box;
  Eigen::Vector2d truth;
  IdentifiedSetApprox ours;
  IdentifiedSetApprox restricted;
  /// Candidates accepted by ours but rejected by the restricted family.
  std::size_t containment_violations = 0;
  bool truth_in_ours = false;
  bool truth_in_restricted = false;
  double hull_area_ours = 0.0;
  double hull_area_restricted = 0.0;
  /// Exact area of the halfspace polygon inside the box.
  double polygon_area_ours = 0.0;
  double polygon_area_restricted = 0.0;
  /// Bounds on alpha_a + alpha_b from the t0 = +-(1,1) pair.
  std::pair<double, double> sum_interval{0.0, 0.0};
  /// Points accepted by ours whose alpha_a + alpha_b leaves sum_interval by
  /// more than 1e-8.
  std::size_t sum_violations = 0;
};

/// Profiled halfspaces for the Y0 coefficients. `restricted` gives the
/// +-e_k family; otherwise sampled full-sphere directions plus that family.
std::vector<Halfspace> profiled_halfspaces(const LinearProjectionModel& model, bool restricted,
                                           std::size_t directions, std::uint64_t seed);

PanelResult run_panel(const LinearProjectionModel& model, const Eigen::Vector2d& truth,
                      std::string label, const SimOptions& opt);

}  // namespace otid
