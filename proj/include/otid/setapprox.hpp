#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace otid {

/// normal . theta <= offset
struct Halfspace {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

struct IdentifiedSetApprox {
  std::size_t dimension = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<Eigen::VectorXd> candidates;
  std::vector<bool> accepted;
  double tolerance = 1e-9;
};

inline constexpr double kDefaultAcceptTol = 1e-9;

/// n unit vectors, normalized Gaussian draws. For d = 1 the values are +-1.
std::vector<Eigen::VectorXd> sample_sphere(std::size_t d, std::size_t n, std::uint64_t seed);

/// n unit vectors in dimension d0 + dx whose first d0 entries have at most
/// one nonzero. The kept coordinate is chosen uniformly; d0 = 1 delegates
/// to sample_sphere.
std::vector<Eigen::VectorXd> restricted_directions(std::size_t d0, std::size_t dx, std::size_t n,
                                                   std::uint64_t seed);

/// Marks each candidate that satisfies every halfspace within `tol`.
/// Throws InvalidArgument on dimension mismatch.
IdentifiedSetApprox filter_candidates(std::vector<Eigen::VectorXd> candidates,
                                      std::vector<Halfspace> halfspaces,
                                      double tol = kDefaultAcceptTol);

std::size_t accepted_count(const IdentifiedSetApprox& approx);
std::vector<Eigen::VectorXd> accepted_points(const IdentifiedSetApprox& approx);

/// Area of the convex hull of the accepted points; nullopt when d != 2.
/// Throws EmptySet when nothing is accepted.
std::optional<double> hull_area_2d(const IdentifiedSetApprox& approx);

/// (min, max) of c . theta over accepted points. Throws EmptySet.
std::pair<double, double> functional_interval(const IdentifiedSetApprox& approx,
                                              const Eigen::VectorXd& c);

/// Counterclockwise monotone-chain hull; collinear points are dropped.
std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> points);
double polygon_area(const std::vector<Eigen::Vector2d>& polygon);

/// Axis-aligned box as (lo, hi) per coordinate.
using Box = std::vector<std::pair<double, double>>;

std::vector<Eigen::VectorXd> uniform_in_box(const Box& box, std::size_t n, std::uint64_t seed);
/// Regular nx-by-ny lattice including the box corners (2-D boxes only).
std::vector<Eigen::VectorXd> grid_in_box(const Box& box, std::size_t nx, std::size_t ny);

/// Exact intersection of a 2-D box with halfspaces (Sutherland-Hodgman).
/// Returns the polygon's vertices in counterclockwise order; empty if the
/// intersection is empty.
std::vector<Eigen::Vector2d> clip_polygon(const Box& box, const std::vector<Halfspace>& halfspaces);

/// Bounding box of a polygon enlarged by `margin` times its extent per axis.
Box bounding_box(const std::vector<Eigen::Vector2d>& polygon, double margin);

}  // namespace otid
