#include "otid/setapprox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "otid/errors.hpp"
#include "otid/random.hpp"

namespace otid {

std::vector<Eigen::VectorXd> sample_sphere(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d == 0) fail(ErrorKind::kInvalidArgument, "sample_sphere needs d >= 1");
  Rng rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  while (out.size() < n) {
    Eigen::VectorXd v(d);
    for (std::size_t k = 0; k < d; ++k) v(k) = rng.normal();
    const double norm = v.norm();
    if (norm < 1e-300) continue;
    out.push_back(v / norm);
  }
  return out;
}

std::vector<Eigen::VectorXd> restricted_directions(std::size_t d0, std::size_t dx, std::size_t n,
                                                   std::uint64_t seed) {
  if (d0 == 0) fail(ErrorKind::kInvalidArgument, "restricted_directions needs d0 >= 1");
  if (d0 == 1) return sample_sphere(1 + dx, n, seed);
  Rng rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  while (out.size() < n) {
    Eigen::VectorXd v(d0 + dx);
    for (std::size_t k = 0; k < d0 + dx; ++k) v(k) = rng.normal();
    const std::size_t keep = static_cast<std::size_t>(rng.bits() % d0);
    for (std::size_t k = 0; k < d0; ++k)
      if (k != keep) v(k) = 0.0;
    const double norm = v.norm();
    if (norm < 1e-300) continue;
    out.push_back(v / norm);
  }
  return out;
}

IdentifiedSetApprox filter_candidates(std::vector<Eigen::VectorXd> candidates,
                                      std::vector<Halfspace> halfspaces, double tol) {
  IdentifiedSetApprox out;
  out.dimension = !candidates.empty()   ? static_cast<std::size_t>(candidates.front().size())
                  : !halfspaces.empty() ? static_cast<std::size_t>(halfspaces.front().normal.size())
                                        : 0;
  for (const auto& c : candidates)
    if (static_cast<std::size_t>(c.size()) != out.dimension)
      fail(ErrorKind::kInvalidArgument, "candidate dimension mismatch");
  for (const auto& h : halfspaces)
    if (static_cast<std::size_t>(h.normal.size()) != out.dimension)
      fail(ErrorKind::kInvalidArgument, "halfspace dimension mismatch");

  out.accepted.assign(candidates.size(), true);
  if (!halfspaces.empty() && !candidates.empty()) {
    Eigen::MatrixXd N(halfspaces.size(), out.dimension);
    Eigen::VectorXd b(halfspaces.size());
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
      N.row(i) = halfspaces[i].normal.transpose();
      b(i) = halfspaces[i].offset + tol;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c)
      out.accepted[c] = ((N * candidates[c]).array() <= b.array()).all();
  }
  out.candidates = std::move(candidates);
  out.halfspaces = std::move(halfspaces);
  out.tolerance = tol;
  return out;
}

std::size_t accepted_count(const IdentifiedSetApprox& approx) {
  return static_cast<std::size_t>(std::count(approx.accepted.begin(), approx.accepted.end(), true));
}

std::vector<Eigen::VectorXd> accepted_points(const IdentifiedSetApprox& approx) {
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < approx.candidates.size(); ++i)
    if (approx.accepted[i]) out.push_back(approx.candidates[i]);
  return out;
}

std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(const std::vector<Eigen::Vector2d>& poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * std::abs(twice);
}

std::optional<double> hull_area_2d(const IdentifiedSetApprox& approx) {
  if (accepted_count(approx) == 0) fail(ErrorKind::kEmptySet, "no candidate was accepted");
  if (approx.dimension != 2) return std::nullopt;
  std::vector<Eigen::Vector2d> pts;
  for (const auto& p : accepted_points(approx)) pts.emplace_back(p(0), p(1));
  return polygon_area(convex_hull_2d(std::move(pts)));
}

std::pair<double, double> functional_interval(const IdentifiedSetApprox& approx,
                                              const Eigen::VectorXd& c) {
  if (static_cast<std::size_t>(c.size()) != approx.dimension)
    fail(ErrorKind::kInvalidArgument, "functional dimension mismatch");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < approx.candidates.size(); ++i) {
    if (!approx.accepted[i]) continue;
    const double v = c.dot(approx.candidates[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo > hi) fail(ErrorKind::kEmptySet, "no candidate was accepted");
  return {lo, hi};
}

std::vector<Eigen::VectorXd> uniform_in_box(const Box& box, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::VectorXd> out(n, Eigen::VectorXd(box.size()));
  for (auto& v : out)
    for (std::size_t k = 0; k < box.size(); ++k) v(k) = rng.uniform(box[k].first, box[k].second);
  return out;
}

std::vector<Eigen::VectorXd> grid_in_box(const Box& box, std::size_t nx, std::size_t ny) {
  if (box.size() != 2) fail(ErrorKind::kInvalidArgument, "grid_in_box needs a 2-D box");
  if (nx < 2 || ny < 2) fail(ErrorKind::kInvalidArgument, "grid needs at least 2 points per axis");
  std::vector<Eigen::VectorXd> out;
  out.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      Eigen::VectorXd v(2);
      v(0) = box[0].first + (box[0].second - box[0].first) * double(i) / double(nx - 1);
      v(1) = box[1].first + (box[1].second - box[1].first) * double(j) / double(ny - 1);
      out.push_back(v);
    }
  return out;
}

std::vector<Eigen::Vector2d> clip_polygon(const Box& box, const std::vector<Halfspace>& halfspaces) {
  if (box.size() != 2) fail(ErrorKind::kInvalidArgument, "clip_polygon needs a 2-D box");
  std::vector<Eigen::Vector2d> poly{{box[0].first, box[1].first},
                                    {box[0].second, box[1].first},
                                    {box[0].second, box[1].second},
                                    {box[0].first, box[1].second}};
  for (const auto& h : halfspaces) {
    if (poly.empty()) break;
    const Eigen::Vector2d n(h.normal(0), h.normal(1));
    std::vector<Eigen::Vector2d> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      const double fa = n.dot(a) - h.offset;
      const double fb = n.dot(b) - h.offset;
      if (fa <= 0.0) next.push_back(a);
      if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) next.push_back(a + (b - a) * (fa / (fa - fb)));
    }
    poly = std::move(next);
  }
  return poly;
}

Box bounding_box(const std::vector<Eigen::Vector2d>& polygon, double margin) {
  if (polygon.empty()) fail(ErrorKind::kEmptySet, "bounding box of an empty polygon");
  double x0 = polygon[0].x(), x1 = x0, y0 = polygon[0].y(), y1 = y0;
  for (const auto& p : polygon) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  }
  const double mx = std::max(margin * (x1 - x0), 1e-6);
  const double my = std::max(margin * (y1 - y0), 1e-6);
  return {{x0 - mx, x1 + mx}, {y0 - my, y1 + my}};
}

}  // namespace otid
