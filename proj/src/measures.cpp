#include "otid/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "otid/errors.hpp"

namespace otid {

DiscreteDist make_discrete(std::vector<Atom> pairs) {
  if (pairs.empty()) fail(ErrorKind::kInvalidDistribution, "no atoms");
  double total = 0.0;
  for (const Atom& a : pairs) {
    if (!std::isfinite(a.value) || !std::isfinite(a.prob))
      fail(ErrorKind::kInvalidDistribution, "non-finite atom");
    if (a.prob < 0.0)
      fail(ErrorKind::kInvalidDistribution, "negative probability " + std::to_string(a.prob));
    total += a.prob;
  }
  if (!(total > 0.0)) fail(ErrorKind::kInvalidDistribution, "zero total mass");

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Atom& l, const Atom& r) { return l.value < r.value; });

  DiscreteDist d;
  d.atoms_.reserve(pairs.size());
  double group_start = 0.0;
  for (const Atom& a : pairs) {
    if (!d.atoms_.empty() && a.value - group_start <= DiscreteDist::kMergeTolerance) {
      d.atoms_.back().prob += a.prob;
    } else {
      d.atoms_.push_back(a);
      group_start = a.value;
    }
  }
  std::erase_if(d.atoms_, [](const Atom& a) { return a.prob == 0.0; });

  // Renormalizing an already-normalized law would perturb the last bits and
  // break idempotence, so leave sums that are already 1 to rounding alone.
  double sum = 0.0;
  for (const Atom& a : d.atoms_) sum += a.prob;
  if (std::abs(sum - 1.0) > 1e-14) {
    for (Atom& a : d.atoms_) a.prob /= sum;
  }
  return d;
}

double DiscreteDist::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.value * a.prob;
  return m;
}

double DiscreteDist::second_moment() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.value * a.value * a.prob;
  return m;
}

DiscreteDist DiscreteDist::scaled(double factor) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back({a.value * factor, a.prob});
  return make_discrete(std::move(out));
}

DiscreteDist DiscreteDist::dirac(double value) { return make_discrete({{value, 1.0}}); }

DiscreteDist DiscreteDist::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::kInvalidDistribution, "Bernoulli p outside [0,1]");
  return make_discrete({{0.0, 1.0 - p}, {1.0, p}});
}

const std::vector<double>& standard_normal_bin_means(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const boost::math::normal_distribution<double> standard;
  std::vector<double> means(n);
  // Density at the bin edges; the outermost edges are +-inf where it vanishes.
  double left_density = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double right_density = 0.0;
    if (i + 1 < n) {
      const double edge = boost::math::quantile(standard, double(i + 1) / double(n));
      right_density = boost::math::pdf(standard, edge);
    }
    means[i] = double(n) * (left_density - right_density);
    left_density = right_density;
  }
  // Symmetrize so that the law is exactly centred despite rounding in the edges.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (means[n - 1 - i] - means[i]);
    means[i] = -m;
    means[n - 1 - i] = m;
  }
  if (n % 2 == 1) means[n / 2] = 0.0;
  return cache.emplace(n, std::move(means)).first->second;
}

DiscreteDist discretize_gaussian(GaussianSpec spec, std::size_t n) {
  if (n == 0) fail(ErrorKind::kInvalidArgument, "discretize_gaussian needs n >= 1");
  if (!(spec.sd >= 0.0) || !std::isfinite(spec.mean))
    fail(ErrorKind::kInvalidArgument, "Gaussian sd must be >= 0 and mean finite");
  if (spec.sd == 0.0 || n == 1) return DiscreteDist::dirac(spec.mean);
  const auto& z = standard_normal_bin_means(n);
  std::vector<Atom> atoms;
  atoms.reserve(n);
  const double w = 1.0 / double(n);
  for (double zi : z) atoms.push_back({spec.mean + spec.sd * zi, w});
  return make_discrete(std::move(atoms));
}

void normalize_weights(std::vector<double>& weights, const char* what) {
  if (weights.empty()) fail(ErrorKind::kInvalidArgument, std::string(what) + ": empty");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0)
      fail(ErrorKind::kInvalidArgument, std::string(what) + ": weights must be finite and >= 0");
    total += w;
  }
  if (!(total > 0.0)) fail(ErrorKind::kInvalidArgument, std::string(what) + ": zero total weight");
  if (std::abs(total - 1.0) > 1e-14) {
    for (double& w : weights) w /= total;
  }
}

ConditionalLawTable::ConditionalLawTable(std::vector<ConditionalRow> rows) : rows_(std::move(rows)) {
  std::vector<double> w;
  w.reserve(rows_.size());
  for (const auto& r : rows_) w.push_back(r.weight);
  normalize_weights(w, "ConditionalLawTable");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].weight = w[i];
}

}  // namespace otid
