#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace otid {

/// One support point of a univariate discrete law.
struct Atom {
  double value;
  double prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A univariate law on finitely many points.
///
/// Atoms are kept sorted by strictly increasing value with probabilities
/// summing to one; the only way to build one is through `make_discrete`
/// (or the named helpers below), which merge, sort and renormalize.
class DiscreteDist {
 public:
  /// Values closer than this are treated as the same atom.
  static constexpr double kMergeTolerance = 1e-12;

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double mean() const;
  double second_moment() const;
  /// Law of a*V for the receiver V; a negative factor reverses atom order.
  DiscreteDist scaled(double factor) const;

  static DiscreteDist dirac(double value);
  static DiscreteDist bernoulli(double p);

  friend bool operator==(const DiscreteDist&, const DiscreteDist&) = default;

 private:
  friend DiscreteDist make_discrete(std::vector<Atom> pairs);
  std::vector<Atom> atoms_;
};

/// Merges equal values, sorts ascending and renormalizes.
/// Throws InvalidDistribution on empty input, negative or non-finite
/// probabilities, or zero total mass.
DiscreteDist make_discrete(std::vector<Atom> pairs);

struct GaussianSpec {
  double mean = 0.0;
  double sd = 1.0;
};

/// Equal-weight discretization of N(mean, sd^2) with n atoms.
///
/// Atom i is the conditional mean of the law on its i-th quantile bin
/// ((i-1)/n, i/n], so atoms are increasing and the mean is preserved exactly.
/// sd = 0 yields a Dirac at the mean. Throws InvalidArgument when n = 0 or
/// sd < 0.
DiscreteDist discretize_gaussian(GaussianSpec spec, std::size_t n);

/// Standardized bin means z_1 < ... < z_n of the rule above (mean 0, sd 1).
/// Cached per n; callers scale them to avoid re-evaluating the normal CDF.
const std::vector<double>& standard_normal_bin_means(std::size_t n);

/// One covariate cell: its weight under the law of X and the two
/// conditional laws observed in the separate samples.
struct ConditionalRow {
  double weight;
  DiscreteDist law1;
  DiscreteDist law0;
  std::optional<std::string> label;
};

/// A weighted covariate grid. Weights are renormalized at construction.
class ConditionalLawTable {
 public:
  explicit ConditionalLawTable(std::vector<ConditionalRow> rows);

  std::span<const ConditionalRow> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<ConditionalRow> rows_;
};

/// Normalizes a weight vector in place; throws InvalidArgument on negative,
/// non-finite, or all-zero weights.
void normalize_weights(std::vector<double>& weights, const char* what);

}  // namespace otid
