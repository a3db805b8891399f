#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otid/dream.hpp"
#include "otid/measures.hpp"
#include "otid/models.hpp"
#include "otid/random.hpp"

namespace otid {

// Random generators shared by the verify command and the acceptance run.

/// Costs uniform in [-1, 1], column masses uniform then normalized, row
/// masses with total uniform in [0, 1].
PartialOtInstance random_partial_ot(Rng& rng, std::size_t J);

/// Between 1 and max_atoms atoms, values uniform in [-2, 2].
DiscreteDist random_law(Rng& rng, std::size_t max_atoms);

/// nx covariate cells with class probabilities bounded away from zero.
DdModel random_dd_model(Rng& rng, std::size_t J, std::size_t nx);

TprdModel random_tprd_model(Rng& rng, std::size_t J, std::size_t nx);

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  /// Reproducible JSON of the first instance beyond tolerance.
  std::optional<std::string> failure;
  bool passed() const { return !failure; }
};

/// `per_size` instances for each J in [j_min, j_max]. `perturb` is added to
/// row 0 of pi on the solver side only, which shifts the optimum by
/// perturb * gamma1[0]; it exists to exercise the failure path.
SuiteResult verify_dream(std::size_t per_size, std::size_t j_min, std::size_t j_max,
                         std::uint64_t seed, double tol, double perturb = 0.0);

/// Comonotone and antitone integrals against the transport LP.
SuiteResult verify_quantile(std::size_t count, std::size_t max_atoms, std::uint64_t seed, double tol);

/// Closed-form DD support against the per-cell contrast LP, J cycling over
/// [j_min, j_max] with `directions` random directions per model.
SuiteResult verify_dd(std::size_t count, std::size_t j_min, std::size_t j_max, std::size_t directions,
                      std::uint64_t seed, double tol);

/// One pinned instance. When `expected` is given the solver must match it
/// as well as the LP.
SuiteResult verify_fixture(const PartialOtInstance& inst, std::optional<double> expected, double tol,
                           double perturb = 0.0);

std::string instance_to_json(const PartialOtInstance& inst);
PartialOtInstance instance_from_json(const std::string& text);

}  // namespace otid
