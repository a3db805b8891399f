#include "otid/dream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "otid/errors.hpp"

namespace otid {

namespace {

constexpr double kFeasibilityTol = 1e-12;
constexpr double kExcessTol = 1e-12;

std::vector<std::size_t> stable_rank(const std::vector<double>& key) {
  std::vector<std::size_t> idx(key.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return idx;
}

// Greedy fill of `mass` into columns [lo, hi] visited in `order`, capped by
// gamma0. Any rounding residue goes to column `home`.
void fill_row(const std::vector<std::size_t>& order, std::size_t lo, std::size_t hi,
              const std::vector<double>& cap, double mass, std::size_t home,
              std::vector<double>& row) {
  std::fill(row.begin(), row.end(), 0.0);
  double left = mass;
  for (std::size_t j : order) {
    if (left <= 0.0) break;
    if (j < lo || j > hi) continue;
    const double put = std::min(left, cap[j]);
    row[j] = put;
    left -= put;
  }
  if (left > 0.0) row[home] += left;
}

}  // namespace

void validate(const PartialOtInstance& inst) {
  const std::size_t J = inst.columns();
  if (J == 0) fail(ErrorKind::kInvalidArgument, "partial OT instance needs J >= 1");
  if (inst.pi[0].size() != J || inst.pi[1].size() != J)
    fail(ErrorKind::kInvalidArgument, "pi rows must have length J = " + std::to_string(J));
  double total = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    if (!(inst.gamma0[j] >= 0.0) || !std::isfinite(inst.gamma0[j]))
      fail(ErrorKind::kInvalidArgument, "gamma0 entries must be finite and >= 0");
    if (!std::isfinite(inst.pi[0][j]) || !std::isfinite(inst.pi[1][j]))
      fail(ErrorKind::kInvalidArgument, "pi entries must be finite");
    total += inst.gamma0[j];
  }
  for (double g : inst.gamma1)
    if (!(g >= 0.0) || !std::isfinite(g))
      fail(ErrorKind::kInvalidArgument, "gamma1 entries must be finite and >= 0");
  if (total < inst.gamma1[0] + inst.gamma1[1] - kFeasibilityTol)
    fail(ErrorKind::kInfeasible, "sum(gamma0) = " + std::to_string(total) +
                                     " is below gamma1 total " +
                                     std::to_string(inst.gamma1[0] + inst.gamma1[1]));
}

std::pair<std::vector<std::size_t>, PartialOtInstance> canonical_order(
    const PartialOtInstance& inst) {
  const std::size_t J = inst.columns();
  std::vector<double> neg_d(J);
  for (std::size_t j = 0; j < J; ++j) neg_d[j] = inst.pi[0][j] - inst.pi[1][j];
  std::vector<std::size_t> perm = stable_rank(neg_d);

  PartialOtInstance out;
  out.gamma1 = inst.gamma1;
  out.gamma0.resize(J);
  out.pi[0].resize(J);
  out.pi[1].resize(J);
  for (std::size_t k = 0; k < J; ++k) {
    out.gamma0[k] = inst.gamma0[perm[k]];
    out.pi[0][k] = inst.pi[0][perm[k]];
    out.pi[1][k] = inst.pi[1][perm[k]];
  }
  return {std::move(perm), std::move(out)};
}

std::pair<std::size_t, std::size_t> narrow_bracket(const PartialOtInstance& inst) {
  validate(inst);
  const std::size_t J = inst.columns();
  std::size_t jl = J;
  double prefix = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    prefix += inst.gamma0[j];
    if (prefix >= inst.gamma1[0] - kFeasibilityTol) {
      jl = j + 1;
      break;
    }
  }
  std::size_t ju = 1;
  double suffix = 0.0;
  for (std::size_t j = J; j-- > 0;) {
    suffix += inst.gamma0[j];
    if (suffix >= inst.gamma1[1] - kFeasibilityTol) {
      ju = j + 1;
      break;
    }
  }
  if (jl > ju)
    fail(ErrorKind::kInfeasible, "empty pivot bracket (JL=" + std::to_string(jl) +
                                     ", JU=" + std::to_string(ju) + ")");
  return {jl, ju};
}

DreamSolution solve_dream(const PartialOtInstance& input) {
  validate(input);
  auto [perm, inst] = canonical_order(input);
  const std::size_t J = inst.columns();
  const auto [jl, ju] = narrow_bracket(inst);

  const std::vector<std::size_t> order0 = stable_rank(inst.pi[0]);
  const std::vector<std::size_t> order1 = stable_rank(inst.pi[1]);
  const auto& cap = inst.gamma0;

  std::array<std::vector<double>, 2> cur{std::vector<double>(J), std::vector<double>(J)};
  std::array<std::vector<double>, 2> best{std::vector<double>(J), std::vector<double>(J)};
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t best_pivot = jl;

  for (std::size_t pivot = jl; pivot <= ju; ++pivot) {
    const std::size_t jj = pivot - 1;
    fill_row(order0, 0, jj, cap, inst.gamma1[0], jj, cur[0]);
    fill_row(order1, jj, J - 1, cap, inst.gamma1[1], jj, cur[1]);

    double excess = cur[0][jj] + cur[1][jj] - cap[jj];
    if (excess > kExcessTol) {
      // Move mass off column jj into spare capacity of either row, cheapest
      // increment first. The two rows' candidate columns are disjoint.
      std::size_t p0 = 0;
      std::size_t p1 = 0;
      auto next = [&](const std::vector<std::size_t>& order, std::size_t& p, std::size_t lo,
                      std::size_t hi, const std::vector<double>& row) -> std::size_t {
        while (p < order.size()) {
          const std::size_t w = order[p];
          if (w >= lo && w <= hi && w != jj && cap[w] - row[w] > 0.0) return w;
          ++p;
        }
        return J;
      };
      while (excess > kExcessTol) {
        const std::size_t w0 = cur[0][jj] > 0.0 ? next(order0, p0, 0, jj, cur[0]) : J;
        const std::size_t w1 = cur[1][jj] > 0.0 ? next(order1, p1, jj, J - 1, cur[1]) : J;
        if (w0 == J && w1 == J) break;
        const double inc0 = w0 == J ? std::numeric_limits<double>::infinity()
                                    : inst.pi[0][w0] - inst.pi[0][jj];
        const double inc1 = w1 == J ? std::numeric_limits<double>::infinity()
                                    : inst.pi[1][w1] - inst.pi[1][jj];
        const std::size_t i = inc0 <= inc1 ? 0 : 1;
        const std::size_t w = i == 0 ? w0 : w1;
        const double mm = std::min({excess, cap[w] - cur[i][w], cur[i][jj]});
        cur[i][w] += mm;
        cur[i][jj] -= mm;
        excess -= mm;
      }
      if (excess > kExcessTol) continue;
    }

    double cost = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < J; ++j) cost += inst.pi[i][j] * cur[i][j];
    if (cost < best_cost) {
      best_cost = cost;
      best_pivot = pivot;
      best = cur;
    }
  }
  if (!std::isfinite(best_cost)) fail(ErrorKind::kInfeasible, "no feasible pivot in bracket");

  DreamSolution sol;
  sol.pivot = best_pivot;
  sol.bracket = {jl, ju};
  sol.plan = {std::vector<double>(J), std::vector<double>(J)};
  for (std::size_t k = 0; k < J; ++k) {
    sol.plan[0][perm[k]] = best[0][k];
    sol.plan[1][perm[k]] = best[1][k];
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < J; ++j) cost += input.pi[i][j] * sol.plan[i][j];
  sol.cost = cost;
  sol.permutation = std::move(perm);
  return sol;
}

}  // namespace otid
