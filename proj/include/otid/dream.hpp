#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace otid {

/// 2 x J partial transport data. Row i of `pi` is the cost of sending the
/// source mass gamma1[i] to each of the J sinks; sink j accepts at most
/// gamma0[j].
struct PartialOtInstance {
  std::array<std::vector<double>, 2> pi;
  std::array<double, 2> gamma1{0.0, 0.0};
  std::vector<double> gamma0;

  std::size_t columns() const { return gamma0.size(); }
};

struct DreamSolution {
  double cost = 0.0;
  /// plan[i][j] in the caller's column order.
  std::array<std::vector<double>, 2> plan;
  /// 1-based pivot column J* in canonical order.
  std::size_t pivot = 0;
  /// 1-based (JL, JU) in canonical order.
  std::pair<std::size_t, std::size_t> bracket{0, 0};
  /// permutation[k] = original (0-based) column at canonical position k.
  std::vector<std::size_t> permutation;
};

/// Throws InvalidArgument on ragged or negative input and Infeasible when
/// sum(gamma0) < gamma1[0] + gamma1[1] - 1e-12.
void validate(const PartialOtInstance& inst);

/// Reorders columns so that d(j) = pi(1,j) - pi(0,j) is non-increasing
/// (stable; ties keep original order). Returns the permutation and the
/// reordered instance.
std::pair<std::vector<std::size_t>, PartialOtInstance> canonical_order(
    const PartialOtInstance& inst);

/// 1-based (JL, JU) for an instance already in canonical order.
std::pair<std::size_t, std::size_t> narrow_bracket(const PartialOtInstance& inst);

DreamSolution solve_dream(const PartialOtInstance& inst);

}  // namespace otid
