#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "otid/measures.hpp"

namespace otid {

/// Left-continuous quantile function of a discrete law, stored as the
/// cumulative probability at the right end of each step and the step value.
struct StepQuantile {
  struct Step {
    double u_upper;
    double value;
    friend bool operator==(const Step&, const Step&) = default;
  };
  std::vector<Step> steps;
};

StepQuantile to_step_quantile(const DiscreteDist& d);

/// Integral over u in (0,1) of F_V^{-1}(u) * F_W^{-1}(u).
double comonotone_integral(const DiscreteDist& v, const DiscreteDist& w);

/// Integral over u in (0,1) of F_V^{-1}(u) * F_W^{-1}(1-u).
double antitone_integral(const DiscreteDist& v, const DiscreteDist& w);

/// Integral over u of h(F_V^{-1}(u), F_W^{-1}(u)), or of
/// h(F_V^{-1}(u), F_W^{-1}(1-u)) when `reversed` is set.
double coupled_integral(const DiscreteDist& v, const DiscreteDist& w,
                        const std::function<double(double, double)>& h, bool reversed);

/// Sharp bounds on P(A and B) given P(A) = pA, P(B) = pB.
/// Throws InvalidArgument unless both lie in [0,1].
std::pair<double, double> frechet_bounds(double pA, double pB);

}  // namespace otid
