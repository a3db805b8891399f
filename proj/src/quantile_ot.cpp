#include "otid/quantile_ot.hpp"

#include <algorithm>

#include "otid/errors.hpp"

namespace otid {

namespace {

constexpr double kMinSegment = 1e-15;

// Sweeps the merged breakpoints of both step functions and calls
// f(value_v, value_w, segment_length) once per nonempty segment. With
// `reversed` the second law is walked from its top atom down, which is the
// step function u -> F_W^{-1}(1-u).
template <typename F>
void sweep(const DiscreteDist& v, const DiscreteDist& w, bool reversed, F&& f) {
  const auto av = v.atoms();
  const auto aw = w.atoms();
  const std::size_t nv = av.size();
  const std::size_t nw = aw.size();
  std::size_t i = 0;
  std::size_t k = 0;
  double cum_v = av[0].prob;
  double cum_w = reversed ? aw[nw - 1].prob : aw[0].prob;
  double u = 0.0;
  while (i < nv && k < nw) {
    const double wv = reversed ? aw[nw - 1 - k].value : aw[k].value;
    const double end = std::min(cum_v, cum_w);
    if (end - u >= kMinSegment) f(av[i].value, wv, end - u);
    if (end > u) u = end;
    // Advance whichever step ends first; both when they coincide.
    const bool adv_v = cum_v <= cum_w;
    const bool adv_w = cum_w <= cum_v;
    if (adv_v && ++i < nv) cum_v += av[i].prob;
    if (adv_w && ++k < nw) cum_w += reversed ? aw[nw - 1 - k].prob : aw[k].prob;
  }
  // Rounding can leave a sliver past the shorter cumulative sum; attribute it
  // to the last atoms so that total length is 1.
  if (1.0 - u >= kMinSegment) {
    const double wv = reversed ? aw[0].value : aw[nw - 1].value;
    f(av[nv - 1].value, wv, 1.0 - u);
  }
}

}  // namespace

StepQuantile to_step_quantile(const DiscreteDist& d) {
  StepQuantile q;
  q.steps.reserve(d.size());
  double cum = 0.0;
  for (const Atom& a : d.atoms()) {
    cum += a.prob;
    q.steps.push_back({cum, a.value});
  }
  if (!q.steps.empty()) q.steps.back().u_upper = 1.0;
  return q;
}

double comonotone_integral(const DiscreteDist& v, const DiscreteDist& w) {
  double total = 0.0;
  sweep(v, w, false, [&](double a, double b, double len) { total += a * b * len; });
  return total;
}

double antitone_integral(const DiscreteDist& v, const DiscreteDist& w) {
  double total = 0.0;
  sweep(v, w, true, [&](double a, double b, double len) { total += a * b * len; });
  return total;
}

double coupled_integral(const DiscreteDist& v, const DiscreteDist& w,
                        const std::function<double(double, double)>& h, bool reversed) {
  double total = 0.0;
  sweep(v, w, reversed, [&](double a, double b, double len) { total += h(a, b) * len; });
  return total;
}

std::pair<double, double> frechet_bounds(double pA, double pB) {
  if (!(pA >= 0.0 && pA <= 1.0 && pB >= 0.0 && pB <= 1.0))
    fail(ErrorKind::kInvalidArgument, "frechet_bounds needs probabilities in [0,1]");
  return {std::max(pA + pB - 1.0, 0.0), std::min(pA, pB)};
}

}  // namespace otid
