#include "otid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <json.hpp>

#include "otid/errors.hpp"
#include "otid/oracle.hpp"
#include "otid/quantile_ot.hpp"
#include "otid/setapprox.hpp"

namespace otid {

using nlohmann::json;

namespace {

std::vector<double> random_simplex(Rng& rng, std::size_t n, double floor) {
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) total += (v = rng.uniform(floor, 1.0));
  for (double& v : p) v /= total;
  return p;
}

json law_json(const DiscreteDist& d) {
  json out = json::array();
  for (const Atom& a : d.atoms()) out.push_back({a.value, a.prob});
  return out;
}

json dd_json(const DdModel& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) rows.push_back({{"weight", r.weight}, {"p_y1", r.p_y1}, {"p_class", r.p_class}});
  return {{"type", "dd"}, {"class_probs", m.class_probs()}, {"rows", rows}};
}

void track(SuiteResult& s, double err, const std::function<std::string()>& echo) {
  ++s.instances;
  if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
  s.max_error = std::max(s.max_error, err);
  if (err > s.tolerance && !s.failure) s.failure = echo();
}

}  // namespace

PartialOtInstance random_partial_ot(Rng& rng, std::size_t J) {
  PartialOtInstance inst;
  inst.pi = {std::vector<double>(J), std::vector<double>(J)};
  inst.gamma0.resize(J);
  double total = 0.0;
  for (std::size_t j = 0; j < J; ++j) {
    inst.pi[0][j] = rng.uniform(-1.0, 1.0);
    inst.pi[1][j] = rng.uniform(-1.0, 1.0);
    total += (inst.gamma0[j] = rng.uniform());
  }
  for (double& g : inst.gamma0) g /= total;
  const double a = rng.uniform();
  const double b = rng.uniform();
  const double s = rng.uniform() / (a + b);
  inst.gamma1 = {a * s, b * s};
  return inst;
}

DiscreteDist random_law(Rng& rng, std::size_t max_atoms) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng.bits() % max_atoms);
  std::vector<Atom> atoms(n);
  for (Atom& a : atoms) a = {rng.uniform(-2.0, 2.0), rng.uniform(0.01, 1.0)};
  return make_discrete(std::move(atoms));
}

DdModel random_dd_model(Rng& rng, std::size_t J, std::size_t nx) {
  std::vector<DdRow> rows;
  for (std::size_t i = 0; i < nx; ++i) {
    const double w = rng.uniform(0.1, 1.1);
    const double p = rng.uniform();
    rows.push_back({w, p, random_simplex(rng, J, 0.05)});
  }
  return DdModel(std::move(rows));
}

TprdModel random_tprd_model(Rng& rng, std::size_t J, std::size_t nx) {
  std::vector<TprdRow> rows;
  for (std::size_t i = 0; i < nx; ++i) {
    const double w = rng.uniform(0.1, 1.1);
    const double r1 = rng.uniform(0.05, 1.0);
    const double s = rng.uniform(0.05, 0.95);
    rows.push_back({w, r1 * s, r1 * (1.0 - s), random_simplex(rng, J, 0.05)});
  }
  return TprdModel(std::move(rows));
}

SuiteResult verify_dream(std::size_t per_size, std::size_t j_min, std::size_t j_max, std::uint64_t seed,
                         double tol, double perturb) {
  SuiteResult s{"dream-vs-lp", 0, 0.0, tol, std::nullopt};
  Rng rng(seed);
  for (std::size_t J = j_min; J <= j_max; ++J)
    for (std::size_t k = 0; k < per_size; ++k) {
      const PartialOtInstance inst = random_partial_ot(rng, J);
      PartialOtInstance seen = inst;
      for (double& v : seen.pi[0]) v += perturb;
      const double err = std::abs(solve_dream(seen).cost - brute_force_partial_ot(inst));
      track(s, err, [&] { return instance_to_json(inst); });
    }
  return s;
}

SuiteResult verify_quantile(std::size_t count, std::size_t max_atoms, std::uint64_t seed, double tol) {
  SuiteResult s{"quantile-vs-lp", 0, 0.0, tol, std::nullopt};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const DiscreteDist v = random_law(rng, max_atoms);
    const DiscreteDist w = random_law(rng, max_atoms);
    const auto& av = v.atoms();
    const auto& aw = w.atoms();
    Eigen::MatrixXd cost(av.size(), aw.size());
    Eigen::VectorXd pv(av.size()), pw(aw.size());
    for (std::size_t i = 0; i < av.size(); ++i) pv(i) = av[i].prob;
    for (std::size_t j = 0; j < aw.size(); ++j) pw(j) = aw[j].prob;
    for (std::size_t i = 0; i < av.size(); ++i)
      for (std::size_t j = 0; j < aw.size(); ++j) cost(i, j) = av[i].value * aw[j].value;
    const double co = comonotone_integral(v, w);
    const double anti = antitone_integral(v, w);
    const double lp_max = -brute_force_ot(-cost, pv, pw);
    const double lp_min = brute_force_ot(cost, pv, pw);
    double err = std::max(std::abs(co - lp_max), std::abs(anti - lp_min));
    // The rearrangement ordering is part of the contract.
    if (co < anti - tol) err = std::numeric_limits<double>::infinity();
    track(s, err, [&] { return json{{"v", law_json(v)}, {"w", law_json(w)}}.dump(); });
  }
  return s;
}

SuiteResult verify_dd(std::size_t count, std::size_t j_min, std::size_t j_max, std::size_t directions,
                      std::uint64_t seed, double tol) {
  SuiteResult s{"dd-vs-contrast-lp", 0, 0.0, tol, std::nullopt};
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t J = j_min + k % (j_max - j_min + 1);
    const DdModel m = random_dd_model(rng, J, 3);
    const auto E = DisparityMatrix::against_last(J);
    for (const auto& q : sample_sphere(J - 1, directions, rng.bits())) {
      const std::vector<double> p(q.data(), q.data() + q.size());
      double lp = 0.0;
      for (const auto& r : m.rows()) lp += r.weight * kallus_dd_lp(p, {r.p_y1, r.p_class}, m.class_probs());
      const double err = std::abs(dd_support(m, E, p) - lp);
      track(s, err, [&] { return json{{"model", dd_json(m)}, {"direction", p}}.dump(); });
    }
  }
  return s;
}

SuiteResult verify_fixture(const PartialOtInstance& inst, std::optional<double> expected, double tol,
                           double perturb) {
  SuiteResult s{"fixture", 0, 0.0, tol, std::nullopt};
  PartialOtInstance seen = inst;
  for (double& v : seen.pi[0]) v += perturb;
  const double got = solve_dream(seen).cost;
  double err = std::abs(got - brute_force_partial_ot(inst));
  if (expected) err = std::max(err, std::abs(got - *expected));
  track(s, err, [&] { return instance_to_json(inst); });
  return s;
}

std::string instance_to_json(const PartialOtInstance& inst) {
  return json{{"pi", {inst.pi[0], inst.pi[1]}}, {"gamma1", inst.gamma1}, {"gamma0", inst.gamma0}}.dump();
}

PartialOtInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, std::string("instance: ") + e.what());
  }
  PartialOtInstance inst;
  try {
    const auto& pi = j.at("pi");
    if (!pi.is_array() || pi.size() != 2) fail(ErrorKind::kParse, "field pi: expected two rows");
    inst.pi = {pi[0].get<std::vector<double>>(), pi[1].get<std::vector<double>>()};
    const auto g1 = j.at("gamma1").get<std::vector<double>>();
    if (g1.size() != 2) fail(ErrorKind::kParse, "field gamma1: expected two entries");
    inst.gamma1 = {g1[0], g1[1]};
    inst.gamma0 = j.at("gamma0").get<std::vector<double>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("instance: ") + e.what());
  }
  validate(inst);
  return inst;
}

}  // namespace otid
