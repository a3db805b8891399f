#include "otid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "otid/cli_io.hpp"
#include "otid/dream.hpp"
#include "otid/simulations.hpp"
#include "otid/verify.hpp"

namespace otid {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string command;
  std::string model_path;
  std::uint64_t seed = 1;
  std::size_t directions = 2000;
  std::size_t candidates = 20000;
  bool candidates_set = false;
  std::size_t grid = 101;
  std::optional<double> tol;
  std::string out_dir = "otid_out";
  bool restricted = false;
  bool svg = false;
  bool compare = false;
  std::size_t draws = 2000;
  std::size_t instances = 100;
  std::vector<std::string> fixtures;
  double perturb = 0.0;
};

std::string out_path(const RunConfig& c, const std::string& name) { return (fs::path(c.out_dir) / name).string(); }

void ensure_out_dir(const RunConfig& c) {
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) fail(ErrorKind::kIo, "cannot create " + c.out_dir + ": " + ec.message());
}

void emit(const RunConfig& c, std::ostream& out, const std::string& name, const std::string& content) {
  const std::string path = out_path(c, name);
  write_text_file(path, content);
  out << "wrote " << path << "\n";
}

ModelSpec load_model(const RunConfig& c) {
  if (c.model_path.empty()) fail(ErrorKind::kInvalidArgument, c.command + " needs --model PATH");
  return parse_model(read_text_file(c.model_path));
}

std::vector<double> as_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> with(const Eigen::VectorXd& v, double last) {
  auto out = as_std(v);
  out.push_back(last);
  return out;
}

std::string pair_name(std::pair<std::size_t, std::size_t> p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

double tol_or(const RunConfig& c, double fallback) { return c.tol.value_or(fallback); }

// ---------------------------------------------------------------- support

void support_table(const RunConfig& c, std::ostream& out, const std::vector<Eigen::VectorXd>& dirs,
                   const std::function<double(const Eigen::VectorXd&)>& h) {
  const std::size_t d = dirs.empty() ? 0 : static_cast<std::size_t>(dirs[0].size());
  auto header = numbered("q", d);
  header.push_back("support");
  CsvTable csv(header);
  for (const auto& q : dirs) csv.add(with(q, h(q)));
  emit(c, out, "support.csv", csv.text());
}

void cmd_support(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ModelSpec spec = load_model(c);
  ensure_out_dir(c);
  if (c.restricted && !std::holds_alternative<LinearProjectionSpec>(spec))
    err << "warning: --restricted only applies to linear_projection models\n";

  if (const auto* s = std::get_if<DdSpec>(&spec)) {
    const auto dirs = sample_sphere(s->contrasts.rows(), c.directions, c.seed);
    support_table(c, out, dirs, [&](const Eigen::VectorXd& q) { return dd_support(s->model, s->contrasts, as_std(q)); });
    for (const auto& p : s->contrasts.pairs) {
      const auto [lo, hi] = dd_interval(s->model, p.first, p.second);
      out << "dd interval " << pair_name(p) << ": [" << format_number(lo) << ", " << format_number(hi) << "]\n";
    }
  } else if (const auto* s = std::get_if<TprdSpec>(&spec)) {
    const auto dirs = sample_sphere(2 * s->model.classes(), c.directions, c.seed);
    support_table(c, out, dirs, [&](const Eigen::VectorXd& q) { return tprd_theta_support(s->model, as_std(q)); });
    for (const auto& p : s->pairs) {
      const auto [lo, hi] = tprd_interval(s->model, p.first, p.second);
      out << "tprd interval " << pair_name(p) << ": [" << format_number(lo) << ", " << format_number(hi) << "]\n";
    }
  } else if (const auto* s = std::get_if<LinearProjectionSpec>(&spec)) {
    const std::size_t d0 = s->model.d0(), dx = s->model.dx();
    const auto dirs = c.restricted ? restricted_directions(d0, dx, c.directions, c.seed)
                                   : sample_sphere(d0 + dx, c.directions, c.seed);
    try {
      support_table(c, out, dirs, [&](const Eigen::VectorXd& q) { return lp_support(s->model, q); });
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kSingularMoment)
        err << "hint: the moment matrix is singular, so only halfspaces are available; "
               "run `set` on this model to approximate the set from them\n";
      throw;
    }
  } else if (const auto* s = std::get_if<TableSpec>(&spec)) {
    std::function<double(double, double)> h;
    if (s->h == "product") h = [](double v, double w) { return v * w; };
    if (s->h == "min") h = [](double v, double w) { return std::min(v, w); };
    if (s->h == "sum") h = [](double v, double w) { return v + w; };
    const auto [lo, hi] = supermodular_interval(h, s->table);
    CsvTable csv({"q1", "support"});
    csv.add(std::vector<double>{1.0, hi});
    csv.add(std::vector<double>{-1.0, -lo});
    emit(c, out, "support.csv", csv.text());
    out << "interval: [" << format_number(lo) << ", " << format_number(hi) << "]\n";
  } else {
    fail(ErrorKind::kInvalidArgument, "support needs a model with a support function; halfspace models only work with set");
  }
}

// ---------------------------------------------------------------- set

std::vector<Halfspace> sampled_halfspaces(std::size_t d, std::size_t n, std::uint64_t seed,
                                          const std::function<double(const Eigen::VectorXd&)>& h) {
  std::vector<Halfspace> out;
  for (auto& q : sample_sphere(d, n, seed)) {
    const double offset = h(q);
    out.push_back({std::move(q), offset});
  }
  return out;
}

void write_set(const RunConfig& c, std::ostream& out, const IdentifiedSetApprox& a, const std::string& prefix,
               const std::string& file) {
  CsvTable csv(numbered(prefix, a.dimension));
  for (std::size_t i = 0; i < a.candidates.size(); ++i)
    if (a.accepted[i]) csv.add(as_std(a.candidates[i]));
  emit(c, out, file, csv.text());
}

void write_halfspaces(const RunConfig& c, std::ostream& out, const std::vector<Halfspace>& hs, std::size_t d) {
  auto header = numbered("n", d);
  header.push_back("offset");
  CsvTable csv(header);
  for (const auto& h : hs) csv.add(with(h.normal, h.offset));
  emit(c, out, "halfspaces.csv", csv.text());
}

std::vector<Eigen::Vector2d> first_two(const std::vector<Eigen::VectorXd>& pts) {
  std::vector<Eigen::Vector2d> out;
  for (const auto& p : pts) out.emplace_back(p(0), p(1));
  return out;
}

void report_coordinates(std::ostream& out, const IdentifiedSetApprox& a, const std::string& prefix) {
  for (std::size_t k = 0; k < a.dimension; ++k) {
    const auto [lo, hi] = functional_interval(a, Eigen::VectorXd::Unit(static_cast<Eigen::Index>(a.dimension),
                                                                        static_cast<Eigen::Index>(k)));
    out << "accepted " << prefix << k + 1 << " range: [" << format_number(lo) << ", " << format_number(hi) << "]\n";
  }
}

IdentifiedSetApprox filter_and_report(std::ostream& out, std::vector<Eigen::VectorXd> candidates,
                                      std::vector<Halfspace> hs, double tol) {
  IdentifiedSetApprox a = filter_candidates(std::move(candidates), std::move(hs), tol);
  const std::size_t n = accepted_count(a);
  out << "accepted " << n << " of " << a.candidates.size() << " candidates against " << a.halfspaces.size()
      << " halfspaces\n";
  return a;
}

void require_nonempty(const IdentifiedSetApprox& a) {
  if (accepted_count(a) == 0)
    fail(ErrorKind::kEmptySet, "no candidate satisfies all " + std::to_string(a.halfspaces.size()) +
                                   " halfspaces; the set is empty or smaller than the candidate spacing");
}

void cmd_set(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ModelSpec spec = load_model(c);
  ensure_out_dir(c);
  const double tol = tol_or(c, kDefaultAcceptTol);
  const std::uint64_t cand_seed = c.seed + 1;
  if (c.restricted && !std::holds_alternative<LinearProjectionSpec>(spec))
    err << "warning: --restricted only applies to linear_projection models\n";

  if (const auto* s = std::get_if<DdSpec>(&spec)) {
    const std::size_t K = s->contrasts.rows();
    auto hs = sampled_halfspaces(K, c.directions, c.seed, [&](const Eigen::VectorXd& q) {
      return dd_support(s->model, s->contrasts, as_std(q));
    });
    write_halfspaces(c, out, hs, K);
    const Box box(K, {-1.0, 1.0});
    const auto a = filter_and_report(out, uniform_in_box(box, c.candidates, cand_seed), std::move(hs), tol);
    require_nonempty(a);
    write_set(c, out, a, "delta", "accepted.csv");
    report_coordinates(out, a, "delta");
    for (const auto& p : s->contrasts.pairs) {
      const auto [lo, hi] = dd_interval(s->model, p.first, p.second);
      out << "dd interval " << pair_name(p) << ": [" << format_number(lo) << ", " << format_number(hi) << "]\n";
    }
    if (c.svg && K >= 2)
      emit(c, out, "set.svg",
           scatter_svg({{first_two(accepted_points(a)), "#2a9d3a", "accepted"}}, box, "DD set", "delta1", "delta2"));
  } else if (const auto* s = std::get_if<TprdSpec>(&spec)) {
    const std::size_t D = 2 * s->model.classes();
    auto hs = sampled_halfspaces(D, c.directions, c.seed, [&](const Eigen::VectorXd& q) {
      return tprd_theta_support(s->model, as_std(q));
    });
    write_halfspaces(c, out, hs, D);
    // The set has empty interior, so uniform candidates are moved onto its
    // affine hull; those leaving the unit cube are dropped.
    const Box box(D, {0.0, 1.0});
    std::vector<Eigen::VectorXd> candidates;
    for (const auto& theta : uniform_in_box(box, c.candidates, cand_seed)) {
      Eigen::VectorXd p = tprd_project(s->model, theta);
      if ((p.array() >= 0.0).all() && (p.array() <= 1.0).all()) candidates.push_back(std::move(p));
    }
    out << "projected candidates inside the unit cube: " << candidates.size() << " of " << c.candidates << "\n";
    const auto a = filter_and_report(out, std::move(candidates), std::move(hs), tol);
    require_nonempty(a);
    write_set(c, out, a, "theta", "accepted.csv");
    CsvTable mapped(numbered("delta", s->pairs.size()));
    std::vector<Eigen::VectorXd> mapped_pts;
    std::size_t excluded = 0;
    for (const auto& theta : accepted_points(a)) {
      try {
        const auto g = tprd_map(as_std(theta), s->pairs);
        mapped.add(g);
        mapped_pts.push_back(Eigen::Map<const Eigen::VectorXd>(g.data(), static_cast<Eigen::Index>(g.size())));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateDenominator) throw;
        ++excluded;
      }
    }
    emit(c, out, "mapped.csv", mapped.text());
    out << "mapped " << mapped.rows() << " points; excluded " << excluded << " with a vanishing denominator\n";
    for (const auto& p : s->pairs) {
      const auto [lo, hi] = tprd_interval(s->model, p.first, p.second);
      out << "tprd interval " << pair_name(p) << ": [" << format_number(lo) << ", " << format_number(hi) << "]\n";
    }
    if (c.svg) {
      if (s->pairs.size() >= 2)
        emit(c, out, "set.svg",
             scatter_svg({{first_two(mapped_pts), "#2a9d3a", "mapped"}}, Box(2, {-1.0, 1.0}), "TPRD set", "delta1", "delta2"));
      else
        emit(c, out, "set.svg",
             scatter_svg({{first_two(accepted_points(a)), "#2a9d3a", "accepted"}}, Box(2, {0.0, 1.0}), "TPRD theta",
                         "theta1", "theta2"));
    }
  } else if (const auto* s = std::get_if<LinearProjectionSpec>(&spec)) {
    if (!s->box) fail(ErrorKind::kInvalidArgument, "set on a linear_projection model needs \"box\" in the model file");
    const std::size_t d0 = s->model.d0();
    auto hs = profiled_halfspaces(s->model, c.restricted, c.directions, c.seed);
    write_halfspaces(c, out, hs, d0);
    auto candidates = uniform_in_box(*s->box, c.candidates, cand_seed);
    std::optional<IdentifiedSetApprox> other;
    if (c.compare) other = filter_candidates(candidates, profiled_halfspaces(s->model, !c.restricted, c.directions, c.seed), tol);
    const auto a = filter_and_report(out, std::move(candidates), std::move(hs), tol);
    require_nonempty(a);
    write_set(c, out, a, "alpha", "accepted.csv");
    report_coordinates(out, a, "alpha");
    if (other) {
      write_set(c, out, *other, "alpha", "compare_accepted.csv");
      const auto& full = c.restricted ? *other : a;
      const auto& restricted = c.restricted ? a : *other;
      std::size_t violations = 0;
      for (std::size_t i = 0; i < full.accepted.size(); ++i) violations += full.accepted[i] && !restricted.accepted[i];
      out << "comparison accepted " << accepted_count(*other) << "; full-family points outside the restricted family: "
          << violations << "\n";
    }
    if (c.svg && d0 >= 2) {
      std::vector<ScatterLayer> layers;
      if (other) {
        const auto& restricted = c.restricted ? a : *other;
        const auto& full = c.restricted ? *other : a;
        layers.push_back({first_two(accepted_points(restricted)), "#c8c8c8", "restricted directions"});
        layers.push_back({first_two(accepted_points(full)), "#2a9d3a", "all directions"});
      } else {
        layers.push_back({first_two(accepted_points(a)), "#2a9d3a", "accepted"});
      }
      emit(c, out, "set.svg", scatter_svg(layers, *s->box, "identified set", "alpha1", "alpha2"));
    }
  } else if (const auto* s = std::get_if<HalfspaceSpec>(&spec)) {
    const std::size_t d = s->box.size();
    write_halfspaces(c, out, s->halfspaces, d);
    const auto a = filter_and_report(out, uniform_in_box(s->box, c.candidates, cand_seed), s->halfspaces, tol);
    require_nonempty(a);
    write_set(c, out, a, "x", "accepted.csv");
    report_coordinates(out, a, "x");
    if (c.svg && d >= 2)
      emit(c, out, "set.svg", scatter_svg({{first_two(accepted_points(a)), "#2a9d3a", "accepted"}}, s->box, "halfspace set", "x1", "x2"));
  } else {
    fail(ErrorKind::kInvalidArgument, "set is not defined for table models; use support for the interval");
  }
}

// ---------------------------------------------------------------- simulations

SimOptions sim_options(const RunConfig& c) {
  SimOptions opt;
  opt.directions = c.directions;
  // --candidates counts lattice points; the lattice is square.
  const std::size_t n = c.candidates_set ? c.candidates : 40000;
  opt.grid = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n)) + 1e-9)));
  opt.x_nodes = c.grid;
  opt.seed = c.seed;
  opt.tol = tol_or(c, kDefaultAcceptTol);
  opt.draws_per_node = c.draws;
  return opt;
}

std::vector<std::string> summary_header() {
  return {"panel", "box_a_lo", "box_a_hi", "box_b_lo", "box_b_hi", "ours_accepted", "restricted_accepted",
          "containment_violations", "truth_in_ours", "truth_in_restricted", "hull_area_ours", "hull_area_restricted",
          "polygon_area_ours", "polygon_area_restricted", "sum_lo", "sum_hi", "sum_violations"};
}

std::vector<std::string> summary_row(const PanelResult& r) {
  std::vector<std::string> row{r.label};
  for (const auto& [lo, hi] : r.box) {
    row.push_back(format_number(lo));
    row.push_back(format_number(hi));
  }
  row.push_back(std::to_string(accepted_count(r.ours)));
  row.push_back(std::to_string(accepted_count(r.restricted)));
  row.push_back(std::to_string(r.containment_violations));
  row.push_back(r.truth_in_ours ? "1" : "0");
  row.push_back(r.truth_in_restricted ? "1" : "0");
  for (double v : {r.hull_area_ours, r.hull_area_restricted, r.polygon_area_ours, r.polygon_area_restricted,
                   r.sum_interval.first, r.sum_interval.second})
    row.push_back(format_number(v));
  row.push_back(std::to_string(r.sum_violations));
  return row;
}

void write_panel(const RunConfig& c, std::ostream& out, const std::string& file, const PanelResult& r) {
  CsvTable csv({"alpha_a", "alpha_b", "ours", "restricted"});
  for (std::size_t i = 0; i < r.ours.candidates.size(); ++i)
    if (r.ours.accepted[i] || r.restricted.accepted[i])
      csv.add(std::vector<double>{r.ours.candidates[i](0), r.ours.candidates[i](1), r.ours.accepted[i] ? 1.0 : 0.0,
                                  r.restricted.accepted[i] ? 1.0 : 0.0});
  emit(c, out, file + ".csv", csv.text());
  if (c.svg)
    emit(c, out, file + ".svg",
         scatter_svg({{first_two(accepted_points(r.restricted)), "#c8c8c8", "restricted directions"},
                      {first_two(accepted_points(r.ours)), "#2a9d3a", "all directions"}},
                     r.box, r.label, "alpha_a", "alpha_b"));
  out << r.label << ": ours " << accepted_count(r.ours) << ", restricted " << accepted_count(r.restricted)
      << ", violations " << r.containment_violations << ", truth " << (r.truth_in_ours ? "in" : "out") << "/"
      << (r.truth_in_restricted ? "in" : "out") << ", hull areas " << format_number(r.hull_area_ours) << " / "
      << format_number(r.hull_area_restricted) << "\n";
}

void cmd_sim1(const RunConfig& c, std::ostream& out) {
  ensure_out_dir(c);
  const SimOptions opt = sim_options(c);
  CsvTable summary(summary_header());
  for (double rho : kSim1Rhos) {
    const auto r = run_panel(sim1_model(rho, opt), Eigen::Vector2d(1.0, 1.0), "rho=" + format_number(rho), opt);
    write_panel(c, out, "sim1_rho_" + format_number(rho), r);
    if (rho == 1.0)
      out << "rho=1: alpha_a + alpha_b in [" << format_number(r.sum_interval.first) << ", "
          << format_number(r.sum_interval.second) << "], accepted points outside: " << r.sum_violations << "\n";
    summary.add(summary_row(r));
  }
  emit(c, out, "sim1_summary.csv", summary.text());
}

void cmd_sim2(const RunConfig& c, std::ostream& out) {
  ensure_out_dir(c);
  const SimOptions opt = sim_options(c);
  CsvTable summary(summary_header());
  for (const auto& [sa, sb] : kSim2Sigmas) {
    const std::string tag = "sa_" + format_number(sa) + "_sb_" + format_number(sb);
    const auto r = run_panel(sim2_model(sa, sb, opt), Eigen::Vector2d(1.0, 0.2),
                             "sigma=(" + format_number(sa) + " " + format_number(sb) + ")", opt);
    write_panel(c, out, "sim2_" + tag, r);
    summary.add(summary_row(r));
  }
  emit(c, out, "sim2_summary.csv", summary.text());
}

// ---------------------------------------------------------------- dream-solve / verify

void cmd_dream_solve(const RunConfig& c, std::ostream& out) {
  if (c.model_path.empty()) fail(ErrorKind::kInvalidArgument, "dream-solve needs --model PATH");
  const PartialOtInstance inst = instance_from_json(read_text_file(c.model_path));
  const DreamSolution sol = solve_dream(inst);
  const nlohmann::json j{{"cost", sol.cost},
                         {"plan", {sol.plan[0], sol.plan[1]}},
                         {"pivot", sol.pivot},
                         {"bracket", {sol.bracket.first, sol.bracket.second}}};
  out << j.dump() << "\n";
}

void cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<SuiteResult> results;
  if (c.instances == 0) {
    err << "warning: --instances 0 makes the random suites vacuous\n";
  } else {
    results.push_back(verify_dream(c.instances, 2, 10, c.seed, tol_or(c, 1e-9), c.perturb));
    results.push_back(verify_quantile(c.instances, 20, c.seed + 1, tol_or(c, 1e-9)));
    results.push_back(verify_dd(c.instances, 2, 6, 4, c.seed + 2, tol_or(c, 1e-8)));
  }
  for (const auto& path : c.fixtures) {
    const std::string text = read_text_file(path);
    std::optional<double> expected;
    try {
      const auto j = nlohmann::json::parse(text);
      if (j.contains("expected_cost")) expected = j["expected_cost"].get<double>();
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::kParse, path + ": " + e.what());
    }
    auto r = verify_fixture(instance_from_json(text), expected, tol_or(c, 1e-9), c.perturb);
    r.name = "fixture " + path;
    results.push_back(std::move(r));
  }
  const SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " instances=" << r.instances
        << " max_error=" << format_number(r.max_error) << " tol=" << format_number(r.tolerance) << "\n";
    if (!r.passed()) {
      out << "  offending instance: " << *r.failure << "\n";
      if (!first_failure) first_failure = &r;
    }
  }
  if (first_failure)
    fail(ErrorKind::kVerificationFailure, first_failure->name + " mismatch on " + *first_failure->failure);
}

void add_common(CLI::App* sub, RunConfig& c, bool model) {
  if (model) sub->add_option("--model", c.model_path, "model JSON file")->check(CLI::ExistingFile);
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--directions", c.directions, "sampled directions")->check(CLI::PositiveNumber);
  sub->add_option("--candidates", c.candidates, "candidate points")->check(CLI::PositiveNumber);
  sub->add_option("--grid", c.grid, "quadrature nodes for X in the simulations")->check(CLI::PositiveNumber);
  sub->add_option("--tol", c.tol, "acceptance or comparison tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out_dir, "output directory");
  sub->add_flag("--restricted", c.restricted, "use directions with at most one nonzero Y0 coefficient");
  sub->add_flag("--svg", c.svg, "also write SVG scatter plots");
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kVerificationFailure:
      return 3;
    case ErrorKind::kDegenerateClass:
    case ErrorKind::kDegenerateDenominator:
    case ErrorKind::kSingularMoment:
    case ErrorKind::kEmptySet:
    case ErrorKind::kInfeasible:
      return 4;
    case ErrorKind::kInvalidDistribution:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kTooLarge:
    case ErrorKind::kParse:
    case ErrorKind::kIo:
      return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identified sets for moment models under data combination", "otid"};
  app.require_subcommand(1);
  RunConfig c;

  auto* support = app.add_subcommand("support", "support function values at sampled directions");
  auto* set = app.add_subcommand("set", "approximate the identified set from sampled halfspaces");
  auto* sim1 = app.add_subcommand("sim1", "first simulation, six panels over rho");
  auto* sim2 = app.add_subcommand("sim2", "second simulation, six panels over (sigma_a, sigma_b)");
  auto* dream = app.add_subcommand("dream-solve", "solve one partial transport instance");
  auto* verify = app.add_subcommand("verify", "closed forms against the LP oracle");
  for (auto* sub : {support, set, dream}) add_common(sub, c, true);
  for (auto* sub : {sim1, sim2, verify}) add_common(sub, c, false);
  set->add_flag("--compare", c.compare, "also filter with the other direction family");
  sim2->add_option("--draws", c.draws, "Monte Carlo draws per X node")->check(CLI::PositiveNumber);
  verify->add_option("--instances", c.instances, "instances per suite (per size for the transport suite)");
  verify->add_option("--fixture", c.fixtures, "pinned instance JSON, optionally with expected_cost");
  verify->add_option("--perturb", c.perturb, "shift added to row 0 of pi on the solver side");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  c.candidates_set = chosen->count("--candidates") > 0;

  try {
    if (chosen == support) cmd_support(c, out, err);
    if (chosen == set) cmd_set(c, out, err);
    if (chosen == sim1) cmd_sim1(c, out);
    if (chosen == sim2) cmd_sim2(c, out);
    if (chosen == dream) cmd_dream_solve(c, out);
    if (chosen == verify) cmd_verify(c, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace otid
