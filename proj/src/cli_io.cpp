#include "otid/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "otid/errors.hpp"

namespace otid {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& msg) {
  fail(ErrorKind::kParse, "field " + path + ": " + msg);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad_field(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad_field(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

double number(const json& j, const std::string& path) {
  if (!j.is_number()) bad_field(path, "expected a number");
  return j.get<double>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) bad_field(path, "expected an array");
  return j;
}

std::vector<double> numbers(const json& j, const std::string& path) {
  std::vector<double> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(number(j[i], at(path, i)));
  return out;
}

Eigen::VectorXd vector(const json& j, const std::string& path) {
  const auto v = numbers(j, path);
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::MatrixXd matrix(const json& j, const std::string& path) {
  const json& rows = array(j, path);
  if (rows.empty()) bad_field(path, "empty matrix");
  Eigen::MatrixXd m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = numbers(rows[i], at(path, i));
    if (i == 0) m.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(r.size()));
    if (static_cast<Eigen::Index>(r.size()) != m.cols()) bad_field(at(path, i), "ragged matrix row");
    for (std::size_t k = 0; k < r.size(); ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = r[k];
  }
  return m;
}

DiscreteDist law(const json& j, const std::string& path) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto pair = numbers(j[i], at(path, i));
    if (pair.size() != 2) bad_field(at(path, i), "expected [value, probability]");
    atoms.push_back({pair[0], pair[1]});
  }
  return make_discrete(std::move(atoms));
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(const json& j, const std::string& path,
                                                             std::size_t classes) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto p = numbers(j[i], at(path, i));
    if (p.size() != 2) bad_field(at(path, i), "expected [j, j_dag]");
    for (double v : p)
      if (v != std::floor(v) || v < 1 || v > static_cast<double>(classes) || p[0] == p[1])
        bad_field(at(path, i), "class indices must be distinct integers in 1.." + std::to_string(classes));
    out.emplace_back(static_cast<std::size_t>(p[0]) - 1, static_cast<std::size_t>(p[1]) - 1);
  }
  if (out.empty()) bad_field(path, "needs at least one pair");
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> against_last(std::size_t classes) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j + 1 < classes; ++j) out.emplace_back(j, classes - 1);
  return out;
}

Box box(const json& j, const std::string& path) {
  Box out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto p = numbers(j[i], at(path, i));
    if (p.size() != 2 || !(p[0] <= p[1])) bad_field(at(path, i), "expected [lo, hi] with lo <= hi");
    out.emplace_back(p[0], p[1]);
  }
  if (out.empty()) bad_field(path, "empty box");
  return out;
}

DdSpec parse_dd(const json& j) {
  std::vector<DdRow> rows;
  const json& jr = array(member(j, "rows", ""), "rows");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = at("rows", i);
    rows.push_back({number(member(jr[i], "weight", p), join(p, "weight")),
                    number(member(jr[i], "p_y1", p), join(p, "p_y1")),
                    numbers(member(jr[i], "p_class", p), join(p, "p_class"))});
  }
  std::optional<std::vector<double>> cp;
  if (const json* c = optional_member(j, "class_probs")) cp = numbers(*c, "class_probs");
  DdModel model(std::move(rows), cp);
  DisparityMatrix E{model.classes(), against_last(model.classes())};
  if (const json* c = optional_member(j, "contrasts")) E.pairs = index_pairs(*c, "contrasts", model.classes());
  if (E.pairs.empty()) bad_field("rows", "at least two classes are needed");
  return {std::move(model), std::move(E)};
}

TprdSpec parse_tprd(const json& j) {
  std::vector<TprdRow> rows;
  const json& jr = array(member(j, "rows", ""), "rows");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = at("rows", i);
    rows.push_back({number(member(jr[i], "weight", p), join(p, "weight")),
                    number(member(jr[i], "p_s1_r1", p), join(p, "p_s1_r1")),
                    number(member(jr[i], "p_s0_r1", p), join(p, "p_s0_r1")),
                    numbers(member(jr[i], "p_class", p), join(p, "p_class"))});
  }
  TprdModel model(std::move(rows));
  auto pairs = against_last(model.classes());
  if (const json* c = optional_member(j, "pairs")) pairs = index_pairs(*c, "pairs", model.classes());
  if (pairs.empty()) bad_field("rows", "at least two classes are needed");
  return {std::move(model), std::move(pairs)};
}

LinearProjectionSpec parse_linear_projection(const json& j) {
  std::vector<LinearProjectionRow> rows;
  const json& jr = array(member(j, "rows", ""), "rows");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = at("rows", i);
    LinearProjectionRow row{number(member(jr[i], "weight", p), join(p, "weight")),
                            vector(member(jr[i], "x", p), join(p, "x")), DiscreteDist::dirac(0.0),
                            AtomCloud{}};
    const json& y1 = member(jr[i], "y1", p);
    const std::string p1 = join(p, "y1");
    if (const json* a = optional_member(y1, "atoms"))
      row.y1 = law(*a, join(p1, "atoms"));
    else
      row.y1 = GaussianSpec{number(member(y1, "mean", p1), join(p1, "mean")),
                            number(member(y1, "sd", p1), join(p1, "sd"))};
    const json& y0 = member(jr[i], "y0", p);
    const std::string p0 = join(p, "y0");
    if (y0.is_object() && y0.contains("values"))
      row.y0 = AtomCloud{matrix(y0["values"], join(p0, "values")), vector(member(y0, "probs", p0), join(p0, "probs"))};
    else
      row.y0 = GaussianVector{vector(member(y0, "mean", p0), join(p0, "mean")),
                              matrix(member(y0, "cov", p0), join(p0, "cov"))};
    rows.push_back(std::move(row));
  }
  LinearProjectionOptions opt;
  if (const json* g = optional_member(j, "gaussian_atoms")) {
    const double n = number(*g, "gaussian_atoms");
    if (n < 1 || n != std::floor(n)) bad_field("gaussian_atoms", "expected a positive integer");
    opt.gaussian_atoms = static_cast<std::size_t>(n);
  }
  if (const json* a = optional_member(j, "analytic_gaussian")) {
    if (!a->is_boolean()) bad_field("analytic_gaussian", "expected a boolean");
    opt.analytic_gaussian = a->get<bool>();
  }
  std::optional<Eigen::MatrixXd> M;
  std::optional<Eigen::VectorXd> e;
  if (const json* m = optional_member(j, "moment")) M = matrix(*m, "moment");
  if (const json* c = optional_member(j, "cross_moment")) e = vector(*c, "cross_moment");
  LinearProjectionSpec spec{LinearProjectionModel(std::move(rows), opt, M, e), std::nullopt};
  if (const json* b = optional_member(j, "box")) {
    spec.box = box(*b, "box");
    if (spec.box->size() != spec.model.d0()) bad_field("box", "needs one [lo, hi] per Y0 coefficient");
  }
  return spec;
}

TableSpec parse_table(const json& j) {
  const json& hj = member(j, "h", "");
  if (!hj.is_string()) bad_field("h", "expected a string");
  const std::string h = hj.get<std::string>();
  if (h != "product" && h != "min" && h != "sum") bad_field("h", "expected product, min or sum");
  std::vector<ConditionalRow> rows;
  const json& jr = array(member(j, "rows", ""), "rows");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string p = at("rows", i);
    rows.push_back({number(member(jr[i], "weight", p), join(p, "weight")), law(member(jr[i], "law1", p), join(p, "law1")),
                    law(member(jr[i], "law0", p), join(p, "law0")), std::nullopt});
  }
  return {ConditionalLawTable(std::move(rows)), h};
}

HalfspaceSpec parse_halfspaces(const json& j) {
  HalfspaceSpec spec;
  spec.box = box(member(j, "box", ""), "box");
  const json& jh = array(member(j, "halfspaces", ""), "halfspaces");
  for (std::size_t i = 0; i < jh.size(); ++i) {
    const std::string p = at("halfspaces", i);
    Halfspace h{vector(member(jh[i], "normal", p), join(p, "normal")), number(member(jh[i], "offset", p), join(p, "offset"))};
    if (static_cast<std::size_t>(h.normal.size()) != spec.box.size()) bad_field(join(p, "normal"), "length differs from the box");
    if (h.normal.norm() == 0.0) bad_field(join(p, "normal"), "zero normal");
    spec.halfspaces.push_back(std::move(h));
  }
  return spec;
}

}  // namespace

ModelSpec parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
    fail(ErrorKind::kParse, "line " + std::to_string(line) + ": " + e.what());
  }
  const json& type = member(j, "type", "");
  if (!type.is_string()) bad_field("type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "dd") return parse_dd(j);
  if (t == "tprd") return parse_tprd(j);
  if (t == "linear_projection") return parse_linear_projection(j);
  if (t == "table") return parse_table(j);
  if (t == "halfspaces") return parse_halfspaces(j);
  bad_field("type", "unknown model type '" + t + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::kIo, "cannot write " + path);
  out << content;
  if (!out) fail(ErrorKind::kIo, "write failed for " + path);
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
  add(header);
  rows_ = 0;
}

void CsvTable::add(const std::vector<double>& row) {
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double v : row) cells.push_back(format_number(v));
  add(cells);
}

void CsvTable::add(const std::vector<std::string>& row) {
  if (row.size() != columns_) fail(ErrorKind::kInvalidArgument, "CSV row has the wrong number of columns");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) text_ += ',';
    text_ += row[i];
  }
  text_ += '\n';
  ++rows_;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string scatter_svg(const std::vector<ScatterLayer>& layers, const Box& box, const std::string& title,
                        const std::string& x_label, const std::string& y_label) {
  if (box.size() < 2) fail(ErrorKind::kInvalidArgument, "scatter needs a 2-D box");
  constexpr double W = 520, H = 480, left = 60, right = 20, top = 40, bottom = 50;
  const auto [x0, x1] = box[0];
  const auto [y0, y1] = box[1];
  const double sx = (W - left - right) / std::max(x1 - x0, 1e-300);
  const double sy = (H - top - bottom) / std::max(y1 - y0, 1e-300);
  const auto px = [&](double x) { return format_number(left + (x - x0) * sx); };
  const auto py = [&](double y) { return format_number(H - bottom - (y - y0) * sy); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"520\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"260\" y=\"22\" text-anchor=\"middle\">" + title + "</text>\n";
  s += "<rect x=\"60\" y=\"40\" width=\"440\" height=\"390\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& layer : layers)
    for (const auto& p : layer.points)
      s += "<circle cx=\"" + px(p(0)) + "\" cy=\"" + py(p(1)) + "\" r=\"1.5\" fill=\"" + layer.color + "\"/>\n";
  s += "<text x=\"60\" y=\"446\" text-anchor=\"middle\">" + format_number(x0) + "</text>\n";
  s += "<text x=\"500\" y=\"446\" text-anchor=\"middle\">" + format_number(x1) + "</text>\n";
  s += "<text x=\"54\" y=\"430\" text-anchor=\"end\">" + format_number(y0) + "</text>\n";
  s += "<text x=\"54\" y=\"44\" text-anchor=\"end\">" + format_number(y1) + "</text>\n";
  s += "<text x=\"280\" y=\"470\" text-anchor=\"middle\">" + x_label + "</text>\n";
  s += "<text x=\"16\" y=\"235\" text-anchor=\"middle\" transform=\"rotate(-90 16 235)\">" + y_label + "</text>\n";
  double ly = 56;
  for (const auto& layer : layers) {
    s += "<circle cx=\"380\" cy=\"" + format_number(ly - 4) + "\" r=\"4\" fill=\"" + layer.color + "\"/>\n";
    s += "<text x=\"390\" y=\"" + format_number(ly) + "\">" + layer.label + "</text>\n";
    ly += 16;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace otid
