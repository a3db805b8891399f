#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "otid/measures.hpp"
#include "otid/models.hpp"
#include "otid/setapprox.hpp"

namespace otid {

// Model files are JSON objects with a "type" field. Class indices in
// files are 1-based.
//
//   dd:                {"type":"dd", "class_probs":[..] (optional),
//                       "rows":[{"weight":w, "p_y1":p, "p_class":[..]}, ..],
//                       "contrasts":[[j, j_dag], ..] (optional, default: each class against the last)}
//   tprd:              {"type":"tprd",
//                       "rows":[{"weight":w, "p_s1_r1":a, "p_s0_r1":b, "p_class":[..]}, ..],
//                       "pairs":[[j, j_dag], ..] (optional, default: each class against the last)}
//   linear_projection: {"type":"linear_projection",
//                       "rows":[{"weight":w, "x":[..],
//                                "y1":{"mean":m, "sd":s} | {"atoms":[[v, p], ..]},
//                                "y0":{"mean":[..], "cov":[[..], ..]} | {"values":[[..], ..], "probs":[..]}}, ..],
//                       "moment":[[..], ..] (optional), "cross_moment":[..] (optional),
//                       "gaussian_atoms":n (optional), "analytic_gaussian":bool (optional),
//                       "box":[[lo, hi], ..] (optional, over the Y0 coefficients)}
//   table:             {"type":"table", "h":"product" | "min" | "sum",
//                       "rows":[{"weight":w, "law1":[[v, p], ..], "law0":[[v, p], ..]}, ..]}
//   halfspaces:        {"type":"halfspaces", "halfspaces":[{"normal":[..], "offset":c}, ..],
//                       "box":[[lo, hi], ..]}

struct DdSpec {
  DdModel model;
  DisparityMatrix contrasts;
};

struct TprdSpec {
  TprdModel model;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct LinearProjectionSpec {
  LinearProjectionModel model;
  std::optional<Box> box;
};

struct TableSpec {
  ConditionalLawTable table;
  std::string h;
};

struct HalfspaceSpec {
  std::vector<Halfspace> halfspaces;
  Box box;
};

using ModelSpec = std::variant<DdSpec, TprdSpec, LinearProjectionSpec, TableSpec, HalfspaceSpec>;

/// Throws ParseError naming the line (syntax) or field path (schema).
ModelSpec parse_model(const std::string& text);

std::string read_text_file(const std::string& path);
/// Writes bytes verbatim, so line endings stay LF.
void write_text_file(const std::string& path, const std::string& content);

/// %.12g
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add(const std::vector<double>& row);
  void add(const std::vector<std::string>& row);
  std::size_t rows() const { return rows_; }
  const std::string& text() const { return text_; }

 private:
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

/// Numbered column names: prefix1, prefix2, ...
std::vector<std::string> numbered(const std::string& prefix, std::size_t n);

struct ScatterLayer {
  std::vector<Eigen::Vector2d> points;
  std::string color;
  std::string label;
};

/// Self-contained SVG scatter plot. Layers are drawn in order.
std::string scatter_svg(const std::vector<ScatterLayer>& layers, const Box& box, const std::string& title,
                        const std::string& x_label, const std::string& y_label);

}  // namespace otid
