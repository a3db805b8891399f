#include "otid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "otid/errors.hpp"

namespace otid {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr std::size_t kEnumMaxVars = 24;
constexpr std::size_t kEnumMaxRows = 40;
constexpr double kEnumMaxBases = 2e4;
constexpr std::size_t kSimplexMaxVars = 20000;
constexpr std::size_t kSimplexMaxRows = 2000;

struct StandardForm {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::size_t original_vars;
};

StandardForm to_standard_form(const LpProblem& p) {
  const Eigen::Index n = p.objective.size();
  const Eigen::Index me = p.eq_matrix.rows();
  const Eigen::Index mu = p.ub_matrix.rows();
  if ((me > 0 && p.eq_matrix.cols() != n) || (mu > 0 && p.ub_matrix.cols() != n) ||
      p.eq_rhs.size() != me || p.ub_rhs.size() != mu)
    fail(ErrorKind::kInvalidArgument, "LpProblem dimensions are inconsistent");
  StandardForm s;
  s.original_vars = static_cast<std::size_t>(n);
  s.A = Eigen::MatrixXd::Zero(me + mu, n + mu);
  s.b.resize(me + mu);
  s.c = Eigen::VectorXd::Zero(n + mu);
  s.c.head(n) = p.objective;
  if (me > 0) {
    s.A.topLeftCorner(me, n) = p.eq_matrix;
    s.b.head(me) = p.eq_rhs;
  }
  if (mu > 0) {
    s.A.bottomLeftCorner(mu, n) = p.ub_matrix;
    s.A.bottomRightCorner(mu, mu).setIdentity();
    s.b.tail(mu) = p.ub_rhs;
  }
  return s;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// Indices of a maximal linearly independent subset of the rows of A.
std::vector<Eigen::Index> independent_rows(const Eigen::MatrixXd& A) {
  std::vector<Eigen::VectorXd> basis;
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Eigen::VectorXd v = A.row(i).transpose();
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) v -= q.dot(v) * q;
    if (v.norm() > 1e-10 * norm0) {
      basis.push_back(v / v.norm());
      rows.push_back(i);
    }
  }
  return rows;
}

// Minimizes c'x over {Ax = b, x >= 0} by visiting every basis. Returns
// Infeasible when no basis is feasible; never reports Unbounded.
LpResult enumerate_vertices(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& c) {
  const Eigen::Index n = A.cols();
  const std::vector<Eigen::Index> rows = independent_rows(A);
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd Ar(r, n);
  Eigen::VectorXd br(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    Ar.row(k) = A.row(rows[k]);
    br(k) = b(rows[k]);
  }
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());

  LpResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> pick(r);
  std::iota(pick.begin(), pick.end(), Eigen::Index{0});
  Eigen::MatrixXd B(r, r);
  Eigen::VectorXd x(n);
  while (true) {
    for (Eigen::Index k = 0; k < r; ++k) B.col(k) = Ar.col(pick[k]);
    bool ok = true;
    x.setZero();
    if (r > 0) {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
      lu.setThreshold(1e-12);
      if (!lu.isInvertible()) {
        ok = false;
      } else {
        const Eigen::VectorXd xb = lu.solve(br);
        for (Eigen::Index k = 0; k < r; ++k) {
          if (xb(k) < -kFeasTol * scale) ok = false;
          x(pick[k]) = std::max(xb(k), 0.0);
        }
      }
    }
    if (ok && (A.rows() == 0 || (A * x - b).cwiseAbs().maxCoeff() <= kFeasTol * scale)) {
      const double v = c.dot(x);
      if (v < best.value - 1e-12) {
        best.value = v;
        best.point = x;
        best.status = LpStatus::kOptimal;
      }
    }
    // Next r-subset in lexicographic order.
    Eigen::Index k = r - 1;
    while (k >= 0 && pick[k] == n - r + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (Eigen::Index t = k + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }
  if (best.status != LpStatus::kOptimal) best.value = 0.0;
  return best;
}

LpResult solve_enumerate(const StandardForm& s) {
  LpResult res = enumerate_vertices(s.A, s.b, s.c);
  if (res.status != LpStatus::kOptimal) return res;
  // Unbounded iff some ray d >= 0 with Ad = 0 has c'd < 0; rays are
  // normalized by sum(d) = 1, which makes that a bounded polytope.
  const Eigen::Index n = s.A.cols();
  Eigen::MatrixXd R(s.A.rows() + 1, n);
  R.topRows(s.A.rows()) = s.A;
  R.row(s.A.rows()).setOnes();
  Eigen::VectorXd rb = Eigen::VectorXd::Zero(s.A.rows() + 1);
  rb(s.A.rows()) = 1.0;
  const LpResult ray = enumerate_vertices(R, rb, s.c);
  if (ray.status == LpStatus::kOptimal && ray.value < -1e-12) {
    res.status = LpStatus::kUnbounded;
    res.value = -std::numeric_limits<double>::infinity();
  }
  return res;
}

class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(A.rows()), n_(A.cols()), T_(A.rows(), A.cols() + A.rows() + 1) {
    T_.setZero();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double sign = b(i) < 0.0 ? -1.0 : 1.0;
      T_.row(i).head(n_) = sign * A.row(i);
      T_(i, n_ + i) = 1.0;
      T_(i, rhs()) = sign * b(i);
      basis_.push_back(n_ + i);
      row_origin_.push_back(i);
      row_sign_.push_back(sign);
    }
  }

  Eigen::Index rhs() const { return T_.cols() - 1; }

  // Runs the simplex on cost `c` (length n + m) over columns with allowed[j].
  // Returns false when unbounded.
  bool optimize(const Eigen::VectorXd& c, const std::vector<bool>& allowed) {
    const Eigen::Index cols = T_.cols() - 1;
    Eigen::VectorXd red = c;
    for (Eigen::Index i = 0; i < T_.rows(); ++i) red -= c(basis_[i]) * T_.row(i).head(cols).transpose();
    bool bland = false;
    int degenerate = 0;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > 200000) fail(ErrorKind::kTooLarge, "simplex iteration limit reached");
      Eigen::Index enter = -1;
      double most = -1e-10;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (!allowed[j] || red(j) >= most) continue;
        enter = j;
        most = red(j);
        if (bland) break;
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < T_.rows(); ++i) {
        const double a = T_(i, enter);
        if (a <= 1e-11) continue;
        const double t = T_(i, rhs()) / a;
        if (t < ratio - 1e-13 || (t <= ratio + 1e-13 && leave >= 0 && basis_[i] < basis_[leave])) {
          if (t < ratio) ratio = t;
          leave = i;
        }
      }
      if (leave < 0) return false;
      degenerate = ratio <= 1e-13 ? degenerate + 1 : 0;
      if (degenerate > 50) bland = true;
      pivot(leave, enter);
      red -= red(enter) * T_.row(leave).head(cols).transpose();
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    T_.row(r) /= T_(r, c);
    for (Eigen::Index i = 0; i < T_.rows(); ++i) {
      if (i == r) continue;
      const double f = T_(i, c);
      if (f != 0.0) T_.row(i) -= f * T_.row(r);
    }
    basis_[r] = c;
  }

  // Pivots zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and are dropped.
  void purge_artificials() {
    for (Eigen::Index i = 0; i < T_.rows();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      Eigen::Index j = 0;
      while (j < n_ && std::abs(T_(i, j)) <= 1e-9) ++j;
      if (j < n_) {
        pivot(i, j);
        ++i;
        continue;
      }
      const Eigen::Index last = T_.rows() - 1;
      if (i != last) {
        T_.row(i) = T_.row(last);
        basis_[i] = basis_[last];
        row_origin_[i] = row_origin_[last];
        row_sign_[i] = row_sign_[last];
      }
      T_.conservativeResize(last, Eigen::NoChange);
      basis_.pop_back();
      row_origin_.pop_back();
      row_sign_.pop_back();
    }
  }

  double artificial_level() const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < T_.rows(); ++i)
      if (basis_[i] >= n_) s += T_(i, rhs());
    return s;
  }

  const std::vector<Eigen::Index>& basis() const { return basis_; }
  const std::vector<Eigen::Index>& row_origin() const { return row_origin_; }
  double value(Eigen::Index i) const { return T_(i, rhs()); }

 private:
  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::MatrixXd T_;
  std::vector<Eigen::Index> basis_;
  std::vector<Eigen::Index> row_origin_;
  std::vector<double> row_sign_;
};

LpResult solve_simplex(const StandardForm& s) {
  const Eigen::Index m = s.A.rows();
  const Eigen::Index n = s.A.cols();
  const double scale = std::max(1.0, m > 0 ? s.b.cwiseAbs().maxCoeff() : 0.0);
  LpResult res;
  Tableau tab(s.A, s.b);

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  tab.optimize(phase1, std::vector<bool>(n + m, true));
  if (tab.artificial_level() > kFeasTol * scale) {
    res.status = LpStatus::kInfeasible;
    return res;
  }
  tab.purge_artificials();

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = s.c;
  std::vector<bool> allowed(n + m, false);
  std::fill(allowed.begin(), allowed.begin() + n, true);
  if (!tab.optimize(phase2, allowed)) {
    res.status = LpStatus::kUnbounded;
    res.value = -std::numeric_limits<double>::infinity();
    return res;
  }

  // Re-solve the final basis system directly to shed accumulated pivot error.
  const auto& basis = tab.basis();
  const auto& origin = tab.row_origin();
  const Eigen::Index r = static_cast<Eigen::Index>(basis.size());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (r > 0) {
    Eigen::MatrixXd B(r, r);
    Eigen::VectorXd rb(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      rb(i) = s.b(origin[i]);
      for (Eigen::Index k = 0; k < r; ++k) B(i, k) = s.A(origin[i], basis[k]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (lu.isInvertible()) {
      const Eigen::VectorXd xb = lu.solve(rb);
      for (Eigen::Index k = 0; k < r; ++k) x(basis[k]) = std::max(xb(k), 0.0);
    } else {
      for (Eigen::Index k = 0; k < r; ++k) x(basis[k]) = std::max(tab.value(k), 0.0);
    }
  }
  res.status = LpStatus::kOptimal;
  res.point = x;
  res.value = s.c.dot(x);
  return res;
}

}  // namespace

LpResult solve_lp_exact(const LpProblem& p, LpMethod method) {
  const StandardForm s = to_standard_form(p);
  const std::size_t n = p.variables();
  const std::size_t rows = static_cast<std::size_t>(s.A.rows());
  const bool enum_fits = n <= kEnumMaxVars && rows <= kEnumMaxRows;

  if (method == LpMethod::kAuto) {
    const auto cols = static_cast<std::size_t>(s.A.cols());
    const double bases = binomial(cols, rows) + binomial(cols, std::min(rows + 1, cols));
    method = enum_fits && bases <= kEnumMaxBases ? LpMethod::kEnumerate : LpMethod::kSimplex;
  }
  LpResult res;
  if (method == LpMethod::kEnumerate) {
    if (!enum_fits)
      fail(ErrorKind::kTooLarge, "vertex enumeration limited to n <= 24 and 40 rows (got n=" +
                                     std::to_string(n) + ", rows=" + std::to_string(rows) + ")");
    res = solve_enumerate(s);
  } else {
    if (static_cast<std::size_t>(s.A.cols()) > kSimplexMaxVars || rows > kSimplexMaxRows)
      fail(ErrorKind::kTooLarge, "LP exceeds the dense simplex size guard");
    res = solve_simplex(s);
  }
  if (res.status == LpStatus::kOptimal) res.point.conservativeResize(static_cast<Eigen::Index>(n));
  return res;
}

double brute_force_ot(const Eigen::MatrixXd& cost, const Eigen::VectorXd& marg_row,
                      const Eigen::VectorXd& marg_col, LpMethod method) {
  const Eigen::Index m = cost.rows();
  const Eigen::Index n = cost.cols();
  if (marg_row.size() != m || marg_col.size() != n)
    fail(ErrorKind::kInvalidArgument, "marginal lengths do not match the cost matrix");
  if ((marg_row.array() < 0.0).any() || (marg_col.array() < 0.0).any())
    fail(ErrorKind::kInvalidArgument, "marginals must be nonnegative");
  if (std::abs(marg_row.sum() - marg_col.sum()) > 1e-12)
    fail(ErrorKind::kInvalidArgument, "marginal totals differ");

  LpProblem p;
  p.objective.resize(m * n);
  p.eq_matrix = Eigen::MatrixXd::Zero(m + n, m * n);
  p.eq_rhs.resize(m + n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index v = i * n + j;
      p.objective(v) = cost(i, j);
      p.eq_matrix(i, v) = 1.0;
      p.eq_matrix(m + j, v) = 1.0;
    }
  p.eq_rhs.head(m) = marg_row;
  p.eq_rhs.tail(n) = marg_col;
  const LpResult r = solve_lp_exact(p, method);
  if (r.status != LpStatus::kOptimal) fail(ErrorKind::kInfeasible, "transport LP not solvable");
  return r.value;
}

double brute_force_partial_ot(const PartialOtInstance& inst, LpMethod method) {
  validate(inst);
  const Eigen::Index J = static_cast<Eigen::Index>(inst.columns());
  LpProblem p;
  p.objective.resize(2 * J);
  p.eq_matrix = Eigen::MatrixXd::Zero(2, 2 * J);
  p.eq_rhs = Eigen::Vector2d(inst.gamma1[0], inst.gamma1[1]);
  p.ub_matrix = Eigen::MatrixXd::Zero(J, 2 * J);
  p.ub_rhs.resize(J);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < J; ++j) {
      const Eigen::Index v = i * J + j;
      p.objective(v) = inst.pi[i][j];
      p.eq_matrix(i, v) = 1.0;
      p.ub_matrix(j, v) = 1.0;
    }
  for (Eigen::Index j = 0; j < J; ++j) p.ub_rhs(j) = inst.gamma0[j];
  const LpResult r = solve_lp_exact(p, method);
  if (r.status != LpStatus::kOptimal) fail(ErrorKind::kInfeasible, "partial transport LP infeasible");
  return r.value;
}

double kallus_dd_lp(const std::vector<double>& p, const DdCell& cell,
                    const std::vector<double>& class_probs, LpMethod method) {
  const std::size_t J = class_probs.size();
  if (J < 2 || p.size() + 1 != J || cell.p_class.size() != J)
    fail(ErrorKind::kInvalidArgument, "kallus_dd_lp needs J >= 2 classes and |p| = J - 1");
  for (double c : class_probs)
    if (c < 1e-12) fail(ErrorKind::kDegenerateClass, "class probability below 1e-12");

  // Variable P_j(y1) sits at index 2j + y1.
  const Eigen::Index n = static_cast<Eigen::Index>(2 * J);
  const double py1[2] = {1.0 - cell.p_y1, cell.p_y1};
  LpProblem lp;
  lp.objective = Eigen::VectorXd::Zero(n);
  double last = 0.0;
  for (std::size_t j = 0; j + 1 < J; ++j) {
    lp.objective(2 * j + 1) = -p[j] / class_probs[j] * py1[1];
    last += p[j];
  }
  lp.objective(2 * (J - 1) + 1) = last / class_probs[J - 1] * py1[1];

  lp.eq_matrix = Eigen::MatrixXd::Zero(2 + J, n);
  lp.eq_rhs.resize(2 + J);
  for (std::size_t j = 0; j < J; ++j) {
    for (int y = 0; y < 2; ++y) {
      lp.eq_matrix(y, 2 * j + y) = 1.0;
      lp.eq_matrix(2 + j, 2 * j + y) = py1[y];
    }
    lp.eq_rhs(2 + j) = cell.p_class[j];
  }
  lp.eq_rhs(0) = 1.0;
  lp.eq_rhs(1) = 1.0;
  const LpResult r = solve_lp_exact(lp, method);
  if (r.status != LpStatus::kOptimal) fail(ErrorKind::kInfeasible, "contrast LP infeasible");
  return -r.value;
}

}  // namespace otid
