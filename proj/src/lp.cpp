#include "ortho/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace ortho {

int LinearProgram::add_variable(double objective, double lower, double upper) {
  objective_.push_back(objective);
  lower_.push_back(lower);
  upper_.push_back(upper);
  return num_vars() - 1;
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  lower_[static_cast<size_t>(var)] = lower;
  upper_[static_cast<size_t>(var)] = upper;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, double>> terms, double rhs) {
  for (auto& [v, c] : terms) {
    (void)c;
    assert(v >= 0 && v < num_vars());
  }
  rows_.push_back(Row{std::move(terms), rhs});
}

double lp_max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& row : lp.rows()) {
    double lhs = 0.0;
    for (auto [v, c] : row.terms) lhs += c * x[static_cast<size_t>(v)];
    worst = std::max(worst, row.rhs - lhs);
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    double v = x[static_cast<size_t>(j)];
    if (std::isfinite(lp.lower(j))) worst = std::max(worst, lp.lower(j) - v);
    if (std::isfinite(lp.upper(j))) worst = std::max(worst, v - lp.upper(j));
  }
  return worst;
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kBoundTol = 1e-7;

enum class VarState : unsigned char { Basic, AtLower, AtUpper };

// Revised simplex working storage over the normalized problem
//   minimize c.z   s.t.  A z = b,  0 <= z <= U  (U may be +inf)
struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, double>>> col;  // sparse columns (row, coeff)
  std::vector<double> cost;                              // phase-2 cost
  std::vector<double> upper;                             // upper bound per column
  std::vector<double> b;

  std::vector<VarState> state;
  std::vector<int> basic_col;   // per row
  std::vector<double> x_basic;  // per row
  std::vector<double> binv;     // rows x rows, row-major

  double& binv_at(int i, int j) { return binv[static_cast<size_t>(i) * rows + j]; }
  double binv_at(int i, int j) const { return binv[static_cast<size_t>(i) * rows + j]; }

  double nonbasic_value(int j) const {
    return state[static_cast<size_t>(j)] == VarState::AtUpper ? upper[static_cast<size_t>(j)]
                                                              : 0.0;
  }
};

// Rebuilds x_basic from the current basis inverse and nonbasic values.
void refresh_basics(Tableau& t) {
  std::vector<double> rhs = t.b;
  for (int j = 0; j < t.cols; ++j) {
    if (t.state[static_cast<size_t>(j)] == VarState::Basic) continue;
    double v = t.nonbasic_value(j);
    if (v == 0.0) continue;
    for (auto [r, c] : t.col[static_cast<size_t>(j)]) rhs[static_cast<size_t>(r)] -= c * v;
  }
  for (int i = 0; i < t.rows; ++i) {
    double s = 0.0;
    const double* row = &t.binv[static_cast<size_t>(i) * t.rows];
    for (int k = 0; k < t.rows; ++k) s += row[k] * rhs[static_cast<size_t>(k)];
    t.x_basic[static_cast<size_t>(i)] = s;
  }
}

// Tries to invert the basis by greedy triangularization (works whenever the
// basis is a permuted triangular matrix, which holds for tree-structured
// bases and all slack bases). Returns false if that fails.
bool invert_triangular(Tableau& t) {
  int r = t.rows;
  // Row-wise sparse view of the basis matrix.
  std::vector<std::vector<std::pair<int, double>>> rowsp(static_cast<size_t>(r));
  for (int bi = 0; bi < r; ++bi) {
    int j = t.basic_col[static_cast<size_t>(bi)];
    for (auto [ri, c] : t.col[static_cast<size_t>(j)]) {
      rowsp[static_cast<size_t>(ri)].push_back({bi, c});  // column index within basis
    }
  }
  std::vector<int> remaining(static_cast<size_t>(r));  // unassigned nz count per row
  std::vector<int> order_row, order_bcol;
  order_row.reserve(static_cast<size_t>(r));
  order_bcol.reserve(static_cast<size_t>(r));
  std::vector<char> col_done(static_cast<size_t>(r), 0), row_done(static_cast<size_t>(r), 0);
  std::vector<int> queue;
  for (int i = 0; i < r; ++i) {
    remaining[static_cast<size_t>(i)] = static_cast<int>(rowsp[static_cast<size_t>(i)].size());
    if (remaining[static_cast<size_t>(i)] == 1) queue.push_back(i);
  }
  // Column-wise lookup to decrement counts.
  std::vector<std::vector<int>> col_rows(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (auto [bc, c] : rowsp[static_cast<size_t>(i)]) {
      (void)c;
      col_rows[static_cast<size_t>(bc)].push_back(i);
    }
  }
  size_t qh = 0;
  while (qh < queue.size()) {
    int i = queue[qh++];
    if (row_done[static_cast<size_t>(i)] || remaining[static_cast<size_t>(i)] != 1) continue;
    int bc = -1;
    double piv = 0.0;
    for (auto [c, v] : rowsp[static_cast<size_t>(i)]) {
      if (!col_done[static_cast<size_t>(c)]) {
        bc = c;
        piv = v;
      }
    }
    if (bc < 0 || std::fabs(piv) < kPivotTol) return false;
    row_done[static_cast<size_t>(i)] = 1;
    col_done[static_cast<size_t>(bc)] = 1;
    order_row.push_back(i);
    order_bcol.push_back(bc);
    for (int ri : col_rows[static_cast<size_t>(bc)]) {
      if (row_done[static_cast<size_t>(ri)]) continue;
      if (--remaining[static_cast<size_t>(ri)] == 1) queue.push_back(ri);
    }
  }
  if (static_cast<int>(order_row.size()) != r) return false;

  // Forward substitution per unit vector: solve B z = e_k in elimination
  // order; z becomes column k of B^-1.
  std::fill(t.binv.begin(), t.binv.end(), 0.0);
  std::vector<double> z(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    std::fill(z.begin(), z.end(), 0.0);
    for (int step = 0; step < r; ++step) {
      int i = order_row[static_cast<size_t>(step)];
      int bc = order_bcol[static_cast<size_t>(step)];
      double rhs = (i == k) ? 1.0 : 0.0;
      double diag = 0.0;
      for (auto [c, v] : rowsp[static_cast<size_t>(i)]) {
        if (c == bc) {
          diag = v;
        } else {
          rhs -= v * z[static_cast<size_t>(c)];
        }
      }
      z[static_cast<size_t>(bc)] = rhs / diag;
    }
    for (int i = 0; i < r; ++i) t.binv_at(i, k) = z[static_cast<size_t>(i)];
  }
  return true;
}

// Dense Gauss-Jordan fallback.
bool invert_dense(Tableau& t) {
  int r = t.rows;
  std::vector<double> m(static_cast<size_t>(r) * r, 0.0);
  for (int bi = 0; bi < r; ++bi) {
    int j = t.basic_col[static_cast<size_t>(bi)];
    for (auto [ri, c] : t.col[static_cast<size_t>(j)]) m[static_cast<size_t>(ri) * r + bi] = c;
  }
  std::fill(t.binv.begin(), t.binv.end(), 0.0);
  for (int i = 0; i < r; ++i) t.binv_at(i, i) = 1.0;
  for (int c = 0; c < r; ++c) {
    int piv = -1;
    double best = kPivotTol;
    for (int i = c; i < r; ++i) {
      double v = std::fabs(m[static_cast<size_t>(i) * r + c]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv < 0) return false;
    if (piv != c) {
      for (int j = 0; j < r; ++j) {
        std::swap(m[static_cast<size_t>(piv) * r + j], m[static_cast<size_t>(c) * r + j]);
        std::swap(t.binv_at(piv, j), t.binv_at(c, j));
      }
    }
    double d = m[static_cast<size_t>(c) * r + c];
    for (int j = 0; j < r; ++j) {
      m[static_cast<size_t>(c) * r + j] /= d;
      t.binv_at(c, j) /= d;
    }
    for (int i = 0; i < r; ++i) {
      if (i == c) continue;
      double f = m[static_cast<size_t>(i) * r + c];
      if (f == 0.0) continue;
      for (int j = 0; j < r; ++j) {
        m[static_cast<size_t>(i) * r + j] -= f * m[static_cast<size_t>(c) * r + j];
        t.binv_at(i, j) -= f * t.binv_at(c, j);
      }
    }
  }
  return true;
}

bool invert_basis(Tableau& t) { return invert_triangular(t) || invert_dense(t); }

enum class PhaseResult { Optimal, Unbounded };

// Runs the simplex loop on the tableau with the given cost vector.
PhaseResult run_simplex(Tableau& t, const std::vector<double>& cost, int* iter_count) {
  int r = t.rows;
  std::vector<double> y(static_cast<size_t>(r));
  std::vector<double> w(static_cast<size_t>(r));
  bool bland = false;
  int degenerate_streak = 0;
  long iter = 0;
  const long bland_after = 2000 + 8L * (t.cols + r);

  for (;;) {
    ++iter;
    if (iter_count) ++*iter_count;
    if (iter > bland_after) bland = true;

    // Simplex multipliers y = c_B B^-1.
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < r; ++i) {
      double cb = cost[static_cast<size_t>(t.basic_col[static_cast<size_t>(i)])];
      if (cb == 0.0) continue;
      const double* row = &t.binv[static_cast<size_t>(i) * r];
      for (int k = 0; k < r; ++k) y[static_cast<size_t>(k)] += cb * row[k];
    }

    // Pricing.
    int enter = -1;
    double best = kCostTol;
    for (int j = 0; j < t.cols; ++j) {
      VarState st = t.state[static_cast<size_t>(j)];
      if (st == VarState::Basic) continue;
      if (t.upper[static_cast<size_t>(j)] == 0.0) continue;  // fixed at zero
      double d = cost[static_cast<size_t>(j)];
      for (auto [ri, c] : t.col[static_cast<size_t>(j)]) d -= y[static_cast<size_t>(ri)] * c;
      double score = 0.0;
      if (st == VarState::AtLower && d < -kCostTol) score = -d;
      if (st == VarState::AtUpper && d > kCostTol) score = d;
      if (score > best) {
        best = score;
        enter = j;
        if (bland) break;  // first improving index
      }
    }
    if (enter < 0) return PhaseResult::Optimal;

    // Direction: entering moves up from lower or down from upper.
    double sigma = t.state[static_cast<size_t>(enter)] == VarState::AtLower ? 1.0 : -1.0;
    for (int i = 0; i < r; ++i) {
      double s = 0.0;
      const double* row = &t.binv[static_cast<size_t>(i) * r];
      for (auto [ri, c] : t.col[static_cast<size_t>(enter)]) s += row[ri] * c;
      w[static_cast<size_t>(i)] = s;
    }

    // Ratio test: basic variables block at a bound, and the entering variable
    // blocks at its own opposite bound (a bound flip).
    double t_max = t.upper[static_cast<size_t>(enter)];  // may be +inf
    int leave_row = -1;
    double leave_at_upper = false;
    double best_ratio = t_max;
    double best_piv = 0.0;
    for (int i = 0; i < r; ++i) {
      double wi = sigma * w[static_cast<size_t>(i)];
      double xb = t.x_basic[static_cast<size_t>(i)];
      int bj = t.basic_col[static_cast<size_t>(i)];
      if (wi > kPivotTol) {
        double ratio = xb / wi;  // blocks at lower bound 0
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol &&
             (leave_row < 0 || std::fabs(wi) > std::fabs(best_piv)))) {
          best_ratio = std::max(0.0, ratio);
          leave_row = i;
          leave_at_upper = false;
          best_piv = wi;
        }
      } else if (wi < -kPivotTol && std::isfinite(t.upper[static_cast<size_t>(bj)])) {
        double ratio = (t.upper[static_cast<size_t>(bj)] - xb) / (-wi);
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol &&
             (leave_row < 0 || std::fabs(wi) > std::fabs(best_piv)))) {
          best_ratio = std::max(0.0, ratio);
          leave_row = i;
          leave_at_upper = true;
          best_piv = wi;
        }
      }
    }

    if (leave_row < 0 && !std::isfinite(t_max)) return PhaseResult::Unbounded;

    double step = leave_row < 0 ? t_max : best_ratio;
    if (step <= kPivotTol) {
      if (++degenerate_streak > 200) bland = true;
    } else {
      degenerate_streak = 0;
    }

    // Apply the step to the basic values.
    for (int i = 0; i < r; ++i) {
      t.x_basic[static_cast<size_t>(i)] -= sigma * step * w[static_cast<size_t>(i)];
    }

    if (leave_row < 0) {
      // Bound flip, basis unchanged.
      t.state[static_cast<size_t>(enter)] = sigma > 0 ? VarState::AtUpper : VarState::AtLower;
      continue;
    }

    int leave_col = t.basic_col[static_cast<size_t>(leave_row)];
    t.state[static_cast<size_t>(leave_col)] =
        leave_at_upper ? VarState::AtUpper : VarState::AtLower;
    double enter_value =
        (t.state[static_cast<size_t>(enter)] == VarState::AtLower
             ? 0.0
             : t.upper[static_cast<size_t>(enter)]) +
        sigma * step;
    t.state[static_cast<size_t>(enter)] = VarState::Basic;
    t.basic_col[static_cast<size_t>(leave_row)] = enter;
    t.x_basic[static_cast<size_t>(leave_row)] = enter_value;

    // Rank-1 update of B^-1.
    double wp = w[static_cast<size_t>(leave_row)];
    double* prow = &t.binv[static_cast<size_t>(leave_row) * r];
    for (int k = 0; k < r; ++k) prow[k] /= wp;
    for (int i = 0; i < r; ++i) {
      if (i == leave_row) continue;
      double f = w[static_cast<size_t>(i)];
      if (f == 0.0) continue;
      double* row = &t.binv[static_cast<size_t>(i) * r];
      for (int k = 0; k < r; ++k) row[k] -= f * prow[k];
    }
  }
}

struct VarMap {
  // Normalized images of an original variable. kind:
  //   0: z = x - lower            (one column)
  //   1: z = upper - x            (one column, negated coefficients)
  //   2: x = z_pos - z_neg        (two columns)
  int kind = 0;
  int col0 = -1;
  int col1 = -1;
  double shift = 0.0;  // lower (kind 0) or upper (kind 1)
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpBasisHint* hint) {
  LpSolution out;
  int n = lp.num_vars();
  int r = lp.num_rows();

  // Normalize variables to [0, U].
  std::vector<VarMap> vmap(static_cast<size_t>(n));
  Tableau t;
  t.rows = r;
  auto add_col = [&](double ub) {
    t.col.emplace_back();
    t.upper.push_back(ub);
    t.cost.push_back(0.0);
    return static_cast<int>(t.col.size()) - 1;
  };
  double obj_offset = 0.0;
  for (int j = 0; j < n; ++j) {
    double lo = lp.lower(j), up = lp.upper(j), c = lp.objective()[static_cast<size_t>(j)];
    VarMap& m = vmap[static_cast<size_t>(j)];
    if (std::isfinite(lo)) {
      m.kind = 0;
      m.shift = lo;
      m.col0 = add_col(std::isfinite(up) ? up - lo : kLpInf);
      t.cost[static_cast<size_t>(m.col0)] = c;
      obj_offset += c * lo;
    } else if (std::isfinite(up)) {
      m.kind = 1;
      m.shift = up;
      m.col0 = add_col(kLpInf);
      t.cost[static_cast<size_t>(m.col0)] = -c;
      obj_offset += c * up;
    } else {
      m.kind = 2;
      m.col0 = add_col(kLpInf);
      m.col1 = add_col(kLpInf);
      t.cost[static_cast<size_t>(m.col0)] = c;
      t.cost[static_cast<size_t>(m.col1)] = -c;
    }
  }

  // Rows with adjusted right-hand sides, plus one surplus column per row.
  t.b.assign(static_cast<size_t>(r), 0.0);
  for (int i = 0; i < r; ++i) {
    const auto& row = lp.rows()[static_cast<size_t>(i)];
    double rhs = row.rhs;
    for (auto [v, c] : row.terms) {
      const VarMap& m = vmap[static_cast<size_t>(v)];
      switch (m.kind) {
        case 0:
          t.col[static_cast<size_t>(m.col0)].push_back({i, c});
          rhs -= c * m.shift;
          break;
        case 1:
          t.col[static_cast<size_t>(m.col0)].push_back({i, -c});
          rhs -= c * m.shift;
          break;
        case 2:
          t.col[static_cast<size_t>(m.col0)].push_back({i, c});
          t.col[static_cast<size_t>(m.col1)].push_back({i, -c});
          break;
      }
    }
    t.b[static_cast<size_t>(i)] = rhs;
  }
  int first_surplus = static_cast<int>(t.col.size());
  for (int i = 0; i < r; ++i) {
    int sc = add_col(kLpInf);
    t.col[static_cast<size_t>(sc)].push_back({i, -1.0});
  }
  t.cols = static_cast<int>(t.col.size());
  t.state.assign(static_cast<size_t>(t.cols), VarState::AtLower);
  t.basic_col.assign(static_cast<size_t>(r), -1);
  t.x_basic.assign(static_cast<size_t>(r), 0.0);
  t.binv.assign(static_cast<size_t>(r) * r, 0.0);

  int iterations = 0;
  bool have_feasible_basis = false;

  // Try the caller's starting basis.
  if (hint && static_cast<int>(hint->row_basic_var.size()) == r) {
    bool ok = true;
    std::vector<char> used(static_cast<size_t>(t.cols), 0);
    for (int i = 0; i < r && ok; ++i) {
      int v = hint->row_basic_var[static_cast<size_t>(i)];
      int colidx;
      if (v < 0) {
        colidx = first_surplus + i;
      } else if (v < n && vmap[static_cast<size_t>(v)].kind == 0) {
        colidx = vmap[static_cast<size_t>(v)].col0;
      } else {
        ok = false;
        break;
      }
      if (used[static_cast<size_t>(colidx)]) {
        ok = false;
        break;
      }
      used[static_cast<size_t>(colidx)] = 1;
      t.basic_col[static_cast<size_t>(i)] = colidx;
    }
    if (ok) {
      for (int i = 0; i < r; ++i) {
        t.state[static_cast<size_t>(t.basic_col[static_cast<size_t>(i)])] = VarState::Basic;
      }
      if (invert_basis(t)) {
        refresh_basics(t);
        bool feasible = true;
        for (int i = 0; i < r; ++i) {
          double xb = t.x_basic[static_cast<size_t>(i)];
          double ub = t.upper[static_cast<size_t>(t.basic_col[static_cast<size_t>(i)])];
          if (xb < -kBoundTol || xb > ub + kBoundTol) {
            feasible = false;
            break;
          }
        }
        have_feasible_basis = feasible;
      }
      if (!have_feasible_basis) {
        for (auto& s : t.state) s = VarState::AtLower;
        std::fill(t.basic_col.begin(), t.basic_col.end(), -1);
      }
    }
  }

  if (!have_feasible_basis) {
    // Slack start; artificial columns for rows infeasible at the origin.
    std::vector<int> artificial_cols;
    for (int i = 0; i < r; ++i) {
      if (t.b[static_cast<size_t>(i)] <= 0.0) {
        t.basic_col[static_cast<size_t>(i)] = first_surplus + i;
      } else {
        int ac = add_col(kLpInf);
        t.col[static_cast<size_t>(ac)].push_back({i, 1.0});
        t.basic_col[static_cast<size_t>(i)] = ac;
        artificial_cols.push_back(ac);
      }
    }
    t.cols = static_cast<int>(t.col.size());
    t.state.resize(static_cast<size_t>(t.cols), VarState::AtLower);
    t.binv.assign(static_cast<size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) {
      int bc = t.basic_col[static_cast<size_t>(i)];
      t.state[static_cast<size_t>(bc)] = VarState::Basic;
      t.binv_at(i, i) = bc >= first_surplus + r ? 1.0 : -1.0;  // artificial vs surplus
      t.x_basic[static_cast<size_t>(i)] = std::fabs(t.b[static_cast<size_t>(i)]);
    }
    t.cost.resize(static_cast<size_t>(t.cols), 0.0);

    if (!artificial_cols.empty()) {
      std::vector<double> phase1(static_cast<size_t>(t.cols), 0.0);
      for (int ac : artificial_cols) phase1[static_cast<size_t>(ac)] = 1.0;
      run_simplex(t, phase1, &iterations);
      double infeas = 0.0;
      for (int i = 0; i < r; ++i) {
        int bc = t.basic_col[static_cast<size_t>(i)];
        if (phase1[static_cast<size_t>(bc)] > 0.0) infeas += t.x_basic[static_cast<size_t>(i)];
      }
      for (int j = 0; j < t.cols; ++j) {
        if (phase1[static_cast<size_t>(j)] > 0.0 &&
            t.state[static_cast<size_t>(j)] != VarState::Basic) {
          t.upper[static_cast<size_t>(j)] = 0.0;  // pin nonbasic artificials
        }
      }
      if (infeas > 1e-7) {
        out.status = LpStatus::Infeasible;
        out.iterations = iterations;
        return out;
      }
      // Pin any basic artificial (value ~0) by its bounds.
      for (int ac : artificial_cols) t.upper[static_cast<size_t>(ac)] = 0.0;
    }
  }

  PhaseResult res = run_simplex(t, t.cost, &iterations);
  if (res == PhaseResult::Unbounded) {
    out.status = LpStatus::Unbounded;
    out.iterations = iterations;
    return out;
  }

  refresh_basics(t);

  // Extract the solution.
  std::vector<double> z(static_cast<size_t>(t.cols), 0.0);
  for (int j = 0; j < t.cols; ++j) {
    if (t.state[static_cast<size_t>(j)] != VarState::Basic) z[static_cast<size_t>(j)] = t.nonbasic_value(j);
  }
  for (int i = 0; i < r; ++i) {
    z[static_cast<size_t>(t.basic_col[static_cast<size_t>(i)])] =
        t.x_basic[static_cast<size_t>(i)];
  }
  out.x.assign(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const VarMap& m = vmap[static_cast<size_t>(j)];
    double v = 0.0;
    switch (m.kind) {
      case 0: v = m.shift + z[static_cast<size_t>(m.col0)]; break;
      case 1: v = m.shift - z[static_cast<size_t>(m.col0)]; break;
      case 2: v = z[static_cast<size_t>(m.col0)] - z[static_cast<size_t>(m.col1)]; break;
    }
    out.x[static_cast<size_t>(j)] = v;
  }
  out.objective = 0.0;
  for (int j = 0; j < n; ++j) {
    out.objective += lp.objective()[static_cast<size_t>(j)] * out.x[static_cast<size_t>(j)];
  }
  (void)obj_offset;
  out.status = LpStatus::Optimal;
  out.iterations = iterations;
  return out;
}

}  // namespace ortho
