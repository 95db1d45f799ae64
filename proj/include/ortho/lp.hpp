#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ortho {

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

// A linear program in the form
//   minimize    c . x
//   subject to  sum_j a_ij x_j >= b_i          (one row per constraint)
//               lower_j <= x_j <= upper_j      (bounds may be infinite)
//
// Difference constraints (x_j - x_i >= c, possibly with a distance variable
// on the right-hand side moved over to the left) are expressed as ordinary
// rows; the solver does not assume any special structure.
class LinearProgram {
 public:
  struct Row {
    std::vector<std::pair<int, double>> terms;
    double rhs = 0.0;
  };

  // Returns the new variable's index.
  int add_variable(double objective = 0.0, double lower = -kLpInf, double upper = kLpInf);

  void set_objective(int var, double coeff) { objective_[static_cast<size_t>(var)] = coeff; }
  void add_objective(int var, double coeff) { objective_[static_cast<size_t>(var)] += coeff; }
  void set_bounds(int var, double lower, double upper);

  // Adds the constraint sum(terms) >= rhs. Variable indices must be valid.
  void add_constraint(std::vector<std::pair<int, double>> terms, double rhs);

  int num_vars() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<double>& objective() const { return objective_; }
  double lower(int var) const { return lower_[static_cast<size_t>(var)]; }
  double upper(int var) const { return upper_[static_cast<size_t>(var)]; }

 private:
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<Row> rows_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;      // only valid when status == Optimal
  double objective = 0.0;     // only valid when status == Optimal
  int iterations = 0;
};

// Starting-basis hint: for each row either the index of a structural variable
// whose constraint is tight at the intended starting point, or -1 to use the
// row's own surplus variable. The hinted basis must be nonsingular and the
// implied starting point feasible; otherwise the solver silently falls back
// to its own phase-1 start.
struct LpBasisHint {
  std::vector<int> row_basic_var;
};

LpSolution solve_lp(const LinearProgram& lp, const LpBasisHint* hint = nullptr);

// Residual check: largest violation of any row or bound at x.
double lp_max_violation(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace ortho
