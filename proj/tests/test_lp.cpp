#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ortho/lp.hpp"

using namespace ortho;

TEST_SUITE_BEGIN("lp");

TEST_CASE("single binding upper bound") {
  LinearProgram lp;
  int x = lp.add_variable(-1.0, 0.0, 5.0);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[static_cast<size_t>(x)] == doctest::Approx(5.0));
  CHECK(s.objective == doctest::Approx(-5.0));
}

TEST_CASE("contradictory constraints are infeasible") {
  LinearProgram lp;
  int x = lp.add_variable(0.0, 0.0, kLpInf);
  lp.add_constraint({{x, 1.0}}, 1.0);    // x >= 1
  lp.add_constraint({{x, -1.0}}, 0.0);   // -x >= 0  <=>  x <= 0
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded improvement is reported") {
  LinearProgram lp;
  int x = lp.add_variable(-1.0, 0.0, kLpInf);
  lp.add_constraint({{x, 1.0}}, 2.0);  // x >= 2, minimize -x
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("nudging toy: two movable segments between fixed walls") {
  // Walls at 0 and 12, segments s1, s2, one shared distance variable d:
  //   s1 - d >= 0, s2 - s1 - d >= 0, 12 - s2 - d >= 0, minimize -d.
  LinearProgram lp;
  int s1 = lp.add_variable(0.0, -100.0, kLpInf);
  int s2 = lp.add_variable(0.0, -100.0, kLpInf);
  int d = lp.add_variable(-1.0, 0.0, kLpInf);
  lp.add_constraint({{s1, 1.0}, {d, -1.0}}, 0.0);
  lp.add_constraint({{s2, 1.0}, {s1, -1.0}, {d, -1.0}}, 0.0);
  lp.add_constraint({{s2, -1.0}, {d, -1.0}}, -12.0);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[static_cast<size_t>(d)] == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(s.x[static_cast<size_t>(s1)] == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(s.x[static_cast<size_t>(s2)] == doctest::Approx(8.0).epsilon(1e-6));
}

TEST_CASE("free variables work") {
  LinearProgram lp;
  int x = lp.add_variable(1.0);  // free, minimize x
  lp.add_constraint({{x, 1.0}}, -7.5);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.x[static_cast<size_t>(x)] == doctest::Approx(-7.5));
}

namespace {

// Exhaustive oracle for tiny LPs with all-finite boxes: evaluate every vertex
// candidate from tight constraint/bound subsets.
struct TinyLp {
  int nvars;
  std::vector<std::vector<double>> rows;  // dense coefficients
  std::vector<double> rhs;                // row >= rhs
  std::vector<double> lo, hi;
  std::vector<double> obj;
};

bool feasible(const TinyLp& t, const std::vector<double>& x) {
  for (size_t r = 0; r < t.rows.size(); ++r) {
    double lhs = 0;
    for (int j = 0; j < t.nvars; ++j) lhs += t.rows[r][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    if (lhs < t.rhs[r] - 1e-7) return false;
  }
  for (int j = 0; j < t.nvars; ++j) {
    if (x[static_cast<size_t>(j)] < t.lo[static_cast<size_t>(j)] - 1e-7) return false;
    if (x[static_cast<size_t>(j)] > t.hi[static_cast<size_t>(j)] + 1e-7) return false;
  }
  return true;
}

// Gaussian solve of an n x n system; false if singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>* out) {
  int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    double best = 1e-9;
    for (int r = c; r < n; ++r) {
      if (std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) > best) {
        best = std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        piv = r;
      }
    }
    if (piv < 0) return false;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
    std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(c)]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] / a[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int k = c; k < n; ++k) a[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(c)];
    }
  }
  out->assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) (*out)[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] / a[static_cast<size_t>(i)][static_cast<size_t>(i)];
  return true;
}

// Minimum objective over all basic feasible points (vertex enumeration).
std::optional<double> oracle_optimum(const TinyLp& t) {
  // Equality candidates: every row and every bound.
  struct Cand {
    std::vector<double> coeffs;
    double value;
  };
  std::vector<Cand> cands;
  for (size_t r = 0; r < t.rows.size(); ++r) cands.push_back({t.rows[r], t.rhs[r]});
  for (int j = 0; j < t.nvars; ++j) {
    std::vector<double> unit(static_cast<size_t>(t.nvars), 0.0);
    unit[static_cast<size_t>(j)] = 1.0;
    cands.push_back({unit, t.lo[static_cast<size_t>(j)]});
    cands.push_back({unit, t.hi[static_cast<size_t>(j)]});
  }
  int c = static_cast<int>(cands.size());
  std::optional<double> best;
  std::vector<int> pick(static_cast<size_t>(t.nvars), 0);
  // Enumerate all nvars-subsets of candidates.
  std::vector<int> idx(static_cast<size_t>(t.nvars));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == t.nvars) {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      for (int k = 0; k < t.nvars; ++k) {
        a.push_back(cands[static_cast<size_t>(idx[static_cast<size_t>(k)])].coeffs);
        b.push_back(cands[static_cast<size_t>(idx[static_cast<size_t>(k)])].value);
      }
      std::vector<double> x;
      if (!solve_square(a, b, &x) || !feasible(t, x)) return;
      double v = 0;
      for (int j = 0; j < t.nvars; ++j) v += t.obj[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
      if (!best || v < *best) best = v;
      return;
    }
    for (int i = start; i < c; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  (void)pick;
  return best;
}

}  // namespace

TEST_CASE("random small programs match vertex enumeration") {
  std::mt19937_64 rng(2024);
  auto u = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int nvars = 2 + static_cast<int>(rng() % 3);  // 2..4
    TinyLp t;
    t.nvars = nvars;
    for (int j = 0; j < nvars; ++j) {
      double lo = u(-5, 0), hi = u(1, 8);
      t.lo.push_back(lo);
      t.hi.push_back(hi);
      t.obj.push_back(u(-3, 3));
    }
    int nrows = 1 + static_cast<int>(rng() % 4);
    for (int r = 0; r < nrows; ++r) {
      std::vector<double> row;
      for (int j = 0; j < nvars; ++j) row.push_back(u(-2, 2));
      t.rows.push_back(row);
      t.rhs.push_back(u(-6, 2));
    }

    LinearProgram lp;
    for (int j = 0; j < nvars; ++j) lp.add_variable(t.obj[static_cast<size_t>(j)], t.lo[static_cast<size_t>(j)], t.hi[static_cast<size_t>(j)]);
    for (size_t r = 0; r < t.rows.size(); ++r) {
      std::vector<std::pair<int, double>> terms;
      for (int j = 0; j < nvars; ++j) terms.push_back({j, t.rows[r][static_cast<size_t>(j)]});
      lp.add_constraint(std::move(terms), t.rhs[r]);
    }
    LpSolution s = solve_lp(lp);
    auto expect = oracle_optimum(t);
    if (!expect) {
      CHECK(s.status == LpStatus::Infeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::Optimal);  // boxes are bounded
    CHECK(s.objective == doctest::Approx(*expect).epsilon(1e-6));
    CHECK(lp_max_violation(lp, s.x) < 1e-7);
    ++solved;
  }
  CHECK(solved > 20);  // the sampler must produce plenty of feasible programs
}

TEST_CASE("identical programs yield identical optima") {
  auto build = [] {
    LinearProgram lp;
    int a = lp.add_variable(1.0, 0.0, kLpInf);
    int b = lp.add_variable(1.0, 0.0, kLpInf);
    lp.add_constraint({{a, 1.0}, {b, 1.0}}, 4.0);  // degenerate optimum face
    return lp;
  };
  LpSolution s1 = solve_lp(build());
  LpSolution s2 = solve_lp(build());
  REQUIRE(s1.status == LpStatus::Optimal);
  CHECK(s1.x == s2.x);
}

TEST_SUITE_END();
