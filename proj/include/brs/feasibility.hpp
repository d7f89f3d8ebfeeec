#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brs/rational.hpp"

namespace brs {

// Exact rational constraint system A x = b with per-variable bounds.
// Lower bounds are finite; an empty optional upper bound means +infinity.
struct LinearSystem {
  MatQ a;
  VecQ b;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  int num_vars() const { return static_cast<int>(a.cols()); }
  int num_rows() const { return static_cast<int>(a.rows()); }

  // lower = 0, upper = +infinity for every variable
  static LinearSystem nonneg(MatQ a, VecQ b);
};

// True iff m is a nonnegative integer combination of the parts. gcd and
// Frobenius-bound prefilters, then a boolean DP.
bool partition_exists(const Integer& m, const std::vector<Integer>& parts);

// Integer solution of A x = b with unrestricted signs, via a column-style
// Hermite reduction; returns a witness when one exists.
std::optional<VecZ> integral_solution(const LinearSystem& sys);
bool has_integral_solution(const LinearSystem& sys);

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded, Budget };
  Status status = Status::Budget;
  Rational value;
  VecQ point;  // all original variables, only meaningful when Optimal
  long pivots = 0;
};

// Exact bounded-variable simplex with Bland's rule. The objective is the
// single variable `objective_var`, or a pure feasibility solve when -1.
LpResult lp_max(const LinearSystem& sys, int objective_var, long pivot_budget = 2000000);

struct Budget {
  long lp_pivots = 2000000;
  long bb_nodes = 200000;
};

struct FeasibilityResult {
  enum class Status { Feasible, Infeasible, Unknown };
  Status status = Status::Unknown;
  VecZ witness;        // verified exactly when Feasible
  std::string stage;   // "integral", "lp" or "search"
  long nodes = 0;
};

// The three-stage procedure: integral solvability, LP bounding per variable
// (which may prove infeasibility or force variables), then depth-first
// branch and bound on exact LP relaxations.
FeasibilityResult has_nonneg_integer_solution(LinearSystem sys,
                                              const Budget& budget = Budget{});

}  // namespace brs
