#pragma once

#include <cstddef>
#include <vector>

namespace skyq::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Row {
  std::vector<double> coeffs;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

/// minimize objective . x  subject to rows, x >= 0.
struct Problem {
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  double value = 0.0;
  std::vector<double> x;
};

/// Dense two-phase simplex with Bland's rule. Sized for the handful of
/// variables and few hundred rows that preference-space problems produce.
Solution solve(const Problem& problem);

}  // namespace skyq::lp
