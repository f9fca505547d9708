#pragma once

#include <vector>

#include "semiholes/integer.hpp"

namespace semiholes {

/// Exact two-phase simplex (Bland's rule) over the rationals.
///
/// Solves  maximize c.x  subject to  A x = b, x >= 0.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

struct StandardFormLp {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

LpResult solve_lp(const StandardFormLp& lp);

}  // namespace semiholes
