#include "semiholes/rational_lp.hpp"

#include "semiholes/errors.hpp"

namespace semiholes {

namespace {

class Tableau {
 public:
  // rows: constraint rows; last column holds the rhs.
  std::vector<std::vector<Rational>> T;
  std::vector<Rational> obj;  // reduced costs (maximize), obj.back() = -value
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = T[r][c];
    for (auto& v : T[r]) v /= p;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == r || T[i][c] == 0) continue;
      Rational f = T[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (T[r][j] != 0) T[i][j] -= f * T[r][j];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (T[r][j] != 0) obj[j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded. Only columns < allowed may enter.
  bool run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = T.size();
      Rational best;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i][enter] <= 0) continue;
        Rational ratio = T[i][ncols] / T[i][enter];
        if (leave == T.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == T.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const StandardFormLp& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw DimensionMismatch("solve_lp: rhs length mismatch");
  for (const auto& row : lp.A)
    if (row.size() != n) throw DimensionMismatch("solve_lp: row length mismatch");

  Tableau tab;
  tab.ncols = n + m;
  tab.T.assign(m, std::vector<Rational>(tab.ncols + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.T[i][j] = flip ? Rational(-lp.A[i][j]) : lp.A[i][j];
    tab.T[i][n + i] = 1;
    tab.T[i][tab.ncols] = flip ? Rational(-lp.b[i]) : lp.b[i];
    tab.basis[i] = n + i;
  }

  // Phase 1: maximize -sum(artificials).
  tab.obj.assign(tab.ncols + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= tab.ncols; ++j)
      if (j < n || j == tab.ncols) tab.obj[j] += tab.T[i][j];
  tab.run(n);
  LpResult result;
  if (tab.obj[tab.ncols] != 0) {
    result.status = LpResult::Status::Infeasible;
    return result;
  }
  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.T.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.T[i][j] != 0) {
        col = j;
        break;
      }
    if (col == n) {
      tab.T.erase(tab.T.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  // Phase 2.
  tab.obj.assign(tab.ncols + 1, 0);
  for (std::size_t j = 0; j < n; ++j) tab.obj[j] = lp.c[j];
  for (std::size_t i = 0; i < tab.T.size(); ++i) {
    const std::size_t bj = tab.basis[i];
    if (bj < n && lp.c[bj] != 0) {
      Rational f = lp.c[bj];
      for (std::size_t j = 0; j <= tab.ncols; ++j)
        if (tab.T[i][j] != 0) tab.obj[j] -= f * tab.T[i][j];
    }
  }
  if (!tab.run(n)) {
    result.status = LpResult::Status::Unbounded;
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.T.size(); ++i)
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.T[i][tab.ncols];
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.c[j] * result.x[j];
  return result;
}

}  // namespace semiholes
