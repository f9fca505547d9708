#pragma once

#include <optional>
#include <vector>

#include "semiholes/integer.hpp"
#include "semiholes/polyhedra.hpp"
#include "semiholes/semigroup.hpp"

namespace semiholes {

/// Design matrix of the common diagonal effect model for d x d tables.
///
/// Column a_ij (1-based i, j) sits at index (i-1)d + (j-1) and has ones in
/// coordinates j, d+i and, when i = j, 2d+1 (1-based): row sums, column sums
/// and the diagonal sum of the table.
struct CdemInstance {
  std::size_t d = 0;
  IntMat matrix;
  std::size_t column(std::size_t i, std::size_t j) const { return (i - 1) * d + (j - 1); }
  IntVec a(std::size_t i, std::size_t j) const { return matrix.column(column(i, j)); }
};

CdemInstance cdem_matrix(std::size_t d);

/// h_kl = (a_kk + a_kl + a_lk + a_ll) / 2 for k < l (1-based).
IntVec cdem_hole(const CdemInstance& inst, std::size_t k, std::size_t l);

/// The predicted holes: every h_kl is fundamental, and the holes above it are
/// h_kl + <a_kk, a_kl, a_lk, a_ll> together with h_kl + <a_11, ..., a_dd>.
struct CdemExpected {
  LatticePointSet fundamental;
  std::vector<HoleFamily> families;
};

CdemExpected cdem_expected(std::size_t d);

/// z_i + z_{d+i} <= z_1 + ... + z_d for every i in [d].
bool hall_condition(const IntVec& z, std::size_t d);

/// A lattice polytope and the generators of its height-one lift.
struct PolytopeInstance {
  std::size_t dim = 0;
  std::vector<IntVec> vertices;
  IntMat lifted;  // columns (z, 1) for every lattice point z of the polytope
};

/// Linear ordering polytope P_n: v_ij(pi) = 1 iff pi(i) > pi(j), i < j. Requires 2 <= n <= 8.
PolytopeInstance lop_matrix(std::size_t n);

/// Maximum number of bounding-box points polytope_lift is willing to scan.
inline constexpr long kMaxLiftBox = 1'000'000;

/// Lattice points of conv(vertices), lifted to height one.
PolytopeInstance polytope_lift(const std::vector<IntVec>& vertices);

struct IdpResult {
  bool holds = true;
  /// When false: a fundamental hole of the lift, of minimal height.
  std::optional<IntVec> certificate;
};

/// The polytope has the integer decomposition property iff its lift is saturated (ambient lattice).
IdpResult idp_check(const PolytopeInstance& P);

}  // namespace semiholes
