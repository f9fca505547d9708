#pragma once

#include <optional>
#include <vector>

#include "semiholes/integer.hpp"

namespace semiholes {

/// Column-style Hermite normal form: H = M * U with U unimodular.
///
/// H is lower-triangular echelon: pivot k sits at (pivot_rows[k], k), is
/// positive, and every entry left of it in its row lies in [0, pivot).
/// Columns rank..n-1 of H are zero and the same columns of U span ker_Z(M).
struct HermiteForm {
  IntMat H;
  IntMat U;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteForm hermite_normal_form(const IntMat& M);

/// Some x with M x = b over the integers, or nullopt when b is not in L(M).
std::optional<IntVec> solve_integer(const IntMat& M, const IntVec& b);
std::optional<IntVec> solve_integer(const HermiteForm& hnf, const IntVec& b);

struct LatticeRankIndex {
  std::size_t rank = 0;
  /// [Z^m : L(M)] when the lattice has full rank, nullopt ("infinite") otherwise.
  std::optional<Integer> index;
};

LatticeRankIndex lattice_rank_index(const IntMat& M);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMat& M);

std::size_t rank(const IntMat& M);

/// Basis of ker_Z(M) as columns of the returned n x (n - rank) matrix.
IntMat integer_kernel(const IntMat& M);

/// Basis (as columns) of L(M), the lattice generated by the columns.
IntMat column_lattice_basis(const IntMat& M);

/// Basis (as columns) of Z^m ∩ span(M), the saturation of L(M) in its span.
IntMat span_lattice_basis(const IntMat& M);

/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
IntMat adjugate(const IntMat& M);

/// Extended gcd: g = s*a + t*b with g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t);

}  // namespace semiholes
