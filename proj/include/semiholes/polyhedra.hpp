#pragma once

#include <optional>
#include <vector>

#include "semiholes/integer.hpp"

namespace semiholes {

/// Both descriptions of a polyhedral cone K = cone(generators).
///
/// z is in K iff facet . z >= 0 for every facet and eq . z == 0 for every
/// implicit equation. Facets are primitive and lie in the linear span of
/// the generators, so the representation is canonical.
struct ConeDescription {
  std::vector<IntVec> generators;
  std::vector<IntVec> facets;
  std::size_t lineality_dim = 0;
  std::vector<IntVec> implicit_equations;

  std::size_t ambient_dim() const;
  bool pointed() const { return lineality_dim == 0; }
  bool contains(const IntVec& z) const;
  /// Index of a violated facet, or of facets.size() + equation index, or nullopt.
  std::optional<std::size_t> violated_constraint(const IntVec& z) const;
};

ConeDescription dual_description(const std::vector<IntVec>& generators);

bool is_pointed(const std::vector<IntVec>& generators);

/// Lattice points, lexicographically sorted and duplicate-free.
struct LatticePointSet {
  std::vector<IntVec> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool contains(const IntVec& p) const;
  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

LatticePointSet make_point_set(std::vector<IntVec> points);
std::ostream& operator<<(std::ostream& os, const LatticePointSet& s);

struct LinearConstraint {
  IntVec normal;
  Rational rhs;
};

/// {z in Z^dim : eq.normal . z == eq.rhs, ineq.normal . z >= ineq.rhs, strict.normal . z < strict.rhs}.
struct Region {
  std::size_t dim = 0;
  std::vector<LinearConstraint> equations;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> strict_upper;
};

/// Exact enumeration of Z^dim inside a bounded region; throws UnboundedRegion.
LatticePointSet enumerate_lattice_points(const Region& region);

/// All z in Z^m with z = A lambda for some rational lambda in [0,1)^n.
LatticePointSet parallelepiped_points(const IntMat& A);

/// Exact rational test: does z = A lambda admit lambda in [0,1)^n?
bool in_half_open_parallelepiped(const IntMat& A, const IntVec& z);

/// Placing triangulation of the full-dimensional cone spanned by `generators`
/// in R^r; each simplex lists r generator indices.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& generators);

/// Z^r points of {sum q_j v_j : 0 <= q_j < 1} for r linearly independent v_j in Z^r.
std::vector<IntVec> simplicial_parallelepiped_points(const std::vector<IntVec>& simplex);

}  // namespace semiholes
