#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "semiholes/diophantine.hpp"
#include "semiholes/integer.hpp"
#include "semiholes/linalg.hpp"
#include "semiholes/polyhedra.hpp"
#include "semiholes/stdpairs.hpp"

namespace semiholes {

/// The affine semigroup Q generated by the columns of A, with its cone K,
/// its lattice and a memoized membership oracle.
///
/// Holes are the points of K ∩ lattice that are not in Q. The lattice is
/// chosen by LatticeMode (see diophantine.hpp).
class SemigroupProblem {
 public:
  /// Throws InvalidArgument on an empty matrix or a zero column, NotPointed if K contains a line.
  explicit SemigroupProblem(IntMat A, LatticeMode mode = LatticeMode::Ambient);

  const IntMat& matrix() const { return A_; }
  std::size_t rows() const { return A_.rows(); }
  std::size_t cols() const { return A_.cols(); }
  LatticeMode lattice_mode() const { return mode_; }
  const ConeDescription& cone() const { return cone_; }
  /// Basis of the lattice as columns (m x r).
  const IntMat& lattice_basis() const { return basis_; }
  const HermiteForm& lattice_hnf() const { return hnf_; }
  /// Integer functional positive on every column: the coordinate sum when possible.
  const IntVec& grading() const { return grading_; }
  Integer degree(const IntVec& b) const { return grading_.dot(b); }

  bool in_cone(const IntVec& b) const { return cone_.contains(b); }
  bool in_lattice(const IntVec& b) const;
  /// Some x >= 0 with A x = b, or nullopt; memoized and verified.
  std::optional<IntVec> semigroup_witness(const IntVec& b) const;
  bool in_semigroup(const IntVec& b) const { return semigroup_witness(b).has_value(); }

  /// Columns expressed in lattice coordinates (full-dimensional in Z^r).
  const std::vector<IntVec>& lattice_coordinates() const { return coords_; }

 private:
  IntMat A_;
  LatticeMode mode_;
  ConeDescription cone_;
  IntMat basis_;
  HermiteForm hnf_;
  IntVec grading_;
  std::vector<IntVec> coords_;
  FeasibilitySolver solver_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<IntVec, std::optional<IntVec>, IntVecHash> cache_;
};

struct PointClass {
  enum class Tag { OutsideCone, OutsideLattice, Hole, InQ };
  Tag tag = Tag::OutsideCone;
  /// InQ: x >= 0 with A x = b. OutsideCone: the violated facet or equation normal.
  /// OutsideLattice: the residue of b modulo the lattice (nonzero).
  std::optional<IntVec> witness;
};

const char* tag_name(PointClass::Tag tag);

PointClass classify_point(const SemigroupProblem& P, const IntVec& b);

/// All fundamental holes, sorted.
///
/// A hole f is fundamental iff f - a_i lies outside K for every column a_i
/// (otherwise f - a_i is a smaller hole below f). Such an f cannot be
/// written as p + a_j with p in the cone of a simplex containing it, so it
/// is a lattice point of the half-open parallelepiped of one simplex of a
/// triangulation of the columns; those points are the candidates.
LatticePointSet fundamental_holes(const SemigroupProblem& P);

/// True iff Q = K ∩ lattice.
bool is_saturated(const SemigroupProblem& P);

/// The same answer through the other route: every Hilbert-basis element of the saturation lies in Q.
bool is_saturated_by_hilbert_basis(const SemigroupProblem& P);

struct ColumnWitness {
  std::size_t column = 0;  // 0-based
  IntVec witness;          // x >= 0 with A x = f + a_column
};

/// Columns i with f + a_i in Q; f + a_i + Q then contains no hole.
std::vector<ColumnWitness> droppable_columns(const SemigroupProblem& P, const IntVec& f);

/// Columns i with f + a_i a hole (the complement of droppable_columns).
std::vector<std::size_t> kept_columns(const SemigroupProblem& P, const IntVec& f);

/// The ideal of exponents lambda (over the chosen columns) with f + A' lambda in Q.
struct HoleIdeal {
  MonomialIdeal ideal;
  std::vector<std::size_t> columns;  // variable k is column columns[k]
};

HoleIdeal hole_ideal(const SemigroupProblem& P, const IntVec& f, const std::vector<std::size_t>& columns);

/// The holes base + sum_{j in free_columns} c_j a_j, c >= 0, with base = fundamental + A root.
struct HoleFamily {
  IntVec fundamental;
  IntVec base;
  std::vector<std::size_t> free_columns;  // 0-based
  IntVec root;                            // standard-pair root over all columns
  friend bool operator==(const HoleFamily&, const HoleFamily&) = default;
};

/// Canonical order: fundamental, base, free columns, root.
bool family_less(const HoleFamily& a, const HoleFamily& b);

std::vector<HoleFamily> holes_above(const SemigroupProblem& P, const IntVec& f, bool use_trick);

struct ReportOptions {
  bool use_trick = true;
  unsigned jobs = 1;
  /// Restrict the family computation to these fundamental holes (all when empty).
  std::vector<IntVec> only;
};

struct HoleReport {
  std::size_t rows = 0, cols = 0;
  LatticePointSet fundamental_holes;
  /// Fundamental holes whose families were computed, in canonical order.
  std::vector<IntVec> examined;
  std::vector<HoleFamily> families;
  bool saturated = true;
};

HoleReport hole_report(const SemigroupProblem& P, const ReportOptions& options = {});

/// Largest positive integer outside the numerical semigroup; -1 when there is none.
/// Throws MultiRow, InvalidArgument (non-positive entry) or GcdNotOne.
Integer frobenius_number(const SemigroupProblem& P);

// ---------------------------------------------------------- self checks ---

/// All points of K ∩ lattice with degree <= D.
LatticePointSet saturation_points_up_to(const SemigroupProblem& P, const Integer& D);

/// Points of degree <= D covered by the families of a report.
LatticePointSet covered_up_to(const SemigroupProblem& P, const std::vector<HoleFamily>& families, const Integer& D);

struct DegreeCheck {
  std::size_t holes = 0;
  std::vector<IntVec> uncovered;  // holes no family reaches
  std::vector<IntVec> spurious;   // covered points that are not holes
  bool ok() const { return uncovered.empty() && spurious.empty(); }
};

/// Exhaustive comparison of the report's families with point classification up to degree D.
/// Only meaningful for reports that examined every fundamental hole.
DegreeCheck degree_check(const SemigroupProblem& P, const HoleReport& report, const Integer& D);

}  // namespace semiholes
