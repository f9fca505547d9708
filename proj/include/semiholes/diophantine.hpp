#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "semiholes/integer.hpp"

namespace semiholes {

/// Non-negative solutions that are minimal under the coordinatewise order, sorted lexicographically.
struct MinimalSolutionSet {
  std::vector<IntVec> solutions;
  std::size_t size() const { return solutions.size(); }
  friend bool operator==(const MinimalSolutionSet&, const MinimalSolutionSet&) = default;
};

/// Minimal generating set of a pointed affine monoid, sorted lexicographically.
struct HilbertBasis {
  std::vector<IntVec> elements;
  std::size_t size() const { return elements.size(); }
  bool contains(const IntVec& v) const;
  friend bool operator==(const HilbertBasis&, const HilbertBasis&) = default;
};

/// Which lattice the saturation is taken in.
///
/// Ambient uses Z^m intersected with the linear span of the columns (the
/// lattice of all integer points of the span); Generated uses the lattice
/// L(A) spanned by the columns themselves. They agree whenever L(A) is
/// saturated in its span.
enum class LatticeMode { Ambient, Generated };

/// Hilbert basis of {x in Z^n : x >= 0, B x = 0}.
HilbertBasis minimal_nonneg_kernel(const IntMat& B);

/// Minimal elements of {x in Z^n : x >= 0, B x = c}.
MinimalSolutionSet minimal_solutions(const IntMat& B, const IntVec& c);

/// Minimal (lambda, mu) >= 0 with f + A lambda = A mu, returned as concatenated vectors of length 2n.
MinimalSolutionSet minimal_inhomogeneous(const IntMat& A, const IntVec& f);

/// Hilbert basis of the saturation K(A) ∩ lattice; throws NotPointed.
HilbertBasis saturation_hilbert_basis(const IntMat& A, LatticeMode mode = LatticeMode::Ambient);

/// Depth-first search for x >= 0 integral with A x = b.
///
/// The constructor precomputes, for every suffix of the (reordered) columns,
/// the inequality description of the suffix cone and a triangular basis of
/// the suffix lattice; solve() then only does checked machine arithmetic.
class FeasibilitySolver {
 public:
  explicit FeasibilitySolver(const IntMat& A);
  ~FeasibilitySolver();
  FeasibilitySolver(FeasibilitySolver&&) noexcept;
  FeasibilitySolver& operator=(FeasibilitySolver&&) noexcept;

  /// Some witness x (in the original column order) or nullopt. Thread-safe.
  std::optional<IntVec> solve(const IntVec& b) const;
  const IntMat& matrix() const { return A_; }

 private:
  struct Impl;
  IntMat A_;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper; throws NotPointed or DimensionMismatch.
std::optional<IntVec> integer_feasible(const IntMat& A, const IntVec& b);

}  // namespace semiholes
