#pragma once

#include <vector>

#include "semiholes/integer.hpp"

namespace semiholes {

/// Monomial ideal given by exponent vectors; minimal and sorted once built by minimalize().
struct MonomialIdeal {
  std::size_t num_vars = 0;
  std::vector<IntVec> generators;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// Drops generators divisible by others (and duplicates); sorts the rest.
MonomialIdeal minimalize(std::size_t num_vars, std::vector<IntVec> generators);

/// True when no generator divides x^e.
bool is_standard(const MonomialIdeal& I, const IntVec& e);

/// x^root * (any monomial in free_vars): a family of standard monomials.
struct StandardPair {
  IntVec root;
  std::vector<std::size_t> free_vars;  // 0-based, increasing
  bool covers(const IntVec& e) const;
  friend bool operator==(const StandardPair&, const StandardPair&) = default;
  friend bool operator<(const StandardPair& a, const StandardPair& b);
};

/// The standard pairs of I, sorted by root then free variables.
///
/// (u, S) is a standard pair iff supp(u) ∩ S = ∅, u is not in the
/// localization I_S (variables of S set to 1), and for every j outside S,
/// u lies in I_{S ∪ {j}}. The last condition forces u_j below the largest
/// x_j-exponent of a generator, which bounds the search.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& I);

}  // namespace semiholes
