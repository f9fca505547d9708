#include "semiholes/stdpairs.hpp"

#include <algorithm>
#include <cstdint>

#include "semiholes/errors.hpp"

namespace semiholes {

MonomialIdeal minimalize(std::size_t num_vars, std::vector<IntVec> generators) {
  for (const IntVec& g : generators) {
    if (g.size() != num_vars) throw DimensionMismatch("generator length differs from the variable count");
    if (!g.is_nonnegative()) throw InvalidArgument("negative exponent in a monomial");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  MonomialIdeal I{num_vars, {}};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = j != i && dominated_by(generators[j], generators[i]);
    if (!redundant) I.generators.push_back(generators[i]);
  }
  return I;
}

bool is_standard(const MonomialIdeal& I, const IntVec& e) {
  if (e.size() != I.num_vars) throw DimensionMismatch("exponent length differs from the variable count");
  return std::none_of(I.generators.begin(), I.generators.end(), [&](const IntVec& g) { return dominated_by(g, e); });
}

bool StandardPair::covers(const IntVec& e) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const bool free = k < free_vars.size() && free_vars[k] == i;
    if (free) ++k;
    if (free ? e[i] < root[i] : e[i] != root[i]) return false;
  }
  return true;
}

bool operator<(const StandardPair& a, const StandardPair& b) {
  if (a.root != b.root) return a.root < b.root;
  return a.free_vars < b.free_vars;
}

namespace {

using Mask = std::uint64_t;
using Expo = std::vector<int>;

struct Gen {
  Expo e;
  Mask support = 0;
};

// Exponent vectors restricted to the variables outside `zeroed`, made minimal.
std::vector<Expo> localize(const std::vector<Gen>& gens, Mask zeroed, std::size_t n) {
  std::vector<Expo> out;
  for (const Gen& g : gens) {
    Expo e(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (!(zeroed >> i & 1)) e[i] = g.e[i];
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Expo> minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
      if (j == i) continue;
      bool le = true;
      for (std::size_t k = 0; k < n && le; ++k) le = out[j][k] <= out[i][k];
      redundant = le;
    }
    if (!redundant) minimal.push_back(out[i]);
  }
  return minimal;
}

bool member(const std::vector<Expo>& ideal, const Expo& u) {
  for (const Expo& g : ideal) {
    bool le = true;
    for (std::size_t k = 0; k < u.size() && le; ++k) le = g[k] <= u[k];
    if (le) return true;
  }
  return false;
}

class PairSearch {
 public:
  explicit PairSearch(const MonomialIdeal& I) : n_(I.num_vars) {
    if (n_ > 64) throw InvalidArgument("standard pairs support at most 64 variables");
    bound_.assign(n_, 0);
    for (const IntVec& g : I.generators) {
      Gen gen{Expo(n_), 0};
      for (std::size_t i = 0; i < n_; ++i) {
        gen.e[i] = static_cast<int>(to_int64_checked(g[i]));
        if (gen.e[i] > 0) gen.support |= Mask{1} << i;
        bound_[i] = std::max(bound_[i], gen.e[i]);
      }
      gens_.push_back(std::move(gen));
    }
  }

  std::vector<StandardPair> run() {
    for (const Gen& g : gens_)
      if (g.support == 0) return {};  // the unit ideal has no standard monomials
    Mask forced = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (bound_[i] == 0) forced |= Mask{1} << i;
    choose_subsets(0, forced);
    std::sort(pairs_.begin(), pairs_.end());
    return std::move(pairs_);
  }

 private:
  bool proper(Mask S) const {
    for (const Gen& g : gens_)
      if ((g.support & ~S) == 0) return false;
    return true;
  }

  void choose_subsets(std::size_t i, Mask S) {
    if (i == n_) {
      pairs_for(S);
      return;
    }
    const Mask bit = Mask{1} << i;
    if (S & bit) {
      choose_subsets(i + 1, S);
      return;
    }
    choose_subsets(i + 1, S);
    if (proper(S | bit)) choose_subsets(i + 1, S | bit);
  }

  void pairs_for(Mask S) {
    outside_.clear();
    for (std::size_t i = 0; i < n_; ++i)
      if (!(S >> i & 1)) outside_.push_back(i);
    local_ = localize(gens_, S, n_);
    widened_.clear();
    for (std::size_t j : outside_) widened_.push_back(localize(gens_, S | (Mask{1} << j), n_));
    Expo u(n_, 0);
    walk(0, u, S);
  }

  // Enumerates u over the box below the bounds, staying outside I_S (a down-set).
  void walk(std::size_t k, Expo& u, Mask S) {
    if (k == outside_.size()) {
      for (const auto& w : widened_)
        if (!member(w, u)) return;
      StandardPair p{IntVec(n_), {}};
      for (std::size_t i = 0; i < n_; ++i) {
        p.root[i] = u[i];
        if (S >> i & 1) p.free_vars.push_back(i);
      }
      pairs_.push_back(std::move(p));
      return;
    }
    const std::size_t var = outside_[k];
    for (int v = 0; v < bound_[var]; ++v) {
      u[var] = v;
      if (member(local_, u)) break;
      walk(k + 1, u, S);
    }
    u[var] = 0;
  }

  std::size_t n_;
  std::vector<int> bound_;
  std::vector<Gen> gens_;
  std::vector<std::size_t> outside_;
  std::vector<Expo> local_;
  std::vector<std::vector<Expo>> widened_;
  std::vector<StandardPair> pairs_;
};

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& I) { return PairSearch(I).run(); }

}  // namespace semiholes
