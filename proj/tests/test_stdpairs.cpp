#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiholes/errors.hpp"
#include "semiholes/stdpairs.hpp"

using namespace semiholes;
using oracle::Vec;

namespace {

struct RawPair {
  Vec root;
  unsigned mask;
};

// (u', S') >= (u, S): u' divides u and supp(u - u') ∪ S ⊆ S'.
bool below(const RawPair& p, const RawPair& q) {
  unsigned need = p.mask;
  for (std::size_t i = 0; i < p.root.size(); ++i) {
    if (q.root[i] > p.root[i]) return false;
    if (q.root[i] < p.root[i]) need |= 1u << i;
  }
  return (need & ~q.mask) == 0;
}

std::vector<StandardPair> brute_force_pairs(const MonomialIdeal& I, long box) {
  const std::size_t n = I.num_vars;
  std::vector<RawPair> adm;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) S.push_back(i);
    oracle::for_each_in_box(Vec(n, 0), Vec(n, box), [&](const Vec& u) {
      if (oracle::admissible(I, oracle::iv(u), S)) adm.push_back({u, mask});
    });
  }
  std::vector<StandardPair> out;
  for (const auto& p : adm) {
    bool maximal = true;
    for (const auto& q : adm)
      if (!(q.root == p.root && q.mask == p.mask) && below(p, q)) maximal = false;
    if (!maximal) continue;
    StandardPair sp{oracle::iv(p.root), {}};
    for (std::size_t i = 0; i < n; ++i)
      if (p.mask >> i & 1) sp.free_vars.push_back(i);
    out.push_back(sp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(minimalize(2, {IntVec{1, 0}, IntVec{1, 1}}).generators == std::vector<IntVec>{IntVec{1, 0}});
  CHECK(minimalize(2, {IntVec{2, 0}, IntVec{1, 1}, IntVec{2, 3}}).generators ==
        std::vector<IntVec>{IntVec{1, 1}, IntVec{2, 0}});
  CHECK(minimalize(2, {}).generators.empty());
  CHECK_THROWS_AS(minimalize(2, {IntVec{1}}), DimensionMismatch);
  CHECK_THROWS_AS(minimalize(1, {IntVec{-1}}), InvalidArgument);
}

TEST_CASE("is_standard") {
  const auto I = minimalize(2, {IntVec{1, 0}});
  CHECK(is_standard(I, IntVec{0, 5}));
  CHECK_FALSE(is_standard(I, IntVec{1, 1}));
  CHECK(is_standard(minimalize(3, {}), IntVec{4, 4, 4}));
}

TEST_CASE("standard pair examples") {
  CHECK(standard_pairs(minimalize(2, {IntVec{1, 0}, IntVec{0, 1}})) ==
        std::vector<StandardPair>{{IntVec{0, 0}, {}}});
  CHECK(standard_pairs(minimalize(2, {IntVec{1, 0}})) == std::vector<StandardPair>{{IntVec{0, 0}, {1}}});
  CHECK(standard_pairs(minimalize(2, {IntVec{2, 0}, IntVec{1, 1}})) ==
        std::vector<StandardPair>{{IntVec{0, 0}, {1}}, {IntVec{1, 0}, {}}});
  CHECK(standard_pairs(minimalize(2, {})) == std::vector<StandardPair>{{IntVec{0, 0}, {0, 1}}});
  CHECK(standard_pairs(minimalize(2, {IntVec{0, 0}})).empty());
}

TEST_CASE("standard pairs equal the maximal admissible pairs") {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto I = oracle::random_ideal(rng, n, 5, 3);
    CHECK(standard_pairs(I) == brute_force_pairs(I, 3));
  }
}

TEST_CASE("coverage, admissibility and maximality on random ideals") {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto I = oracle::random_ideal(rng, n, 6, 4);
    const auto pairs = standard_pairs(I);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    oracle::for_each_in_box(Vec(n, 0), Vec(n, 6), [&](const Vec& x) {
      const IntVec e = oracle::iv(x);
      const bool covered = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.covers(e); });
      CHECK(covered == is_standard(I, e));
    });
    for (const auto& p : pairs) {
      CHECK(oracle::admissible(I, p.root, p.free_vars));
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(p.free_vars.begin(), p.free_vars.end(), j) != p.free_vars.end()) continue;
        auto S = p.free_vars;
        S.push_back(j);
        std::sort(S.begin(), S.end());
        // Adding j to S frees the j-exponent, so dividing the root by x_j lands here too.
        IntVec u = p.root;
        u[j] = 0;
        CHECK_FALSE(oracle::admissible(I, u, S));
      }
    }
  }
}

TEST_CASE("standard pairs are deterministic") {
  std::mt19937 rng(227);
  const auto I = oracle::random_ideal(rng, 4, 6, 3);
  CHECK(standard_pairs(I) == standard_pairs(I));
}
