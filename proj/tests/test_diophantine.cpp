#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiholes/diophantine.hpp"
#include "semiholes/errors.hpp"
#include "semiholes/kernels.hpp"
#include "semiholes/linalg.hpp"
#include "semiholes/polyhedra.hpp"

using namespace semiholes;
using oracle::Vec;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat M(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) M(r, c) = dist(rng);
  return M;
}

std::vector<Vec> as_vecs(const std::vector<IntVec>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(oracle::lv(v));
  return out;
}

bool in_box(const Vec& v, long hi) {
  return std::all_of(v.begin(), v.end(), [&](long x) { return x >= 0 && x <= hi; });
}

IntMat cdem(std::size_t d) {
  IntMat A(2 * d + 1, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t c = i * d + j;
      A(j, c) = 1;
      A(d + i, c) = 1;
      if (i == j) A(2 * d, c) = 1;
    }
  return A;
}

// Hilbert basis of K(A) ∩ Z^m via the kernel route: slacks for the facets and split free coordinates.
HilbertBasis kernel_route_basis(const IntMat& A) {
  const IntMat W = span_lattice_basis(A);
  const std::size_t r = W.cols();
  std::vector<IntVec> coords;
  for (const auto& c : A.columns()) coords.push_back(*solve_integer(W, c));
  const auto cone = dual_description(coords);
  const std::size_t f = cone.facets.size();
  // Variables (y+, y-, s) with C (y+ - y-) - s = 0.
  IntMat B(f, 2 * r + f);
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      B(i, k) = cone.facets[i][k];
      B(i, r + k) = -cone.facets[i][k];
    }
    B(i, 2 * r + i) = -1;
  }
  std::vector<IntVec> images;
  for (const auto& h : minimal_nonneg_kernel(B).elements) {
    IntVec y(r);
    for (std::size_t k = 0; k < r; ++k) y[k] = h[k] - h[r + k];
    if (!y.is_zero()) images.push_back(y);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  HilbertBasis hb;
  for (const auto& x : images) {
    bool reducible = false;
    for (const auto& y : images)
      if (y != x && cone.contains(x - y)) reducible = true;
    if (!reducible) hb.elements.push_back(W * x);
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

}  // namespace

TEST_CASE("kernel examples") {
  CHECK(minimal_nonneg_kernel(IntMat{{1, -1}}).elements == std::vector<IntVec>{IntVec{1, 1}});
  CHECK(minimal_nonneg_kernel(IntMat{{2, -3}}).elements == std::vector<IntVec>{IntVec{3, 2}});
  CHECK(minimal_nonneg_kernel(IntMat{{1, 1}}).elements.empty());
  CHECK(minimal_nonneg_kernel(IntMat{{0, 0}}).elements == std::vector<IntVec>{IntVec{0, 1}, IntVec{1, 0}});
}

TEST_CASE("kernel agrees with brute force in a box") {
  std::mt19937 rng(101);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + rng() % 2, n = 2 + rng() % 3;
    const IntMat B = random_matrix(rng, m, n, -3, 3);
    const long box = n <= 3 ? 8 : 6;
    const auto hb = minimal_nonneg_kernel(B);
    const auto got = as_vecs(hb.elements);
    if (!std::all_of(got.begin(), got.end(), [&](const Vec& v) { return in_box(v, box); })) continue;
    ++compared;
    std::vector<Vec> sols;
    oracle::for_each_in_box(Vec(n, 0), Vec(n, box), [&](const Vec& x) {
      if ((B * oracle::iv(x)).is_zero()) sols.push_back(x);
    });
    CHECK(got == oracle::irreducibles(sols));
    for (const auto& h : hb.elements) CHECK((B * h).is_zero());
  }
  CHECK(compared > 60);
}

TEST_CASE("kernel completeness on random solutions") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    IntMat B = random_matrix(rng, 1, n, -3, 3);
    const auto hb = minimal_nonneg_kernel(B);
    for (std::size_t i = 0; i < hb.size(); ++i)
      for (std::size_t j = 0; j < hb.size(); ++j)
        if (i != j) CHECK_FALSE(dominated_by(hb.elements[i], hb.elements[j]));
    // Sums of basis elements are solutions; each dominates some basis element.
    for (int k = 0; k < 20 && hb.size() > 0; ++k) {
      IntVec s(n);
      for (const auto& h : hb.elements) s += Integer(e(rng) % 2) * h;
      if (s.is_zero()) continue;
      bool covered = false;
      for (const auto& h : hb.elements) covered = covered || dominated_by(h, s);
      CHECK(covered);
    }
  }
}

TEST_CASE("inhomogeneous examples") {
  const auto sols = minimal_inhomogeneous(IntMat{{2, 3}}, IntVec{1});
  CHECK(sols.solutions == std::vector<IntVec>{IntVec{0, 1, 2, 0}, IntVec{1, 0, 0, 1}});
  CHECK(minimal_inhomogeneous(IntMat{{1}}, IntVec{0}).solutions == std::vector<IntVec>{IntVec{0, 0}});

  const IntMat A = IntMat::from_columns({IntVec{1, 0}, IntVec{1, 1}, IntVec{1, 3}}, 2);
  const auto s2 = minimal_inhomogeneous(A, IntVec{1, 2});
  // Brute force over entries <= 4.
  std::vector<Vec> brute;
  oracle::for_each_in_box(Vec(6, 0), Vec(6, 4), [&](const Vec& x) {
    IntVec lam{x[0], x[1], x[2]}, mu{x[3], x[4], x[5]};
    if (IntVec{1, 2} + A * lam == A * mu) brute.push_back(x);
  });
  CHECK(as_vecs(s2.solutions) == oracle::minimal_elements(brute));
  std::vector<IntVec> lambda_parts;
  for (const auto& s : s2.solutions) {
    IntVec lam{0, 0, 0};
    for (int i = 0; i < 3; ++i) lam[i] = s[i];
    CHECK_FALSE(lam.is_zero());
    lambda_parts.push_back(lam);
  }
  bool has_e1 = false, has_e2 = false;
  for (const auto& l : lambda_parts) {
    has_e1 = has_e1 || l == IntVec{1, 0, 0};
    has_e2 = has_e2 || l == IntVec{0, 1, 0};
  }
  CHECK(has_e1);
  CHECK(has_e2);
  CHECK_THROWS_AS(minimal_inhomogeneous(A, IntVec{1}), DimensionMismatch);
}

TEST_CASE("minimal solutions agree with brute force in a box") {
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> rhs(-4, 4);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + rng() % 2, n = 2 + rng() % 3;
    const IntMat B = random_matrix(rng, m, n, -3, 3);
    IntVec c(m);
    for (auto& x : c) x = rhs(rng);
    const auto got = as_vecs(minimal_solutions(B, c).solutions);
    const long box = n <= 3 ? 8 : 6;
    if (!std::all_of(got.begin(), got.end(), [&](const Vec& v) { return in_box(v, box); })) continue;
    ++compared;
    std::vector<Vec> sols;
    oracle::for_each_in_box(Vec(n, 0), Vec(n, box), [&](const Vec& x) {
      if (B * oracle::iv(x) == c) sols.push_back(x);
    });
    CHECK(got == oracle::minimal_elements(sols));
  }
  CHECK(compared > 60);
}

TEST_CASE("inhomogeneous completeness on random solutions") {
  std::mt19937 rng(109);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMat A = random_matrix(rng, 2, 3, 0, 3);
    IntVec lam(3), mu(3);
    for (auto& x : lam) x = e(rng);
    for (auto& x : mu) x = e(rng);
    const IntVec f = A * mu - A * lam;
    bool zero_col = false;
    for (std::size_t c = 0; c < 3; ++c) zero_col = zero_col || A.column(c).is_zero();
    if (zero_col) continue;
    const auto sols = minimal_inhomogeneous(A, f);
    IntVec s(6);
    for (int i = 0; i < 3; ++i) s[i] = lam[i], s[3 + i] = mu[i];
    bool covered = false;
    for (const auto& m : sols.solutions) {
      IntVec l(3), u(3);
      for (int i = 0; i < 3; ++i) l[i] = m[i], u[i] = m[3 + i];
      CHECK(f + A * l == A * u);
      covered = covered || dominated_by(m, s);
    }
    CHECK(covered);
  }
}

TEST_CASE("integer feasibility examples") {
  const auto x = integer_feasible(IntMat{{2, 3}}, IntVec{7});
  REQUIRE(x);
  CHECK(IntMat{{2, 3}} * *x == IntVec{7});
  CHECK(x->is_nonnegative());
  CHECK_FALSE(integer_feasible(IntMat{{2, 3}}, IntVec{1}));
  CHECK(integer_feasible(IntMat{{2, 3}, {1, 5}}, IntVec{0, 0}) == IntVec{0, 0});
  CHECK_THROWS_AS(integer_feasible(IntMat{{1, -1}}, IntVec{0}), NotPointed);
  CHECK_THROWS_AS(integer_feasible(IntMat{{1, 2}}, IntVec{0, 0}), DimensionMismatch);
}

TEST_CASE("integer feasibility agrees with exhaustive search") {
  std::mt19937 rng(113);
  std::uniform_int_distribution<int> e(0, 9);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 2 + rng() % 4;
    const IntMat A = random_matrix(rng, m, n, 0, 4);
    bool zero_col = false;
    for (std::size_t c = 0; c < n; ++c) zero_col = zero_col || A.column(c).is_zero();
    if (zero_col) continue;
    const FeasibilitySolver solver(A);
    const Vec w = oracle::positive_grading(A);
    for (int k = 0; k < 10; ++k) {
      IntVec b(m);
      for (auto& x : b) x = e(rng);
      const auto got = solver.solve(b);
      const auto brute = oracle::semigroup_witness(A, oracle::lv(b), w);
      CHECK(got.has_value() == brute.has_value());
      if (got) {
        CHECK(A * *got == b);
        CHECK(got->is_nonnegative());
        ++positives;
      } else {
        ++negatives;
      }
    }
  }
  CHECK(positives > 50);
  CHECK(negatives > 50);
}

TEST_CASE("saturation hilbert basis examples") {
  const IntMat A = IntMat::from_columns({IntVec{1, 0}, IntVec{1, 3}}, 2);
  CHECK(saturation_hilbert_basis(A).elements ==
        std::vector<IntVec>{IntVec{1, 0}, IntVec{1, 1}, IntVec{1, 2}, IntVec{1, 3}});
  CHECK(saturation_hilbert_basis(IntMat::identity(2)).elements == std::vector<IntVec>{IntVec{0, 1}, IntVec{1, 0}});
  CHECK_THROWS_AS(saturation_hilbert_basis(IntMat{{1, -1}}), NotPointed);
  // In the generated lattice, (1,0),(1,3) already form a basis of the saturation.
  CHECK(saturation_hilbert_basis(A, LatticeMode::Generated).size() == 2);
}

TEST_CASE("cdem saturation basis has the balanced holes") {
  const auto hb = saturation_hilbert_basis(cdem(3));
  CHECK(hb.size() == 12);
  for (const auto& c : cdem(3).columns()) CHECK(hb.contains(c));
  CHECK(hb.contains(IntVec{1, 1, 0, 1, 1, 0, 1}));
  CHECK(hb.contains(IntVec{1, 0, 1, 1, 0, 1, 1}));
  CHECK(hb.contains(IntVec{0, 1, 1, 0, 1, 1, 1}));
  CHECK(hb == kernel_route_basis(cdem(3)));
}

TEST_CASE("saturation basis: triangulation route equals kernel route") {
  std::mt19937 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng() % 2, n = 2 + rng() % 3;
    const IntMat A = random_matrix(rng, m, n, 0, 4);
    bool zero_col = false;
    for (std::size_t c = 0; c < n; ++c) zero_col = zero_col || A.column(c).is_zero();
    if (zero_col) continue;
    const auto hb = saturation_hilbert_basis(A);
    CHECK(hb == kernel_route_basis(A));
    // Every element lies in the cone and is irreducible among cone points of lower degree.
    const auto cone = dual_description(A.columns());
    for (const auto& h : hb.elements) CHECK(cone.contains(h));
  }
}

TEST_CASE("saturation basis agrees with brute force irreducibles") {
  std::mt19937 rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMat A = random_matrix(rng, 2, 3, 0, 4);
    bool zero_col = false;
    for (std::size_t c = 0; c < 3; ++c) zero_col = zero_col || A.column(c).is_zero();
    if (zero_col) continue;
    const auto cone = dual_description(A.columns());
    const auto hb = saturation_hilbert_basis(A);
    long top = 0;
    for (const auto& h : hb.elements) top = std::max(top, h.sum().get_si());
    // All cone points of degree <= top + 1 in Z^2 (A has rank 2 or lies on a line).
    std::vector<Vec> pts;
    const IntMat W = span_lattice_basis(A);
    oracle::for_each_in_box(Vec(2, 0), Vec(2, top + 1), [&](const Vec& p) {
      const IntVec z = oracle::iv(p);
      if (z.sum() <= top + 1 && cone.contains(z) && solve_integer(W, z)) pts.push_back(p);
    });
    auto irr = oracle::irreducibles(pts);
    std::vector<Vec> expect;
    for (const auto& v : irr)
      if (v[0] + v[1] <= top) expect.push_back(v);
    CHECK(as_vecs(hb.elements) == expect);
  }
}

TEST_CASE("completion gives identical results on every kernel backend") {
  std::mt19937 rng(137);
  std::vector<kernels::Backend> backends{kernels::Backend::Scalar};
  if (kernels::avx2::available()) backends.push_back(kernels::Backend::Avx2);
  if (kernels::neon::available()) backends.push_back(kernels::Backend::Neon);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMat B = random_matrix(rng, 2, 5, -3, 3);
    std::vector<HilbertBasis> results;
    for (auto be : backends) {
      kernels::force_backend(be);
      results.push_back(minimal_nonneg_kernel(B));
    }
    for (const auto& r : results) CHECK(r == results.front());
  }
  kernels::reset_backend();
}
