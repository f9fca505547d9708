#include "semiholes/models.hpp"

#include <algorithm>
#include <numeric>

#include "semiholes/errors.hpp"

namespace semiholes {

CdemInstance cdem_matrix(std::size_t d) {
  if (d < 2) throw InvalidArgument("CDEM needs d >= 2");
  CdemInstance inst{d, IntMat(2 * d + 1, d * d)};
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      const std::size_t c = inst.column(i, j);
      inst.matrix(j - 1, c) = 1;
      inst.matrix(d + i - 1, c) = 1;
      if (i == j) inst.matrix(2 * d, c) = 1;
    }
  return inst;
}

IntVec cdem_hole(const CdemInstance& inst, std::size_t k, std::size_t l) {
  IntVec h = inst.a(k, k) + inst.a(k, l) + inst.a(l, k) + inst.a(l, l);
  for (auto& x : h) x /= 2;
  return h;
}

CdemExpected cdem_expected(std::size_t d) {
  const CdemInstance inst = cdem_matrix(d);
  CdemExpected out;
  std::vector<IntVec> holes;
  std::vector<std::size_t> diagonal;
  for (std::size_t i = 1; i <= d; ++i) diagonal.push_back(inst.column(i, i));
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t l = k + 1; l <= d; ++l) {
      const IntVec h = cdem_hole(inst, k, l);
      holes.push_back(h);
      std::vector<std::size_t> square{inst.column(k, k), inst.column(k, l), inst.column(l, k), inst.column(l, l)};
      std::sort(square.begin(), square.end());
      out.families.push_back({h, h, square, IntVec(d * d)});
      out.families.push_back({h, h, diagonal, IntVec(d * d)});
    }
  out.fundamental = make_point_set(holes);
  std::sort(out.families.begin(), out.families.end(), family_less);
  return out;
}

bool hall_condition(const IntVec& z, std::size_t d) {
  if (z.size() != 2 * d + 1) throw DimensionMismatch("Hall condition needs a vector of length 2d+1");
  Integer S = 0;
  for (std::size_t i = 0; i < d; ++i) S += z[i];
  for (std::size_t i = 0; i < d; ++i)
    if (z[i] + z[d + i] > S) return false;
  return true;
}

namespace {

IntMat lift(const std::vector<IntVec>& points, std::size_t dim) {
  IntMat M(dim + 1, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) M(r, c) = points[c][r];
    M(dim, c) = 1;
  }
  return M;
}

}  // namespace

PolytopeInstance lop_matrix(std::size_t n) {
  if (n < 2 || n > 8) throw InvalidArgument("linear ordering polytope needs 2 <= n <= 8");
  PolytopeInstance P;
  P.dim = n * (n - 1) / 2;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    IntVec v(P.dim);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[k++] = pi[i] > pi[j] ? 1 : 0;
    P.vertices.push_back(std::move(v));
  } while (std::next_permutation(pi.begin(), pi.end()));
  // The vertices are the only lattice points of P_n (0/1 polytope).
  P.lifted = lift(P.vertices, P.dim);
  return P;
}

PolytopeInstance polytope_lift(const std::vector<IntVec>& vertices) {
  if (vertices.empty()) throw InvalidArgument("polytope needs at least one vertex");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw InvalidArgument("polytope vertices must have positive dimension");
  for (const IntVec& v : vertices)
    if (v.size() != dim) throw DimensionMismatch("vertices of different dimensions");

  Region region;
  region.dim = dim;
  Integer box = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    Integer lo = vertices.front()[i], hi = lo;
    for (const IntVec& v : vertices) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    box *= hi - lo + 1;
    if (box > kMaxLiftBox) throw InvalidArgument("polytope bounding box exceeds 10^6 lattice points");
    IntVec e(dim);
    e[i] = 1;
    region.inequalities.push_back({e, Rational(lo)});
    region.inequalities.push_back({-e, Rational(-hi)});
  }
  // conv(V) x {1} is the height-one slice of the cone over the lifted vertices.
  const ConeDescription cone = dual_description(lift(vertices, dim).columns());
  auto split = [&](const IntVec& h) {
    IntVec normal(dim);
    for (std::size_t i = 0; i < dim; ++i) normal[i] = h[i];
    return LinearConstraint{normal, Rational(-h[dim])};
  };
  for (const IntVec& h : cone.facets) region.inequalities.push_back(split(h));
  for (const IntVec& e : cone.implicit_equations) region.equations.push_back(split(e));

  PolytopeInstance P;
  P.dim = dim;
  P.vertices = vertices;
  P.lifted = lift(enumerate_lattice_points(region).points, dim);
  return P;
}

IdpResult idp_check(const PolytopeInstance& P) {
  const SemigroupProblem problem(P.lifted, LatticeMode::Ambient);
  const LatticePointSet F = fundamental_holes(problem);
  if (F.empty()) return {true, std::nullopt};
  const std::size_t h = P.dim;
  const IntVec* best = &F.points.front();
  for (const IntVec& f : F.points)
    if (f[h] < (*best)[h]) best = &f;
  return {false, *best};
}

}  // namespace semiholes
