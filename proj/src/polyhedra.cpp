#include "semiholes/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>

#include "semiholes/errors.hpp"
#include "semiholes/linalg.hpp"
#include "semiholes/rational_lp.hpp"

namespace semiholes {

// ---------------------------------------------------------------- cones ----

std::size_t ConeDescription::ambient_dim() const {
  if (!generators.empty()) return generators.front().size();
  if (!facets.empty()) return facets.front().size();
  return implicit_equations.empty() ? 0 : implicit_equations.front().size();
}

std::optional<std::size_t> ConeDescription::violated_constraint(const IntVec& z) const {
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i].dot(z) < 0) return i;
  for (std::size_t i = 0; i < implicit_equations.size(); ++i)
    if (implicit_equations[i].dot(z) != 0) return facets.size() + i;
  return std::nullopt;
}

bool ConeDescription::contains(const IntVec& z) const { return !violated_constraint(z).has_value(); }

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

// Canonical Z-basis (column HNF) of the lattice spanned by `vecs`.
std::vector<IntVec> canonical_basis(const std::vector<IntVec>& vecs, std::size_t dim) {
  if (vecs.empty()) return {};
  HermiteForm hnf = hermite_normal_form(IntMat::from_columns(vecs, dim));
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < hnf.rank(); ++k) out.push_back(hnf.H.column(k));
  return out;
}

// Orthogonal projection of h onto the complement of span(eqs), scaled to a primitive integer vector.
IntVec project_out(const IntVec& h, const std::vector<IntVec>& eqs) {
  if (eqs.empty()) return primitive(h);
  const std::size_t k = eqs.size();
  // Solve (E E^T) y = E h exactly, then h' = h - E^T y.
  std::vector<std::vector<Rational>> G(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) G[i][j] = Rational(eqs[i].dot(eqs[j]));
    G[i][k] = Rational(eqs[i].dot(h));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (G[p][c] == 0) ++p;
    std::swap(G[p], G[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || G[r][c] == 0) continue;
      Rational f = G[r][c] / G[c][c];
      for (std::size_t j = c; j <= k; ++j) G[r][j] -= f * G[c][j];
    }
  }
  std::vector<Rational> proj(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) proj[i] = Rational(h[i]);
  for (std::size_t r = 0; r < k; ++r) {
    Rational y = G[r][k] / G[r][r];
    for (std::size_t i = 0; i < h.size(); ++i) proj[i] -= y * Rational(eqs[r][i]);
  }
  Integer den = 1;
  for (auto& q : proj) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntVec out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    Rational s = proj[i] * Rational(den);
    out[i] = s.get_num();
  }
  return primitive(out);
}

}  // namespace

ConeDescription dual_description(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw InvalidArgument("dual_description: no generators");
  const std::size_t m = generators.front().size();
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    if (g.size() != m) throw DimensionMismatch("dual_description: generators of different length");
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw InvalidArgument("dual_description: all generators are zero");

  // Double description of the dual cone {h : g.h >= 0}: span(lin) + cone(rays).
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < m; ++i) {
    IntVec e(m);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<IntVec> rays;
  std::vector<IntVec> processed;
  const std::size_t words = (gens.size() + 63) / 64;

  auto zero_set = [&](const IntVec& r) {
    Bits z(words, 0);
    for (std::size_t i = 0; i < processed.size(); ++i)
      if (processed[i].dot(r) == 0) z[i / 64] |= std::uint64_t{1} << (i % 64);
    return z;
  };

  for (const auto& g : gens) {
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (g.dot(lin[i]) != 0) {
        pick = i;
        break;
      }
    if (pick < lin.size()) {
      IntVec l0 = lin[pick];
      Integer gl0 = g.dot(l0);
      if (gl0 < 0) {
        l0 = -l0;
        gl0 = -gl0;
      }
      std::vector<IntVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        IntVec v = gl0 * lin[i] - g.dot(lin[i]) * l0;
        next_lin.push_back(primitive(v));
      }
      for (auto& r : rays) r = primitive(gl0 * r - g.dot(r) * l0);
      rays.push_back(l0);
      lin = std::move(next_lin);
    } else {
      std::vector<Integer> val(rays.size());
      std::vector<std::size_t> pos, zero, neg;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        val[i] = g.dot(rays[i]);
        (val[i] > 0 ? pos : val[i] < 0 ? neg : zero).push_back(i);
      }
      if (!neg.empty()) {
        std::vector<Bits> zs(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) zs[i] = zero_set(rays[i]);
        const std::size_t pointed_dim = m - lin.size();
        std::vector<IntVec> next;
        for (auto i : pos) next.push_back(rays[i]);
        for (auto i : zero) next.push_back(rays[i]);
        for (auto p : pos)
          for (auto n : neg) {
            Bits common(words);
            for (std::size_t w = 0; w < words; ++w) common[w] = zs[p][w] & zs[n][w];
            if (pointed_dim >= 2 && popcount(common) + 2 < pointed_dim) continue;
            bool adjacent = true;
            for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
              if (r != p && r != n && subset_of(common, zs[r])) adjacent = false;
            if (adjacent) next.push_back(primitive(val[p] * rays[n] - val[n] * rays[p]));
          }
        rays = std::move(next);
      }
    }
    processed.push_back(g);
  }

  ConeDescription out;
  out.generators = generators;
  out.implicit_equations = canonical_basis(lin, m);
  for (const auto& r : rays) out.facets.push_back(project_out(r, out.implicit_equations));
  std::sort(out.facets.begin(), out.facets.end());
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
  std::vector<IntVec> all = out.facets;
  all.insert(all.end(), out.implicit_equations.begin(), out.implicit_equations.end());
  const std::size_t r = all.empty() ? 0 : rank(IntMat::from_rows(all, m));
  out.lineality_dim = m - r;
  return out;
}

bool is_pointed(const std::vector<IntVec>& generators) {
  bool any = false;
  for (const auto& g : generators) any = any || !g.is_zero();
  if (!any) return true;
  return dual_description(generators).pointed();
}

// -------------------------------------------------------- lattice points ---

bool LatticePointSet::contains(const IntVec& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

LatticePointSet make_point_set(std::vector<IntVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return LatticePointSet{std::move(points)};
}

std::ostream& operator<<(std::ostream& os, const LatticePointSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? " " : "") << s.points[i];
  return os << '}';
}

namespace {

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

struct IntConstraint {
  IntVec normal;
  Integer rhs;
  bool equality;  // normal.z == rhs, else normal.z >= rhs
};

class RegionEnumerator {
 public:
  RegionEnumerator(std::size_t dim, std::vector<IntConstraint> cons) : dim_(dim), cons_(std::move(cons)) {}

  std::vector<IntVec> run() {
    if (dim_ == 0) {
      IntVec z;
      if (satisfied(z)) out_.push_back(z);
      return out_;
    }
    IntVec prefix(dim_);
    descend(0, prefix);
    return out_;
  }

 private:
  std::size_t dim_;
  std::vector<IntConstraint> cons_;
  std::vector<IntVec> out_;

  bool satisfied(const IntVec& z) const {
    for (const auto& c : cons_) {
      Integer v = c.normal.dot(z);
      if (c.equality ? v != c.rhs : v < c.rhs) return false;
    }
    return true;
  }

  // Optimizes +/- z_k over the region with z_0..z_{k-1} fixed.
  std::optional<std::pair<Integer, Integer>> bounds(std::size_t k, const IntVec& z) const {
    const std::size_t free = dim_ - k;
    std::size_t slacks = 0;
    for (const auto& c : cons_)
      if (!c.equality) ++slacks;
    const std::size_t nvar = 2 * free + slacks;
    StandardFormLp lp;
    std::size_t s = 0;
    for (const auto& c : cons_) {
      std::vector<Rational> row(nvar);
      Integer rhs = c.rhs;
      for (std::size_t i = 0; i < k; ++i) rhs -= c.normal[i] * z[i];
      for (std::size_t i = 0; i < free; ++i) {
        row[2 * i] = Rational(c.normal[k + i]);
        row[2 * i + 1] = Rational(-c.normal[k + i]);
      }
      if (!c.equality) row[2 * free + s++] = -1;
      lp.A.push_back(std::move(row));
      lp.b.push_back(Rational(rhs));
    }
    lp.c.assign(nvar, 0);
    lp.c[0] = 1;
    lp.c[1] = -1;
    LpResult hi = solve_lp(lp);
    if (hi.status == LpResult::Status::Infeasible) return std::nullopt;
    if (hi.status == LpResult::Status::Unbounded) throw UnboundedRegion("lattice point region is unbounded");
    lp.c[0] = -1;
    lp.c[1] = 1;
    LpResult lo = solve_lp(lp);
    if (lo.status == LpResult::Status::Unbounded) throw UnboundedRegion("lattice point region is unbounded");
    return std::make_pair(ceil_q(-lo.value), floor_q(hi.value));
  }

  void descend(std::size_t k, IntVec& z) {
    if (k + 1 == dim_) {
      last_coordinate(z);
      return;
    }
    auto b = bounds(k, z);
    if (!b) return;
    for (Integer v = b->first; v <= b->second; ++v) {
      z[k] = v;
      descend(k + 1, z);
    }
    z[k] = 0;
  }

  void last_coordinate(IntVec& z) {
    const std::size_t k = dim_ - 1;
    std::optional<Integer> lo, hi;
    for (const auto& c : cons_) {
      Integer rest = c.rhs;
      for (std::size_t i = 0; i < k; ++i) rest -= c.normal[i] * z[i];
      const Integer& a = c.normal[k];
      if (a == 0) {
        if (c.equality ? rest != 0 : rest > 0) return;
        continue;
      }
      if (c.equality) {
        if (!mpz_divisible_p(rest.get_mpz_t(), a.get_mpz_t())) return;
        Integer v = rest / a;
        if (!lo || v > *lo) lo = v;
        if (!hi || v < *hi) hi = v;
      } else if (a > 0) {
        Integer v = ceil_div(rest, a);
        if (!lo || v > *lo) lo = v;
      } else {
        Integer v = floor_div(rest, a);
        if (!hi || v < *hi) hi = v;
      }
    }
    if (!lo || !hi) {
      // Only reachable for dim == 1 without bounds in some direction.
      throw UnboundedRegion("lattice point region is unbounded");
    }
    for (Integer v = *lo; v <= *hi; ++v) {
      z[k] = v;
      out_.push_back(z);
    }
    z[k] = 0;
  }
};

}  // namespace

LatticePointSet enumerate_lattice_points(const Region& region) {
  std::vector<IntConstraint> cons;
  auto check_len = [&](const LinearConstraint& c) {
    if (c.normal.size() != region.dim) throw DimensionMismatch("region constraint has wrong length");
  };
  for (const auto& e : region.equations) {
    check_len(e);
    if (e.rhs.get_den() != 1) return {};
    cons.push_back({e.normal, e.rhs.get_num(), true});
  }
  for (const auto& g : region.inequalities) {
    check_len(g);
    cons.push_back({g.normal, ceil_q(g.rhs), false});
  }
  for (const auto& s : region.strict_upper) {
    check_len(s);
    // h.z < c  <=>  -h.z >= -(ceil(c) - 1) for integral h and z.
    cons.push_back({-s.normal, -(ceil_q(s.rhs) - 1), false});
  }
  RegionEnumerator en(region.dim, std::move(cons));
  return make_point_set(en.run());
}

// ------------------------------------------------------- parallelepiped ---

namespace {

// Rows: lambda + s = 1 (n rows), then A_r . lambda = z_r for the fixed rows.
StandardFormLp box_lp(const IntMat& A, const IntVec& z, std::size_t fixed_rows, bool with_eps) {
  const std::size_t n = A.cols();
  const std::size_t nvar = 2 * n + (with_eps ? 1 : 0);
  StandardFormLp lp;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(nvar);
    row[i] = 1;
    row[n + i] = 1;
    if (with_eps) row[2 * n] = 1;
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(1);
  }
  for (std::size_t r = 0; r < fixed_rows; ++r) {
    std::vector<Rational> row(nvar);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(A(r, j));
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(z[r]);
  }
  lp.c.assign(nvar, 0);
  return lp;
}

void parallelepiped_descend(const IntMat& A, std::size_t k, IntVec& z, std::vector<IntVec>& out) {
  const std::size_t n = A.cols();
  if (k == A.rows()) {
    if (in_half_open_parallelepiped(A, z)) out.push_back(z);
    return;
  }
  StandardFormLp lp = box_lp(A, z, k, false);
  for (std::size_t j = 0; j < n; ++j) lp.c[j] = Rational(A(k, j));
  LpResult hi = solve_lp(lp);
  if (hi.status != LpResult::Status::Optimal) return;
  for (std::size_t j = 0; j < n; ++j) lp.c[j] = Rational(-A(k, j));
  LpResult lo = solve_lp(lp);
  Integer a = ceil_q(-lo.value), b = floor_q(hi.value);
  for (Integer v = a; v <= b; ++v) {
    z[k] = v;
    parallelepiped_descend(A, k + 1, z, out);
  }
  z[k] = 0;
}

}  // namespace

bool in_half_open_parallelepiped(const IntMat& A, const IntVec& z) {
  if (z.size() != A.rows()) throw DimensionMismatch("parallelepiped test: length mismatch");
  StandardFormLp lp = box_lp(A, z, A.rows(), true);
  lp.c[2 * A.cols()] = 1;
  LpResult r = solve_lp(lp);
  return r.status == LpResult::Status::Optimal && r.value > 0;
}

LatticePointSet parallelepiped_points(const IntMat& A) {
  if (!is_pointed(A.columns())) throw NotPointed();
  std::vector<IntVec> out;
  IntVec z(A.rows());
  parallelepiped_descend(A, 0, z, out);
  return make_point_set(std::move(out));
}

// -------------------------------------------------------- triangulation ---

namespace {

// Normal of the hyperplane spanned by r-1 independent vectors in Z^r (cofactor formula).
IntVec face_normal_exact(const std::vector<IntVec>& face, std::size_t r) {
  IntVec n(r);
  if (r == 1) {
    n[0] = 1;
    return n;
  }
  for (std::size_t k = 0; k < r; ++k) {
    IntMat minor(r - 1, r - 1);
    for (std::size_t i = 0, ii = 0; i < r; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j + 1 < r; ++j) minor(ii, j) = face[j][i];
      ++ii;
    }
    Integer d = determinant(minor);
    n[k] = (k % 2) ? Integer(-d) : d;
  }
  return primitive(n);
}

using i64 = std::int64_t;
using i128 = __int128;

struct Overflow {};

i64 checked(i128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2) throw Overflow{};
  return static_cast<i64>(v);
}

i64 gcd64(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void make_primitive(std::vector<i64>& v) {
  i64 g = 0;
  for (i64 x : v) g = gcd64(g, x);
  if (g > 1)
    for (i64& x : v) x /= g;
}

// Same normal by Gauss-Jordan elimination in machine integers; throws Overflow.
std::vector<i64> face_normal_fast(const std::vector<const std::vector<i64>*>& face, std::size_t r) {
  std::vector<std::vector<i64>> M;
  for (const auto* v : face) M.push_back(*v);
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < M.size(); ++c) {
    std::size_t p = row;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[row]);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == row || M[i][c] == 0) continue;
      const i64 a = M[row][c], b = M[i][c];
      const i64 g = gcd64(a, b);
      const i64 fa = a / g, fb = b / g;
      for (std::size_t j = 0; j < r; ++j) M[i][j] = checked(static_cast<i128>(M[i][j]) * fa - static_cast<i128>(M[row][j]) * fb);
      make_primitive(M[i]);
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() + 1 != r) throw InvalidArgument("placing_triangulation: degenerate face");
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < r; ++k)
    if (std::find(pivot_col.begin(), pivot_col.end(), k) == pivot_col.end()) free_col = k;
  i64 L = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const i64 a = M[i][pivot_col[i]] < 0 ? -M[i][pivot_col[i]] : M[i][pivot_col[i]];
    L = checked(static_cast<i128>(L / gcd64(L, a)) * a);
  }
  std::vector<i64> n(r, 0);
  n[free_col] = L;
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    n[pivot_col[i]] = checked(-static_cast<i128>(M[i][free_col]) * (L / M[i][pivot_col[i]]));
  make_primitive(n);
  return n;
}

struct FaceInfo {
  IntVec normal;  // points into the simplex that owns the face
  std::vector<i64> normal64;  // empty when the exact normal does not fit
};

i64 sign_of_dot(const FaceInfo& f, const std::vector<i64>& v64, const IntVec& v) {
  if (!f.normal64.empty() && !v64.empty()) {
    i128 s = 0;
    for (std::size_t i = 0; i < v64.size(); ++i) s += static_cast<i128>(f.normal64[i]) * v64[i];
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
  }
  return sgn(f.normal.dot(v));
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& generators) {
  if (generators.empty()) return {};
  const std::size_t r = generators.front().size();

  std::vector<std::size_t> start;
  for (std::size_t i = 0; i < generators.size() && start.size() < r; ++i) {
    if (generators[i].is_zero()) continue;
    std::vector<IntVec> trial;
    for (auto j : start) trial.push_back(generators[j]);
    trial.push_back(generators[i]);
    if (rank(IntMat::from_columns(trial, r)) == trial.size()) start.push_back(i);
  }
  if (start.size() < r) throw InvalidArgument("placing_triangulation: generators do not span the space");

  // Machine-word copies of the generators (empty when an entry is too large).
  std::vector<std::vector<i64>> g64(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool small = true;
    for (const auto& x : generators[i]) small = small && x.fits_slong_p() && abs(x) < (Integer(1) << 30);
    if (small) g64[i] = generators[i].to_int64();
  }

  std::vector<std::vector<std::size_t>> simplices;
  std::map<std::vector<std::size_t>, FaceInfo> boundary;

  auto add_simplex = [&](std::vector<std::size_t> simplex) {
    std::sort(simplex.begin(), simplex.end());
    for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
      std::vector<std::size_t> face;
      for (std::size_t j = 0; j < simplex.size(); ++j)
        if (j != drop) face.push_back(simplex[j]);
      auto it = boundary.find(face);
      if (it != boundary.end()) {
        boundary.erase(it);  // shared by two simplices: interior
        continue;
      }
      FaceInfo info;
      bool fast = r > 1;
      std::vector<const std::vector<i64>*> rows;
      for (auto j : face) {
        fast = fast && !g64[j].empty();
        rows.push_back(&g64[j]);
      }
      if (fast) {
        try {
          info.normal64 = face_normal_fast(rows, r);
        } catch (const Overflow&) {
          info.normal64.clear();
        }
      }
      if (info.normal64.empty()) {
        std::vector<IntVec> vecs;
        for (auto j : face) vecs.push_back(generators[j]);
        info.normal = face_normal_exact(vecs, r);
      } else {
        info.normal = IntVec::from_int64(info.normal64);
      }
      if (sign_of_dot(info, g64[simplex[drop]], generators[simplex[drop]]) < 0) {
        info.normal = -info.normal;
        for (auto& x : info.normal64) x = -x;
      }
      boundary.emplace(std::move(face), std::move(info));
    }
    simplices.push_back(std::move(simplex));
  };

  add_simplex(start);
  std::vector<bool> used(generators.size(), false);
  for (auto i : start) used[i] = true;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (used[i] || generators[i].is_zero()) continue;
    std::vector<std::vector<std::size_t>> visible;
    for (const auto& [face, info] : boundary)
      if (sign_of_dot(info, g64[i], generators[i]) < 0) visible.push_back(face);
    for (auto& face : visible) {
      std::vector<std::size_t> simplex = face;
      simplex.push_back(i);
      add_simplex(std::move(simplex));
    }
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<IntVec> simplicial_parallelepiped_points(const std::vector<IntVec>& simplex) {
  const std::size_t r = simplex.size();
  IntMat W = IntMat::from_columns(simplex, r);
  Integer det = determinant(W);
  if (det == 0) throw InvalidArgument("simplicial_parallelepiped_points: dependent generators");
  if (abs(det) == 1) return {IntVec(r)};
  const Integer D = abs(det);
  IntMat adj = adjugate(W);
  if (det < 0)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) adj(i, j) = -adj(i, j);
  // adj * W = D * I now, with D > 0.
  HermiteForm hnf = hermite_normal_form(W);
  std::vector<Integer> box(r);
  for (std::size_t k = 0; k < r; ++k) box[k] = hnf.H(hnf.pivot_rows[k], k);

  std::vector<IntVec> out;
  IntVec y(r);
  for (;;) {
    IntVec c = adj * y;
    for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), D.get_mpz_t());
    IntVec p = W * c;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), D.get_mpz_t());
    out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < r) {
      ++y[k];
      if (y[k] < box[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semiholes
