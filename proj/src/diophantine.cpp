#include "semiholes/diophantine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "semiholes/errors.hpp"
#include "semiholes/kernels.hpp"
#include "semiholes/linalg.hpp"
#include "semiholes/polyhedra.hpp"

namespace semiholes {

bool HilbertBasis::contains(const IntVec& v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("intermediate value exceeds 64 bits");
  return static_cast<i64>(v);
}

i64 dot64(const std::vector<i64>& a, const std::vector<i64>& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return narrow(s);
}

i64 floor_div64(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div64(i64 a, i64 b) { return -floor_div64(-a, b); }

std::vector<i64> to64(const IntVec& v) { return v.to_int64(); }

// ------------------------------------------------------------ completion ---
//
// Hilbert bases of {x >= 0 : B x = 0}, one equation at a time. With M the
// monoid cut out by the equations handled so far and v the next equation,
// we close the generators of M under sums of opposite-sign pairs, processed
// by increasing degree, and discard every sum s that is dominated by a kept
// element h in the order "h.x <= s.x and v(h) sign-compatible with and not
// larger in magnitude than v(s)". The kept zero-valued elements are the
// Hilbert basis of M ∩ {v = 0}. Each element is a row of int32 lanes
// [x_0 .. x_{n-1}, v+, v-, 0 ...], so the order is a plain lanewise <=,
// which is what the SIMD dominance scan tests.

class Pool {
 public:
  explicit Pool(std::size_t stride) : stride_(stride) {}
  std::size_t size() const { return value_.size(); }
  const std::int32_t* row(std::size_t i) const { return lanes_.data() + i * stride_; }
  i64 value(std::size_t i) const { return value_[i]; }
  std::span<const std::int32_t> all() const { return {lanes_.data(), lanes_.size()}; }
  std::size_t push(std::span<const std::int32_t> row, i64 v) {
    lanes_.insert(lanes_.end(), row.begin(), row.end());
    value_.push_back(v);
    return value_.size() - 1;
  }

 private:
  std::size_t stride_;
  std::vector<std::int32_t> lanes_;
  std::vector<i64> value_;
};

struct CompletionPlan {
  std::size_t n = 0;
  std::optional<std::size_t> truncate_lane;  // elements must keep this lane <= 1
};

using Gen = std::vector<std::int32_t>;  // x part only, length n

i64 degree(const std::int32_t* x, std::size_t n) {
  i64 d = 0;
  for (std::size_t i = 0; i < n; ++i) d += x[i];
  return d;
}

i64 eval(const Gen& x, const std::vector<i64>& eq) {
  i128 s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<i128>(eq[i]) * x[i];
  return narrow(s);
}

std::vector<Gen> complete_equation(const std::vector<Gen>& gens, const std::vector<i64>& eq, const CompletionPlan& cs) {
  const std::size_t n = cs.n;
  const std::size_t stride = kernels::padded_stride(n + 2);
  Pool pos(stride), neg(stride), zero(stride);
  std::map<i64, std::vector<std::size_t>> pos_deg, neg_deg;

  std::vector<std::int32_t> buf(stride, 0);
  auto set_value = [&](i64 v) {
    if (v > kernels::kLaneLimit || v < -kernels::kLaneLimit) throw OverflowError("completion value exceeds lane range");
    buf[n] = static_cast<std::int32_t>(v > 0 ? v : 0);
    buf[n + 1] = static_cast<std::int32_t>(v < 0 ? -v : 0);
  };

  for (const Gen& g : gens) {
    std::fill(buf.begin(), buf.end(), 0);
    std::copy(g.begin(), g.end(), buf.begin());
    const i64 v = eval(g, eq);
    set_value(v);
    const i64 d = degree(g.data(), n);
    if (v > 0)
      pos_deg[d].push_back(pos.push(buf, v));
    else if (v < 0)
      neg_deg[d].push_back(neg.push(buf, v));
    else
      zero.push(buf, 0);
  }

  auto dominated = [&](const Pool& p) {
    return kernels::find_dominating_row(p.all(), stride, buf) < p.size();
  };

  std::vector<std::int32_t> a(stride), b(stride);
  for (i64 D = 2;; ++D) {
    if (pos_deg.empty() || neg_deg.empty()) break;
    if (D > pos_deg.rbegin()->first + neg_deg.rbegin()->first) break;
    for (auto it = pos_deg.begin(); it != pos_deg.end() && it->first < D; ++it) {
      auto jt = neg_deg.find(D - it->first);
      if (jt == neg_deg.end()) continue;
      const std::vector<std::size_t> pos_ids = it->second;
      const std::vector<std::size_t> neg_ids = jt->second;
      for (std::size_t pi : pos_ids) {
        for (std::size_t ni : neg_ids) {
          const std::int32_t* pr = pos.row(pi);
          const std::int32_t* nr = neg.row(ni);
          if (cs.truncate_lane && pr[*cs.truncate_lane] + nr[*cs.truncate_lane] > 1) continue;
          std::copy(pr, pr + stride, a.begin());
          std::copy(nr, nr + stride, b.begin());
          if (!kernels::add_checked(a, b, buf)) throw OverflowError("completion entry exceeds lane range");
          const i64 v = pos.value(pi) + neg.value(ni);
          set_value(v);
          if (dominated(zero)) continue;
          if (v > 0) {
            if (dominated(pos)) continue;
            pos_deg[D].push_back(pos.push(buf, v));
          } else if (v < 0) {
            if (dominated(neg)) continue;
            neg_deg[D].push_back(neg.push(buf, v));
          } else {
            zero.push(buf, 0);
          }
        }
      }
    }
  }

  std::vector<Gen> out;
  out.reserve(zero.size());
  for (std::size_t i = 0; i < zero.size(); ++i) out.emplace_back(zero.row(i), zero.row(i) + n);
  return out;
}

// Row basis of B: drop rows that do not increase the rank.
std::vector<std::vector<i64>> independent_rows(const IntMat& B) {
  std::vector<IntVec> kept;
  std::vector<std::vector<i64>> out;
  for (std::size_t r = 0; r < B.rows(); ++r) {
    IntVec row = B.row(r);
    if (row.is_zero()) continue;
    kept.push_back(row);
    if (rank(IntMat::from_rows(kept, B.cols())) < kept.size()) {
      kept.pop_back();
      continue;
    }
    out.push_back(to64(row));
  }
  return out;
}

// Hilbert basis of {x >= 0 : rows . x = 0}, optionally truncated to x[lane] <= 1.
std::vector<Gen> kernel_basis(const IntMat& B, std::optional<std::size_t> truncate_lane) {
  const std::size_t n = B.cols();
  CompletionPlan cs{n, truncate_lane};
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Gen e(n, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  std::vector<std::vector<i64>> eqs = independent_rows(B);
  while (!eqs.empty()) {
    // Next equation: the one with the fewest opposite-sign pairs.
    std::size_t best = 0;
    i128 best_cost = -1;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      i128 p = 0, q = 0;
      for (const Gen& g : gens) {
        const i64 v = eval(g, eqs[e]);
        p += v > 0;
        q += v < 0;
      }
      if (best_cost < 0 || p * q < best_cost) {
        best_cost = p * q;
        best = e;
      }
    }
    gens = complete_equation(gens, eqs[best], cs);
    eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return gens;
}

IntVec to_intvec(const Gen& g, std::size_t len) {
  IntVec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = g[i];
  return v;
}

}  // namespace

HilbertBasis minimal_nonneg_kernel(const IntMat& B) {
  HilbertBasis hb;
  for (const Gen& g : kernel_basis(B, std::nullopt)) hb.elements.push_back(to_intvec(g, B.cols()));
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

MinimalSolutionSet minimal_solutions(const IntMat& B, const IntVec& c) {
  if (c.size() != B.rows()) throw DimensionMismatch("right-hand side length differs from the row count");
  const std::size_t n = B.cols();
  // Homogenize: B x - t c = 0, keep t <= 1, harvest t = 1.
  IntMat H(B.rows(), n + 1);
  for (std::size_t r = 0; r < B.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) H(r, j) = B(r, j);
    H(r, n) = -c[r];
  }
  MinimalSolutionSet out;
  for (const Gen& g : kernel_basis(H, n))
    if (g[n] == 1) out.solutions.push_back(to_intvec(g, n));
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

MinimalSolutionSet minimal_inhomogeneous(const IntMat& A, const IntVec& f) {
  if (f.size() != A.rows()) throw DimensionMismatch("f length differs from the row count");
  const std::size_t n = A.cols();
  IntMat B(A.rows(), 2 * n);
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      B(r, j) = -A(r, j);
      B(r, n + j) = A(r, j);
    }
  return minimal_solutions(B, f);
}

// ------------------------------------------------------ saturation basis ---

HilbertBasis saturation_hilbert_basis(const IntMat& A, LatticeMode mode) {
  std::vector<IntVec> cols;
  for (const IntVec& c : A.columns())
    if (!c.is_zero()) cols.push_back(c);
  if (cols.empty()) return {};
  if (!is_pointed(cols)) throw NotPointed();

  const IntMat W = mode == LatticeMode::Ambient ? span_lattice_basis(A) : column_lattice_basis(A);
  const std::size_t r = W.cols();
  const HermiteForm whnf = hermite_normal_form(W);

  // Generators in lattice coordinates: a full-dimensional pointed cone in Z^r.
  std::vector<IntVec> coords;
  for (const IntVec& c : cols) {
    auto y = solve_integer(whnf, c);
    if (!y) throw Error("generator outside its own lattice");
    coords.push_back(std::move(*y));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  const ConeDescription cone = dual_description(coords);
  std::vector<std::vector<i64>> facets;
  for (const IntVec& h : cone.facets) facets.push_back(to64(h));

  std::unordered_set<IntVec, IntVecHash> cand(coords.begin(), coords.end());
  for (const auto& simplex : placing_triangulation(coords)) {
    std::vector<IntVec> sc;
    for (std::size_t i : simplex) sc.push_back(coords[i]);
    for (IntVec& p : simplicial_parallelepiped_points(sc))
      if (!p.is_zero()) cand.insert(std::move(p));
  }

  // Sort by a positive grading so that only lighter candidates can reduce a point.
  IntVec grading(r);
  for (const IntVec& h : cone.facets) grading += h;
  struct Item {
    i64 deg;
    std::vector<i64> y;
  };
  std::vector<Item> items;
  for (const IntVec& c : cand) {
    std::vector<i64> y = to64(c);
    items.push_back({dot64(to64(grading), y), std::move(y)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.y < b.y;
  });

  std::vector<i64> diff(r);
  HilbertBasis hb;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < i && !reducible && items[j].deg < items[i].deg; ++j) {
      for (std::size_t k = 0; k < r; ++k) diff[k] = items[i].y[k] - items[j].y[k];
      reducible = std::all_of(facets.begin(), facets.end(), [&](const auto& h) { return dot64(h, diff) >= 0; });
    }
    if (reducible) continue;
    IntVec y = IntVec::from_int64(items[i].y);
    hb.elements.push_back(W * y);
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

// ------------------------------------------------------------ feasibility ---

struct FeasibilitySolver::Impl {
  struct Lattice {
    // Column HNF of the suffix matrix: lower echelon, pivots at pivot_rows.
    std::vector<std::vector<i64>> H;  // H[row][col]
    std::vector<std::size_t> pivot_rows;
  };
  struct Suffix {
    std::vector<std::vector<i64>> ineq;
    std::vector<std::vector<i64>> eq;
    Lattice lattice;
  };

  std::size_t m = 0;
  std::vector<std::size_t> order;        // DFS position -> original column
  std::vector<std::vector<i64>> cols;    // by DFS position
  // suffix[k]: columns at positions k..end, built on first use.
  mutable std::vector<Suffix> suffix;
  mutable std::unique_ptr<std::once_flag[]> ready;

  const Suffix& at(std::size_t k) const {
    std::call_once(ready[k], [&] { build(k); });
    return suffix[k];
  }

  void build(std::size_t k) const {
    const std::size_t n = cols.size();
    Suffix& s = suffix[k];
    std::vector<IntVec> gens;
    for (std::size_t j = k; j < n; ++j) gens.push_back(IntVec::from_int64(cols[j]));
    if (gens.empty()) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<i64> e(m, 0);
        e[i] = 1;
        s.eq.push_back(e);
      }
      return;
    }
    const ConeDescription cd = dual_description(gens);
    for (const IntVec& h : cd.facets) s.ineq.push_back(to64(h));
    for (const IntVec& e : cd.implicit_equations) s.eq.push_back(to64(e));
    const HermiteForm hf = hermite_normal_form(IntMat::from_columns(gens, m));
    s.lattice.pivot_rows = hf.pivot_rows;
    s.lattice.H.assign(m, std::vector<i64>(hf.rank()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < hf.rank(); ++j) s.lattice.H[i][j] = to_int64_checked(hf.H(i, j));
  }

  bool in_cone(std::size_t k, const std::vector<i64>& r) const {
    const Suffix& s = at(k);
    for (const auto& h : s.ineq)
      if (dot64(h, r) < 0) return false;
    for (const auto& e : s.eq)
      if (dot64(e, r) != 0) return false;
    return true;
  }

  // Necessary condition only, so overflow just skips the test.
  bool in_lattice(std::size_t k, const std::vector<i64>& r) const {
    const Lattice& L = at(k).lattice;
    const std::size_t rk = L.pivot_rows.size();
    std::vector<i128> y(rk);
    for (std::size_t c = 0; c < rk; ++c) {
      const std::size_t p = L.pivot_rows[c];
      i128 s = r[p];
      for (std::size_t j = 0; j < c; ++j) s -= static_cast<i128>(L.H[p][j]) * y[j];
      if (s % L.H[p][c] != 0) return false;
      y[c] = s / L.H[p][c];
      if (y[c] > INT64_MAX / 4 || y[c] < INT64_MIN / 4) return true;
    }
    for (std::size_t i = 0; i < m; ++i) {
      i128 s = 0;
      for (std::size_t j = 0; j < rk; ++j) s += static_cast<i128>(L.H[i][j]) * y[j];
      if (s != r[i]) return false;
    }
    return true;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<i64>& v) const {
      std::size_t h = 0x9e3779b97f4a7c15ull;
      for (i64 x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
      return h;
    }
  };

  struct Search {
    const Impl& impl;
    std::vector<i64> x;
    std::unordered_set<std::vector<i64>, KeyHash> failed;

    bool dfs(std::size_t k, std::vector<i64>& r) {
      if (k == impl.cols.size()) return std::all_of(r.begin(), r.end(), [](i64 v) { return v == 0; });
      std::vector<i64> key = r;
      key.push_back(static_cast<i64>(k));
      if (failed.count(key)) return false;
      if (!impl.in_cone(k, r) || !impl.in_lattice(k, r)) {
        remember(std::move(key));
        return false;
      }
      const std::vector<i64>& a = impl.cols[k];
      const Suffix& next = impl.at(k + 1);
      i64 lo = 0, hi = INT64_MAX;
      for (const auto& h : next.ineq) {
        const i64 c = dot64(h, a), s = dot64(h, r);
        if (c > 0)
          hi = std::min(hi, floor_div64(s, c));
        else if (c < 0)
          lo = std::max(lo, ceil_div64(s, c));
        else if (s < 0)
          hi = -1;
      }
      for (const auto& e : next.eq) {
        const i64 c = dot64(e, a), s = dot64(e, r);
        if (c == 0) {
          if (s != 0) hi = -1;
        } else if (s % c != 0) {
          hi = -1;
        } else {
          lo = std::max(lo, s / c);
          hi = std::min(hi, s / c);
        }
      }
      if (hi == INT64_MAX) throw Error("feasibility search lost its bound; cone not pointed");
      for (i64 t = hi; t >= lo; --t) {
        std::vector<i64> rest(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) rest[i] = narrow(static_cast<i128>(r[i]) - static_cast<i128>(t) * a[i]);
        x[k] = t;
        if (dfs(k + 1, rest)) return true;
      }
      x[k] = 0;
      remember(std::move(key));
      return false;
    }

    void remember(std::vector<i64> key) {
      if (failed.size() < 4'000'000) failed.insert(std::move(key));
    }
  };
};

FeasibilitySolver::FeasibilitySolver(const IntMat& A) : A_(A), impl_(std::make_unique<Impl>()) {
  Impl& im = *impl_;
  im.m = A.rows();
  std::vector<IntVec> nonzero;
  for (std::size_t c = 0; c < A.cols(); ++c)
    if (!A.column(c).is_zero()) {
      im.order.push_back(c);
      nonzero.push_back(A.column(c));
    }
  if (!nonzero.empty() && !is_pointed(nonzero)) throw NotPointed();

  // Heaviest columns first: they have the fewest admissible multiplicities.
  IntVec grading(im.m);
  if (!nonzero.empty())
    for (const IntVec& h : dual_description(nonzero).facets) grading += h;
  std::vector<Integer> weight(A.cols());
  for (std::size_t c : im.order) weight[c] = grading.dot(A.column(c));
  std::stable_sort(im.order.begin(), im.order.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });

  for (std::size_t c : im.order) im.cols.push_back(to64(A.column(c)));
  const std::size_t n = im.cols.size();
  im.suffix.resize(n + 1);
  im.ready = std::make_unique<std::once_flag[]>(n + 1);
}

FeasibilitySolver::~FeasibilitySolver() = default;
FeasibilitySolver::FeasibilitySolver(FeasibilitySolver&&) noexcept = default;
FeasibilitySolver& FeasibilitySolver::operator=(FeasibilitySolver&&) noexcept = default;

std::optional<IntVec> FeasibilitySolver::solve(const IntVec& b) const {
  if (b.size() != A_.rows()) throw DimensionMismatch("right-hand side length differs from the row count");
  const Impl& im = *impl_;
  std::vector<i64> r = b.to_int64();
  Impl::Search search{im, std::vector<i64>(im.cols.size(), 0), {}};
  if (!search.dfs(0, r)) return std::nullopt;
  IntVec x(A_.cols());
  for (std::size_t k = 0; k < im.order.size(); ++k) x[im.order[k]] = search.x[k];
  if (A_ * x != b) throw Error("feasibility witness failed verification");
  return x;
}

std::optional<IntVec> integer_feasible(const IntMat& A, const IntVec& b) { return FeasibilitySolver(A).solve(b); }

}  // namespace semiholes
