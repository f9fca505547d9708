#include "semiholes/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "semiholes/errors.hpp"

namespace semiholes {

namespace {

ConeDescription checked_cone(const IntMat& A) {
  if (A.rows() == 0 || A.cols() == 0) throw InvalidArgument("matrix must have at least one row and one column");
  std::vector<IntVec> cols = A.columns();
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c].is_zero()) throw InvalidArgument("column " + std::to_string(c + 1) + " is zero");
  ConeDescription cd = dual_description(cols);
  if (!cd.pointed()) throw NotPointed();
  return cd;
}

}  // namespace

SemigroupProblem::SemigroupProblem(IntMat A, LatticeMode mode)
    : A_(std::move(A)),
      mode_(mode),
      cone_(checked_cone(A_)),
      basis_(mode == LatticeMode::Ambient ? span_lattice_basis(A_) : column_lattice_basis(A_)),
      hnf_(hermite_normal_form(basis_)),
      solver_(A_) {
  bool positive_sums = true;
  for (const IntVec& c : A_.columns()) positive_sums = positive_sums && c.sum() > 0;
  grading_ = IntVec(A_.rows());
  if (positive_sums) {
    for (auto& g : grading_) g = 1;
  } else {
    for (const IntVec& h : cone_.facets) grading_ += h;
  }
  for (const IntVec& c : A_.columns()) {
    auto y = solve_integer(hnf_, c);
    if (!y) throw Error("column outside its own lattice");
    coords_.push_back(std::move(*y));
  }
}

bool SemigroupProblem::in_lattice(const IntVec& b) const {
  if (b.size() != A_.rows()) throw DimensionMismatch("point length differs from the row count");
  return solve_integer(hnf_, b).has_value();
}

std::optional<IntVec> SemigroupProblem::semigroup_witness(const IntVec& b) const {
  if (b.size() != A_.rows()) throw DimensionMismatch("point length differs from the row count");
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
  }
  std::optional<IntVec> w;
  if (in_cone(b) && in_lattice(b)) w = solver_.solve(b);
  std::unique_lock lock(cache_mutex_);
  cache_.emplace(b, w);
  return w;
}

const char* tag_name(PointClass::Tag tag) {
  switch (tag) {
    case PointClass::Tag::OutsideCone:
      return "outside-cone";
    case PointClass::Tag::OutsideLattice:
      return "outside-lattice";
    case PointClass::Tag::Hole:
      return "hole";
    case PointClass::Tag::InQ:
      return "in-semigroup";
  }
  return "?";
}

PointClass classify_point(const SemigroupProblem& P, const IntVec& b) {
  if (b.size() != P.rows()) throw DimensionMismatch("point length differs from the row count");
  const ConeDescription& cone = P.cone();
  if (auto v = cone.violated_constraint(b)) {
    const std::size_t i = *v;
    return {PointClass::Tag::OutsideCone,
            i < cone.facets.size() ? cone.facets[i] : cone.implicit_equations[i - cone.facets.size()]};
  }
  if (!P.in_lattice(b)) {
    // Reduce b modulo the echelon basis; what is left is a canonical nonzero residue.
    const HermiteForm& hf = P.lattice_hnf();
    IntVec r = b;
    for (std::size_t k = 0; k < hf.rank(); ++k) {
      const std::size_t p = hf.pivot_rows[k];
      const Integer q = floor_div(r[p], hf.H(p, k));
      if (q != 0) r -= q * hf.H.column(k);
    }
    return {PointClass::Tag::OutsideLattice, r};
  }
  if (auto x = P.semigroup_witness(b)) return {PointClass::Tag::InQ, x};
  return {PointClass::Tag::Hole, std::nullopt};
}

LatticePointSet fundamental_holes(const SemigroupProblem& P) {
  std::vector<IntVec> gens = P.lattice_coordinates();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::vector<IntVec> cols = P.matrix().columns();

  std::unordered_set<IntVec, IntVecHash> seen;
  std::vector<IntVec> holes;
  for (const auto& simplex : placing_triangulation(gens)) {
    std::vector<IntVec> sc;
    for (std::size_t i : simplex) sc.push_back(gens[i]);
    for (const IntVec& y : simplicial_parallelepiped_points(sc)) {
      if (y.is_zero()) continue;
      IntVec z = P.lattice_basis() * y;
      if (!seen.insert(z).second) continue;
      const bool minimal = std::none_of(cols.begin(), cols.end(), [&](const IntVec& a) { return P.in_cone(z - a); });
      if (minimal && !P.in_semigroup(z)) holes.push_back(std::move(z));
    }
  }
  return make_point_set(std::move(holes));
}

bool is_saturated(const SemigroupProblem& P) { return fundamental_holes(P).empty(); }

bool is_saturated_by_hilbert_basis(const SemigroupProblem& P) {
  const HilbertBasis hb = saturation_hilbert_basis(P.matrix(), P.lattice_mode());
  return std::all_of(hb.elements.begin(), hb.elements.end(), [&](const IntVec& h) { return P.in_semigroup(h); });
}

std::vector<ColumnWitness> droppable_columns(const SemigroupProblem& P, const IntVec& f) {
  std::vector<ColumnWitness> out;
  for (std::size_t i = 0; i < P.cols(); ++i)
    if (auto w = P.semigroup_witness(f + P.matrix().column(i))) out.push_back({i, std::move(*w)});
  return out;
}

std::vector<std::size_t> kept_columns(const SemigroupProblem& P, const IntVec& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.cols(); ++i)
    if (!P.in_semigroup(f + P.matrix().column(i))) out.push_back(i);
  return out;
}

HoleIdeal hole_ideal(const SemigroupProblem& P, const IntVec& f, const std::vector<std::size_t>& columns) {
  const IntMat& A = P.matrix();
  const std::size_t k = columns.size(), n = A.cols();
  // f + A' lambda = A mu  <=>  [-A' | A] (lambda, mu) = f.
  IntMat B(A.rows(), k + n);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t j = 0; j < k; ++j) B(r, j) = -A(r, columns.at(j));
    for (std::size_t j = 0; j < n; ++j) B(r, k + j) = A(r, j);
  }
  std::vector<IntVec> lambdas;
  for (const IntVec& s : minimal_solutions(B, f).solutions) {
    IntVec lam(k);
    for (std::size_t j = 0; j < k; ++j) lam[j] = s[j];
    lambdas.push_back(std::move(lam));
  }
  return {minimalize(k, std::move(lambdas)), columns};
}

bool family_less(const HoleFamily& a, const HoleFamily& b) {
  if (a.fundamental != b.fundamental) return a.fundamental < b.fundamental;
  if (a.base != b.base) return a.base < b.base;
  if (a.free_columns != b.free_columns) return a.free_columns < b.free_columns;
  return a.root < b.root;
}

std::vector<HoleFamily> holes_above(const SemigroupProblem& P, const IntVec& f, bool use_trick) {
  std::vector<std::size_t> columns;
  if (use_trick) {
    columns = kept_columns(P, f);
  } else {
    columns.resize(P.cols());
    for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  }
  const HoleIdeal hi = hole_ideal(P, f, columns);
  std::vector<HoleFamily> out;
  for (const StandardPair& sp : standard_pairs(hi.ideal)) {
    HoleFamily fam{f, f, {}, IntVec(P.cols())};
    for (std::size_t k = 0; k < columns.size(); ++k) fam.root[columns[k]] = sp.root[k];
    for (std::size_t k : sp.free_vars) fam.free_columns.push_back(columns[k]);
    std::sort(fam.free_columns.begin(), fam.free_columns.end());
    fam.base = f + P.matrix() * fam.root;
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

HoleReport hole_report(const SemigroupProblem& P, const ReportOptions& options) {
  HoleReport report;
  report.rows = P.rows();
  report.cols = P.cols();
  report.fundamental_holes = fundamental_holes(P);
  report.saturated = report.fundamental_holes.empty();
  if (options.only.empty()) {
    report.examined = report.fundamental_holes.points;
  } else {
    for (const IntVec& f : options.only)
      if (!report.fundamental_holes.contains(f)) throw InvalidArgument("not a fundamental hole: " + f.str());
    report.examined = make_point_set(options.only).points;
  }

  std::vector<std::vector<HoleFamily>> per_hole(report.examined.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < per_hole.size();) {
      try {
        per_hole[i] = holes_above(P, report.examined[i], options.use_trick);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(per_hole.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& fams : per_hole)
    for (auto& fam : fams) report.families.push_back(std::move(fam));
  std::sort(report.families.begin(), report.families.end(), family_less);
  return report;
}

Integer frobenius_number(const SemigroupProblem& P) {
  if (P.rows() != 1) throw MultiRow();
  const IntMat& A = P.matrix();
  Integer g = 0;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    if (A(0, c) <= 0) throw InvalidArgument("Frobenius numbers need positive generators");
    g = gcd(g, A(0, c));
  }
  if (g != 1) throw GcdNotOne();
  const HoleReport report = hole_report(P);
  Integer best = -1;
  for (const HoleFamily& fam : report.families) {
    if (!fam.free_columns.empty()) throw Error("infinite hole family in a numerical semigroup");
    if (fam.base[0] > best) best = fam.base[0];
  }
  return best;
}

LatticePointSet saturation_points_up_to(const SemigroupProblem& P, const Integer& D) {
  Region region;
  region.dim = P.rows();
  for (const IntVec& h : P.cone().facets) region.inequalities.push_back({h, 0});
  region.inequalities.push_back({-P.grading(), Rational(-D)});
  for (const IntVec& e : P.cone().implicit_equations) region.equations.push_back({e, 0});
  LatticePointSet all = enumerate_lattice_points(region);
  std::vector<IntVec> kept;
  for (IntVec& z : all.points)
    if (P.in_lattice(z)) kept.push_back(std::move(z));
  return LatticePointSet{std::move(kept)};
}

LatticePointSet covered_up_to(const SemigroupProblem& P, const std::vector<HoleFamily>& families, const Integer& D) {
  std::vector<IntVec> out;
  for (const HoleFamily& fam : families) {
    std::vector<IntVec> cols;
    std::vector<Integer> deg;
    for (std::size_t j : fam.free_columns) {
      cols.push_back(P.matrix().column(j));
      deg.push_back(P.degree(cols.back()));
    }
    IntVec z = fam.base;
    std::function<void(std::size_t, const Integer&)> walk = [&](std::size_t k, const Integer& d) {
      if (k == cols.size()) {
        out.push_back(z);
        return;
      }
      Integer cur = d;
      std::size_t steps = 0;
      while (cur <= D) {
        walk(k + 1, cur);
        z += cols[k];
        cur += deg[k];
        ++steps;
      }
      for (std::size_t s = 0; s < steps; ++s) z -= cols[k];
    };
    const Integer d0 = P.degree(z);
    if (d0 <= D) walk(0, d0);
  }
  return make_point_set(std::move(out));
}

DegreeCheck degree_check(const SemigroupProblem& P, const HoleReport& report, const Integer& D) {
  DegreeCheck dc;
  std::set<IntVec> holes;
  for (const IntVec& z : saturation_points_up_to(P, D).points)
    if (!P.in_semigroup(z)) holes.insert(z);
  dc.holes = holes.size();
  const LatticePointSet covered = covered_up_to(P, report.families, D);
  for (const IntVec& h : holes)
    if (!covered.contains(h)) dc.uncovered.push_back(h);
  for (const IntVec& c : covered.points)
    if (!holes.count(c)) dc.spurious.push_back(c);
  return dc;
}

}  // namespace semiholes
