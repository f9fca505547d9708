#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "semiholes/errors.hpp"
#include "semiholes/models.hpp"

using namespace semiholes;

namespace {

std::set<IntVec> family_points(const SemigroupProblem& P, const std::vector<HoleFamily>& fams, long D) {
  const auto pts = covered_up_to(P, fams, D).points;
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("cdem matrices") {
  const CdemInstance c2 = cdem_matrix(2);
  CHECK(c2.matrix.rows() == 5);
  CHECK(c2.matrix.cols() == 4);
  CHECK(c2.a(1, 1) == IntVec{1, 0, 1, 0, 1});
  CHECK(c2.a(1, 2) == IntVec{0, 1, 1, 0, 0});
  CHECK(c2.a(2, 1) == IntVec{1, 0, 0, 1, 0});
  const CdemInstance c3 = cdem_matrix(3);
  CHECK(c3.matrix.rows() == 7);
  CHECK(c3.matrix.cols() == 9);
  CHECK(c3.column(2, 3) == 5);
  CHECK(c3.a(3, 3) == IntVec{0, 0, 1, 0, 0, 1, 1});
  CHECK(cdem_hole(c3, 1, 2) == IntVec{1, 1, 0, 1, 1, 0, 1});
  CHECK_THROWS_AS(cdem_matrix(1), InvalidArgument);
}

TEST_CASE("cdem holes and families for small d") {
  for (std::size_t d : {2, 3, 4}) {
    CAPTURE(d);
    const CdemInstance inst = cdem_matrix(d);
    const SemigroupProblem P(inst.matrix);
    const CdemExpected expect = cdem_expected(d);
    const HoleReport report = hole_report(P);
    CHECK(report.fundamental_holes == expect.fundamental);
    CHECK(report.fundamental_holes.size() == d * (d - 1) / 2);
    // Same hole sets; the standard-pair decomposition itself may differ.
    CHECK(family_points(P, report.families, 8) == family_points(P, expect.families, 8));
  }
}

TEST_CASE("cdem hilbert bases") {
  const CdemInstance c = cdem_matrix(3);
  std::vector<IntVec> expect = c.matrix.columns();
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t l = k + 1; l <= 3; ++l) expect.push_back(cdem_hole(c, k, l));
  std::sort(expect.begin(), expect.end());
  CHECK(saturation_hilbert_basis(c.matrix).elements == expect);
  CHECK(saturation_hilbert_basis(cdem_matrix(4).matrix).elements.size() == 22);
}

TEST_CASE("cdem hole families overlap") {
  const CdemInstance c = cdem_matrix(3);
  // h_12 + a_33 and h_23 + a_11 are the same point, reached from two fundamental holes.
  CHECK(cdem_hole(c, 1, 2) + c.a(3, 3) == cdem_hole(c, 2, 3) + c.a(1, 1));
  const SemigroupProblem P(c.matrix);
  CHECK(classify_point(P, cdem_hole(c, 1, 2) + c.a(3, 3)).tag == PointClass::Tag::Hole);
  // 2 h_kl is the sum of the four square columns.
  CHECK(classify_point(P, Integer(2) * cdem_hole(c, 1, 3)).tag == PointClass::Tag::InQ);
}

TEST_CASE("hall condition") {
  CHECK(hall_condition(IntVec{1, 1, 0, 1, 1, 0, 1}, 3));
  CHECK_FALSE(hall_condition(IntVec{1, 0, 0, 1, 0, 0, 1}, 3));
  CHECK_THROWS_AS(hall_condition(IntVec{1, 2}, 3), DimensionMismatch);

  // The inequality bounds lattice points of the half-open zonotope of the columns
  // (all coefficients < 1). a_11 lies on its closure only, and violates it.
  for (std::size_t d : {2, 3}) {
    const CdemInstance c = cdem_matrix(d);
    CHECK_FALSE(hall_condition(c.a(1, 1), d));
    const LatticePointSet zonotope = parallelepiped_points(c.matrix);
    CHECK(zonotope.size() > 1);
    for (const IntVec& z : zonotope.points) CHECK(hall_condition(z, d));
  }
}

TEST_CASE("linear ordering polytopes") {
  const PolytopeInstance p3 = lop_matrix(3);
  CHECK(p3.dim == 3);
  CHECK(p3.lifted.rows() == 4);
  CHECK(p3.lifted.cols() == 6);
  CHECK(p3.lifted.column(0) == IntVec{0, 0, 0, 1});
  CHECK(p3.lifted.column(5) == IntVec{1, 1, 1, 1});
  const PolytopeInstance p4 = lop_matrix(4);
  CHECK(p4.lifted.rows() == 7);
  CHECK(p4.lifted.cols() == 24);
  CHECK_THROWS_AS(lop_matrix(1), InvalidArgument);
  CHECK(idp_check(p3).holds);
  CHECK(idp_check(p4).holds);
}

TEST_CASE("polytope lifts") {
  CHECK(polytope_lift({IntVec{0}, IntVec{3}}).lifted.cols() == 4);
  CHECK(polytope_lift({IntVec{0, 0}, IntVec{2, 0}, IntVec{0, 2}, IntVec{2, 2}}).lifted.cols() == 9);
  const PolytopeInstance reeve = polytope_lift({IntVec{0, 0, 0}, IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, 1, 2}});
  CHECK(reeve.lifted.cols() == 4);
  CHECK_THROWS_AS(polytope_lift({}), InvalidArgument);
  CHECK_THROWS_AS(polytope_lift({IntVec{0}, IntVec{0, 1}}), DimensionMismatch);
  CHECK_THROWS_AS(polytope_lift({IntVec{0, 0}, IntVec{2000, 2000}}), InvalidArgument);
}

TEST_CASE("idp certificates") {
  const PolytopeInstance reeve = polytope_lift({IntVec{0, 0, 0}, IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, 1, 2}});
  const IdpResult r = idp_check(reeve);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.certificate);
  CHECK((*r.certificate)[3] == 2);
  CHECK(*r.certificate == IntVec{1, 1, 1, 2});
  CHECK_FALSE(integer_feasible(reeve.lifted, *r.certificate));
  CHECK(oracle::in_rational_cone(reeve.lifted, *r.certificate));

  CHECK(idp_check(polytope_lift({IntVec{0}, IntVec{5}})).holds);
  CHECK(idp_check(polytope_lift({IntVec{0, 0}, IntVec{1, 0}, IntVec{0, 1}})).holds);
}
