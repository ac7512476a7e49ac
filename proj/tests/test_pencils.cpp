#include "doctest.h"

#include "oadp/pencils.hpp"

using namespace oadp;

namespace {
MultiPoly Q(const char* s, int n = 4) { return MultiPoly::parse(s, n); }
MultiPoly B(const char* s) { return MultiPoly::parse(s, 2); }
SymmetricPencil pencil(const char* a, const char* b, bool singular = false) {
  return SymmetricPencil::make(quadric_matrix(Q(a)), quadric_matrix(Q(b)), singular);
}
bool proportional(const MultiPoly& a, const MultiPoly& b) { return a.monic() == b.monic(); }
}  // namespace

TEST_CASE("det and minor gcds") {
  auto d = pencil_det_and_minor_gcds(pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+2*x1^2+3*x2^2+4*x3^2"));
  CHECK(d.det == B("x0+x1") * B("x0+2*x1") * B("x0+3*x1") * B("x0+4*x1"));
  CHECK(d.gcds[1].total_degree() == 0);

  auto e = pencil_det_and_minor_gcds(pencil("x0*x1", "x2*x3"));
  CHECK(e.det == B("1/16*x0^2*x1^2"));
  CHECK(proportional(e.gcds[1], B("x0*x1")));

  RatMatrix a = quadric_matrix(Q("x0^2+x1*x2+x3^2"));
  RatMatrix twice = a * RatMatrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) twice(i, j) *= 2;
  try {
    SymmetricPencil::make(a, twice);
    FAIL("expected DegeneratePencil");
  } catch (const Error& ex) {
    CHECK(ex.code() == ErrorCode::DegeneratePencil);
  }
  CHECK_THROWS_AS(pencil("x0^2", "x1^2"), Error);
}

TEST_CASE("segre symbols of small pencils") {
  CHECK(segre_symbol(pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+2*x1^2+3*x2^2+4*x3^2")).str() == "[1,1,1,1]");
  CHECK(segre_symbol(pencil("x0*x1", "x2*x3")).str() == "[(11),(11)]");
  auto e13 = pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+x1^2+x2^2+2*x3^2");
  auto s = segre_symbol(e13);
  CHECK(s.str() == "[(111),1]");
  REQUIRE(s.groups.size() == 2);
  CHECK(s.groups[0].l == std::vector<int>{3, 2, 1});
  // conjugate roots stay in one class
  auto c = segre_symbol(pencil("x0^2-x1^2+x2^2+x3^2", "2*x0*x1+x2^2-x3^2"));
  CHECK(c.str() == "[1,1,1,1]");
  REQUIRE(c.groups.size() == 3);
  CHECK(c.groups[2].fieldDegree == 2);
}

TEST_CASE("singular members") {
  auto d = singular_members(pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+2*x1^2+3*x2^2+4*x3^2"));
  CHECK(d.size() == 4);
  for (auto& m : d) CHECK(m.corank == 1);
  auto p = singular_members(pencil("x0*x1", "x2*x3"));
  REQUIRE(p.size() == 2);
  CHECK(p[0].corank == 2);
  CHECK(p[1].corank == 2);
  auto e13 = singular_members(pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+x1^2+x2^2+2*x3^2"));
  REQUIRE(e13.size() == 2);
  CHECK(e13[0].corank == 3);
  CHECK(e13[1].corank == 1);
  // rank of a corank-3 member is 1
  auto root = linear_root(e13[0].rootClass);
  auto m = pencil("x0^2+x1^2+x2^2+x3^2", "x0^2+x1^2+x2^2+2*x3^2").member(root[0], root[1]);
  CHECK(rank(m) == 1);
}

TEST_CASE("conic sections of cone pencils") {
  auto cone = pencil("x1^2+x2^2+x3^2", "x2^2+2*x3^2", true);
  CHECK(conic_section_symbol(cone, {1, -1, -1, -1}).str() == "[[1,1,1]]");
  // a plane through the vertex leaves a degenerate section
  try {
    conic_section_symbol(cone, {0, 1, 0, 0});
    FAIL("expected DegenerateSection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSection);
  }
  // every member of x0*x1, x0*x2 is a plane pair, so every section degenerates
  auto planes = pencil("x0*x1", "x0*x2", true);
  try {
    conic_section_symbol(planes, {1, 1, 1, -1});
    FAIL("expected DegenerateSection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSection);
  }
}

TEST_CASE("quadric matrix round trip") {
  MultiPoly q = Q("x0^2 - 3*x0*x3 + 1/2*x1*x2");
  CHECK(quadric_form(quadric_matrix(q)) == q);
  CHECK(linear_root(B("2*x0 + 3*x1")) == std::array<Rational, 2>{-3, 2});
}
