#include "doctest.h"

#include "oadp/ratmaps.hpp"

using namespace oadp;

namespace {
MultiPoly P(const char* s, int n = 4) { return MultiPoly::parse(s, n); }
RationalMap map(std::initializer_list<const char*> xs, int n) {
  std::vector<MultiPoly> f;
  for (auto x : xs) f.push_back(MultiPoly::parse(x, n));
  return RationalMap::make(f);
}
const RationalMap kRoman = map({"x1*x2", "x0*x2", "x0*x1", "x0^2 + x1^2 + x2^2"}, 3);
}  // namespace

TEST_CASE("make rejects mixed degrees") {
  CHECK_THROWS_AS(map({"x0", "x1^2"}, 2), Error);
  CHECK_THROWS_AS(map({"0", "0"}, 2), Error);
  auto f = map({"x0^2*x1", "x0*x1^2"}, 2).normalize({P("x0", 2), P("x1", 2)});
  CHECK(f.degree == 1);
}

TEST_CASE("identity and scaled roundtrips") {
  auto id = map({"x0", "x1", "x2", "x3"}, 4);
  auto rt = verify_linear_roundtrip(id, id);
  CHECK(rt.ok);
  CHECK(rt.M == RatMatrix::identity(4));
  CHECK(rt.G == MultiPoly::constant(4, 1));
  // quadratic map composed back: x0*(x0,x1,x2,x3) through a projection
  auto sq = map({"x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2"}, 4);
  auto pr = map({"x0", "x1", "x2", "x3"}, 5);
  auto rt2 = verify_linear_roundtrip(sq, pr);
  CHECK(rt2.ok);
  CHECK(rt2.G.primitive() == P("x0"));
  // x1^2 is not a multiple of a fixed form times a linear one
  auto bad = map({"x1", "x0", "x2", "x4"}, 5);
  try {
    auto r = verify_linear_roundtrip(sq, bad);
    CHECK_FALSE(r.ok);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoLinearFit);
  }
}

TEST_CASE("tangent space of a linear embedding") {
  auto f = map({"x0", "x1", "x2", "0"}, 3);
  auto t = tangent_space_at(f, {1, 2, 3});
  CHECK(t.basisPoints.size() == 3);
  REQUIRE(t.normalForms.size() == 1);
  CHECK(t.normalForms[0] == Vec{0, 0, 0, 1});
  auto pi = tangential_projection(t);
  CHECK(pi.forms.size() == 1);
  CHECK_THROWS_AS(tangent_space_along(f, {{1, 2, 3}}, 4), Error);
}

TEST_CASE("quadric relations and tangent cone ranks") {
  auto conic = map({"x0^2", "x0*x1", "x1^2"}, 2);
  auto rel = quadric_relation(conic.forms);
  REQUIRE(rel.size() == 1);
  CHECK(rank(rel[0]) == 3);
  // conics through two distinct points
  CHECK(tangent_cone_rank(map({"x0*x1", "x0*x2", "x1*x2", "x2^2"}, 3)) == 4);
  // through a point and an infinitely near point
  CHECK(tangent_cone_rank(map({"x0*x2", "x1^2", "x1*x2", "x2^2"}, 3)) == 3);
  CHECK(quadric_relation(kRoman.forms).empty());
  CHECK_THROWS_AS(tangent_cone_rank(kRoman), Error);
  // modulo a form: x0^2 - x1*x2 kills the relation of the conic map
  auto m = quadric_relation({P("x0", 3), P("x1", 3), P("x2", 3)}, P("x0^2 - x1*x2", 3));
  REQUIRE(m.size() == 1);
  CHECK(m[0](0, 0) * -2 == m[0](1, 2) * 4);
}

TEST_CASE("ternary gcd") {
  MultiPoly a = P("x0 + x1", 3), b = P("x2^2 - x0*x1", 3), c = P("x2 + x0", 3);
  CHECK(ternary_gcd({a * b, a * c}) == a);
  CHECK(ternary_gcd({b * c * c, c * c * a}) == (c * c).primitive());
  CHECK(ternary_gcd({b, c}).total_degree() == 0);
  MultiPoly x0 = P("x0", 3);
  CHECK(ternary_gcd({x0 * x0 * b, x0 * b * c}) == (x0 * b).primitive());
  CHECK_THROWS_AS(ternary_gcd({MultiPoly(3)}), Error);
}

TEST_CASE("fp oracle on the Veronese and the Roman surface") {
  auto ver = map({"x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2", "x1*x2"}, 3);
  for (auto p : kDefaultPrimes) {
    CHECK(fp_degree_of_image_surface(ver, p, 5, 1).value == 4);
    CHECK(fp_degree_of_image_surface(kRoman, p, 5, 1).value == 4);
  }
  CHECK(fp_degree_of_image_surface(map({"x0", "x1", "x2"}, 3), 10007, 3, 1).value == 1);
  // projective space through planes of P^3
  CHECK(fp_degree_of_image_surface(map({"x0", "x1", "x2", "x3"}, 4), 10007, 3, 1).value == 1);
  // the triple point of the Roman surface
  CHECK(fp_multiplicity_at(kRoman, {0, 0, 0, 1}, std::nullopt, 10009, 5, 2).value == 3);
  CHECK(fp_multiplicity_at(kRoman, {1, 0, 0, 2}, std::nullopt, 10009, 5, 2).value == 2);
  CHECK_THROWS_AS(fp_degree_of_image_surface(ver, 7, 3, 1), Error);
}

TEST_CASE("fp oracle serial and parallel agree") {
  auto a = fp_degree_of_image_surface(kRoman, 10037, 6, 9, std::nullopt, Exec::Serial);
  auto b = fp_degree_of_image_surface(kRoman, 10037, 6, 9, std::nullopt, Exec::Parallel);
  CHECK(a.value == b.value);
  CHECK(a.agreeing == b.agreeing);
}

TEST_CASE("de Jonquieres cubics") {
  MultiPoly g = P("x0*x3 - x1*x2"), g2 = P("x0^2 + x1^2 + 2*x2^2 + 3*x3^2 + x1*x3");
  auto f = cremona_dejonquieres(g, g2, {1, 0, 0, 0});
  CHECK(f.forms.size() == 4);
  CHECK(f.degree == 3);
  for (auto& h : f.forms)
    for (int i = 0; i < 4; ++i) CHECK(h.differentiate(i).evaluate({1, 0, 0, 0}) == 0);
  CHECK_THROWS_AS(cremona_dejonquieres(g, g2, {1, 0, 0, 1}), Error);
  CHECK_THROWS_AS(cremona_dejonquieres(P("x1^2 + x2^2 - x3^2"), g2, {1, 0, 0, 0}), Error);
}

TEST_CASE("leading forms at a double point") {
  // quadrics through a point, and cubics double there
  LinearSystem L = build_system(3, {PointMult{{1, 0, 0, 0}, 2}});
  auto lf = leading_form_subsystem(L, {1, 0, 0, 0}, 3);
  CHECK(lf.fixedPart.total_degree() == 0);
  CHECK(lf.mapOnE.degree == 3);
  CHECK(lf.mapOnE.forms.size() == 10);
  auto q = leading_form_subsystem(L, {1, 0, 0, 0}, 2);
  CHECK(q.mapOnE.degree == 2);
  CHECK(q.mapOnE.forms.size() == 6);
}
