#include "doctest.h"

#include "oadp/binary.hpp"
#include "oadp/linalg.hpp"
#include "oadp/kernels.hpp"
#include "oadp/poly.hpp"
#include "oadp/resultant.hpp"

using namespace oadp;

namespace {
MultiPoly P(const char* s, int n = 4) { return MultiPoly::parse(s, n); }
MultiPoly B(const char* s) { return MultiPoly::parse(s, 2); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}
}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("ring_ops examples") {
  CHECK(P("x0 + x1") * P("x0 - x1") == P("x0^2 - x1^2"));
  CHECK(exact_div(P("x0^2 - x1^2"), P("x0 - x1")) == P("x0 + x1"));
  try {
    exact_div(P("x0^2 + x1^2"), P("x0 - x1"));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
  try {
    exact_div(P("x0"), MultiPoly(4));
    FAIL("expected ZeroDivisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDivisor);
  }
  try {
    (void)(P("x0") + MultiPoly::parse("x0", 3));
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
  CHECK(ring_ops(P("x0+1"), P("1"), RingOp::Pow, 3) == P("x0^3 + 3*x0^2 + 3*x0 + 1"));
}

TEST_CASE("grevlex order and serialization") {
  MultiPoly f = P("x3^2 + x0*x3 + x1^2 + x0^2");
  // grevlex: x0^2 > x1^2 > x0*x3 > x3^2
  CHECK(f.to_string() == "1*x0^2 + 1*x1^2 + 1*x0*x3 + 1*x3^2");
  CHECK(MultiPoly::parse(f.to_string(), 4) == f);
  CHECK(P("1/2*x0 - 3/4*x1^2*x2").to_string() == "-3/4*x1^2*x2 + 1/2*x0");
  CHECK_THROWS_AS(MultiPoly::parse("x0 + + x1", 4), Error);
  CHECK_THROWS_AS(MultiPoly::parse("x9", 4), Error);
}

TEST_CASE("differentiate examples") {
  CHECK(P("x0^2*x2").differentiate(0) == P("2*x0*x2"));
  CHECK(P("x0^2*x2").differentiate(3).is_zero());
  CHECK(P("x0^2*x2 + x1^2*x3").differentiate(1) == P("2*x1*x3"));
  CHECK_THROWS_AS(P("x0").differentiate(4), Error);
}

TEST_CASE("compose examples") {
  std::vector<MultiPoly> cayley = {MultiPoly::parse("x2^2", 3), MultiPoly::parse("x1*x2", 3),
                                   MultiPoly::parse("x0*x2 - x1^2", 3), MultiPoly::parse("-x0*x1", 3)};
  CHECK(P("x0^2*x3 + x0*x1*x2 + x1^3").compose(cayley).is_zero());
  // x0*x3 + x1*x2 does not vanish on the image
  CHECK(P("x0*x3 + x1*x2").compose(cayley) == MultiPoly::parse("-x1^3*x2", 3));
  // solving the 10-coefficient system shows no quadric contains the image,
  // which is the irreducible cubic surface itself
  auto quads = monomials(4, 2);
  std::vector<Vec> rows;
  std::vector<MultiPoly> pulled;
  for (auto& m : quads) pulled.push_back(MultiPoly::monomial(4, m).compose(cayley));
  for (auto& m : monomials(3, 4)) {
    Vec row;
    for (auto& p : pulled) row.push_back(p.coeff(m));
    rows.push_back(row);
  }
  auto ker = nullspace_rows(rows, quads.size());
  CHECK(ker.empty());
  std::vector<MultiPoly> id;
  for (int i = 0; i < 4; ++i) id.push_back(MultiPoly::variable(4, i));
  CHECK(P("x0").compose(id) == P("x0"));
  CHECK_THROWS_AS(P("x0").compose({P("x0")}), Error);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(RatMatrix::identity(3)).empty());
  CHECK(nullspace(RatMatrix(2, 3)).size() == 3);
  // cubics singular at (1:0:0:0): first partials vanish there
  auto cubics = monomials(4, 3);
  std::vector<Vec> rows;
  for (int v = 0; v < 4; ++v) {
    Vec row;
    for (auto& m : cubics) row.push_back(MultiPoly::monomial(4, m).differentiate(v).evaluate({1, 0, 0, 0}));
    rows.push_back(row);
  }
  std::size_t oracle = 0;
  for (auto& m : cubics)
    if (m.e[0] <= 1) ++oracle;
  CHECK(oracle == 16);
  CHECK(nullspace_rows(rows, cubics.size()).size() == oracle);
}

TEST_CASE("nullspace serial and parallel kernels agree") {
  std::vector<kernels::IntRow> a, b;
  unsigned s = 7;
  for (int i = 0; i < 30; ++i) {
    kernels::IntRow r;
    for (int j = 0; j < 25; ++j) {
      s = s * 1103515245u + 12345u;
      r.emplace_back(static_cast<long>((s >> 16) % 7) - 3);
    }
    a.push_back(r);
  }
  b = a;
  auto p1 = kernels::bareiss_serial(a);
  auto p2 = kernels::bareiss_parallel(b);
  CHECK(p1 == p2);
  CHECK(a == b);
}

TEST_CASE("determinant and inverse") {
  RatMatrix m = RatMatrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(m) == 18);
  CHECK(inverse(m) * m == RatMatrix::identity(3));
  RatMatrix s = RatMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK(determinant(s) == 0);
  CHECK_THROWS_AS(inverse(s), Error);
  RatMatrix h = RatMatrix::from_rows({{Rational(1, 2), 1}, {1, Rational(1, 3)}});
  CHECK(determinant(h) == Rational(-5, 6));
}

TEST_CASE("binary_gcd examples") {
  CHECK(binary_gcd({B("x0^2*x1"), B("x0*x1^2")}) == B("x0*x1"));
  CHECK(binary_gcd({B("x0^4"), B("x0^2*x1^2")}) == B("x0^2"));
  CHECK(binary_gcd({B("x1^3"), B("x0*x1^2")}) == B("x1^2"));
  CHECK_THROWS_AS(binary_gcd({MultiPoly(2), MultiPoly(2)}), Error);
}

TEST_CASE("binary_factor examples") {
  auto f1 = binary_factor(B("x0^2*x1^2"));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == std::make_pair(B("x0"), 2));
  CHECK(f1[1] == std::make_pair(B("x1"), 2));
  auto f2 = binary_factor(B("x0^4 + 2*x0^2*x1^2 + x1^4"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == B("x0^2 + x1^2"));
  CHECK(f2[0].second == 2);
  auto f3 = binary_factor(B("x0^4 - x1^4"));
  REQUIRE(f3.size() == 3);
  CHECK(f3[0].first == B("x0 + x1"));
  CHECK(f3[1].first == B("x0 - x1"));
  CHECK(f3[2].first == B("x0^2 + x1^2"));
  // quartic with two irrational quadratic factors
  auto f4 = binary_factor(B("x0^4 - 5*x0^2*x1^2 + 6*x1^4"));
  CHECK(f4.size() == 2);
  // irreducible quartic
  CHECK(binary_factor(B("x0^4 + x1^4")).size() == 1);
  CHECK_THROWS_AS(binary_factor(B("x0^5")), Error);
  CHECK_THROWS_AS(binary_factor(MultiPoly(2)), Error);
}

TEST_CASE("resultant examples") {
  // x = x0, y = x1
  auto r1 = resultant_eliminate(B("x1 - x0"), B("x1 - 2*x0"), 1);
  CHECK(proportional(r1, B("x0")));
  auto r2 = resultant_eliminate(B("x1^2 - x0"), B("x1"), 1);
  CHECK(r2 == B("-x0"));
  auto f = MultiPoly::parse("x0*x1 - 1", 2, 7), g = MultiPoly::parse("x1^2 - x0", 2, 7);
  auto r3 = resultant_eliminate(f, g, 1);
  CHECK(proportional(r3, MultiPoly::parse("x0^3 - 1", 2, 7)));
  CHECK_THROWS_AS(resultant_eliminate(B("x0"), B("x1"), 1), Error);
}

TEST_CASE("mod_p examples") {
  CHECK(mod_p(P("1/2*x0"), 7) == MultiPoly::parse("4*x0", 4, 7));
  CHECK(mod_p(P("x0^2 - x1^2"), 5) == MultiPoly::parse("x0^2 + 4*x1^2", 4, 5));
  try {
    mod_p(P("1/5*x0"), 5);
    FAIL("expected BadPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPrime);
  }
}
