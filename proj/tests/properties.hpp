#pragma once

// Randomized property suites, shared by the unit tests and the acceptance run.
// Each returns the number of failing cases.

#include <random>

#include "oadp/catalog.hpp"

namespace oadp::props {

inline constexpr int kCases = 1000;

struct Gen {
  std::mt19937_64 rng{20240601};
  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  MultiPoly poly(int nvars, int maxDeg, int terms) {
    MultiPoly f(nvars);
    for (int t = 0; t < terms; ++t) {
      int d = small(0, maxDeg);
      Mono m;
      for (int k = 0; k < d; ++k) {
        m.e[small(0, nvars - 1)]++;
        m.deg++;
      }
      Rational q(small(-5, 5), small(1, 3));
      q.canonicalize();
      f.add_term(m, q);
    }
    return f;
  }

  BinaryForm binary(int deg) {
    BinaryForm f(2);
    for (int i = 0; i <= deg; ++i) f.add_term(Mono::from({deg - i, i}), small(-4, 4));
    return f;
  }

  BinaryForm nonzero_binary(int deg) {
    for (;;) {
      auto f = binary(deg);
      if (!f.is_zero()) return f;
    }
  }

  RatMatrix invertible(int n) {
    for (;;) {
      RatMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = small(-2, 2);
      if (determinant(m) != 0) return m;
    }
  }
};

inline RatMatrix lin(const RatMatrix& a, const Rational& s, const RatMatrix& b, const Rational& t) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j) + t * b(i, j);
  return r;
}

inline std::vector<SymmetricPencil> sample_pencils() {
  std::vector<SymmetricPencil> out;
  for (auto& id : catalog_ids(fixture_dir())) {
    auto e = load_entry(id, fixture_dir());
    if (!e.pencil) continue;
    try {
      segre_symbol(*e.pencil);
      out.push_back(*e.pencil);
    } catch (const Error&) {
      // cone pencils have no symbol of their own
    }
  }
  return out;
}


inline int ring_laws(int cases) {
  Gen g;
  int bad = 0;
  for (int c = 0; c < cases; ++c) {
    auto a = g.poly(3, 3, 4), b = g.poly(3, 3, 4), d = g.poly(3, 2, 3);
    bool ok = a + b == b + a && a * b == b * a && (a + b) + d == a + (b + d) && (a * b) * d == a * (b * d) &&
              a * (b + d) == a * b + a * d && a - a == MultiPoly(3) && a.pow(2) == a * a &&
              (b.is_zero() || exact_div(a * b, b) == a) &&
              // derivative is a derivation
              (a * b).differentiate(1) == a.differentiate(1) * b + a * b.differentiate(1);
    bad += !ok;
  }
  return bad;
}

inline int gcd_factor(int cases) {
  Gen g;
  int bad = 0;
  for (int c = 0; c < cases; ++c) {
    // binary_factor handles degree <= 4
    auto h = g.nonzero_binary(g.small(0, 1));
    auto f = g.nonzero_binary(g.small(0, 2)), k = g.nonzero_binary(g.small(0, 3));
    auto a = f * h * h, b = k * h;
    bool ok = true;
    try {
      auto d = binary_gcd({a, b});
      exact_div(d, h.primitive());
      exact_div(a, d);
      exact_div(b, d);
      auto prod = BinaryForm::constant(2, 1);
      for (auto& [p, m] : binary_factor(a)) {
        if (p.total_degree() < 1) ok = false;
        prod = prod * p.pow(m);
      }
      ok = ok && prod.primitive() == a.primitive();
    } catch (const Error&) {
      ok = false;
    }
    bad += !ok;
  }
  return bad;
}

inline int stdquad_involution(int cases) {
  Gen g;
  int bad = 0;
  for (int c = 0; c < cases; ++c) {
    int d = g.small(1, 12);
    int m1 = g.small(0, d), m2 = g.small(0, d), m3 = g.small(0, d);
    auto t = stdquad_transform(d, m1, m2, m3);
    auto back = stdquad_transform(t.d, t.m[0], t.m[1], t.m[2]);
    bool ok = back.d == d && back.m == std::array<int, 3>{m1, m2, m3} &&
              t.d * t.d - t.m[0] * t.m[0] - t.m[1] * t.m[1] - t.m[2] * t.m[2] == d * d - m1 * m1 - m2 * m2 - m3 * m3 &&
              3 * t.d - t.m[0] - t.m[1] - t.m[2] == 3 * d - m1 - m2 - m3;
    bad += !ok;
  }
  return bad;
}

inline int segre_invariance(int cases) {
  Gen g;
  auto pencils = sample_pencils();
  if (pencils.size() < 10) return cases;
  int bad = 0;
  for (int c = 0; c < cases; ++c) {
    auto& p = pencils[c % pencils.size()];
    auto want = segre_symbol(p).str();
    RatMatrix m = g.invertible(2), P = g.invertible(4);
    auto B1 = lin(p.A1, m(0, 0), p.A2, m(0, 1)), B2 = lin(p.A1, m(1, 0), p.A2, m(1, 1));
    try {
      auto q = SymmetricPencil::make(P.transpose() * B1 * P, P.transpose() * B2 * P, true);
      bad += segre_symbol(q).str() != want;
    } catch (const Error&) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace oadp::props
