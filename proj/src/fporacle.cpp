#include <algorithm>
#include <map>
#include <random>

#include "oadp/kernels.hpp"
#include "oadp/ratmaps.hpp"

namespace oadp {

namespace {

using u64 = std::uint64_t;
using kernels::invmod;
using kernels::mulmod;
using UP = std::vector<u64>;  // dense univariate over F_p, low degree first

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  u64 inv(u64 a) const { return invmod(a, p); }
};

void trim(UP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const UP& a) { return static_cast<int>(a.size()) - 1; }

UP up_mod(UP a, const UP& b, const Fp& F) {
  u64 il = F.inv(b.back());
  while (deg(a) >= deg(b)) {
    u64 c = F.mul(a.back(), il);
    int s = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[s + i] = F.sub(a[s + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

UP up_div(UP a, const UP& b, const Fp& F) {
  u64 il = F.inv(b.back());
  UP q(std::max(0, deg(a) - deg(b) + 1));
  while (deg(a) >= deg(b)) {
    u64 c = F.mul(a.back(), il);
    int s = deg(a) - deg(b);
    q[s] = c;
    for (int i = 0; i <= deg(b); ++i) a[s + i] = F.sub(a[s + i], F.mul(c, b[i]));
    trim(a);
  }
  return q;
}

UP up_gcd(UP a, UP b, const Fp& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UP r = up_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UP up_derivative(const UP& a, const Fp& F) {
  UP d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
  trim(d);
  return d;
}

UP squarefree(const UP& a, const Fp& F) {
  UP g = up_gcd(a, up_derivative(a, F), F);
  return up_div(a, g, F);
}

// Resultant of univariate polynomials with the given nonzero leading terms.
u64 up_resultant(UP a, UP b, const Fp& F) {
  u64 res = 1;
  for (;;) {
    int da = deg(a), db = deg(b);
    if (db < 0) return 0;
    if (db == 0) {
      u64 l = b[0], r = 1;
      for (int i = 0; i < da; ++i) r = F.mul(r, l);
      return F.mul(res, r);
    }
    UP r = up_mod(a, b, F);
    if (r.empty()) return 0;
    if ((da & 1) && (db & 1)) res = F.sub(0, res);
    u64 l = b.back();
    for (int i = 0; i < da - deg(r); ++i) res = F.mul(res, l);
    a = std::move(b);
    b = std::move(r);
  }
}

// Dense bivariate polynomial c[i][j] x^i y^j with i + j <= D.
struct Bi {
  int D = 0;
  std::vector<u64> c;
  explicit Bi(int d = 0) : D(d), c((d + 1) * (d + 1), 0) {}
  u64& at(int i, int j) { return c[i * (D + 1) + j]; }
  u64 at(int i, int j) const { return c[i * (D + 1) + j]; }
};

Bi bi_mul(const Bi& a, const Bi& b, int D, const Fp& F) {
  Bi r(D);
  for (int i = 0; i <= a.D; ++i)
    for (int j = 0; i + j <= a.D; ++j) {
      u64 x = a.at(i, j);
      if (!x) continue;
      for (int k = 0; k <= b.D && i + k <= D; ++k)
        for (int l = 0; k + l <= b.D && i + j + k + l <= D; ++l) {
          u64 y = b.at(k, l);
          if (y) r.at(i + k, j + l) = F.add(r.at(i + k, j + l), F.mul(x, y));
        }
    }
  return r;
}

// Forms of degree d pulled back to the affine chart of a random plane.
std::vector<Bi> restrict_forms(const std::vector<MultiPoly>& forms, const std::vector<std::array<u64, 3>>& lin, int d,
                               const Fp& F) {
  int n = static_cast<int>(lin.size());
  std::vector<std::vector<Bi>> pw(n);
  for (int v = 0; v < n; ++v) {
    Bi one(0);
    one.at(0, 0) = 1;
    pw[v].push_back(one);
    Bi l(1);
    l.at(1, 0) = lin[v][0];
    l.at(0, 1) = lin[v][1];
    l.at(0, 0) = lin[v][2];
    for (int k = 1; k <= d; ++k) pw[v].push_back(bi_mul(pw[v].back(), l, k, F));
  }
  std::vector<Bi> out;
  for (auto& f : forms) {
    Bi acc(d);
    for (auto& [m, q] : f.terms()) {
      u64 c = reduce_mod(q, F.p);
      if (!c) continue;
      Bi t(0);
      t.at(0, 0) = c;
      int td = 0;
      for (int v = 0; v < n; ++v)
        if (m.e[v]) {
          td += m.e[v];
          t = bi_mul(t, pw[v][m.e[v]], td, F);
        }
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) acc.at(i, j) = F.add(acc.at(i, j), t.at(i, j));
    }
    out.push_back(acc);
  }
  return out;
}

Bi combine(const std::vector<Bi>& h, const std::vector<u64>& r, const Fp& F) {
  Bi out(h[0].D);
  for (std::size_t k = 0; k < h.size(); ++k)
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.add(out.c[i], F.mul(r[k], h[k].c[i]));
  return out;
}

UP column_at(const Bi& b, u64 x, const Fp& F) {
  UP u(b.D + 1, 0);
  for (int j = 0; j <= b.D; ++j) {
    u64 s = 0, xp = 1;
    for (int i = 0; i + j <= b.D; ++i) {
      s = F.add(s, F.mul(b.at(i, j), xp));
      xp = F.mul(xp, x);
    }
    u[j] = s;
  }
  return u;
}

// Res_y(a, b) as a polynomial in x; empty when a leading y-coefficient vanishes.
std::optional<UP> resultant_y(const Bi& a, const Bi& b, const Fp& F) {
  int d = a.D;
  if (!a.at(0, d) || !b.at(0, d)) return std::nullopt;
  int n = d * d + 1;
  std::vector<u64> xs(n), ys(n);
  for (int k = 0; k < n; ++k) {
    xs[k] = k + 1;
    ys[k] = up_resultant(column_at(a, xs[k], F), column_at(b, xs[k], F), F);
  }
  // Newton interpolation
  std::vector<u64> coef = ys;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i)
      coef[i] = F.mul(F.sub(coef[i], coef[i - 1]), F.inv(F.sub(xs[i], xs[i - j])));
  UP r{coef[n - 1]};
  for (int i = n - 2; i >= 0; --i) {
    UP nr(r.size() + 1, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] = F.add(nr[k + 1], r[k]);
      nr[k] = F.sub(nr[k], F.mul(r[k], xs[i]));
    }
    nr[0] = F.add(nr[0], coef[i]);
    r = nr;
  }
  trim(r);
  return r;
}

struct Slice {
  std::mt19937_64 rng;
  Fp F;
  u64 draw() { return rng() % F.p; }
  u64 draw_nonzero() {
    u64 x = 0;
    while (!x) x = draw();
    return x;
  }
  std::vector<u64> hyperplane(std::size_t n, const std::vector<u64>* through) {
    std::vector<u64> r(n);
    for (auto& x : r) x = draw();
    if (through) {
      std::size_t j = 0;
      while ((*through)[j] == 0) ++j;
      u64 s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) s = F.add(s, F.mul(r[i], (*through)[i]));
      r[j] = F.mul(F.sub(0, s), F.inv((*through)[j]));
    }
    return r;
  }
};

// Number of points of C1 = C2 = 0 not on C3 = 0; nullopt when the slice is degenerate.
std::optional<int> free_points(const Bi& c1, const Bi& c2, const Bi& c3, const Fp& F) {
  int d = c1.D;
  auto r12 = resultant_y(c1, c2, F);
  auto r13 = resultant_y(c1, c3, F);
  if (!r12 || !r13) return std::nullopt;
  if (deg(*r12) != d * d || deg(*r13) != d * d) return std::nullopt;
  UP s = squarefree(*r12, F);
  UP g = up_gcd(s, *r13, F);
  return deg(s) - deg(g);
}

std::vector<u64> reduce_point(const Point& x, u64 p) {
  std::vector<u64> out;
  for (auto& c : x) out.push_back(reduce_mod(c, p));
  return out;
}

// One trial: a random plane, then counts for the requested slice families.
std::optional<std::pair<int, int>> trial(const RationalMap& s, u64 p, std::mt19937_64& rng, const std::optional<Point>& q,
                                        const std::vector<u64>* xq) {
  Slice sl{rng, Fp{p}};
  const Fp& F = sl.F;
  int n = s.srcVars;
  // plane chart: source point = X*u + Y*v + w
  std::vector<std::array<u64, 3>> lin(n);
  std::vector<std::vector<u64>> gens;
  if (n == 4) {
    std::vector<u64> a(4), b(4), c(4);
    for (int i = 0; i < 4; ++i) {
      a[i] = sl.draw();
      b[i] = sl.draw();
      c[i] = sl.draw();
    }
    if (q) c = reduce_point(*q, p);
    gens = {a, b, c};
  } else {
    gens = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<u64> coef = {sl.draw(), sl.draw(), sl.draw()};
    for (int i = 0; i < n; ++i) {
      u64 v = 0;
      for (int j = 0; j < 3; ++j) v = F.add(v, F.mul(coef[j], gens[j][i]));
      lin[i][k] = v;
    }
  }
  rng = sl.rng;
  auto h = restrict_forms(s.forms, lin, s.degree, F);
  std::size_t N = s.forms.size();
  auto count = [&](const std::vector<u64>* through) -> std::optional<int> {
    Bi c1 = combine(h, sl.hyperplane(N, through), F);
    Bi c2 = combine(h, sl.hyperplane(N, through), F);
    Bi c3 = combine(h, sl.hyperplane(N, through), F);
    return free_points(c1, c2, c3, F);
  };
  auto generic = count(nullptr);
  if (!generic) {
    rng = sl.rng;
    return std::nullopt;
  }
  int special = 0;
  if (xq) {
    auto t = count(xq);
    if (!t) {
      rng = sl.rng;
      return std::nullopt;
    }
    special = *t;
  }
  rng = sl.rng;
  return std::make_pair(*generic, special);
}

FpRun run(const RationalMap& s, u64 p, int trials, u64 seed, const std::optional<Point>& q, const Point* xq,
          Exec exec) {
  if (p < 1000) throw Error(ErrorCode::BadPrime, "oracle primes must exceed 1000");
  if (s.degree < 1) throw Error(ErrorCode::OracleUnstable, "constant map");
  std::vector<u64> xqp;
  if (xq) xqp = reduce_point(*xq, p);
  auto results = kernels::map_index<int>(
      trials,
      [&](std::size_t t) {
        std::mt19937_64 rng(seed * 1000003ULL + p * 7919ULL + t);
        for (int attempt = 0; attempt < 30; ++attempt) {
          auto r = trial(s, p, rng, q, xq ? &xqp : nullptr);
          if (r) return xq ? r->first - r->second : r->first;
        }
        return -1;
      },
      exec);
  std::map<int, int> votes;
  for (int r : results)
    if (r >= 0) ++votes[r];
  FpRun out;
  out.trials = trials;
  for (auto& [v, c] : votes)
    if (c > out.agreeing) {
      out.value = v;
      out.agreeing = c;
    }
  if (out.agreeing * 3 < 2 * trials) throw Error(ErrorCode::OracleUnstable, "no modal agreement across trials");
  return out;
}

}  // namespace

FpRun fp_degree_of_image_surface(const RationalMap& sigma, std::uint64_t p, int trials, std::uint64_t seed,
                                 const std::optional<Point>& through, Exec exec) {
  return run(sigma, p, trials, seed, through, nullptr, exec);
}

FpRun fp_multiplicity_at(const RationalMap& sigma, const Point& xq, const std::optional<Point>& q, std::uint64_t p,
                         int trials, std::uint64_t seed, Exec exec) {
  return run(sigma, p, trials, seed, q, &xq, exec);
}

}  // namespace oadp
