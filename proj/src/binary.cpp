#include "oadp/binary.hpp"

#include <algorithm>
#include <cstdlib>

namespace oadp {

namespace upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly derivative(const UPoly& a) {
  UPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  trim(r);
  UPoly bb = b;
  trim(bb);
  int db = degree(bb);
  q.assign(std::max<int>(0, degree(r) - db + 1), 0);
  while (degree(r) >= db) {
    int dr = degree(r);
    Rational c = r[dr] / bb[db];
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * bb[i];
    trim(r);
  }
  trim(q);
}

UPoly monic(const UPoly& a) {
  UPoly r = a;
  trim(r);
  if (r.empty()) return r;
  Rational l = r.back();
  for (auto& x : r) x /= l;
  return r;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<std::pair<UPoly, int>> yun(const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = monic(f0);
  if (degree(f) <= 0) return out;
  UPoly q, r;
  UPoly fp = derivative(f);
  UPoly a = gcd(f, fp);
  UPoly b, c;
  divmod(f, a, b, r);
  divmod(fp, a, c, r);
  UPoly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) > 0) {
    UPoly ai = gcd(b, d);
    UPoly nb, nc;
    divmod(b, ai, nb, r);
    divmod(d, ai, nc, r);
    if (degree(ai) > 0) out.emplace_back(monic(ai), i);
    b = nb;
    d = sub(nc, derivative(b));
    ++i;
  }
  return out;
}

}  // namespace upoly

UPoly dehomogenize(const BinaryForm& f) {
  UPoly u;
  for (auto& [m, c] : f.terms()) {
    std::size_t i = m.e[0];
    if (u.size() <= i) u.resize(i + 1);
    u[i] += c;
  }
  upoly::trim(u);
  return u;
}

BinaryForm homogenize(const UPoly& u, int degree) {
  BinaryForm f(2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    f.add_term(Mono::from({static_cast<int>(i), degree - static_cast<int>(i)}), u[i]);
  }
  return f;
}

int mu_multiplicity(const BinaryForm& f) {
  int k = -1;
  for (auto& [m, c] : f.terms()) k = k < 0 ? m.e[1] : std::min<int>(k, m.e[1]);
  return k;
}

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::AllZero, "binary_gcd of empty list");
  UPoly g;
  int k = -1;
  bool any = false;
  for (auto& f : forms) {
    if (f.nvars() != 2) throw Error(ErrorCode::ArityMismatch, "binary form expected");
    if (f.is_zero()) continue;
    UPoly u = dehomogenize(f);
    int kf = mu_multiplicity(f);
    g = any ? upoly::gcd(g, u) : upoly::monic(u);
    k = any ? std::min(k, kf) : kf;
    any = true;
  }
  if (!any) throw Error(ErrorCode::AllZero, "all forms vanish");
  int dg = upoly::degree(g);
  return homogenize(g, dg + k);
}

namespace {

// Positive divisors of |n| by trial division; n != 0.
std::vector<Integer> divisors(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<std::pair<Integer, int>> pf;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pf.emplace_back(p, e);
  }
  if (n > 1) pf.emplace_back(n, 1);
  std::vector<Integer> ds{1};
  for (auto& [p, e] : pf) {
    std::size_t s = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < s; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

using IPoly = std::vector<Integer>;

IPoly primitive_integer(const UPoly& u) {
  Integer l = 1, g = 0;
  for (auto& c : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IPoly r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    r[i] = u[i].get_num() * (l / u[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
  }
  for (auto& c : r) c /= g;
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

UPoly to_rational(const IPoly& p) {
  UPoly u;
  for (auto& c : p) u.emplace_back(c);
  return u;
}

bool is_root(const IPoly& p, const Integer& a, const Integer& b) {
  // sum p_i a^i b^(n-i) == 0
  const std::size_t n = p.size() - 1;
  Integer s = 0, apow = 1;
  std::vector<Integer> bpow(n + 1);
  bpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
  for (std::size_t i = 0; i <= n; ++i) {
    s += p[i] * apow * bpow[n - i];
    apow *= a;
  }
  return s == 0;
}

bool quadratic_split(const IPoly& p, UPoly& f1, UPoly& f2) {
  const Integer &p4 = p[4], &p3 = p[3], &p2 = p[2], &p1 = p[1], &p0 = p[0];
  auto check = [&](const Integer& a, const Integer& b, const Integer& c, const Integer& d, const Integer& e,
                   const Integer& f) {
    return a * d == p4 && a * e + b * d == p3 && a * f + b * e + c * d == p2 && b * f + c * e == p1 &&
           c * f == p0;
  };
  for (auto& a : divisors(p4)) {
    Integer d = p4 / a;
    for (auto& c0 : divisors(p0))
      for (int s : {1, -1}) {
        Integer c = c0 * s, f = p0 / c;
        Integer det = d * c - a * f;
        Integer b, e;
        bool found = false;
        if (det != 0) {
          Integer nb = p3 * c - a * p1, ne = d * p1 - f * p3;
          if (nb % det == 0 && ne % det == 0) {
            b = nb / det;
            e = ne / det;
            found = check(a, b, c, d, e, f);
          }
        } else {
          Integer K = p2 - a * f - c * d;
          Integer disc = p3 * p3 - 4 * d * a * K;
          if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Integer sq = sqrt(disc);
            for (int t : {1, -1}) {
              Integer num = p3 + t * sq;
              if (num % (2 * d) != 0) continue;
              b = num / (2 * d);
              Integer ne = p3 - d * b;
              if (ne % a != 0) continue;
              e = ne / a;
              if (check(a, b, c, d, e, f)) {
                found = true;
                break;
              }
            }
          }
        }
        if (found) {
          f1 = {Rational(c), Rational(b), Rational(a)};
          f2 = {Rational(f), Rational(e), Rational(d)};
          return true;
        }
      }
  }
  return false;
}

// Irreducible factors over Q of a squarefree polynomial of degree <= 4.
std::vector<UPoly> split_squarefree(const UPoly& u) {
  std::vector<UPoly> out;
  UPoly rest = upoly::monic(u);
  if (upoly::degree(rest) <= 0) return out;
  while (upoly::degree(rest) >= 1) {
    IPoly p = primitive_integer(rest);
    if (p[0] == 0) {
      out.push_back({0, 1});
      UPoly q, r;
      upoly::divmod(rest, {0, 1}, q, r);
      rest = q;
      continue;
    }
    bool found = false;
    for (auto& b : divisors(p.back())) {
      for (auto& a0 : divisors(p[0])) {
        for (int s : {1, -1}) {
          Integer a = a0 * s;
          Integer g;
          mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          if (g != 1) continue;
          if (!is_root(p, a, b)) continue;
          UPoly lin = {Rational(-a, b), 1};
          lin[0].canonicalize();
          out.push_back(lin);
          UPoly q, r;
          upoly::divmod(rest, lin, q, r);
          rest = upoly::monic(q);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) continue;
    int d = upoly::degree(rest);
    UPoly f1, f2;
    if (d == 4 && quadratic_split(primitive_integer(rest), f1, f2)) {
      out.push_back(upoly::monic(f1));
      out.push_back(upoly::monic(f2));
    } else {
      out.push_back(rest);
    }
    break;
  }
  return out;
}

bool form_less(const BinaryForm& a, const BinaryForm& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.to_string() < b.to_string();
}

}  // namespace

std::vector<std::pair<BinaryForm, int>> binary_factor(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "binary_factor of zero");
  if (f.nvars() != 2 || !f.is_homogeneous()) throw Error(ErrorCode::ArityMismatch, "binary form expected");
  if (f.total_degree() > 4) throw Error(ErrorCode::DegreeTooLarge, "binary_factor supports degree <= 4");
  std::vector<std::pair<BinaryForm, int>> out;
  int k = mu_multiplicity(f);
  if (k > 0) out.emplace_back(MultiPoly::variable(2, 1), k);
  for (auto& [sq, mult] : upoly::yun(dehomogenize(f)))
    for (auto& irr : split_squarefree(sq))
      out.emplace_back(homogenize(irr, upoly::degree(irr)).primitive(), mult);
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return form_less(a.first, b.first); });
  return out;
}

int factor_multiplicity(const BinaryForm& f, const BinaryForm& p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "factor_multiplicity of zero");
  int k = 0;
  MultiPoly g = f;
  while (true) {
    try {
      g = exact_div(g, p);
      ++k;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      return k;
    }
  }
}

}  // namespace oadp
