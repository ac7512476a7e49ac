#include <map>

#include "oadp/binary.hpp"
#include "oadp/ratmaps.hpp"

namespace oadp {

namespace {

// Coefficients in x2 as binary forms in (x0, x1).
std::map<int, MultiPoly> by_last(const MultiPoly& f) {
  std::map<int, MultiPoly> out;
  for (auto& [m, c] : f.terms()) {
    auto it = out.try_emplace(m.e[2], 2).first;
    it->second.add_term(Mono::from({m.e[0], m.e[1]}), c);
  }
  return out;
}

MultiPoly lift(const MultiPoly& b) {
  MultiPoly r(3);
  for (auto& [m, c] : b.terms()) r.add_term(Mono::from({m.e[0], m.e[1], 0}), c);
  return r;
}

MultiPoly content(const MultiPoly& f) {
  std::vector<MultiPoly> cs;
  for (auto& [k, c] : by_last(f)) cs.push_back(c);
  return binary_gcd(cs);
}

MultiPoly prim(const MultiPoly& f) { return exact_div(f, lift(content(f))); }

// lc(B)^k * A reduced by B in x2
MultiPoly prem(MultiPoly a, const MultiPoly& b) {
  int db = b.degree_in(2);
  MultiPoly lb = lift(by_last(b).rbegin()->second);
  while (!a.is_zero() && a.degree_in(2) >= db) {
    int da = a.degree_in(2);
    MultiPoly la = lift(by_last(a).rbegin()->second);
    a = lb * a - la * MultiPoly::variable(3, 2).pow(da - db) * b;
  }
  return a;
}

MultiPoly gcd2(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  MultiPoly c = lift(binary_gcd({content(f), content(g)}));
  MultiPoly a = prim(f), b = prim(g);
  if (a.degree_in(2) < b.degree_in(2)) std::swap(a, b);
  while (!b.is_zero()) {
    MultiPoly r = prem(a, b);
    a = b;
    b = r.is_zero() ? r : prim(r);
  }
  return (c * a).primitive();
}

}  // namespace

MultiPoly ternary_gcd(const std::vector<MultiPoly>& forms) {
  MultiPoly g(3);
  for (auto& f : forms) {
    if (f.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "ternary form expected");
    g = gcd2(g, f);
    if (!g.is_zero() && g.total_degree() == 0) break;
  }
  if (g.is_zero()) throw Error(ErrorCode::AllZero, "all forms vanish");
  return g.primitive();
}

}  // namespace oadp
