#include "oadp/resultant.hpp"

namespace oadp {

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::IndexOutOfRange, "coefficients_in");
  int d = f.degree_in(var);
  std::vector<MultiPoly> out(std::max(d + 1, 0), MultiPoly(f.nvars(), f.prime()));
  for (auto& [m, c] : f.terms()) {
    Mono r = m;
    int k = r.e[var];
    r.e[var] = 0;
    r.deg -= k;
    out[k].add_term(r, c);
  }
  return out;
}

MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::ArityMismatch, "empty determinant");
  const int nv = m[0][0].nvars();
  const unsigned long p = m[0][0].prime();
  MultiPoly prev = MultiPoly::constant(nv, 1, p);
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return MultiPoly(nv, p);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = MultiPoly(nv, p);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return neg ? -d : d;
}

MultiPoly resultant_eliminate(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.nvars() != g.nvars() || f.prime() != g.prime()) throw Error(ErrorCode::RingMismatch, "resultant");
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::IndexOutOfRange, "resultant variable");
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m <= 0 || n <= 0) throw Error(ErrorCode::VarAbsent, "both polynomials must involve the variable");
  auto cf = coefficients_in(f, var), cg = coefficients_in(g, var);
  const std::size_t N = m + n;
  std::vector<std::vector<MultiPoly>> s(N, std::vector<MultiPoly>(N, MultiPoly(f.nvars(), f.prime())));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + (m - k)] = cf[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + (n - k)] = cg[k];
  return poly_determinant(std::move(s));
}

MultiPoly mod_p(const MultiPoly& f, unsigned long p) { return f.mod_p(p); }

}  // namespace oadp
