#include "oadp/pencils.hpp"

#include <algorithm>

#include "oadp/resultant.hpp"

namespace oadp {

namespace {

bool proportional(const RatMatrix& a, const RatMatrix& b) {
  std::vector<Vec> rows(2);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      rows[0].push_back(a(i, j));
      rows[1].push_back(b(i, j));
    }
  return row_reduce(rows).size() < 2;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SymmetricPencil SymmetricPencil::make(const RatMatrix& a1, const RatMatrix& a2, bool allowSingular) {
  if (a1.rows() != a1.cols() || a2.rows() != a1.rows() || a2.cols() != a1.cols())
    throw Error(ErrorCode::DegeneratePencil, "matrices must be square of equal size");
  int n = static_cast<int>(a1.rows());
  if (n != 3 && n != 4) throw Error(ErrorCode::DegeneratePencil, "pencil size must be 3 or 4");
  if (!a1.is_symmetric() || !a2.is_symmetric()) throw Error(ErrorCode::DegeneratePencil, "matrices must be symmetric");
  if (proportional(a1, a2)) throw Error(ErrorCode::DegeneratePencil, "proportional matrices");
  SymmetricPencil p{n, a1, a2};
  if (!allowSingular) {
    auto m = p.symbolic();
    if (poly_determinant(m).is_zero()) throw Error(ErrorCode::DegeneratePencil, "det vanishes identically");
  }
  return p;
}

RatMatrix SymmetricPencil::member(const Rational& lambda, const Rational& mu) const {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = lambda * A1(i, j) + mu * A2(i, j);
  return m;
}

std::vector<std::vector<BinaryForm>> SymmetricPencil::symbolic() const {
  MultiPoly l = MultiPoly::variable(2, 0), u = MultiPoly::variable(2, 1);
  std::vector<std::vector<BinaryForm>> m(n, std::vector<BinaryForm>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = l.scaled(A1(i, j)) + u.scaled(A2(i, j));
  return m;
}

DetAndGcds pencil_det_and_minor_gcds(const SymmetricPencil& p) {
  auto m = p.symbolic();
  DetAndGcds out;
  for (int i = 0; i < p.n; ++i) {
    int k = p.n - i;
    std::vector<std::vector<int>> idx;
    combinations(p.n, k, idx);
    std::vector<BinaryForm> minors;
    for (auto& r : idx)
      for (auto& c : idx) {
        std::vector<std::vector<MultiPoly>> sub(k, std::vector<MultiPoly>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub[a][b] = m[r[a]][c[b]];
        minors.push_back(poly_determinant(sub));
      }
    bool zero = std::all_of(minors.begin(), minors.end(), [](auto& f) { return f.is_zero(); });
    out.allZero.push_back(zero);
    if (i == 0) {
      out.det = minors[0];
      if (zero) throw Error(ErrorCode::DegeneratePencil, "det vanishes identically");
    }
    out.gcds.push_back(zero ? MultiPoly(2) : binary_gcd(minors));
  }
  return out;
}

std::string SegreSymbol::str() const {
  std::string s = section ? "[[" : "[";
  bool first = true;
  for (auto& g : groups) {
    std::string one;
    if (g.e.size() == 1) {
      one = std::to_string(g.e[0]);
    } else {
      one = "(";
      for (int x : g.e) one += std::to_string(x);
      one += ")";
    }
    // conjugate roots are listed separately, as in the classical notation
    for (int k = 0; k < g.fieldDegree; ++k) {
      if (!first) s += ",";
      s += one;
      first = false;
    }
  }
  s += section ? "]]" : "]";
  return s;
}

SegreSymbol segre_symbol(const SymmetricPencil& p) {
  DetAndGcds dg = pencil_det_and_minor_gcds(p);
  SegreSymbol sym;
  for (auto& [f, mult] : binary_factor(dg.det)) {
    RootClass rc;
    rc.factor = f;
    rc.fieldDegree = f.total_degree();
    for (int i = 0; i < p.n; ++i) {
      int li = dg.allZero[i] ? 0 : factor_multiplicity(dg.gcds[i], f);
      if (li == 0) break;
      rc.l.push_back(li);
    }
    for (std::size_t i = 0; i < rc.l.size(); ++i)
      rc.e.push_back(rc.l[i] - (i + 1 < rc.l.size() ? rc.l[i + 1] : 0));
    sym.groups.push_back(rc);
  }
  std::stable_sort(sym.groups.begin(), sym.groups.end(), [](const RootClass& a, const RootClass& b) {
    if (a.l[0] != b.l[0]) return a.l[0] > b.l[0];
    if (a.e.size() != b.e.size()) return a.e.size() > b.e.size();
    if (a.e != b.e) return a.e > b.e;
    return false;  // factors already sorted by binary_factor
  });
  return sym;
}

SegreSymbol conic_section_symbol(const SymmetricPencil& p, const std::array<Rational, 4>& plane) {
  if (p.n != 4) throw Error(ErrorCode::DegenerateSection, "plane sections need a pencil in P^3");
  RatMatrix c(1, 4);
  for (int j = 0; j < 4; ++j) c(0, j) = plane[j];
  auto basis = nullspace(c, Exec::Serial);
  if (basis.size() != 3) throw Error(ErrorCode::DegenerateSection, "zero plane");
  RatMatrix P(4, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) P(i, j) = basis[j][i];
  RatMatrix b1 = P.transpose() * p.A1 * P, b2 = P.transpose() * p.A2 * P;
  SymmetricPencil sec;
  try {
    sec = SymmetricPencil::make(b1, b2);
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateSection, e.what());
  }
  SegreSymbol s = segre_symbol(sec);
  s.section = true;
  return s;
}

std::vector<SingularMember> singular_members(const SymmetricPencil& p) {
  std::vector<SingularMember> out;
  for (auto& g : segre_symbol(p).groups)
    out.push_back({g.factor, static_cast<int>(g.l.size()), g.l[0]});
  return out;
}

MultiPoly quadric_form(const RatMatrix& a) {
  int n = static_cast<int>(a.rows());
  MultiPoly q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Mono m;
      m.e[i] += 1;
      m.e[j] += 1;
      m.deg = 2;
      q.add_term(m, a(i, j));
    }
  return q;
}

RatMatrix quadric_matrix(const MultiPoly& q) {
  int n = q.nvars();
  RatMatrix a(n, n);
  for (auto& [m, c] : q.terms()) {
    if (m.deg != 2) throw Error(ErrorCode::ArityMismatch, "quadratic form expected");
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < m.e[v]; ++k) (i < 0 ? i : j) = v;
    if (i == j) {
      a(i, i) = c;
    } else {
      a(i, j) = c / 2;
      a(j, i) = c / 2;
    }
  }
  return a;
}

std::array<Rational, 2> linear_root(const BinaryForm& f) {
  if (f.total_degree() != 1) throw Error(ErrorCode::ArityMismatch, "linear binary form expected");
  Rational a = f.coeff(Mono::from({1, 0})), b = f.coeff(Mono::from({0, 1}));
  return {-b, a};
}

}  // namespace oadp
