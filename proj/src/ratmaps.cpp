#include "oadp/ratmaps.hpp"

#include <algorithm>

namespace oadp {

RationalMap RationalMap::make(std::vector<MultiPoly> forms) {
  if (forms.empty()) throw Error(ErrorCode::ArityMismatch, "map needs at least one form");
  RationalMap f;
  f.srcVars = forms[0].nvars();
  f.degree = -1;
  for (auto& g : forms) {
    if (g.nvars() != f.srcVars) throw Error(ErrorCode::RingMismatch, "forms in different rings");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorCode::ArityMismatch, "forms must be homogeneous");
    if (f.degree < 0) f.degree = g.total_degree();
    if (g.total_degree() != f.degree) throw Error(ErrorCode::ArityMismatch, "forms must share a degree");
  }
  if (f.degree < 0) throw Error(ErrorCode::Indeterminate, "all forms vanish");
  f.forms = std::move(forms);
  return f;
}

RationalMap RationalMap::normalize(const std::vector<MultiPoly>& candidates) const {
  std::vector<MultiPoly> cur = forms;
  for (auto& c : candidates) {
    if (c.total_degree() < 1) continue;
    for (;;) {
      std::vector<MultiPoly> next;
      try {
        for (auto& f : cur) next.push_back(f.is_zero() ? f : exact_div(f, c));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        break;
      }
      cur = next;
    }
  }
  return make(cur);
}

Point normalize_point(Point q) {
  for (auto& x : q)
    if (x != 0) {
      Rational s = x;
      for (auto& y : q) y /= s;
      break;
    }
  return q;
}

Point evaluate(const RationalMap& f, const Point& q) {
  if (std::all_of(q.begin(), q.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorCode::Indeterminate, "zero point");
  Point out;
  bool any = false;
  for (auto& g : f.forms) {
    out.push_back(g.evaluate(q));
    if (out.back() != 0) any = true;
  }
  if (!any) throw Error(ErrorCode::Indeterminate, "point lies in the base locus");
  return out;
}

namespace {

std::vector<Vec> jacobian_columns(const RationalMap& s, const Point& q) {
  std::vector<Vec> cols(s.srcVars, Vec(s.forms.size()));
  for (std::size_t i = 0; i < s.forms.size(); ++i)
    for (int j = 0; j < s.srcVars; ++j) cols[j][i] = s.forms[i].differentiate(j).evaluate(q);
  return cols;
}

TangentSpace from_span(std::vector<Vec> vecs, std::size_t n, int expectedRank) {
  TangentSpace t;
  t.basisPoints = row_reduce(vecs);
  if (static_cast<int>(t.basisPoints.size()) != expectedRank)
    throw Error(ErrorCode::RankDrop, "tangent span has rank " + std::to_string(t.basisPoints.size()));
  t.normalForms = nullspace_rows(t.basisPoints, n, Exec::Serial);
  return t;
}

const int kSamples[][4] = {{1, 2, 3, 5},  {2, -1, 1, 3},  {-3, 1, 4, 1}, {1, 1, -2, 7},
                           {5, -2, 3, -1}, {-1, 4, 2, 3},  {3, 5, -1, 2}, {2, 3, 7, -4},
                           {-2, 7, 1, 1},  {4, -3, -5, 2}, {1, -6, 2, 5}, {7, 1, 3, 2}};

}  // namespace

TangentSpace tangent_space_at(const RationalMap& sigma, const Point& q0) {
  evaluate(sigma, q0);
  return from_span(jacobian_columns(sigma, q0), sigma.forms.size(), sigma.srcVars);
}

TangentSpace tangent_space_along(const RationalMap& sigma, const std::vector<Point>& points, int expectedRank) {
  std::vector<Vec> vecs;
  for (auto& q : points) {
    vecs.push_back(evaluate(sigma, q));
    for (auto& c : jacobian_columns(sigma, q)) vecs.push_back(c);
  }
  return from_span(vecs, sigma.forms.size(), expectedRank);
}

RationalMap tangential_projection(const TangentSpace& t) {
  std::vector<MultiPoly> forms;
  for (auto& v : t.normalForms) {
    int n = static_cast<int>(v.size());
    MultiPoly l(n);
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) l += MultiPoly::variable(n, i).scaled(v[i]);
    forms.push_back(l);
  }
  return RationalMap::make(forms);
}

Roundtrip verify_linear_roundtrip(const RationalMap& sigma, const RationalMap& pi) {
  if (pi.srcVars != static_cast<int>(sigma.forms.size()))
    throw Error(ErrorCode::ArityMismatch, "pi must act on the target of sigma");
  int n = sigma.srcVars, k = static_cast<int>(pi.forms.size());
  if (k != n) throw Error(ErrorCode::ArityMismatch, "roundtrip must return to the source space");
  std::vector<MultiPoly> F;
  for (auto& p : pi.forms) F.push_back(p.compose(sigma.forms));

  // unknowns: M (n*n, row major) then one scalar per sample point
  std::vector<Point> pts;
  std::vector<Vec> vals;
  for (auto& s : kSamples) {
    Point q(s, s + n);
    Vec v;
    bool any = false;
    for (auto& f : F) {
      v.push_back(f.evaluate(q));
      if (v.back() != 0) any = true;
    }
    if (!any) continue;
    pts.push_back(q);
    vals.push_back(v);
    if (pts.size() == 6) break;
  }
  if (pts.size() < 6) throw Error(ErrorCode::NoLinearFit, "too few sample points off the base locus");
  std::size_t cols = n * n + pts.size();
  std::vector<Vec> rows;
  for (std::size_t s = 0; s < pts.size(); ++s)
    for (int i = 0; i < n; ++i) {
      Vec r(cols);
      for (int j = 0; j < n; ++j) r[i * n + j] = pts[s][j];
      r[n * n + s] = -vals[s][i];
      rows.push_back(r);
    }
  auto ker = nullspace_rows(rows, cols, Exec::Serial);
  if (ker.size() != 1) throw Error(ErrorCode::NoLinearFit, "no unique linear fit");
  Roundtrip rt;
  rt.M = RatMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rt.M(i, j) = ker[0][i * n + j];
  std::vector<MultiPoly> L;
  for (int i = 0; i < n; ++i) {
    MultiPoly l(n);
    for (int j = 0; j < n; ++j)
      if (rt.M(i, j) != 0) l += MultiPoly::variable(n, j).scaled(rt.M(i, j));
    L.push_back(l);
  }
  if (determinant(rt.M) == 0) return rt;
  int i0 = 0;
  while (L[i0].is_zero()) ++i0;
  try {
    rt.G = exact_div(F[i0], L[i0]);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    return rt;
  }
  rt.ok = true;
  for (int i = 0; i < n; ++i)
    if (F[i] != rt.G * L[i]) rt.ok = false;
  return rt;
}

std::vector<RatMatrix> quadric_relation(const std::vector<MultiPoly>& forms, const std::optional<MultiPoly>& modulus) {
  int k = static_cast<int>(forms.size());
  std::vector<std::pair<int, int>> idx;
  std::vector<MultiPoly> prods;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      idx.emplace_back(i, j);
      MultiPoly p = forms[i] * forms[j];
      if (modulus) p = remainder(p, *modulus);
      prods.push_back(p);
    }
  std::map<Mono, std::size_t, GrevlexDesc> rowOf;
  for (auto& p : prods)
    for (auto& [m, c] : p.terms()) rowOf.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, i] : rowOf) i = r++;
  std::vector<Vec> rows(rowOf.size(), Vec(prods.size()));
  for (std::size_t c = 0; c < prods.size(); ++c)
    for (auto& [m, v] : prods[c].terms()) rows[rowOf[m]][c] = v;
  std::vector<RatMatrix> out;
  for (auto& v : nullspace_rows(rows, prods.size(), Exec::Serial)) {
    RatMatrix Q(k, k);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      auto [i, j] = idx[c];
      if (i == j) {
        Q(i, i) = v[c];
      } else {
        Q(i, j) = v[c] / 2;
        Q(j, i) = v[c] / 2;
      }
    }
    out.push_back(Q);
  }
  return out;
}

LeadingForms leading_form_subsystem(const LinearSystem& L, const Point4& q, int mPlus,
                                    const std::optional<std::array<Point4, 3>>& frame) {
  if (mPlus < 1) throw Error(ErrorCode::SubsystemEmpty, "multiplicity must be positive");
  Point qp(q.begin(), q.end());
  std::size_t k = L.basis.size();
  std::vector<Vec> rows;
  for (auto& al : partial_indices(4, mPlus - 1)) {
    Vec r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = apply_partial(L.basis[i], al).evaluate(qp);
    rows.push_back(r);
  }
  auto sub = nullspace_rows(rows, k, Exec::Serial);
  if (sub.empty()) throw Error(ErrorCode::SubsystemEmpty, "no member has the extra order at q");
  LeadingForms out;
  for (auto& c : sub) {
    MultiPoly f(4);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) f += L.basis[i].scaled(c[i]);
    out.subsystem.push_back(f);
  }
  auto normal = nullspace_rows(sub, k, Exec::Serial);
  if (normal.size() == 1) out.imagePoint = normalize_point(normal[0]);

  std::array<Point4, 3> fr;
  if (frame) {
    fr = *frame;
  } else {
    int used = 0;
    for (int j = 0; j < 4 && used < 3; ++j) {
      std::vector<Vec> test = {Vec(q.begin(), q.end())};
      for (int u = 0; u < used; ++u) test.push_back(Vec(fr[u].begin(), fr[u].end()));
      Point4 e{0, 0, 0, 0};
      e[j] = 1;
      test.push_back(Vec(e.begin(), e.end()));
      if (row_reduce(test).size() == test.size()) fr[used++] = e;
    }
  }
  // x = w*q + t0*a + t1*b + t2*c, variables (t0,t1,t2,w)
  std::vector<MultiPoly> images;
  for (int i = 0; i < 4; ++i) {
    MultiPoly l = MultiPoly::variable(4, 3).scaled(q[i]);
    for (int j = 0; j < 3; ++j) l += MultiPoly::variable(4, j).scaled(fr[j][i]);
    images.push_back(l);
  }
  std::vector<MultiPoly> lead;
  for (auto& f : out.subsystem) {
    MultiPoly g = f.compose(images), h(3);
    for (auto& [m, c] : g.terms()) {
      int low = m.deg - m.e[3];
      if (low < mPlus) throw Error(ErrorCode::SubsystemEmpty, "member has lower order at q than assumed");
      if (low == mPlus) h.add_term(Mono::from({m.e[0], m.e[1], m.e[2]}), c);
    }
    if (!h.is_zero()) lead.push_back(h);
  }
  if (lead.empty()) throw Error(ErrorCode::SubsystemEmpty, "all leading forms vanish");
  out.fixedPart = ternary_gcd(lead);
  std::vector<MultiPoly> moving;
  for (auto& h : lead) moving.push_back(exact_div(h, out.fixedPart));
  int md = mPlus - out.fixedPart.total_degree();
  out.mapOnE = RationalMap::make(canonical_basis(moving, 3, md));
  return out;
}

int tangent_cone_rank(const RationalMap& mapOnE) {
  if (mapOnE.forms.size() != 4) throw Error(ErrorCode::NotAQuadric, "map must land in P^3");
  auto rel = quadric_relation(mapOnE.forms);
  if (rel.size() != 1) throw Error(ErrorCode::NotAQuadric, std::to_string(rel.size()) + " quadric relations");
  return static_cast<int>(rank(rel[0]));
}

}  // namespace oadp
