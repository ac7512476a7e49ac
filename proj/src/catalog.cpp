#include <algorithm>

#include "oadp/catalog.hpp"

namespace oadp {

namespace {

[[noreturn]] void invalid(const std::string& id, const std::string& what) {
  throw Error(ErrorCode::FixtureInvalid, id + ": " + what);
}

Json point_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Vec> coeffs(const std::vector<MultiPoly>& fs, int d) {
  auto monos = monomials(fs.empty() ? 4 : fs[0].nvars(), d);
  std::vector<Vec> out;
  for (auto& f : fs) out.push_back(coefficient_vector(f, monos));
  return out;
}

// g^2 * linear + g*g2 * (linear through p) + g2 * (cubics h with g2*h in X)
bool explicit_span_matches(const BuiltEntry& b) {
  auto& e = b.entry;
  auto monos5 = monomials(4, 5);
  std::vector<MultiPoly> gens;
  MultiPoly gg = e.g * e.g, ggp = e.g * e.g2;
  for (int i = 0; i < 4; ++i) gens.push_back(gg * MultiPoly::variable(4, i));
  Vec pv(e.p.begin(), e.p.end());
  for (auto& l : nullspace_rows({pv}, 4, Exec::Serial)) {
    MultiPoly lf(4);
    for (int i = 0; i < 4; ++i)
      if (l[i] != 0) lf += MultiPoly::variable(4, i).scaled(l[i]);
    gens.push_back(ggp * lf);
  }
  // X meets g2 * cubics
  auto cubics = monomials(4, 3);
  std::size_t k = b.X.basis.size();
  std::vector<Vec> rows(monos5.size(), Vec(k + cubics.size()));
  for (std::size_t c = 0; c < k; ++c) {
    auto v = coefficient_vector(b.X.basis[c], monos5);
    for (std::size_t r = 0; r < v.size(); ++r) rows[r][c] = v[r];
  }
  for (std::size_t c = 0; c < cubics.size(); ++c) {
    auto v = coefficient_vector(e.g2 * MultiPoly::monomial(4, cubics[c]), monos5);
    for (std::size_t r = 0; r < v.size(); ++r) rows[r][k + c] = v[r];
  }
  for (auto& z : nullspace_rows(rows, k + cubics.size(), Exec::Serial)) {
    MultiPoly f(4);
    for (std::size_t c = 0; c < k; ++c)
      if (z[c] != 0) f += b.X.basis[c].scaled(z[c]);
    gens.push_back(f);
  }
  return same_span(coeffs(gens, 5), coeffs(b.X.basis, 5)) && static_cast<int>(row_reduce(coeffs(gens, 5)).size()) == b.X.dim();
}

int multiplicity_at(const LinearSystem& L, const Point4& q) {
  Point qp(q.begin(), q.end());
  for (int k = 0; k <= L.degree; ++k)
    for (auto& al : partial_indices(4, k))
      for (auto& f : L.basis)
        if (apply_partial(f, al).evaluate(qp) != 0) return k;
  return L.degree + 1;
}

int order_at(const std::vector<MultiPoly>& fs, const Point& pt) {
  int n = fs[0].nvars();
  for (int k = 0;; ++k)
    for (auto& al : partial_indices(n, k))
      for (auto& f : fs)
        if (apply_partial(f, al).evaluate(pt) != 0) return k;
}

// Multiplicities at the coordinate points, the standard quadratic transform of
// those numbers, and the transformed system itself. The witness holds when the
// result is the complete system of conics.
Json veronese_witness(const RationalMap& m) {
  std::array<int, 3> mult{};
  for (int i = 0; i < 3; ++i) {
    Point pt(3, 0);
    pt[i] = 1;
    mult[i] = order_at(m.forms, pt);
  }
  auto st = stdquad_transform(m.degree, mult[0], mult[1], mult[2]);
  std::vector<MultiPoly> quad = {MultiPoly::parse("x1*x2", 3), MultiPoly::parse("x0*x2", 3),
                                 MultiPoly::parse("x0*x1", 3)};
  std::vector<MultiPoly> t;
  for (auto& f : m.forms) t.push_back(f.compose(quad));
  MultiPoly g = ternary_gcd(t);
  for (auto& f : t) f = exact_div(f, g);
  int deg = t[0].total_degree();
  auto span = canonical_basis(t, 3, deg);
  bool ok = st.effective && st.d == 2 && st.m == std::array<int, 3>{0, 0, 0} && deg == 2 && span.size() == 6;
  return Json{{"base_multiplicities", mult},
              {"transformed_degree", st.d},
              {"transformed_multiplicities", st.m},
              {"conic_span", span.size()},
              {"conic_equivalent", ok}};
}

const int kTernarySamples[][3] = {{1, 2, 3},  {2, -1, 5}, {-3, 4, 1}, {1, 1, -2}, {5, -2, 3}, {-1, 3, 7},
                                  {4, 1, -3}, {2, 7, -1}, {3, -5, 2}, {-2, 1, 4}, {6, 1, 1},  {1, -4, -3}};

}  // namespace

std::vector<Point> points_on_V(const BuiltEntry& b, std::size_t count) {
  std::vector<Point> out;
  for (auto& s : kTernarySamples) {
    Point t(s, s + 3);
    if (b.entry.fixedDivisor.evaluate(t) == 0) continue;
    Point v;
    bool any = false;
    for (auto& f : b.entry.phi) {
      v.push_back(f.evaluate(t));
      if (v.back() != 0) any = true;
    }
    if (!any) continue;
    out.push_back(normalize_point(v));
    if (out.size() == count) break;
  }
  return out;
}

BuiltEntry build_entry(const std::string& id, const std::string& dir) { return build_entry(load_entry(id, dir)); }

BuiltEntry build_entry(const CatalogEntry& e) {
  BuiltEntry b{e, {}, {}};
  if (e.pencil && e.symbol != "--") {
    std::string got = e.sectionPlane ? conic_section_symbol(*e.pencil, *e.sectionPlane).str()
                                     : segre_symbol(*e.pencil).str();
    if (got != e.symbol) invalid(e.id, "pencil has symbol " + got + ", expected " + e.symbol);
  }
  b.X = build_system(e.degree, e.conditions);
  b.sigma = RationalMap::make(b.X.basis);
  if (e.chapter == 2 && !explicit_span_matches(b)) invalid(e.id, "explicit span differs from the interpolated system");
  return b;
}

void validate(const RunConfig& c) {
  if (c.trials < 3) throw Error(ErrorCode::OracleUnstable, "at least three trials are needed");
  if (c.primes.empty()) throw Error(ErrorCode::BadPrime, "no oracle primes");
  for (auto p : c.primes)
    if (std::find(kDefaultPrimes.begin(), kDefaultPrimes.end(), p) == kDefaultPrimes.end())
      throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not a vetted prime");
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

TangentialCheck tangential_roundtrip(const BuiltEntry& b) {
  TangentialCheck t;
  t.T = tangent_space_along(b.sigma, points_on_V(b, 6), 4);
  t.rt = verify_linear_roundtrip(b.sigma, tangential_projection(t.T));
  if (t.rt.ok) {
    try {
      t.gIsVSquared = exact_div(t.rt.G, b.entry.V * b.entry.V).total_degree() == 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
    }
  }
  return t;
}

CremonaCheck dejonquieres_consistency(const BuiltEntry& b) {
  auto& e = b.entry;
  CremonaCheck c;
  c.f = cremona_dejonquieres(e.g, e.g2, e.p);
  c.dim = static_cast<int>(c.f.forms.size());

  // f restricted to V, with its fixed part removed
  std::vector<MultiPoly> onV;
  for (auto& h : c.f.forms) onV.push_back(h.compose(e.phi));
  MultiPoly fixed = ternary_gcd(onV);
  Point pp;
  c.contracts = true;
  for (auto& h : onV) {
    MultiPoly r = exact_div(h, fixed);
    if (r.total_degree() > 0) c.contracts = false;
    pp.push_back(r.is_zero() ? Rational(0) : r.leading_coeff());
  }
  if (!c.contracts) return c;
  c.contracted = normalize_point(pp);

  auto q1 = quadric_relation(c.f.forms, e.g2);
  auto q2 = quadric_relation(c.f.forms, e.g + e.g2);
  if (q1.size() != 1 || q2.size() != 1) return c;
  c.imagePencil = {q1[0], q2[0]};
  MultiPoly Q1 = quadric_form(q1[0]), Q2 = quadric_form(q2[0]);
  Point4 p2{c.contracted[0], c.contracted[1], c.contracted[2], c.contracted[3]};
  MultiPoly Vp = Q2.scaled(Q1.evaluate(c.contracted)) - Q1.scaled(Q2.evaluate(c.contracted));
  c.inverse = cremona_dejonquieres(Vp, Q1, p2);

  auto rt = verify_linear_roundtrip(c.f, c.inverse);
  if (!rt.ok) return c;
  RatMatrix Mi = inverse(rt.M);
  std::vector<MultiPoly> rebased;
  for (int i = 0; i < 4; ++i) {
    MultiPoly s(4);
    for (int j = 0; j < 4; ++j)
      if (Mi(i, j) != 0) s += c.inverse.forms[j].scaled(Mi(i, j));
    rebased.push_back(s);
  }
  c.inverse = RationalMap::make(rebased);
  c.composite = true;
  for (int i = 0; i < 4; ++i)
    if (c.inverse.forms[i].compose(c.f.forms) != rt.G * MultiPoly::variable(4, i)) c.composite = false;
  c.compositeDegree = rt.G.total_degree();

  // cubics through the image curve come back as X, after removing the image of g^2
  MultiPoly W = exact_div(rt.G, e.g * e.g);
  LinearSystem cub = build_system(3, {CIPowerCurve{Q1, Q2, 1}});
  std::vector<MultiPoly> back;
  for (auto& h : cub.basis) back.push_back(exact_div(h.compose(c.f.forms), W));
  c.transported = cub.dim() == b.X.dim() && same_span(coeffs(back, e.degree), coeffs(b.X.basis, e.degree));
  return c;
}

VerificationReport verify_entry(const std::string& id, const RunConfig& config) {
  BuiltEntry b;
  try {
    b = build_entry(id, config.fixtureDir);
  } catch (const Error& ex) {
    VerificationReport r;
    r.id = id;
    r.error = ex.what();
    return r;
  }
  return verify_entry(b, config);
}

VerificationReport verify_entry(const BuiltEntry& b, const RunConfig& config) {
  auto& e = b.entry;
  VerificationReport rep;
  rep.id = e.id;
  auto add = [&](const std::string& name, bool pass, Json w, bool info = false) {
    rep.checks.push_back(CheckResult{name, pass, info, std::move(w)});
  };
  auto guarded = [&](const std::string& name, auto&& body, bool info = false) {
    try {
      body();
    } catch (const Error& ex) {
      add(name, false, Json{{"error", ex.what()}}, info);
    }
  };

  add("dimension", b.X.dim() == e.expectedDim, Json{{"dim", b.X.dim()}, {"expected", e.expectedDim}});

  FixedDivisorResult fd;
  guarded("fixed_divisor", [&] {
    fd = verify_fixed_divisor(b.X, e.phi, e.fixedDivisor);
    add("fixed_divisor", fd.ok && fd.freeWitness,
        Json{{"divisible", fd.ok},
             {"failing_index", fd.failingIndex},
             {"divisor_degree", e.fixedDivisor.total_degree()},
             {"residuals_free", fd.freeWitness}});
  });

  guarded("contraction", [&] { add("contraction", true, Json{{"point", point_json(contraction_point(fd))}}); });

  if (!e.reducedChecks)
    guarded("roundtrip", [&] {
      auto t = tangential_roundtrip(b);
      bool inv = t.rt.M.rows() == 4 && determinant(t.rt.M) != 0;
      add("roundtrip", t.rt.ok && inv && t.gIsVSquared && t.rt.G.total_degree() == e.degree - 1,
          Json{{"linear", t.rt.ok},
               {"invertible", inv},
               {"G_degree", t.rt.ok ? t.rt.G.total_degree() : -1},
               {"G_is_V_squared", t.gIsVSquared}});
    });

  guarded("image_degree", [&] {
    int formula = image_degree_formula(e.degree, e.planeMults);
    Json oracle = Json::array();
    bool pass = formula == e.expectedImageDegree;
    for (auto p : config.primes) {
      try {
        auto run = fp_degree_of_image_surface(b.sigma, p, config.trials, config.seed);
        oracle.push_back(Json{{"prime", p}, {"degree", run.value}, {"agreeing", run.agreeing}, {"trials", run.trials}});
        if (run.value != formula || 3 * run.agreeing < 2 * run.trials) pass = false;
      } catch (const Error& ex) {
        oracle.push_back(Json{{"prime", p}, {"error", ex.what()}});
        pass = false;
      }
    }
    add("image_degree", pass,
        Json{{"formula", formula}, {"expected", e.expectedImageDegree}, {"seed", config.seed}, {"oracle", oracle}});
  });

  if (e.pencil && e.symbol != "--")
    guarded("symbol", [&] {
      std::string got = e.sectionPlane ? conic_section_symbol(*e.pencil, *e.sectionPlane).str()
                                       : segre_symbol(*e.pencil).str();
      Json w{{"symbol", got}, {"expected", e.symbol}};
      if (e.sectionPlane) w["section_plane"] = point_json({e.sectionPlane->begin(), e.sectionPlane->end()});
      add("symbol", got == e.symbol, w);
    });

  if (e.designated) {
    auto& d = *e.designated;
    guarded(
        "designated",
        [&] {
          Json w{{"q", point_json({d.q.begin(), d.q.end()})}};
          int mult = multiplicity_at(b.X, d.q);
          int mPlus = d.mPlus ? d.mPlus : mult + 1;
          w["multiplicity_of_system"] = mult;
          w["order"] = mPlus;
          auto lf = leading_form_subsystem(b.X, d.q, mPlus, d.frame);
          w["subsystem_dim"] = lf.subsystem.size();
          w["fixed_part"] = lf.fixedPart.to_string();
          w["moving_degree"] = lf.mapOnE.degree;
          w["moving_dim"] = lf.mapOnE.forms.size();
          bool pass = true;
          if (d.rank) {
            int r = tangent_cone_rank(lf.mapOnE);
            w["tangent_cone_rank"] = r;
            w["expected_rank"] = *d.rank;
            pass = pass && r == *d.rank;
          }
          if (d.multiplicity) {
            if (lf.imagePoint.empty()) throw Error(ErrorCode::SubsystemEmpty, "q does not map to a single point");
            w["image_point"] = point_json(lf.imagePoint);
            Json runs = Json::array();
            Point qp(d.q.begin(), d.q.end());
            for (auto p : config.primes) {
              auto run = fp_multiplicity_at(b.sigma, lf.imagePoint, qp, p, config.trials, config.seed);
              runs.push_back(Json{{"prime", p}, {"multiplicity", run.value}, {"agreeing", run.agreeing}});
              pass = pass && run.value == *d.multiplicity && 3 * run.agreeing >= 2 * run.trials;
            }
            w["multiplicity"] = runs;
            w["expected_multiplicity"] = *d.multiplicity;
          }
          if (d.veronese) {
            auto v = veronese_witness(lf.mapOnE);
            w["veronese"] = v;
            pass = pass && v.at("conic_equivalent").get<bool>();
          }
          add("designated", pass, w, d.attempt);
        },
        d.attempt);
  }

  if (e.cremona)
    guarded("cremona", [&] {
      auto c = dejonquieres_consistency(b);
      Json w{{"dim", c.dim},
             {"contracts", c.contracts},
             {"contracted_point", point_json(c.contracted)},
             {"composite_identity", c.composite},
             {"G_degree", c.compositeDegree},
             {"transported", c.transported}};
      add("cremona", c.dim == 4 && c.contracts && c.composite && c.transported, w);
    });

  rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(),
                            [](const CheckResult& c) { return c.pass || c.informational; });
  return rep;
}

}  // namespace oadp
