#include "oadp/linsys.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "oadp/kernels.hpp"

namespace oadp {

std::string condition_name(const BaseCondition& c) {
  switch (c.index()) {
    case 0: return "PointMult";
    case 1: return "RationalCurveMult";
    case 2: return "CIPowerCurve";
    case 3: return "PullbackDivisibility";
    default: return "ChartCondition";
  }
}

Vec coefficient_vector(const MultiPoly& f, const std::vector<Mono>& monos) {
  Vec v(monos.size());
  std::size_t i = 0;
  // both sides in grevlex-descending order
  for (auto& [m, c] : f.terms()) {
    while (i < monos.size() && !(monos[i] == m)) ++i;
    if (i == monos.size()) throw Error(ErrorCode::ArityMismatch, "term outside the monomial list");
    v[i] = c;
  }
  return v;
}

MultiPoly form_from_vector(int nvars, const std::vector<Mono>& monos, const Vec& v) {
  MultiPoly f(nvars);
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (v[i] != 0) f.add_term(monos[i], v[i]);
  return f;
}

std::vector<MultiPoly> canonical_basis(const std::vector<MultiPoly>& forms, int nvars, int d) {
  auto monos = monomials(nvars, d);
  std::vector<Vec> vecs;
  for (auto& f : forms) vecs.push_back(coefficient_vector(f, monos));
  std::vector<MultiPoly> out;
  for (auto& v : row_reduce(vecs)) out.push_back(form_from_vector(nvars, monos, v));
  return out;
}

namespace {

using DenseForm = std::vector<Rational>;  // binary form by lambda exponent

DenseForm dense_binary(const MultiPoly& f, int deg) {
  DenseForm v(deg + 1);
  for (auto& [m, c] : f.terms()) v[m.e[0]] = c;
  return v;
}

DenseForm convolve(const DenseForm& a, const DenseForm& b) {
  DenseForm r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) r[i + j] += a[i] * b[j];
  return r;
}

Rational falling(const Mono& m, const Mono& alpha) {
  Rational k = 1;
  for (int i = 0; i < kMaxVars; ++i)
    for (int j = 0; j < alpha.e[i]; ++j) k *= (m.e[i] - j);
  return k;
}

// A condition as a family of linear functionals on degree-d forms.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::size_t width() const = 0;
  virtual void values(const MultiPoly& f, Vec& out) const = 0;  // out has width() entries
};

// Shared machinery: for every order-k partial alpha, D^alpha f is expanded over
// monomials of degree d-k, each of which has a cached vector image.
class PartialEvaluator : public Evaluator {
 public:
  PartialEvaluator(int d, int order, Exec exec) : alphas_(partial_indices(4, order)), monos_(monomials(4, d - order)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
    exec_ = exec;
  }
  std::size_t width() const override { return alphas_.size() * imageWidth_; }
  void values(const MultiPoly& f, Vec& out) const override {
    out.assign(width(), 0);
    for (std::size_t a = 0; a < alphas_.size(); ++a) {
      const Mono& al = alphas_[a];
      for (auto& [m, c] : f.terms()) {
        if (!al.divides(m)) continue;
        Rational k = c * falling(m, al);
        const Vec& img = images_[index_.at(m / al)];
        for (std::size_t j = 0; j < imageWidth_; ++j)
          if (img[j] != 0) out[a * imageWidth_ + j] += k * img[j];
      }
    }
  }

 protected:
  template <class F>
  void fill(F image) {
    images_ = kernels::map_index<Vec>(monos_.size(), [&](std::size_t i) { return image(monos_[i]); }, exec_);
    imageWidth_ = images_.empty() ? 0 : images_[0].size();
  }
  std::vector<Mono> alphas_, monos_;
  std::map<Mono, std::size_t, GrevlexDesc> index_;
  std::vector<Vec> images_;
  std::size_t imageWidth_ = 0;
  Exec exec_;
};

class PointEvaluator : public PartialEvaluator {
 public:
  PointEvaluator(int d, const PointMult& c, Exec exec) : PartialEvaluator(d, c.m - 1, exec) {
    std::vector<Rational> pt(c.point.begin(), c.point.end());
    fill([&](const Mono& m) { return Vec{MultiPoly::monomial(4, m).evaluate(pt)}; });
  }
};

class CurveEvaluator : public PartialEvaluator {
 public:
  CurveEvaluator(int d, const RationalCurveMult& c, Exec exec) : PartialEvaluator(d, c.m - 1, exec) {
    int e = 0;
    for (auto& f : c.param) e = std::max(e, f.total_degree());
    std::vector<std::vector<DenseForm>> pw(4);
    int top = d - (c.m - 1);
    for (int i = 0; i < 4; ++i) {
      pw[i].push_back(DenseForm{1});
      DenseForm base = dense_binary(c.param[i], e);
      for (int k = 1; k <= top; ++k) pw[i].push_back(convolve(pw[i].back(), base));
    }
    fill([&](const Mono& m) {
      DenseForm r{1};
      for (int i = 0; i < 4; ++i)
        if (m.e[i]) r = convolve(r, pw[i][m.e[i]]);
      return r;
    });
  }
};

class PullbackEvaluator : public PartialEvaluator {
 public:
  PullbackEvaluator(int d, const PullbackDivisibility& c, Exec exec) : PartialEvaluator(d, c.order, exec) {
    int e = 0;
    for (auto& f : c.param) e = std::max(e, f.total_degree());
    int top = d - c.order;
    auto targets = monomials(3, e * top);
    std::vector<std::vector<MultiPoly>> pw(4);
    for (int i = 0; i < 4; ++i) {
      pw[i].push_back(MultiPoly::constant(3, 1));
      for (int k = 1; k <= top; ++k) pw[i].push_back(pw[i].back() * c.param[i]);
    }
    fill([&](const Mono& m) {
      MultiPoly r = MultiPoly::constant(3, 1);
      for (int i = 0; i < 4; ++i)
        if (m.e[i]) r = r * pw[i][m.e[i]];
      return coefficient_vector(remainder(r, c.divisor), targets);
    });
  }
};

// x = change * z with z = y, or with the bend z = (w*y0, w*y1, w*y2, w*y3 + q);
// the bent substitution is the original one times w^d.
std::vector<MultiPoly> chart_images(const ChartCondition& c) {
  std::vector<MultiPoly> z;
  bool bent = !c.bendQ.is_zero();
  if (bent && (c.bendW.total_degree() != 1 || c.bendQ.total_degree() != 2))
    throw Error(ErrorCode::ArityMismatch, "bend needs a linear w and a quadratic q");
  for (int j = 0; j < 4; ++j) {
    MultiPoly y = MultiPoly::variable(4, j);
    z.push_back(bent ? c.bendW * y : y);
  }
  if (bent) z[3] += c.bendQ;
  std::vector<MultiPoly> images;
  for (int i = 0; i < 4; ++i) {
    MultiPoly l(4);
    for (int j = 0; j < 4; ++j)
      if (c.change(i, j) != 0) l += z[j].scaled(c.change(i, j));
    images.push_back(l);
  }
  return images;
}

class ChartEvaluator : public Evaluator {
 public:
  ChartEvaluator(int d, const ChartCondition& c, Exec exec) : monos_(monomials(4, d)) {
    auto ymonos = monomials(4, c.bendQ.is_zero() ? d : 2 * d);
    for (auto& y : ymonos) {
      int E = 0;
      bool bad = false;
      for (std::size_t j = 0; j < c.mults.size(); ++j) {
        E += c.mults[j];
        if (y.e[2] + static_cast<int>(j + 1) * y.e[3] < E) bad = true;
      }
      if (bad) forbidden_.push_back(y);
    }
    auto images = chart_images(c);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
    images_ = kernels::map_index<Vec>(
        monos_.size(),
        [&](std::size_t i) {
          MultiPoly img = MultiPoly::monomial(4, monos_[i]).compose(images);
          Vec v(forbidden_.size());
          for (std::size_t k = 0; k < forbidden_.size(); ++k) v[k] = img.coeff(forbidden_[k]);
          return v;
        },
        exec);
  }
  std::size_t width() const override { return forbidden_.size(); }
  void values(const MultiPoly& f, Vec& out) const override {
    out.assign(width(), 0);
    for (auto& [m, c] : f.terms()) {
      const Vec& img = images_[index_.at(m)];
      for (std::size_t k = 0; k < img.size(); ++k)
        if (img[k] != 0) out[k] += c * img[k];
    }
  }

 private:
  std::vector<Mono> monos_, forbidden_;
  std::map<Mono, std::size_t, GrevlexDesc> index_;
  std::vector<Vec> images_;
};

void check_overflow(int d, const BaseCondition& c) {
  int m = 0;
  if (auto p = std::get_if<PointMult>(&c)) m = p->m;
  if (auto p = std::get_if<RationalCurveMult>(&c)) m = p->m;
  if (auto p = std::get_if<CIPowerCurve>(&c)) m = 2 * p->m - 1;
  if (auto p = std::get_if<PullbackDivisibility>(&c)) m = p->order + 1;
  if (auto p = std::get_if<ChartCondition>(&c)) m = p->mults.empty() ? 0 : p->mults[0];
  if (m > d + 1 || m < 0) throw Error(ErrorCode::ConditionDegreeOverflow, condition_name(c) + " exceeds degree");
}

std::unique_ptr<Evaluator> make_evaluator(int d, const BaseCondition& c, Exec exec) {
  check_overflow(d, c);
  if (auto p = std::get_if<PointMult>(&c)) return std::make_unique<PointEvaluator>(d, *p, exec);
  if (auto p = std::get_if<RationalCurveMult>(&c)) return std::make_unique<CurveEvaluator>(d, *p, exec);
  if (auto p = std::get_if<PullbackDivisibility>(&c)) return std::make_unique<PullbackEvaluator>(d, *p, exec);
  if (auto p = std::get_if<ChartCondition>(&c)) return std::make_unique<ChartEvaluator>(d, *p, exec);
  return nullptr;
}

// Rows of the condition system evaluated on the given column forms.
std::vector<Vec> condition_rows(int d, const std::vector<BaseCondition>& conds, const std::vector<MultiPoly>& columns,
                                Exec exec) {
  std::vector<std::unique_ptr<Evaluator>> evs;
  for (auto& c : conds) {
    auto e = make_evaluator(d, c, exec);
    if (e) evs.push_back(std::move(e));
  }
  std::size_t width = 0;
  for (auto& e : evs) width += e->width();
  std::vector<Vec> cols = kernels::map_index<Vec>(
      columns.size(),
      [&](std::size_t j) {
        Vec all;
        all.reserve(width);
        Vec part;
        for (auto& e : evs) {
          e->values(columns[j], part);
          all.insert(all.end(), part.begin(), part.end());
        }
        return all;
      },
      exec);
  std::vector<Vec> rows(width, Vec(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < width; ++i) rows[i][j] = cols[j][i];
  return rows;
}

}  // namespace

RatMatrix conditions_matrix(int d, const std::vector<BaseCondition>& conds, Exec exec) {
  if (d < 1) throw Error(ErrorCode::ConditionDegreeOverflow, "degree must be positive");
  std::vector<MultiPoly> cols;
  for (auto& m : monomials(4, d)) cols.push_back(MultiPoly::monomial(4, m));
  auto rows = condition_rows(d, conds, cols, exec);
  RatMatrix out(0, cols.size());
  for (auto& r : rows) out.append_row(r);
  return out;
}

LinearSystem build_system(int d, const std::vector<BaseCondition>& conds, Exec exec) {
  if (d < 1) throw Error(ErrorCode::ConditionDegreeOverflow, "degree must be positive");
  std::vector<MultiPoly> ambient;
  std::vector<BaseCondition> rest;
  bool haveCI = false;
  for (auto& c : conds) {
    if (auto ci = std::get_if<CIPowerCurve>(&c)) {
      check_overflow(d, c);
      std::vector<MultiPoly> gens;
      int free = d - 2 * ci->m;
      if (free < 0) throw Error(ErrorCode::ConditionDegreeOverflow, "CIPowerCurve power too large");
      for (int i = 0; i <= ci->m; ++i) {
        MultiPoly lead = ci->g.pow(i) * ci->g2.pow(ci->m - i);
        for (auto& mo : monomials(4, free)) gens.push_back(lead * MultiPoly::monomial(4, mo));
      }
      auto span = canonical_basis(gens, 4, d);
      if (haveCI) {
        // intersect with the previous span
        std::vector<Vec> a, b;
        auto monos = monomials(4, d);
        for (auto& f : ambient) a.push_back(coefficient_vector(f, monos));
        for (auto& f : span) b.push_back(coefficient_vector(f, monos));
        std::vector<Vec> rows(monos.size(), Vec(a.size() + b.size()));
        for (std::size_t i = 0; i < monos.size(); ++i) {
          for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a[j][i];
          for (std::size_t j = 0; j < b.size(); ++j) rows[i][a.size() + j] = -b[j][i];
        }
        std::vector<MultiPoly> inter;
        for (auto& v : nullspace_rows(rows, a.size() + b.size(), exec)) {
          MultiPoly f(4);
          for (std::size_t j = 0; j < a.size(); ++j) f += ambient[j].scaled(v[j]);
          inter.push_back(f);
        }
        span = canonical_basis(inter, 4, d);
      }
      ambient = span;
      haveCI = true;
    } else {
      rest.push_back(c);
    }
  }
  if (!haveCI)
    for (auto& m : monomials(4, d)) ambient.push_back(MultiPoly::monomial(4, m));
  std::vector<MultiPoly> forms;
  if (rest.empty()) {
    forms = ambient;
  } else {
    auto rows = condition_rows(d, rest, ambient, exec);
    for (auto& v : nullspace_rows(rows, ambient.size(), exec)) {
      MultiPoly f(4);
      for (std::size_t j = 0; j < ambient.size(); ++j)
        if (v[j] != 0) f += ambient[j].scaled(v[j]);
      forms.push_back(f);
    }
  }
  if (forms.empty()) throw Error(ErrorCode::EmptySystem, "only the zero form satisfies the conditions");
  LinearSystem L;
  L.degree = d;
  L.basis = canonical_basis(forms, 4, d);
  L.conditions = conds;
  return L;
}

bool satisfies(const MultiPoly& f, const BaseCondition& c) {
  if (f.is_zero()) return true;
  int d = f.total_degree();
  if (auto p = std::get_if<PointMult>(&c)) {
    std::vector<Rational> pt(p->point.begin(), p->point.end());
    for (int k = 0; k < p->m; ++k)
      for (auto& al : partial_indices(4, k))
        if (apply_partial(f, al).evaluate(pt) != 0) return false;
    return true;
  }
  if (auto p = std::get_if<RationalCurveMult>(&c)) {
    for (auto& al : partial_indices(4, p->m - 1))
      if (!apply_partial(f, al).compose(p->param).is_zero()) return false;
    return true;
  }
  if (auto p = std::get_if<CIPowerCurve>(&c)) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i <= p->m; ++i) {
      MultiPoly lead = p->g.pow(i) * p->g2.pow(p->m - i);
      for (auto& mo : monomials(4, d - 2 * p->m)) gens.push_back(lead * MultiPoly::monomial(4, mo));
    }
    auto base = canonical_basis(gens, 4, d);
    gens.push_back(f);
    return canonical_basis(gens, 4, d).size() == base.size();
  }
  if (auto p = std::get_if<PullbackDivisibility>(&c)) {
    for (auto& al : partial_indices(4, p->order))
      if (!remainder(apply_partial(f, al).compose(p->param), p->divisor).is_zero()) return false;
    return true;
  }
  auto& ch = std::get<ChartCondition>(c);
  // walk the chain: each step blows up y2=y3=0 in the current chart
  MultiPoly cur = f.compose(chart_images(ch));
  for (int e : ch.mults) {
    ChartResult r = blowup_chart(cur, BlowupCenter{BlowupCenter::Kind::Line, RatMatrix::identity(4)}, 0);
    if (r.excMult < e) return false;
    cur = r.strict * MultiPoly::variable(4, 2).pow(r.excMult - e);
  }
  return true;
}

std::vector<MultiPoly> pullback_system(const LinearSystem& L, const std::vector<MultiPoly>& phi) {
  if (phi.size() != 4) throw Error(ErrorCode::ArityMismatch, "parametrization must have 4 components");
  std::vector<MultiPoly> out;
  for (auto& f : L.basis) out.push_back(f.compose(phi));
  return out;
}

FixedDivisorResult verify_fixed_divisor(const LinearSystem& L, const std::vector<MultiPoly>& phi,
                                        const MultiPoly& expected) {
  FixedDivisorResult res;
  auto pb = pullback_system(L, phi);
  for (std::size_t i = 0; i < pb.size(); ++i) {
    try {
      res.residuals.push_back(exact_div(pb[i], expected));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      res.failingIndex = static_cast<int>(i);
      return res;
    }
  }
  res.ok = true;
  int n = expected.nvars();
  static const int samples[5][3] = {{1, 2, 3}, {2, -1, 5}, {-3, 4, 1}, {5, 3, -2}, {1, -4, -7}};
  res.freeWitness = true;
  for (auto& s : samples) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) pt.push_back(s[i % 3] + i / 3);
    bool allZero = true;
    for (auto& r : res.residuals)
      if (r.evaluate(pt) != 0) allZero = false;
    if (allZero) res.freeWitness = false;
  }
  return res;
}

std::vector<Rational> contraction_point(const LinearSystem& L, const std::vector<MultiPoly>& phi,
                                        const MultiPoly& expected) {
  return contraction_point(verify_fixed_divisor(L, phi, expected));
}

std::vector<Rational> contraction_point(const FixedDivisorResult& fd) {
  if (!fd.ok) throw Error(ErrorCode::NotContracted, "fixed divisor does not divide the pullbacks");
  const MultiPoly* ref = nullptr;
  for (auto& r : fd.residuals)
    if (!r.is_zero()) {
      ref = &r;
      break;
    }
  if (!ref) throw Error(ErrorCode::NotContracted, "all pullbacks vanish");
  std::vector<Rational> pt;
  for (auto& r : fd.residuals) {
    if (r.is_zero()) {
      pt.push_back(0);
      continue;
    }
    if (r.leading_mono() != ref->leading_mono() && !(r.leading_mono() == ref->leading_mono()))
      throw Error(ErrorCode::NotContracted, "residuals not proportional");
    Rational c = r.leading_coeff() / ref->leading_coeff();
    if (r != ref->scaled(c)) throw Error(ErrorCode::NotContracted, "residuals not proportional");
    pt.push_back(c);
  }
  Rational first = 0;
  for (auto& x : pt)
    if (x != 0) {
      first = x;
      break;
    }
  for (auto& x : pt) x /= first;
  return pt;
}

ChartResult blowup_chart(const MultiPoly& f, const BlowupCenter& center, int chart) {
  std::vector<MultiPoly> lin;
  for (int i = 0; i < 4; ++i) {
    MultiPoly l(4);
    for (int j = 0; j < 4; ++j) l += MultiPoly::variable(4, j).scaled(center.change(i, j));
    lin.push_back(l);
  }
  MultiPoly g = f.compose(lin);  // F in y coordinates
  std::vector<MultiPoly> sub;
  for (int i = 0; i < 4; ++i) sub.push_back(MultiPoly::variable(4, i));
  int exc;
  if (center.kind == BlowupCenter::Kind::Line) {
    if (chart != 0 && chart != 1) throw Error(ErrorCode::IndexOutOfRange, "line charts are 0 and 1");
    exc = chart == 0 ? 2 : 3;
    int other = chart == 0 ? 3 : 2;
    sub[other] = MultiPoly::variable(4, exc) * MultiPoly::variable(4, other);
  } else {
    if (chart < 1 || chart > 3) throw Error(ErrorCode::IndexOutOfRange, "point charts are 1..3");
    exc = chart;
    for (int j = 1; j < 4; ++j)
      if (j != exc) sub[j] = MultiPoly::variable(4, exc) * MultiPoly::variable(4, j);
  }
  MultiPoly h = g.compose(sub);
  ChartResult r;
  if (h.is_zero()) {
    r.strict = h;
    return r;
  }
  int k = -1;
  for (auto& [m, c] : h.terms()) k = k < 0 ? m.e[exc] : std::min<int>(k, m.e[exc]);
  MultiPoly s(4);
  for (auto& [m, c] : h.terms()) {
    Mono n = m;
    n.e[exc] -= k;
    n.deg -= k;
    s.add_term(n, c);
  }
  r.strict = s;
  r.excMult = k;
  return r;
}

int image_degree_formula(int d, const std::vector<std::pair<int, int>>& mults) {
  if (d < 1) throw Error(ErrorCode::NegativeDegree, "degree must be positive");
  long r = static_cast<long>(d) * d;
  for (auto& [m, count] : mults) r -= static_cast<long>(count) * m * m;
  if (r < 0) throw Error(ErrorCode::NegativeDegree, "more base-point weight than d^2");
  return static_cast<int>(r);
}

StdQuadResult stdquad_transform(int d, int m1, int m2, int m3) {
  StdQuadResult r;
  r.d = 2 * d - m1 - m2 - m3;
  r.m = {d - m2 - m3, d - m1 - m3, d - m1 - m2};
  r.effective = r.d >= 0 && r.m[0] >= 0 && r.m[1] >= 0 && r.m[2] >= 0;
  return r;
}

}  // namespace oadp
