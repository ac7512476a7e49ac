#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oadp/catalog.hpp"

namespace oadp {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void invalid(const std::string& id, const std::string& what) {
  throw Error(ErrorCode::FixtureInvalid, id + ": " + what);
}

Rational rat(const Json& j) { return parse_rational(j.get<std::string>()); }

Point4 point4(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::ParseError, "point needs four coordinates");
  return {rat(j[0]), rat(j[1]), rat(j[2]), rat(j[3])};
}

RatMatrix matrix(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (auto& r : j) {
    rows.emplace_back();
    for (auto& x : r) rows.back().push_back(rat(x));
  }
  return RatMatrix::from_rows(rows);
}

std::vector<MultiPoly> forms(const Json& j, int n) {
  std::vector<MultiPoly> out;
  for (auto& s : j) out.push_back(MultiPoly::parse(s.get<std::string>(), n));
  return out;
}

// Sort key: E1..E19 numerically, then the rest by name.
std::pair<int, std::string> id_key(const std::string& id) {
  if (id.size() > 1 && id[0] == 'E' && std::all_of(id.begin() + 1, id.end(), ::isdigit))
    return {std::stoi(id.substr(1)), ""};
  return {1000, id};
}

MultiPoly linear_form(const std::vector<Rational>& c) {
  MultiPoly l(static_cast<int>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) l += MultiPoly::variable(l.nvars(), static_cast<int>(i)).scaled(c[i]);
  return l;
}

// Projection from p: t in the plane x_k = 0 goes to the second point of V on the line p t.
std::vector<MultiPoly> projection_from(const RatMatrix& A, const Point4& p) {
  int k = 0;
  while (p[k] == 0) ++k;
  std::vector<MultiPoly> y;
  for (int i = 0, j = 0; i < 4; ++i) y.push_back(i == k ? MultiPoly(3) : MultiPoly::variable(3, j++));
  MultiPoly gy = quadric_form(A).compose(y);
  MultiPoly b(3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (A(i, j) != 0 && p[i] != 0) b += y[j].scaled(A(i, j) * p[i]);
  std::vector<MultiPoly> phi;
  for (int i = 0; i < 4; ++i) phi.push_back(gy.scaled(p[i]) - b.scaled(2) * y[i]);
  return phi;
}

// V is the member of the pencil through p; g2 is a generator off p.
void derive_quadric_case(CatalogEntry& e) {
  Point pt(e.p.begin(), e.p.end());
  const RatMatrix &A1 = e.pencil->A1, &A2 = e.pencil->A2;
  Rational ga = quadric_form(A1).evaluate(pt), gb = quadric_form(A2).evaluate(pt);
  if (ga == 0 && gb == 0) invalid(e.id, "p lies on the base curve");
  RatMatrix AV = ga == 0 ? A1 : gb == 0 ? A2 : e.pencil->member(gb, -ga);
  e.g = quadric_form(AV);
  e.g2 = quadric_form(ga != 0 ? A1 : A2);
  Vec grad;
  for (int i = 0; i < 4; ++i) grad.push_back(e.g.differentiate(i).evaluate(pt));
  if (std::all_of(grad.begin(), grad.end(), [](const Rational& x) { return x == 0; }))
    invalid(e.id, "p is a singular point of V");

  // lines of V through p, cut by the tangent plane
  auto tp = nullspace_rows({grad}, 4, Exec::Serial);
  Vec a, b;
  for (std::size_t i = 0; i < tp.size() && a.empty(); ++i)
    for (std::size_t j = i + 1; j < tp.size(); ++j)
      if (row_reduce({pt, tp[i], tp[j]}).size() == 3) {
        a = tp[i];
        b = tp[j];
        break;
      }
  std::vector<MultiPoly> ab;
  for (int i = 0; i < 4; ++i)
    ab.push_back(MultiPoly::variable(2, 0).scaled(a[i]) + MultiPoly::variable(2, 1).scaled(b[i]));
  for (auto& [f, mult] : binary_factor(e.g.compose(ab))) {
    if (f.total_degree() != 1) invalid(e.id, "lines through p are not rational");
    auto r = linear_root(f);
    std::vector<MultiPoly> line;
    for (int i = 0; i < 4; ++i)
      line.push_back(MultiPoly::variable(2, 0).scaled(e.p[i]) +
                     MultiPoly::variable(2, 1).scaled(r[0] * a[i] + r[1] * b[i]));
    e.lines.push_back(line);
  }

  e.V = e.g;
  e.phi = projection_from(AV, e.p);
  e.conditions = {CIPowerCurve{e.g, e.g2, 2}, PointMult{e.p, 2}};
  e.conditionNames = {"C4^2", "p^2"};
  for (std::size_t i = 0; i < e.lines.size(); ++i) {
    e.conditions.push_back(RationalCurveMult{e.lines[i], 1});
    e.conditionNames.push_back(i == 0 ? "l" : "l'");
  }
  MultiPoly h = e.g2.compose(e.phi);
  e.fixedDivisor = h * h * linear_form(grad).compose(e.phi);
  e.planeMults = {{2, 4}, {1, 2}};
}

Point4 singular_vertex(const CatalogEntry& e) {
  auto members = singular_members(*e.pencil);
  if (members.empty()) invalid(e.id, "pencil has no singular member");
  auto best = std::max_element(members.begin(), members.end(), [](const SingularMember& x, const SingularMember& y) {
    return x.detMultiplicity < y.detMultiplicity;
  });
  auto r = linear_root(best->rootClass);
  Point4 q{0, 0, 0, 0};
  for (auto& v : nullspace(e.pencil->member(r[0], r[1]), Exec::Serial))
    for (int i = 0; i < 4; ++i) q[i] += v[i];
  return q;
}

BaseCondition parse_condition(const Json& c, const CatalogEntry& e) {
  auto type = c.at("type").get<std::string>();
  if (type == "point") return PointMult{point4(c.at("point")), c.at("m").get<int>()};
  if (type == "curve") return RationalCurveMult{forms(c.at("param"), 2), c.at("m").get<int>()};
  if (type == "pullback")
    return PullbackDivisibility{e.phi, MultiPoly::parse(c.at("divisor").get<std::string>(), 3),
                                c.at("order").get<int>()};
  if (type == "chart") {
    ChartCondition cc{matrix(c.at("change")), c.at("mults").get<std::vector<int>>(), {}, {}};
    if (c.contains("bend")) {
      cc.bendW = MultiPoly::parse(c.at("bend").at("w").get<std::string>(), 4);
      cc.bendQ = MultiPoly::parse(c.at("bend").at("q").get<std::string>(), 4);
    }
    return cc;
  }
  throw Error(ErrorCode::ParseError, "unknown condition type " + type);
}

CatalogEntry parse_entry(const Json& j, const std::string& id) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  if (e.id != id) invalid(id, "id field does not match the file name");
  e.chapter = j.at("chapter").get<int>();
  e.degree = j.at("degree").get<int>();
  e.reducedChecks = j.value("reducedChecks", false);
  e.cremona = j.value("cremona", false);
  auto& ex = j.at("expected");
  e.expectedDim = ex.at("dim").get<int>();
  e.expectedImageDegree = ex.at("imageDegree").get<int>();
  e.symbol = ex.at("symbol").get<std::string>();
  e.configuration = ex.at("configuration").get<std::string>();
  e.singularities = ex.at("singularities").get<std::string>();

  if (e.chapter == 2) {
    auto& pen = j.at("pencil");
    if (pen.at("n").get<int>() != 4) invalid(id, "pencil must be 4x4");
    RatMatrix A1 = matrix(pen.at("A1")), A2 = matrix(pen.at("A2"));
    e.pencilKind = j.at("pencilKind").get<std::string>();
    e.pencil = SymmetricPencil::make(A1, A2, e.pencilKind != "smooth-member");
    e.p = point4(j.at("p"));
    if (j.contains("sectionPlane")) {
      auto pl = point4(j.at("sectionPlane"));
      e.sectionPlane = pl;
    }
    derive_quadric_case(e);
  } else {
    e.V = MultiPoly::parse(j.at("V").get<std::string>(), 4);
    e.phi = forms(j.at("phi"), 3);
    for (auto& c : j.at("conditions")) {
      e.conditions.push_back(parse_condition(c, e));
      e.conditionNames.push_back(c.at("name").get<std::string>());
    }
    e.fixedDivisor = MultiPoly::constant(3, 1);
    for (auto& f : j.at("fixedDivisor"))
      e.fixedDivisor = e.fixedDivisor * MultiPoly::parse(f.at(0).get<std::string>(), 3).pow(f.at(1).get<int>());
    for (auto& m : j.at("planeMults")) e.planeMults.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
  }
  if (e.phi.size() != 4) invalid(id, "parametrization needs four forms");
  if (!e.V.compose(e.phi).is_zero()) invalid(id, "parametrization does not lie on V");

  if (j.contains("designated")) {
    auto& d = j.at("designated");
    Designated des;
    if (d.at("point").get<std::string>() == "singular-member-vertex") {
      if (!e.pencil) invalid(id, "vertex designation needs a pencil");
      des.q = singular_vertex(e);
    } else {
      des.q = point4(d.at("q"));
    }
    des.mPlus = d.value("mPlus", 0);
    if (d.contains("frame")) {
      std::array<Point4, 3> fr;
      for (int i = 0; i < 3; ++i) fr[i] = point4(d.at("frame").at(i));
      des.frame = fr;
    }
    if (d.contains("tangentConeRank")) des.rank = d.at("tangentConeRank").get<int>();
    if (d.contains("multiplicity")) des.multiplicity = d.at("multiplicity").get<int>();
    des.veronese = d.value("veronese", false);
    des.attempt = d.value("attempt", false);
    e.designated = des;
  }
  return e;
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("OADP_FIXTURES"); env && *env) return env;
  return OADP_DEFAULT_FIXTURES;
}

std::vector<std::string> catalog_ids(const std::string& dir) {
  std::vector<std::string> ids;
  std::error_code ec;
  for (auto& f : fs::directory_iterator(dir, ec))
    if (f.path().extension() == ".json") ids.push_back(f.path().stem().string());
  if (ec) throw Error(ErrorCode::FixtureInvalid, "cannot read fixture directory " + dir);
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) { return id_key(a) < id_key(b); });
  return ids;
}

CatalogEntry load_entry(const std::string& id, const std::string& dir) {
  fs::path path = fs::path(dir) / (id + ".json");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnknownEntry, "no fixture for " + id);
  try {
    return parse_entry(Json::parse(in), id);
  } catch (const Json::exception& ex) {
    invalid(id, ex.what());
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::FixtureInvalid) throw;
    invalid(id, ex.what());
  }
}

std::vector<TableRow> expected_table() {
  return {
      {"E1", "smooth quartic", "[1,1,1,1]", "none"},
      {"E2", "nodal quartic", "[2,1,1]", "one point"},
      {"E3", "cuspidal quartic", "[3,1]", "one point"},
      {"E4", "twisted cubic and a transversal line", "[2,2]", "two points"},
      {"E5", "twisted cubic and a tangent line", "[4]", "two infinitely near points"},
      {"E6", "two transversal conics", "[(11),1,1]", "two points"},
      {"E7", "two tangent conics", "[(21),1]", "two infinitely near points"},
      {"E8", "one conic and two lines intersecting it in two points", "[(11),2]", "three points"},
      {"E9", "one conic and two lines intersecting it in one point", "[(31)]",
       "one point and three infinitely near to it"},
      {"E10", "four lines", "[(11),(11)]", "four points"},
      {"E11", "one double and two simple lines", "[(22)]", "one line"},
      {"E12", "two double lines", "[(211)]", "two lines"},
      {"E13", "one double conic", "[(111),1]", "one conic"},
      {"E14", "a double line and a conic", "--", "one conic"},
      {"E15", "four lines", "[[1,1,1]]", "one line"},
      {"E16", "one double and two simple lines", "[[2,1]]", "two lines"},
      {"E17", "two double lines", "[[(11),1]]", "three lines"},
      {"E18", "one triple and one simple lines", "[[3]]", "three lines: L, R≺R′"},
      {"E19", "one line with multiplicity four", "[[(21)]]", "four lines: L, R≺R′≺R″"},
      {"SL_GENERIC", "smooth rational C6, double line s, line r", "--", "multiplicity two or three"},
      {"SL_EXAMPLE", "C2+l1+l2+2l3", "--", "one double line, one triple point and one double point"},
      {"SC_GENERIC", "Steiner Roman surface, smooth C6", "--", "x_p of multiplicity four"},
  };
}

}  // namespace oadp
