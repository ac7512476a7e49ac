#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "oadp/linalg.hpp"
#include "oadp/poly.hpp"

namespace oadp {

using Point4 = std::array<Rational, 4>;

struct PointMult {
  Point4 point;
  int m = 1;
};

// Curve given by P^1 -> P^3, four equidegree binary forms.
struct RationalCurveMult {
  std::vector<MultiPoly> param;
  int m = 1;
};

// Membership in the m-th power of the ideal (g, g2).
struct CIPowerCurve {
  MultiPoly g, g2;
  int m = 2;
};

// Every order-`order` partial of F, pulled back along param: P^2 -> P^3,
// is divisible by `divisor`. With a reduced curve in the source this is
// multiplicity order+1 along its image.
struct PullbackDivisibility {
  std::vector<MultiPoly> param;
  MultiPoly divisor;
  int order = 1;
};

// Chain of blow-ups along y2=y3=0 and then along the successive curves cut by
// the strict transforms of the plane y3=0, where x = change * y.
// mults[j] is the required multiplicity along the j-th center.
struct ChartCondition {
  RatMatrix change;
  std::vector<int> mults;
  // Optional bend: y3 is replaced by y3 + bendQ/bendW, bendQ in (y2)^2 and bendW
  // linear, so the later centers follow the quadric bendW*y3 = bendQ instead of
  // the plane. Zero bendQ means no bend.
  MultiPoly bendW, bendQ;
};

using BaseCondition = std::variant<PointMult, RationalCurveMult, CIPowerCurve, PullbackDivisibility, ChartCondition>;

std::string condition_name(const BaseCondition& c);

struct LinearSystem {
  int degree = 0;
  std::vector<MultiPoly> basis;
  std::vector<BaseCondition> conditions;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Rows are linear conditions on the coefficient vector over monomials(4, d).
RatMatrix conditions_matrix(int d, const std::vector<BaseCondition>& conds, Exec exec = Exec::Parallel);
LinearSystem build_system(int d, const std::vector<BaseCondition>& conds, Exec exec = Exec::Parallel);

// Independent re-check of one condition on one form.
bool satisfies(const MultiPoly& f, const BaseCondition& c);

std::vector<MultiPoly> pullback_system(const LinearSystem& L, const std::vector<MultiPoly>& phi);

struct FixedDivisorResult {
  bool ok = false;
  int failingIndex = -1;
  std::vector<MultiPoly> residuals;
  bool freeWitness = false;  // residuals share no zero at the sample points
};
FixedDivisorResult verify_fixed_divisor(const LinearSystem& L, const std::vector<MultiPoly>& phi,
                                        const MultiPoly& expected);

// Ratio vector of the residuals; NotContracted when they are not proportional.
std::vector<Rational> contraction_point(const LinearSystem& L, const std::vector<MultiPoly>& phi,
                                        const MultiPoly& expected);
std::vector<Rational> contraction_point(const FixedDivisorResult& fd);

struct BlowupCenter {
  enum class Kind { Point, Line } kind = Kind::Line;
  RatMatrix change;  // x = change * y; Point: y1=y2=y3=0, Line: y2=y3=0
};
struct ChartResult {
  MultiPoly strict;
  int excMult = 0;
};
// Line centers: chart 0 substitutes y3 -> y2*s (exceptional y2), chart 1 y2 -> y3*s.
// Point centers: chart i in {1,2,3} keeps y_i and substitutes y_j -> y_i*s_j.
// The chart variable s occupies the slot of the substituted coordinate.
ChartResult blowup_chart(const MultiPoly& f, const BlowupCenter& center, int chart);

int image_degree_formula(int d, const std::vector<std::pair<int, int>>& mults);

struct StdQuadResult {
  int d = 0;
  std::array<int, 3> m{};
  bool effective = true;
};
StdQuadResult stdquad_transform(int d, int m1, int m2, int m3);

// Coefficient vector of f over monomials(nvars, deg f), and back.
Vec coefficient_vector(const MultiPoly& f, const std::vector<Mono>& monos);
MultiPoly form_from_vector(int nvars, const std::vector<Mono>& monos, const Vec& v);
// Reduced echelon basis of the span of the forms (all of degree d).
std::vector<MultiPoly> canonical_basis(const std::vector<MultiPoly>& forms, int nvars, int d);

}  // namespace oadp
