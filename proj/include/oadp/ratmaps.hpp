#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oadp/linalg.hpp"
#include "oadp/linsys.hpp"
#include "oadp/poly.hpp"

namespace oadp {

using Point = std::vector<Rational>;

struct RationalMap {
  int srcVars = 0;
  std::vector<MultiPoly> forms;
  int degree = 0;

  // Checks the forms are homogeneous of one degree and not all zero.
  static RationalMap make(std::vector<MultiPoly> forms);
  // Divides out every candidate factor that divides all forms, repeatedly.
  RationalMap normalize(const std::vector<MultiPoly>& candidates) const;
  int target_dim() const { return static_cast<int>(forms.size()) - 1; }
};

Point evaluate(const RationalMap& f, const Point& q);
// Scaled so the first nonzero coordinate is 1.
Point normalize_point(Point q);

struct TangentSpace {
  std::vector<Vec> basisPoints;  // span T
  std::vector<Vec> normalForms;  // linear forms vanishing on T
};

// Column space of the Jacobian at a point where the map is immersive.
TangentSpace tangent_space_at(const RationalMap& sigma, const Point& q0);
// Tangent space at the image of a contracted locus, spanned by the image point
// and the Jacobian columns at the given points of that locus.
TangentSpace tangent_space_along(const RationalMap& sigma, const std::vector<Point>& points, int expectedRank);
RationalMap tangential_projection(const TangentSpace& t);

struct Roundtrip {
  bool ok = false;
  MultiPoly G;
  RatMatrix M;
};
// Checks pi(sigma(x)) = G(x) * M x. pi may have any degree.
Roundtrip verify_linear_roundtrip(const RationalMap& sigma, const RationalMap& pi);

// Symmetric k x k matrices Q with Q(f_0..f_{k-1}) = 0, or divisible by modulus.
std::vector<RatMatrix> quadric_relation(const std::vector<MultiPoly>& forms,
                                        const std::optional<MultiPoly>& modulus = std::nullopt);

// Cubics through g = g2 = 0 singular at p. RankDrop when p is not a smooth point of g.
RationalMap cremona_dejonquieres(const MultiPoly& g, const MultiPoly& g2, const Point4& p);

inline const std::vector<std::uint64_t> kDefaultPrimes = {10007, 10009, 10037, 10039};

struct FpRun {
  int value = 0;
  int agreeing = 0;  // trials reporting the modal value
  int trials = 0;
};

// Degree of the image of a general plane (or of P^2 itself when the map has
// three source variables), counted on random codimension-2 slices over F_p.
// With `through`, planes are drawn through that point.
FpRun fp_degree_of_image_surface(const RationalMap& sigma, std::uint64_t p, int trials, std::uint64_t seed,
                                 const std::optional<Point>& through = std::nullopt, Exec exec = Exec::Parallel);
// Multiplicity of the restricted image surface at xq, for planes through q.
FpRun fp_multiplicity_at(const RationalMap& sigma, const Point& xq, const std::optional<Point>& q, std::uint64_t p,
                         int trials, std::uint64_t seed, Exec exec = Exec::Parallel);

struct LeadingForms {
  RationalMap mapOnE;  // moving part, ternary
  MultiPoly fixedPart;
  std::vector<MultiPoly> subsystem;  // members of L with the extra order at q
  Point imagePoint;                  // the point of P^(dim L - 1) cut out by the subsystem
};
// frame: three directions completing q to a basis; standard ones by default.
LeadingForms leading_form_subsystem(const LinearSystem& L, const Point4& q, int mPlus,
                                    const std::optional<std::array<Point4, 3>>& frame = std::nullopt);
int tangent_cone_rank(const RationalMap& mapOnE);

// gcd of ternary forms over Q, primitive with positive leading coefficient.
MultiPoly ternary_gcd(const std::vector<MultiPoly>& forms);

}  // namespace oadp
