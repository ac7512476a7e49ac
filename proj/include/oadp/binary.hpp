#pragma once

#include <utility>
#include <vector>

#include "oadp/poly.hpp"

namespace oadp {

// Binary forms are MultiPoly in two variables (lambda = x0, mu = x1), homogeneous.
using BinaryForm = MultiPoly;

// Dense univariate polynomial over Q, coefficient i multiplies t^i.
using UPoly = std::vector<Rational>;

namespace upoly {
void trim(UPoly& a);
int degree(const UPoly& a);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& a);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b);  // monic, or {} when both zero
UPoly monic(const UPoly& a);
// (squarefree factor, multiplicity) pairs, factors monic of positive degree.
std::vector<std::pair<UPoly, int>> yun(const UPoly& f);
}  // namespace upoly

UPoly dehomogenize(const BinaryForm& f);                   // set mu = 1
BinaryForm homogenize(const UPoly& u, int degree);         // inverse, padding with mu
int mu_multiplicity(const BinaryForm& f);                  // order of the root (1:0)

BinaryForm binary_gcd(const std::vector<BinaryForm>& forms);
std::vector<std::pair<BinaryForm, int>> binary_factor(const BinaryForm& f);

// Multiplicity of the irreducible factor p in f (f nonzero).
int factor_multiplicity(const BinaryForm& f, const BinaryForm& p);

}  // namespace oadp
