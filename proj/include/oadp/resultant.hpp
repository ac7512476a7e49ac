#pragma once

#include <vector>

#include "oadp/poly.hpp"

namespace oadp {

// Coefficients of f as a polynomial in x_var: result[k] multiplies x_var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var);

// Determinant of the Sylvester matrix, f-rows first, columns by descending power of x_var.
MultiPoly resultant_eliminate(const MultiPoly& f, const MultiPoly& g, int var);

// Fraction-free determinant of a square matrix of polynomials.
MultiPoly poly_determinant(std::vector<std::vector<MultiPoly>> m);

MultiPoly mod_p(const MultiPoly& f, unsigned long p);

}  // namespace oadp
