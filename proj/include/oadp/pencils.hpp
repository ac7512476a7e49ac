#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oadp/binary.hpp"
#include "oadp/linalg.hpp"

namespace oadp {

struct SymmetricPencil {
  int n = 0;
  RatMatrix A1, A2;

  // Validates shape, symmetry, non-proportionality and (unless allowSingular) det != 0.
  static SymmetricPencil make(const RatMatrix& a1, const RatMatrix& a2, bool allowSingular = false);
  RatMatrix member(const Rational& lambda, const Rational& mu) const;
  // lambda*A1 + mu*A2 as a matrix of binary linear forms.
  std::vector<std::vector<BinaryForm>> symbolic() const;
};

struct RootClass {
  BinaryForm factor;   // irreducible over Q, primitive
  int fieldDegree = 1; // degree of the factor
  std::vector<int> l;  // l_0 >= l_1 >= ... (trailing zeros dropped)
  std::vector<int> e;  // e_i = l_i - l_{i+1}
};

struct SegreSymbol {
  std::vector<RootClass> groups;  // canonical order
  bool section = false;           // double-bracket form for plane sections of cone pencils
  std::string str() const;
  bool operator==(const SegreSymbol& o) const { return str() == o.str(); }
};

struct SingularMember {
  BinaryForm rootClass;
  int corank = 0;
  int detMultiplicity = 0;
};

struct DetAndGcds {
  BinaryForm det;
  std::vector<BinaryForm> gcds;  // gcds[i]: gcd of the (n-i)x(n-i) minors
  std::vector<bool> allZero;
};

DetAndGcds pencil_det_and_minor_gcds(const SymmetricPencil& p);
SegreSymbol segre_symbol(const SymmetricPencil& p);
SegreSymbol conic_section_symbol(const SymmetricPencil& p, const std::array<Rational, 4>& plane);
std::vector<SingularMember> singular_members(const SymmetricPencil& p);

// Quadratic form x^T A x in n variables, and its symmetric matrix back.
MultiPoly quadric_form(const RatMatrix& a);
RatMatrix quadric_matrix(const MultiPoly& q);

// (lambda:mu) root of a linear binary form a*lambda + b*mu.
std::array<Rational, 2> linear_root(const BinaryForm& f);

}  // namespace oadp
