#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oadp/errors.hpp"
#include "oadp/rational.hpp"

namespace oadp {

constexpr int kMaxVars = 8;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  int deg = 0;

  static Mono from(std::initializer_list<int> exps);
  bool divides(const Mono& o) const;
  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // assumes divides
  bool operator==(const Mono& o) const { return e == o.e; }
};

// grevlex, larger first: total degree, then smaller exponent in the last
// differing variable wins.
struct GrevlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

// prime == 0 means coefficients in Q; otherwise coefficients are integers in [0, prime).
class MultiPoly {
 public:
  using TermMap = std::map<Mono, Rational, GrevlexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars, unsigned long prime = 0);

  static MultiPoly constant(int nvars, const Rational& c, unsigned long prime = 0);
  static MultiPoly variable(int nvars, int i, unsigned long prime = 0);
  static MultiPoly monomial(int nvars, const Mono& m, const Rational& c = 1, unsigned long prime = 0);

  int nvars() const { return nvars_; }
  unsigned long prime() const { return prime_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;
  const Mono& leading_mono() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }
  Rational coeff(const Mono& m) const;
  int degree_in(int var) const;

  void add_term(const Mono& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned k) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly differentiate(int var) const;
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Scale to integer coefficients with content 1 and positive leading coefficient.
  MultiPoly primitive() const;
  MultiPoly monic() const;
  MultiPoly mod_p(unsigned long p) const;

  std::string to_string() const;
  static MultiPoly parse(std::string_view text, int nvars, unsigned long prime = 0);

 private:
  void normalize_coeff(Rational& c) const;
  void check_ring(const MultiPoly& o) const;

  int nvars_ = 0;
  unsigned long prime_ = 0;
  TermMap terms_;
};

// a = q*b exactly, else NotDivisible.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
// Remainder of a modulo the principal ideal (b) under grevlex; linear in a.
MultiPoly remainder(const MultiPoly& a, const MultiPoly& b);

enum class RingOp { Add, Mul, Pow, ExactDiv };
MultiPoly ring_ops(const MultiPoly& a, const MultiPoly& b, RingOp op, unsigned k = 0);

// All exponent vectors of total degree d in n variables, grevlex descending.
std::vector<Mono> monomials(int n, int d);
// Multi-indices of order k in n variables (same ordering).
std::vector<Mono> partial_indices(int n, int k);
// D^alpha applied to f.
MultiPoly apply_partial(const MultiPoly& f, const Mono& alpha);

}  // namespace oadp
