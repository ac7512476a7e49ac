#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oadp {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as canonicalize() runs after raw construction; the helpers below do that.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Reduce q into [0, p). Throws BadPrime when p divides the denominator.
unsigned long reduce_mod(const Rational& q, unsigned long p);

}  // namespace oadp
