#include "oadp/rational.hpp"

#include <cctype>

#include "oadp/errors.hpp"

namespace oadp {

namespace {
bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rational parse_rational(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(s) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer nn(n), dd{std::string(den)};
  if (dd == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(nn, dd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

unsigned long reduce_mod(const Rational& q, unsigned long p) {
  Integer P(p);
  Integer den = q.get_den() % P;
  if (den == 0) throw Error(ErrorCode::BadPrime, "denominator divisible by " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  Integer r = (q.get_num() % P) * inv % P;
  if (r < 0) r += P;
  return r.get_ui();
}

}  // namespace oadp
