#include "oadp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace oadp {

Mono Mono::from(std::initializer_list<int> exps) {
  Mono m;
  int i = 0;
  for (int x : exps) {
    m.e[i++] = static_cast<std::uint16_t>(x);
    m.deg += x;
  }
  return m;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
  r.deg = deg + o.deg;
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
  r.deg = deg - o.deg;
  return r;
}

MultiPoly::MultiPoly(int nvars, unsigned long prime) : nvars_(nvars), prime_(prime) {
  if (nvars < 0 || nvars > kMaxVars) throw Error(ErrorCode::IndexOutOfRange, "nvars");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c, unsigned long prime) {
  MultiPoly r(nvars, prime);
  r.add_term(Mono{}, c);
  return r;
}

MultiPoly MultiPoly::variable(int nvars, int i, unsigned long prime) {
  if (i < 0 || i >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index");
  Mono m;
  m.e[i] = 1;
  m.deg = 1;
  return monomial(nvars, m, 1, prime);
}

MultiPoly MultiPoly::monomial(int nvars, const Mono& m, const Rational& c, unsigned long prime) {
  MultiPoly r(nvars, prime);
  r.add_term(m, c);
  return r;
}

void MultiPoly::normalize_coeff(Rational& c) const {
  if (prime_ == 0) return;
  c = Rational(reduce_mod(c, prime_));
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || prime_ != o.prime_)
    throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.deg;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.deg;
  return terms_.rbegin()->first.deg == d;
}

Rational MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
  return d;
}

void MultiPoly::add_term(const Mono& m, const Rational& c0) {
  Rational c = c0;
  normalize_coeff(c);
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    normalize_coeff(it->second);
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_, prime_);
  for (auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r(nvars_, prime_);
  Rational t;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      t = ca * cb;
      r.add_term(ma * mb, t);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(nvars_, prime_);
  if (c == 0) return r;
  for (auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(nvars_, 1, prime_);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && prime_ == o.prime_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::differentiate(int var) const {
  if (var < 0 || var >= nvars_) throw Error(ErrorCode::IndexOutOfRange, "differentiate");
  MultiPoly r(nvars_, prime_);
  for (auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Mono n = m;
    n.e[var] -= 1;
    n.deg -= 1;
    r.add_term(n, c * m.e[var]);
  }
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(ErrorCode::ArityMismatch, "compose expects one image per variable");
  if (images.empty()) return *this;
  int tn = images[0].nvars();
  unsigned long tp = images[0].prime();
  for (auto& im : images)
    if (im.nvars() != tn || im.prime() != tp) throw Error(ErrorCode::RingMismatch, "compose images");
  if (tp != prime_ && prime_ != 0)
    throw Error(ErrorCode::RingMismatch, "compose across prime fields");

  // multivariate Horner: peel one variable at a time
  using Terms = std::vector<std::pair<Mono, Rational>>;
  auto rec = [&](auto&& self, const Terms& ts, int var) -> MultiPoly {
    if (var == nvars_) {
      Rational c = 0;
      for (auto& t : ts) c += t.second;
      return MultiPoly::constant(tn, c, tp);
    }
    std::map<int, Terms> groups;
    for (auto& [m, c] : ts) {
      Mono r = m;
      int k = r.e[var];
      r.e[var] = 0;
      groups[k].emplace_back(r, c);
    }
    MultiPoly acc(tn, tp);
    int top = groups.rbegin()->first;
    for (int k = top; k >= 0; --k) {
      if (k < top) acc = acc * images[var];
      auto it = groups.find(k);
      if (it != groups.end()) acc += self(self, it->second, var + 1);
    }
    return acc;
  };
  if (terms_.empty()) return MultiPoly(tn, tp);
  Terms all(terms_.begin(), terms_.end());
  return rec(rec, all, 0);
}

Rational MultiPoly::evaluate(const std::vector<Rational>& pt) const {
  if (static_cast<int>(pt.size()) != nvars_) throw Error(ErrorCode::ArityMismatch, "evaluate");
  Rational s = 0;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= pt[i];
    s += t;
  }
  if (prime_) s = Rational(reduce_mod(s, prime_));
  return s;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty() || prime_) return monic();
  Integer l = 1, g = 0;
  for (auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& [m, c] : terms_) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (leading_coeff() < 0) s = -s;
  return scaled(s);
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  if (prime_ == 0) return scaled(1 / leading_coeff());
  Integer inv, lc = leading_coeff().get_num(), P(prime_);
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
  return scaled(Rational(inv));
}

MultiPoly MultiPoly::mod_p(unsigned long p) const {
  if (prime_ != 0) throw Error(ErrorCode::RingMismatch, "mod_p expects a rational polynomial");
  MultiPoly r(nvars_, p);
  for (auto& [m, c] : terms_) r.add_term(m, Rational(reduce_mod(c, p)));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational a = c;
    if (!first) {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    os << a.get_str();
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      os << "*x" << i;
      if (m.e[i] > 1) os << '^' << m.e[i];
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  }
  std::string_view digits() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected digits");
    return s.substr(b, i - b);
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nvars, unsigned long prime) {
  MultiPoly r(nvars, prime);
  Lexer lx{text};
  if (lx.eof()) lx.fail("empty polynomial");
  bool firstTerm = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.i;
    } else if (!firstTerm) {
      lx.fail("expected + or -");
    }
    firstTerm = false;
    Rational coef = 1;
    Mono m;
    bool needFactor = true;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num(lx.digits());
      std::string den = "1";
      if (lx.peek() == '/') {
        ++lx.i;
        den = std::string(lx.digits());
      }
      coef = parse_rational(num + "/" + den);
      needFactor = false;
      if (lx.peek() == '*') {
        ++lx.i;
        needFactor = true;
      }
    }
    while (needFactor) {
      if (lx.peek() != 'x') lx.fail("expected variable");
      ++lx.i;
      int v = std::stoi(std::string(lx.digits()));
      if (v >= nvars) lx.fail("variable out of range");
      int e = 1;
      if (lx.peek() == '^') {
        ++lx.i;
        e = std::stoi(std::string(lx.digits()));
      }
      m.e[v] += e;
      m.deg += e;
      needFactor = false;
      if (lx.peek() == '*') {
        ++lx.i;
        needFactor = true;
      }
    }
    r.add_term(m, sign * coef);
  }
  return r;
}

namespace {

MultiPoly divide(const MultiPoly& a, const MultiPoly& b, bool exact, MultiPoly* rem) {
  if (a.nvars() != b.nvars() || a.prime() != b.prime())
    throw Error(ErrorCode::RingMismatch, "division operands");
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by zero polynomial");
  MultiPoly q(a.nvars(), a.prime()), r(a.nvars(), a.prime()), p = a;
  const Mono lb = b.leading_mono();
  Rational lbInv;
  if (a.prime()) {
    Integer inv, P(a.prime()), l = b.leading_coeff().get_num();
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), P.get_mpz_t());
    lbInv = Rational(inv);
  } else {
    lbInv = 1 / b.leading_coeff();
  }
  while (!p.is_zero()) {
    Mono lm = p.leading_mono();
    Rational lc = p.leading_coeff();
    if (lb.divides(lm)) {
      Mono qm = lm / lb;
      Rational qc = lc * lbInv;
      q.add_term(qm, qc);
      for (auto& [m, c] : b.terms()) p.add_term(m * qm, -(c * qc));
    } else {
      if (exact) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  if (rem) *rem = r;
  return q;
}

}  // namespace

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return divide(a, b, true, nullptr); }

MultiPoly remainder(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  divide(a, b, false, &r);
  return r;
}

MultiPoly ring_ops(const MultiPoly& a, const MultiPoly& b, RingOp op, unsigned k) {
  switch (op) {
    case RingOp::Add: return a + b;
    case RingOp::Mul: return a * b;
    case RingOp::Pow: return a.pow(k);
    case RingOp::ExactDiv: return exact_div(a, b);
  }
  return a;
}

std::vector<Mono> monomials(int n, int d) {
  std::vector<Mono> out;
  Mono m;
  m.deg = d;
  // recursive fill of exponents for variables 0..n-1 summing to d
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      m.e[var] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexDesc{});
  return out;
}

std::vector<Mono> partial_indices(int n, int k) { return monomials(n, k); }

MultiPoly apply_partial(const MultiPoly& f, const Mono& alpha) {
  MultiPoly r(f.nvars(), f.prime());
  for (auto& [m, c] : f.terms()) {
    if (!alpha.divides(m)) continue;
    Rational k = c;
    for (int i = 0; i < f.nvars(); ++i)
      for (int j = 0; j < alpha.e[i]; ++j) k *= (m.e[i] - j);
    r.add_term(m / alpha, k);
  }
  return r;
}

}  // namespace oadp
