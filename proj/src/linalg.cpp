#include "oadp/linalg.hpp"

#include "oadp/errors.hpp"
#include "oadp/kernels.hpp"

namespace oadp {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::ArityMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ArityMismatch, "matrix product shapes");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<Rational> RatMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ArityMismatch, "matrix-vector shapes");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void RatMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorCode::ArityMismatch, "append_row");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

using kernels::IntRow;

// Clear denominators and divide out the content; empty result for zero rows.
IntRow integer_row(const Vec& row) {
  Integer l = 1;
  bool nz = false;
  for (auto& x : row)
    if (x != 0) {
      nz = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
  if (!nz) return {};
  IntRow r(row.size());
  Integer g = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    r[j] = row[j].get_num() * (l / row[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
  }
  if (g != 1)
    for (auto& x : r)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

constexpr std::uint64_t kFilterPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t to_modp(const Integer& x) {
  Integer r = x % Integer(kFilterPrime);
  if (r < 0) r += Integer(kFilterPrime);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

// Null space from an echelon form produced by Bareiss.
std::vector<Vec> kernel_from_echelon(const std::vector<IntRow>& ech, const std::vector<std::size_t>& piv,
                                     std::size_t cols) {
  std::vector<bool> isPiv(cols, false);
  for (auto c : piv) isPiv[c] = true;
  std::vector<Vec> out;
  const std::size_t r = piv.size();
  for (std::size_t f = 0; f < cols; ++f) {
    if (isPiv[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      const IntRow& row = ech[k];
      Rational s = 0;
      for (std::size_t j = piv[k] + 1; j < cols; ++j)
        if (row[j] != 0 && v[j] != 0) s += Rational(row[j]) * v[j];
      v[piv[k]] = -s / Rational(row[piv[k]]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool annihilates(const std::vector<IntRow>& rows, const Vec& v) {
  for (auto& row : rows) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0 && v[j] != 0) s += Rational(row[j]) * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Vec> nullspace_rows(const std::vector<Vec>& rowsIn, std::size_t cols, Exec exec) {
  std::vector<IntRow> rows;
  rows.reserve(rowsIn.size());
  for (auto& r : rowsIn) {
    if (r.size() != cols) throw Error(ErrorCode::ArityMismatch, "nullspace row length");
    IntRow ir = integer_row(r);
    if (!ir.empty()) rows.push_back(std::move(ir));
  }
  if (rows.empty()) {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols; ++f) {
      Vec v(cols);
      v[f] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  // Rows independent mod a large prime are independent over Q, so Bareiss on
  // that subset yields a space containing the kernel; the exact check below
  // confirms equality and otherwise we fall back to all rows.
  std::vector<std::vector<std::uint64_t>> modRows(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    modRows[i].resize(cols);
    for (std::size_t j = 0; j < cols; ++j) modRows[i][j] = rows[i][j] == 0 ? 0 : to_modp(rows[i][j]);
  }
  std::vector<std::size_t> sel = kernels::independent_rows_modp(modRows, kFilterPrime);
  std::vector<IntRow> ech;
  ech.reserve(sel.size());
  for (auto i : sel) ech.push_back(rows[i]);
  auto piv = kernels::bareiss(ech, exec);
  std::vector<Vec> ker = kernel_from_echelon(ech, piv, cols);
  bool ok = piv.size() == sel.size();
  for (std::size_t k = 0; ok && k < ker.size(); ++k) ok = annihilates(rows, ker[k]);
  if (ok) return ker;
  ech = rows;
  piv = kernels::bareiss(ech, exec);
  return kernel_from_echelon(ech, piv, cols);
}

std::vector<Vec> nullspace(const RatMatrix& m, Exec exec) {
  std::vector<Vec> rows(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return nullspace_rows(rows, m.cols(), exec);
}

std::size_t rank(const RatMatrix& m) { return m.cols() - nullspace(m).size(); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ArityMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  std::vector<IntRow> rows(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  // track row swaps to get the sign
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (rows[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(rows[piv], rows[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  Rational d(rows[n - 1][n - 1] * sign);
  Integer ln;
  mpz_pow_ui(ln.get_mpz_t(), l.get_mpz_t(), n);
  d /= Rational(ln);
  return d;
}

std::vector<Vec> row_reduce(const std::vector<Vec>& vecs) {
  std::vector<Vec> rows;
  for (auto& v : vecs) rows.push_back(v);
  std::vector<Vec> out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].size();
  std::size_t k = 0;
  for (std::size_t c = 0; c < n && k < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = k; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[k], rows[piv]);
    Rational inv = 1 / rows[k][c];
    for (std::size_t j = c; j < n; ++j) rows[k][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == k || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (rows[k][j] != 0) rows[i][j] -= f * rows[k][j];
    }
    ++k;
  }
  rows.resize(k);
  return rows;
}

bool solve(const RatMatrix& m, const Vec& b, Vec& x) {
  const std::size_t n = m.cols();
  std::vector<Vec> aug(m.rows(), Vec(n + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n] = b[i];
  }
  auto red = row_reduce(aug);
  x.assign(n, 0);
  for (auto& row : red) {
    std::size_t c = 0;
    while (c <= n && row[c] == 0) ++c;
    if (c == n) return false;
    x[c] = row[n];
  }
  return true;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::ArityMismatch, "inverse of non-square matrix");
  std::vector<Vec> aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  auto red = row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i >= red.size() || red[i][j] != (i == j ? 1 : 0)) throw Error(ErrorCode::ZeroDivisor, "singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red[i][n + j];
  return inv;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto ra = row_reduce(a).size(), rb = row_reduce(b).size(), ru = row_reduce(all).size();
  return ra == rb && ra == ru;
}

}  // namespace oadp
