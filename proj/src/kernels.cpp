#include "oadp/kernels.hpp"

#include <utility>

namespace oadp::kernels {

namespace {

// One elimination step below pivot row k: A[i][j] = (pk*A[i][j] - A[i][c]*A[k][j]) / prev.
void update_row(IntRow& ri, const IntRow& rk, std::size_t c, const Integer& prev, Integer& tmp) {
  const Integer& pk = rk[c];
  Integer f = ri[c];
  for (std::size_t j = c + 1; j < ri.size(); ++j) {
    tmp = pk * ri[j];
    if (f != 0 && rk[j] != 0) tmp -= f * rk[j];
    if (prev != 1) mpz_divexact(ri[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    else ri[j] = tmp;
  }
  ri[c] = 0;
}

template <bool Par>
std::vector<std::size_t> bareiss_impl(std::vector<IntRow>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t m = rows.size(), n = rows[0].size();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n && k < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = k; i < m; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(rows[k], rows[piv]);
    const IntRow& rk = rows[k];
    if constexpr (Par) {
#pragma omp parallel
      {
        Integer tmp;
#pragma omp for schedule(static)
        for (long i = static_cast<long>(k) + 1; i < static_cast<long>(m); ++i) update_row(rows[i], rk, c, prev, tmp);
      }
    } else {
      Integer tmp;
      for (std::size_t i = k + 1; i < m; ++i) update_row(rows[i], rk, c, prev, tmp);
    }
    prev = rk[c];
    pivots.push_back(c);
    ++k;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> bareiss_serial(std::vector<IntRow>& rows) { return bareiss_impl<false>(rows); }
std::vector<std::size_t> bareiss_parallel(std::vector<IntRow>& rows) { return bareiss_impl<true>(rows); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::vector<std::size_t> independent_rows_modp(const std::vector<std::vector<std::uint64_t>>& rows,
                                               std::uint64_t p) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::uint64_t>> basis;  // each normalized: pivot entry 1
  std::vector<std::size_t> pivcol;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::uint64_t> v = rows[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t f = v[pivcol[b]];
      if (!f) continue;
      const auto& bv = basis[b];
      for (std::size_t j = pivcol[b]; j < v.size(); ++j)
        if (bv[j]) v[j] = (v[j] + p - mulmod(f, bv[j], p)) % p;
    }
    std::size_t c = 0;
    while (c < v.size() && v[c] == 0) ++c;
    if (c == v.size()) continue;
    std::uint64_t inv = invmod(v[c], p);
    for (std::size_t j = c; j < v.size(); ++j) v[j] = mulmod(v[j], inv, p);
    // keep basis fully reduced on its pivot columns
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t f = basis[b][c];
      if (!f) continue;
      for (std::size_t j = c; j < v.size(); ++j)
        if (v[j]) basis[b][j] = (basis[b][j] + p - mulmod(f, v[j], p)) % p;
    }
    basis.push_back(std::move(v));
    pivcol.push_back(c);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace oadp::kernels
