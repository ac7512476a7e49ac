#pragma once

// Hot loops with an OpenMP version and a plain serial reference.
// Both variants must produce identical results; tests compare them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "oadp/linalg.hpp"
#include "oadp/rational.hpp"

namespace oadp::kernels {

using IntRow = std::vector<Integer>;

// Fraction-free forward elimination with leftmost-nonzero pivoting.
// Rows are permuted in place; returns the pivot column of each of the first
// rank rows. Rows below rank are zero afterwards.
std::vector<std::size_t> bareiss_serial(std::vector<IntRow>& rows);
std::vector<std::size_t> bareiss_parallel(std::vector<IntRow>& rows);

inline std::vector<std::size_t> bareiss(std::vector<IntRow>& rows, Exec e) {
  return e == Exec::Parallel ? bareiss_parallel(rows) : bareiss_serial(rows);
}

// Indices of a maximal set of rows independent modulo p (greedy, in order).
std::vector<std::size_t> independent_rows_modp(const std::vector<std::vector<std::uint64_t>>& rows,
                                               std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// out[i] = f(i) for i < n. f must be safe to call concurrently.
template <class T, class F>
std::vector<T> map_index_serial(std::size_t n, F f) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

template <class T, class F>
std::vector<T> map_index_parallel(std::size_t n, F f) {
  std::vector<T> out(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) out[i] = f(static_cast<std::size_t>(i));
  return out;
}

template <class T, class F>
std::vector<T> map_index(std::size_t n, F f, Exec e) {
  return e == Exec::Parallel ? map_index_parallel<T>(n, f) : map_index_serial<T>(n, f);
}

}  // namespace oadp::kernels
