#pragma once

#include <cstddef>
#include <vector>

#include "oadp/rational.hpp"

namespace oadp {

enum class Exec { Serial, Parallel };

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const RatMatrix& o) const;
  bool is_symmetric() const;
  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

using Vec = std::vector<Rational>;

// Right null space. Basis vector k has a 1 in the k-th free column and 0 in the
// other free columns, so the result depends only on the row space.
std::vector<Vec> nullspace(const RatMatrix& m, Exec exec = Exec::Parallel);
std::vector<Vec> nullspace_rows(const std::vector<Vec>& rows, std::size_t cols, Exec exec = Exec::Parallel);
std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
// Row space basis of the given vectors in reduced echelon form.
std::vector<Vec> row_reduce(const std::vector<Vec>& vecs);
// Solve m x = b; empty optional when inconsistent. Free variables set to 0.
bool solve(const RatMatrix& m, const Vec& b, Vec& x);
RatMatrix inverse(const RatMatrix& m);  // throws ZeroDivisor when singular

// Equal spans (by rank of the union).
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace oadp
