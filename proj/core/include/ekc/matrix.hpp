#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ekc/arith.hpp"

namespace ekc {

using ZVector = std::vector<Integer>;

class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ZMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static ZMatrix identity(std::size_t n);
  static ZMatrix from_columns(const std::vector<ZVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZMatrix operator*(const ZMatrix& o) const;
  ZVector operator*(const ZVector& v) const;
  bool operator==(const ZMatrix& o) const;
  ZMatrix transpose() const;
  ZVector column(std::size_t j) const;
  ZVector row(std::size_t i) const;
  ZMatrix hconcat(const ZMatrix& o) const;
  ZMatrix select_columns(const std::vector<std::size_t>& idx) const;
  ZMatrix select_rows(const std::vector<std::size_t>& idx) const;
  bool is_symmetric() const;
  Integer determinant() const;  // square only; Bareiss elimination
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (zeros last).
struct SmithForm {
  ZMatrix U, D, V;
  ZMatrix U_inv, V_inv;
  std::vector<Integer> diag;  // length min(rows, cols), nonnegative
  std::size_t rank = 0;
};

SmithForm smith_decompose(const ZMatrix& A);

// Integer solutions of A x = b: a particular solution and a basis of ker A (as columns).
struct IntegerSolution {
  ZVector particular;
  ZMatrix kernel;
};
std::optional<IntegerSolution> solve_integer(const ZMatrix& A, const ZVector& b);
ZMatrix integer_kernel(const ZMatrix& A);

// Rational helpers.
using QVector = std::vector<Rational>;
Rational dot(const QVector& a, const QVector& b);
QVector to_rational(const ZVector& v);

}  // namespace ekc
