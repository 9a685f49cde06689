#include "ekc/matrix.hpp"

#include <sstream>
#include <utility>

#include "ekc/error.hpp"

namespace ekc {

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVector>& cols, std::size_t rows) {
  ZMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
  require(cols_ == o.rows_, "matrix dimension mismatch");
  ZMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

ZVector ZMatrix::operator*(const ZVector& v) const {
  require(cols_ == v.size(), "matrix-vector dimension mismatch");
  ZVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  return r;
}

bool ZMatrix::operator==(const ZMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ZVector ZMatrix::column(std::size_t j) const {
  ZVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ZVector ZMatrix::row(std::size_t i) const {
  return ZVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

ZMatrix ZMatrix::hconcat(const ZMatrix& o) const {
  require(rows_ == o.rows_, "hconcat row mismatch");
  ZMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

ZMatrix ZMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  ZMatrix r(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

ZMatrix ZMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  ZMatrix r(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
  return r;
}

bool ZMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer ZMatrix::determinant() const {
  require(rows_ == cols_, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  ZMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string ZMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Elementary operations on the working matrix, mirrored into U, U^-1, V, V^-1.
struct SmithWork {
  ZMatrix A, U, Ui, V, Vi;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Ui.rows(); ++r) std::swap(Ui(r, i), Ui(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vi.cols(); ++c) std::swap(Vi(i, c), Vi(j, c));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) += c * A(j, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) += c * U(j, k);
    for (std::size_t r = 0; r < Ui.rows(); ++r) Ui(r, j) -= c * Ui(r, i);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) += c * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += c * V(r, j);
    for (std::size_t k = 0; k < Vi.cols(); ++k) Vi(j, k) -= c * Vi(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
    for (std::size_t r = 0; r < Ui.rows(); ++r) Ui(r, i) = -Ui(r, i);
  }
};

}  // namespace

SmithForm smith_decompose(const ZMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithWork w{A, ZMatrix::identity(m), ZMatrix::identity(m), ZMatrix::identity(n), ZMatrix::identity(n)};
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block (first in row-major order).
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& v = w.A(i, j);
          if (v != 0 && (pi == m || abs(v) < best)) {
            best = abs(v);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.A(i, t) == 0) continue;
        Integer q = floor_div(w.A(i, t), w.A(t, t));
        w.add_row(i, t, -q);
        if (w.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.A(t, j) == 0) continue;
        Integer q = floor_div(w.A(t, j), w.A(t, t));
        w.add_col(j, t, -q);
        if (w.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.A(i, j) % w.A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.add_row(t, bad, Integer(1));
    }
    if (w.A(t, t) < 0) w.negate_row(t);
  }
  SmithForm s;
  s.diag.resize(lim);
  for (std::size_t i = 0; i < lim; ++i) {
    s.diag[i] = w.A(i, i);
    if (s.diag[i] != 0) ++s.rank;
  }
  s.U = std::move(w.U);
  s.U_inv = std::move(w.Ui);
  s.V = std::move(w.V);
  s.V_inv = std::move(w.Vi);
  s.D = std::move(w.A);
  return s;
}

std::optional<IntegerSolution> solve_integer(const ZMatrix& A, const ZVector& b) {
  require(b.size() == A.rows(), "solve_integer: rhs length mismatch");
  SmithForm s = smith_decompose(A);
  ZVector c = s.U * b;
  ZVector z(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.diag[i] != 0) return std::nullopt;
      z[i] = c[i] / s.diag[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = s.V * z;
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < A.cols(); ++j) idx.push_back(j);
  sol.kernel = s.V.select_columns(idx);
  return sol;
}

ZMatrix integer_kernel(const ZMatrix& A) {
  auto sol = solve_integer(A, ZVector(A.rows()));
  ensure(sol.has_value(), "homogeneous system unsolvable");
  return sol->kernel;
}

Rational dot(const QVector& a, const QVector& b) {
  require(a.size() == b.size(), "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector to_rational(const ZVector& v) {
  QVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace ekc
