#include "hsk/linalg.hpp"

#include "hsk/error.hpp"

namespace hsk {

Matrix::Matrix(const Params& p, int rows, int cols)
    : params_(p),
      rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_of(p))) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

Matrix Matrix::identity(const Params& p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = integer(p, 1);
  return m;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix out(params_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  }
  return out;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix out(params_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conjugate();
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix-vector size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_of(params_)));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  Matrix out(a.params_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Eigen::MatrixXcd Matrix::embed() const {
  Eigen::MatrixXcd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = at(i, j).embed();
  }
  return out;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  const int rows = m.rows();
  const int cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Smallest nonzero entry keeps coefficient growth down.
    int best = -1;
    std::size_t best_size = 0;
    for (int i = r; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const std::size_t s = m.at(i, c).bit_size();
      if (best < 0 || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best < 0) continue;
    if (best != r) {
      for (int j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(best, j));
    }
    const Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols; ++j) {
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar factor = m.at(i, c);
      for (int j = c; j < cols; ++j) {
        if (!m.at(r, j).is_zero()) m.at(i, j) -= factor * m.at(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

int rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Scalar>> kernel(const Echelon& e) {
  const Matrix& m = e.rref;
  const Scalar zero = Scalar::zero(field_of(m.params()));
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> x(m.cols(), zero);
    x[j] = integer(m.params(), 1);
    for (int i = 0; i < e.rank(); ++i) x[e.pivots[i]] = -m.at(i, j);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(m.params(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = integer(m.params(), 1);
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(m.params(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = e.rref.at(i, n + j);
  }
  return out;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  Scalar det = integer(m.params(), 1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Scalar::zero(field_of(m.params()));
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
      det = -det;
    }
    det *= m.at(c, c);
    const Scalar inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const Scalar factor = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

}  // namespace hsk
