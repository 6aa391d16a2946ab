#pragma once

// Dense exact linear algebra over Q(zeta).

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hsk/scalar.hpp"

namespace hsk {

class Matrix {
 public:
  Matrix() = default;
  // Zero matrix over the field of p.
  Matrix(const Params& p, int rows, int cols);

  static Matrix identity(const Params& p, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Params& params() const { return params_; }

  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Matrix conjugate_transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Numerical image under zeta -> exp(2 pi i/m).
  Eigen::MatrixXcd embed() const;

 private:
  Params params_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix rref;              // reduced row echelon form
  std::vector<int> pivots;  // pivot columns, increasing; the first-independent column set
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Gauss-Jordan elimination with field inverses.
Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per non-pivot column.
std::vector<std::vector<Scalar>> kernel(const Echelon& e);
// nullopt when singular or not square.
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

}  // namespace hsk
