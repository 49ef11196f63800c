#pragma once

// Exact linear algebra over a Field: incremental Gauss-Jordan elimination on
// sparse rows, and small dense matrices used by representations.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using SparseVector = std::map<std::size_t, Scalar>;
using DenseVector = std::vector<Scalar>;

// Accumulates linear equations sum_j a_j x_j = b and keeps them in reduced
// row echelon form. Kernel bases are returned in reduced echelon form, so the
// same solution space always yields the same basis.
class LinearSystem {
 public:
  LinearSystem(Field field, std::size_t unknowns);

  void add_equation(const SparseVector& coeffs, const Scalar& rhs);
  void add_homogeneous(const SparseVector& coeffs) { add_equation(coeffs, field_.zero()); }

  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  // Solution with every free unknown set to zero.
  std::optional<DenseVector> particular_solution() const;
  // Basis of the solution space of the homogeneous system.
  std::vector<DenseVector> kernel_basis() const;
  // Reduced echelon rows of the coefficient matrix.
  std::vector<DenseVector> row_basis() const;

 private:
  struct Row {
    SparseVector coeffs;
    Scalar rhs;
  };

  Field field_;
  std::size_t n_;
  std::map<std::size_t, Row> pivots_;
  bool consistent_ = true;
};

// Reduced echelon basis of the span of the given vectors (zero rows dropped).
std::vector<DenseVector> reduced_basis(Field field, std::size_t dim,
                                       const std::vector<DenseVector>& spanning);

bool is_zero_vector(const DenseVector& v);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  // nullopt when singular.
  std::optional<Matrix> inverse() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace qhopf
