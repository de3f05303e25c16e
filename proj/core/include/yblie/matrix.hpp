#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yblie/scalar.hpp"

namespace yblie {

/// Dense row-major matrix over one exact field.
///
/// The field travels with the matrix so that 0xN and Nx0 shapes stay
/// well-typed; they occur naturally as kernels of injective maps and
/// cokernels of surjections.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Scalar v);

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Multi-line diagnostic rendering.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> entries_;
};

/// Kronecker product: entry ((i,k),(j,l)) = A[i][j] * B[k][l] with the index
/// convention (i,k) -> i*rows(B)+k.  This is the normative tensor-product
/// index order used by every structure in the library.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace yblie
