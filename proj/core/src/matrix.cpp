#include "yblie/matrix.hpp"

#include <sstream>
#include <utility>

#include "yblie/errors.hpp"

namespace yblie {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f) {
  entries_.assign(rows * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  if (i >= rows_ || j >= cols_)
    throw ShapeError("matrix index out of range");
  if (!(v.field() == field_))
    throw FieldMismatch("entry field does not match matrix field");
  entries_[i * cols_ + j] = std::move(v);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out.set(i, j, -at(i, j));
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix addition across fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix addition shape mismatch");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_)
    throw ShapeError("matrix product shape mismatch: " +
                     std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.entries_[i * out.cols_ + j] += aik * bkj;
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw FieldMismatch("scaling across fields");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = entries_[k] * s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << field_.name() << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("kron across fields: " + a.field().name() + " vs " +
                        b.field().name());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          out.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
        }
    }
  return out;
}

}  // namespace yblie
