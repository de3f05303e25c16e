#include "yblie/linalg.hpp"

#include <algorithm>

#include "yblie/errors.hpp"

namespace yblie {

Echelon rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    // Swap pivot row into place.
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Scalar tmp = m.at(row, j);
        m.set(row, j, m.at(pr, j));
        m.set(pr, j, tmp);
      }
    }
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      m.set(row, j, m.at(row, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) - factor * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel_basis(const Matrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix basis(a.field(), a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.set(f, k, Scalar::one(a.field()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& c = e.reduced.at(r, f);
      if (!c.is_zero()) basis.set(e.pivots[r], k, -c);
    }
  }
  return basis;
}

Matrix cokernel_projection(const Matrix& a) {
  // Column echelon via rref of the transpose; pivot columns of that echelon
  // are the pivot coordinates of the target.
  Echelon e = rref(a.transpose());
  std::vector<bool> is_pivot(a.rows(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!is_pivot[i]) free_rows.push_back(i);

  Matrix q(a.field(), free_rows.size(), a.rows());
  for (std::size_t k = 0; k < free_rows.size(); ++k) {
    std::size_t f = free_rows[k];
    q.set(k, f, Scalar::one(a.field()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Scalar& c = e.reduced.at(r, f);
      if (!c.is_zero()) q.set(k, e.pivots[r], -c);
    }
    // Normalize the leading coefficient to 1.
    for (std::size_t j = 0; j < a.rows(); ++j) {
      if (q.at(k, j).is_zero()) continue;
      Scalar inv = q.at(k, j).inverse();
      if (!inv.is_one())
        for (std::size_t l = j; l < a.rows(); ++l)
          q.set(k, l, q.at(k, l) * inv);
      break;
    }
  }
  return q;
}

Matrix solve_through_mono(const Matrix& m, const Matrix& f) {
  if (!(m.field() == f.field())) throw FieldMismatch("solve across fields");
  if (m.rows() != f.rows())
    throw ShapeError("solve_through_mono: row counts differ");
  // Eliminate on [m | f].
  Matrix aug(m.field(), m.rows(), m.cols() + f.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    for (std::size_t j = 0; j < f.cols(); ++j) aug.set(i, m.cols() + j, f.at(i, j));
  }
  Echelon e = rref(aug);
  std::size_t r = 0;
  for (std::size_t p : e.pivots)
    if (p < m.cols()) ++r;
  if (r != m.cols())
    throw ShapeError("solve_through_mono: map is not injective (rank " +
                     std::to_string(r) + " < " + std::to_string(m.cols()) + ")");
  // Any pivot in the f-block or any nonzero row past rank(m) signals that f
  // leaves the image of m.
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!e.reduced.at(i, m.cols() + j).is_zero())
        throw NoFactorization(
            "solve_through_mono: column " + std::to_string(j) +
            " of the right-hand side is outside the image of the mono");
  Matrix g(m.field(), m.cols(), f.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      g.set(e.pivots[i], j, e.reduced.at(i, m.cols() + j));
  return g;
}

Matrix solve_through_epi(const Matrix& e, const Matrix& f) {
  if (!(e.field() == f.field())) throw FieldMismatch("solve across fields");
  if (e.cols() != f.cols())
    throw ShapeError("solve_through_epi: column counts differ");
  try {
    return solve_through_mono(e.transpose(), f.transpose()).transpose();
  } catch (const ShapeError&) {
    throw ShapeError("solve_through_epi: map is not surjective");
  } catch (const NoFactorization&) {
    throw NoCofactorization(
        "solve_through_epi: right-hand side does not vanish on the kernel");
  }
}

Matrix invert(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("invert: matrix not square");
  try {
    return solve_through_mono(a, Matrix::identity(a.field(), a.rows()));
  } catch (const ShapeError&) {
    throw Singular("invert: matrix is singular");
  } catch (const NoFactorization&) {
    throw Singular("invert: matrix is singular");
  }
}

}  // namespace yblie
