#pragma once

#include <vector>

#include "yblie/matrix.hpp"

namespace yblie {

struct Echelon {
  Matrix reduced;                 // reduced row-echelon form, leading 1s
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Deterministic RREF: pivots are chosen as the first nonzero entry in
/// column order, rows normalized to leading coefficient 1.
Echelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Columns form the canonical basis of {v : Av = 0}: one column per free
/// column of rref(A), unit coefficient at the free coordinate.
Matrix kernel_basis(const Matrix& a);

/// Canonical projection q with q*a = 0, rows(q) = rows(a) - rank(a), built on
/// the coordinates complementary to the pivot rows of the column echelon of
/// a.  Rows are normalized to leading coefficient 1.
Matrix cokernel_projection(const Matrix& a);

/// Unique g with m*g = f for injective m.  Throws ShapeError when m is not
/// full column rank and NoFactorization when some column of f is outside the
/// image of m.
Matrix solve_through_mono(const Matrix& m, const Matrix& f);

/// Unique g with g*e = f for surjective e.  Throws ShapeError when e is not
/// full row rank and NoCofactorization when f does not vanish on ker(e).
Matrix solve_through_epi(const Matrix& e, const Matrix& f);

/// Exact inverse; throws Singular.
Matrix invert(const Matrix& a);

}  // namespace yblie
