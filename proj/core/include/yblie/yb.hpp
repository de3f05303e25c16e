#pragma once

#include "yblie/report.hpp"

namespace yblie {

/// A candidate Yang-Baxter operator of order two: an endomorphism c of
/// L tensor L.  Whether c actually satisfies c o c = id and the braid
/// relation is the business of check_yb_operator; the record itself only
/// enforces shape.
struct YBOperator {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism c;

  YBOperator(CategoryContext context, GradedObject object, ExactMorphism braid);
};

/// The operator induced by the context braiding on X.
YBOperator braiding_operator(const CategoryContext& ctx, const GradedObject& x);

/// The two 3-strand composites entering the Jacobi identity,
///   t = a o (c (x) L) o a^-1 o (L (x) c),
///   w = (L (x) c) o a o (c (x) L) o a^-1,
/// both endomorphisms of L (x) (L (x) L).  Construction asserts that they
/// are mutually inverse.
struct ThreeStrand {
  ExactMorphism t;
  ExactMorphism w;
};
ThreeStrand derive_t_w(const YBOperator& op);

/// Axioms: "order_two" (c o c = id) and "yang_baxter" (the braid relation
/// with the context associator inserted on both sides).
CheckReport check_yb_operator(const YBOperator& op);

}  // namespace yblie
