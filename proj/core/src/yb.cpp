#include "yblie/yb.hpp"

#include <utility>

#include "yblie/errors.hpp"

namespace yblie {

YBOperator::YBOperator(CategoryContext context, GradedObject object,
                       ExactMorphism braid)
    : ctx(std::move(context)), obj(std::move(object)), c(std::move(braid)) {
  GradedObject sq = tensor(obj, obj);
  if (c.source() != sq || c.target() != sq)
    throw ShapeError("YB operator must be an endomorphism of L tensor L");
  if (!(c.mat().field() == ctx.field()))
    throw FieldMismatch("YB operator field differs from context field");
}

YBOperator braiding_operator(const CategoryContext& ctx, const GradedObject& x) {
  ExactMorphism c = braiding(ctx, x, x);
  // c_{X,X} is an endomorphism once source and target are identified; both
  // are X tensor X with the same degree sequence.
  return YBOperator(ctx, x, std::move(c));
}

ThreeStrand derive_t_w(const YBOperator& op) {
  const Field& f = op.ctx.field();
  const GradedObject& l = op.obj;
  ExactMorphism id_l = ExactMorphism::identity(f, l);
  ExactMorphism a = associator(op.ctx, l, l, l);
  ExactMorphism a_inv = associator_inv(op.ctx, l, l, l);
  ExactMorphism c_l = tensor(op.c, id_l);
  ExactMorphism l_c = tensor(id_l, op.c);

  ExactMorphism t = compose(a, compose(c_l, compose(a_inv, l_c)));
  ExactMorphism w = compose(l_c, compose(a, compose(c_l, a_inv)));
  ExactMorphism id3 = ExactMorphism::identity(f, tensor(l, tensor(l, l)));
  if (compose(t, w) != id3 || compose(w, t) != id3)
    throw InternalCheckFailure("t and w are not mutually inverse");
  return {std::move(t), std::move(w)};
}

CheckReport check_yb_operator(const YBOperator& op) {
  CheckReport report;
  const Field& f = op.ctx.field();
  const GradedObject& l = op.obj;
  ExactMorphism id_l = ExactMorphism::identity(f, l);
  ExactMorphism id2 = ExactMorphism::identity(f, tensor(l, l));
  report.require_equal("order_two", compose(op.c, op.c), id2);

  ExactMorphism a = associator(op.ctx, l, l, l);
  ExactMorphism a_inv = associator_inv(op.ctx, l, l, l);
  ExactMorphism c_l = tensor(op.c, id_l);
  ExactMorphism l_c = tensor(id_l, op.c);
  ExactMorphism lhs =
      compose(a, compose(c_l, compose(a_inv, compose(l_c, compose(a, c_l)))));
  ExactMorphism rhs =
      compose(l_c, compose(a, compose(c_l, compose(a_inv, compose(l_c, a)))));
  report.require_equal("yang_baxter", lhs, rhs);
  return report;
}

}  // namespace yblie
