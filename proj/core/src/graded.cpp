#include "yblie/graded.hpp"

#include <utility>

#include "yblie/errors.hpp"

namespace yblie {

GradedObject::GradedObject(std::vector<std::uint8_t> degrees)
    : degrees_(std::move(degrees)) {
  for (auto d : degrees_)
    if (d > 1) throw ShapeError("degrees must be 0 or 1");
}

GradedObject tensor(const GradedObject& x, const GradedObject& y) {
  std::vector<std::uint8_t> degrees;
  degrees.reserve(x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      degrees.push_back(static_cast<std::uint8_t>((x.degree(i) + y.degree(j)) % 2));
  return GradedObject(std::move(degrees));
}

CategoryContext::CategoryContext(Field field, BraidingFlavor braiding,
                                 AssociatorFlavor associator,
                                 std::optional<Scalar> root)
    : field_(field), braiding_(braiding), associator_(associator),
      root_(std::move(root)) {
  if (braiding_ == BraidingFlavor::Anyonic) {
    if (!root_) root_ = Scalar::sqrt_minus_one(field_);
    if (!(root_->field() == field_))
      throw FieldMismatch("anyonic root lives in the wrong field");
    Scalar sq = *root_ * *root_;
    if (!(sq == -Scalar::one(field_)))
      throw MissingRootOfUnity("declared anyonic parameter does not square to -1");
  } else {
    root_.reset();
  }
}

const Scalar& CategoryContext::root_of_minus_one() const {
  if (!root_)
    throw MissingRootOfUnity("context carries no fourth root of unity");
  return *root_;
}

bool operator==(const CategoryContext& a, const CategoryContext& b) {
  if (!(a.field_ == b.field_) || a.braiding_ != b.braiding_ ||
      a.associator_ != b.associator_)
    return false;
  if (a.root_.has_value() != b.root_.has_value()) return false;
  return !a.root_ || *a.root_ == *b.root_;
}

ExactMorphism::ExactMorphism(GradedObject source, GradedObject target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
  if (mat_.rows() != target_.dim() || mat_.cols() != source_.dim())
    throw ShapeError("morphism matrix is " + std::to_string(mat_.rows()) + "x" +
                     std::to_string(mat_.cols()) + " but objects demand " +
                     std::to_string(target_.dim()) + "x" +
                     std::to_string(source_.dim()));
  for (std::size_t i = 0; i < mat_.rows(); ++i)
    for (std::size_t j = 0; j < mat_.cols(); ++j)
      if (!mat_.at(i, j).is_zero() && target_.degree(i) != source_.degree(j))
        throw ShapeError("morphism does not preserve the grading at entry (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
}

ExactMorphism ExactMorphism::identity(const Field& f, const GradedObject& x) {
  return ExactMorphism(x, x, Matrix::identity(f, x.dim()));
}

ExactMorphism ExactMorphism::zero(const Field& f, const GradedObject& source,
                                  const GradedObject& target) {
  return ExactMorphism(source, target, Matrix::zero(f, target.dim(), source.dim()));
}

ExactMorphism ExactMorphism::operator-() const {
  return ExactMorphism(source_, target_, -mat_);
}

ExactMorphism operator+(const ExactMorphism& a, const ExactMorphism& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_)
    throw ShapeError("morphism sum boundary mismatch");
  return ExactMorphism(a.source_, a.target_, a.mat_ + b.mat_);
}

ExactMorphism operator-(const ExactMorphism& a, const ExactMorphism& b) {
  return a + (-b);
}

ExactMorphism compose(const ExactMorphism& g, const ExactMorphism& f) {
  if (g.source_ != f.target_)
    throw ShapeError("composition boundary mismatch: source of outer (" +
                     std::to_string(g.source_.dim()) +
                     ") vs target of inner (" + std::to_string(f.target_.dim()) + ")");
  return ExactMorphism(f.source_, g.target_, g.mat_ * f.mat_);
}

ExactMorphism tensor(const ExactMorphism& f, const ExactMorphism& g) {
  return ExactMorphism(tensor(f.source(), g.source()),
                       tensor(f.target(), g.target()), kron(f.mat(), g.mat()));
}

ExactMorphism braiding(const CategoryContext& ctx, const GradedObject& x,
                       const GradedObject& y) {
  const Field& f = ctx.field();
  Matrix m(f, y.dim() * x.dim(), x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) {
      Scalar phi = Scalar::one(f);
      if (x.degree(i) == 1 && y.degree(j) == 1) {
        switch (ctx.braiding_flavor()) {
          case BraidingFlavor::Trivial: break;
          case BraidingFlavor::Super: phi = -phi; break;
          case BraidingFlavor::Anyonic: phi = ctx.root_of_minus_one(); break;
        }
      }
      m.set(j * x.dim() + i, i * y.dim() + j, phi);
    }
  return ExactMorphism(tensor(x, y), tensor(y, x), std::move(m));
}

ExactMorphism associator(const CategoryContext& ctx, const GradedObject& x,
                         const GradedObject& y, const GradedObject& z) {
  GradedObject obj = tensor(tensor(x, y), z);
  const Field& f = ctx.field();
  Matrix m(f, obj.dim(), obj.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      for (std::size_t k = 0; k < z.dim(); ++k) {
        std::size_t idx = (i * y.dim() + j) * z.dim() + k;
        bool odd = ctx.associator_flavor() == AssociatorFlavor::Sign &&
                   x.degree(i) == 1 && y.degree(j) == 1 && z.degree(k) == 1;
        m.set(idx, idx, odd ? -Scalar::one(f) : Scalar::one(f));
      }
  // (X Y) Z and X (Y Z) carry identical degree sequences under flat
  // Kronecker indexing, so source and target coincide as graded objects.
  return ExactMorphism(obj, tensor(x, tensor(y, z)), std::move(m));
}

ExactMorphism associator_inv(const CategoryContext& ctx, const GradedObject& x,
                             const GradedObject& y, const GradedObject& z) {
  ExactMorphism a = associator(ctx, x, y, z);
  // Diagonal +-1, hence self-inverse with boundaries flipped.
  return ExactMorphism(a.target(), a.source(), a.mat());
}

}  // namespace yblie
