#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yblie/matrix.hpp"

namespace yblie {

/// A finite-dimensional Z2-graded object: one degree bit per basis index.
/// Ungraded objects use all-zero degrees.
class GradedObject {
 public:
  GradedObject() = default;
  explicit GradedObject(std::vector<std::uint8_t> degrees);
  static GradedObject even(std::size_t dim) {
    return GradedObject(std::vector<std::uint8_t>(dim, 0));
  }
  static GradedObject unit() { return even(1); }

  std::size_t dim() const { return degrees_.size(); }
  std::uint8_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::uint8_t>& degrees() const { return degrees_; }

  friend bool operator==(const GradedObject& a, const GradedObject& b) = default;

 private:
  std::vector<std::uint8_t> degrees_;
};

/// Tensor product under the Kronecker index convention (i,j) -> i*dim(Y)+j;
/// degree of (i,j) is deg_X(i) + deg_Y(j) mod 2.
GradedObject tensor(const GradedObject& x, const GradedObject& y);

enum class BraidingFlavor { Trivial, Super, Anyonic };
enum class AssociatorFlavor { Trivial, Sign };

/// The ambient monoidal category: a field, a braiding flavor and an
/// associator flavor.  The anyonic flavor carries the chosen fourth root of
/// unity i (validated: i^2 = -1).
class CategoryContext {
 public:
  CategoryContext(Field field, BraidingFlavor braiding,
                  AssociatorFlavor associator,
                  std::optional<Scalar> root = std::nullopt);

  static CategoryContext trivial(Field f) {
    return CategoryContext(f, BraidingFlavor::Trivial, AssociatorFlavor::Trivial);
  }
  static CategoryContext super(Field f) {
    return CategoryContext(f, BraidingFlavor::Super, AssociatorFlavor::Trivial);
  }

  const Field& field() const { return field_; }
  BraidingFlavor braiding_flavor() const { return braiding_; }
  AssociatorFlavor associator_flavor() const { return associator_; }
  const Scalar& root_of_minus_one() const;
  /// Trivial and super braidings are honest symmetries; anyonic is not.
  bool symmetric() const { return braiding_ != BraidingFlavor::Anyonic; }

  friend bool operator==(const CategoryContext& a, const CategoryContext& b);
  friend bool operator!=(const CategoryContext& a, const CategoryContext& b) {
    return !(a == b);
  }

 private:
  Field field_;
  BraidingFlavor braiding_;
  AssociatorFlavor associator_;
  std::optional<Scalar> root_;
};

/// Degree-preserving linear map between graded objects, stored as an
/// explicit matrix (rows = dim target, cols = dim source).  Construction
/// validates shape and grading; composition is matrix product.
class ExactMorphism {
 public:
  ExactMorphism(GradedObject source, GradedObject target, Matrix mat);

  static ExactMorphism identity(const Field& f, const GradedObject& x);
  static ExactMorphism zero(const Field& f, const GradedObject& source,
                            const GradedObject& target);

  const GradedObject& source() const { return source_; }
  const GradedObject& target() const { return target_; }
  const Matrix& mat() const { return mat_; }

  ExactMorphism operator-() const;
  friend ExactMorphism operator+(const ExactMorphism& a, const ExactMorphism& b);
  friend ExactMorphism operator-(const ExactMorphism& a, const ExactMorphism& b);
  /// Composition g.then_after(f) is not provided; use compose(g, f) = g o f.
  friend ExactMorphism compose(const ExactMorphism& g, const ExactMorphism& f);
  friend bool operator==(const ExactMorphism& a, const ExactMorphism& b) = default;

 private:
  GradedObject source_, target_;
  Matrix mat_;
};

/// Tensor product of morphisms: Kronecker product on matrices, tensor of
/// objects on the boundary.
ExactMorphism tensor(const ExactMorphism& f, const ExactMorphism& g);

/// Braiding c_{X,Y}: X tensor Y -> Y tensor X at the context flavor:
/// (x,y) |-> phi(dx,dy) (y,x) with phi = 1, (-1)^{dx dy} or i^{dx dy}.
ExactMorphism braiding(const CategoryContext& ctx, const GradedObject& x,
                       const GradedObject& y);

/// Associator a_{X,Y,Z}: (X Y) Z -> X (Y Z).  Identity for the trivial
/// flavor, diagonal (-1)^{dx dy dz} for the sign flavor.
ExactMorphism associator(const CategoryContext& ctx, const GradedObject& x,
                         const GradedObject& y, const GradedObject& z);
ExactMorphism associator_inv(const CategoryContext& ctx, const GradedObject& x,
                             const GradedObject& y, const GradedObject& z);

}  // namespace yblie
