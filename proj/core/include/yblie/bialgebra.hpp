#pragma once

#include "yblie/algebra.hpp"

namespace yblie {

/// Braided bialgebra: the 6-tuple (H, mul, unit, comul, counit, lambda) with
/// lambda a YB operator of order two compatible with all four structure
/// maps, counit an algebra morphism, unit a coalgebra morphism, and the
/// braided compatibility square between mul and comul.
struct BraidedBialgebra {
  CategoryContext ctx;
  GradedObject obj;
  ExactMorphism mul;      // H (x) H -> H
  ExactMorphism unit;     // I -> H
  ExactMorphism comul;    // H -> H (x) H
  ExactMorphism counit;   // H -> I
  ExactMorphism lambda;   // H (x) H -> H (x) H

  BraidedBialgebra(CategoryContext context, GradedObject object,
                   ExactMorphism mul_map, ExactMorphism unit_map,
                   ExactMorphism comul_map, ExactMorphism counit_map,
                   ExactMorphism lambda_op);

  YBAlgebra algebra_part() const;
  YBCoalgebra coalgebra_part() const;
  /// The commutator bracket mul o (id - lambda).
  ExactMorphism commutator_bracket() const;
  /// The cocommutator (id - lambda) o comul.
  ExactMorphism cocommutator() const;
};

CheckReport check_braided_bialgebra(const BraidedBialgebra& h);

/// P(H): kernel of comul - (unit (x) H + H (x) unit) with the descended YB
/// operator and commutator bracket.
struct Primitives {
  GradedObject obj;
  ExactMorphism inclusion;  // P -> H
  YBLieAlgebra lie;
};
Primitives primitives(const BraidedBialgebra& h);

/// Q(H): cokernel of mul - (counit (x) H + H (x) counit) with the descended
/// YB operator and cocommutator.
struct Indecomposables {
  GradedObject obj;
  ExactMorphism projection;  // H -> Q
  YBLieCoalgebra lie;
};
Indecomposables indecomposables(const BraidedBialgebra& h);

}  // namespace yblie
