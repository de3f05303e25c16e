#pragma once

#include "yblie/graded.hpp"

namespace yblie {

// Internal homs realized as matrix spaces.  H(X,Z) has basis indexed by
// pairs (z,x) in z-major order: index (z,x) = z*dim(X)+x, degree
// deg(z)+deg(x) mod 2.  The element E_{(z,x)} is the map sending basis
// vector x to z and the rest of the basis to 0.  The right hom H'(X,Z)
// (right adjoint of X tensor -) uses the same layout.

GradedObject hom_object(const GradedObject& x, const GradedObject& z);

/// Counit eps^X_Z : H(X,Z) tensor X -> Z, (E_{(z,x)}, x') |-> delta_{x,x'} z.
ExactMorphism hom_counit(const Field& f, const GradedObject& x,
                         const GradedObject& z);

/// Unit eta^X_Y : Y -> H(X, Y tensor X), y |-> sum_x E_{((y,x),x)}.
ExactMorphism hom_unit(const Field& f, const GradedObject& x,
                       const GradedObject& y);

/// Right-hom counit eps'^X_Z : X tensor H'(X,Z) -> Z.
ExactMorphism hom_counit_right(const Field& f, const GradedObject& x,
                               const GradedObject& z);

/// Right-hom unit eta'^X_Y : Y -> H'(X, X tensor Y).
ExactMorphism hom_unit_right(const Field& f, const GradedObject& x,
                             const GradedObject& y);

/// Currying pi^X_{Y,Z}: a morphism f : Y tensor X -> Z reindexes to
/// curry(f) : Y -> H(X,Z) with curry(f)[(z,x)][y] = f[z][(y,x)].
ExactMorphism curry(const ExactMorphism& f, const GradedObject& y,
                    const GradedObject& x);
ExactMorphism uncurry(const ExactMorphism& g, const GradedObject& x,
                      const GradedObject& z);

/// Right-hom currying: f : X tensor Y -> Z to Y -> H'(X,Z).
ExactMorphism curry_right(const ExactMorphism& f, const GradedObject& x,
                          const GradedObject& y);

/// Covariant functoriality H(X,h) : H(X,Z) -> H(X,Z') for h : Z -> Z'
/// (post-composition; kron(h, id_X) in the z-major layout).
ExactMorphism hom_map_post(const ExactMorphism& h, const GradedObject& x);

/// Contravariant functoriality H(g,Z) : H(X',Z) -> H(X,Z) for g : X -> X'
/// (pre-composition).
ExactMorphism hom_map_pre(const ExactMorphism& g, const GradedObject& z);

/// Right-hom covariant functoriality H'(X,h).
ExactMorphism hom_map_post_right(const ExactMorphism& h, const GradedObject& x);

/// The lifted adjunction iso Pi^X_{Y,Z} : H(Y tensor X, Z) -> H(Y, H(X,Z))
/// as a pure index permutation: E_{(z,(y,x))} |-> E_{((z,x),y)}.
ExactMorphism pi_internal(const Field& f, const GradedObject& x,
                          const GradedObject& y, const GradedObject& z);
ExactMorphism pi_internal_inv(const Field& f, const GradedObject& x,
                              const GradedObject& y, const GradedObject& z);

/// Pi computed from eta and eps alone (the strict-setting composite it must
/// agree with); used as a coherence check against pi_internal.
ExactMorphism pi_from_unit_counit(const Field& f, const GradedObject& x,
                                  const GradedObject& y, const GradedObject& z);
ExactMorphism pi_inv_from_unit_counit(const Field& f, const GradedObject& x,
                                      const GradedObject& y, const GradedObject& z);

}  // namespace yblie
