#pragma once

#include "yblie/bialgebra.hpp"

namespace yblie {

// The whole duality layer works in strict symmetric-or-anyonic-free settings:
// every operation below demands a trivial associator (the source material for
// these constructions is stated for strict closed monoidal categories), and
// the operations marked as such additionally demand a symmetric braiding.

/// Michaelis pair: YB-Lie algebra L, YB-Lie coalgebra C and a pairing
/// ev : L (x) C -> I intertwining bracket with cobracket and the two YB
/// operators.
struct MichaelisPair {
  YBLieAlgebra lie;        // L
  YBLieCoalgebra colie;    // C
  ExactMorphism ev;        // L (x) C -> I
  /// Rigidity datum attached by strengthen(); carried through serialization.
  std::optional<ExactMorphism> coev;

  MichaelisPair(YBLieAlgebra l, YBLieCoalgebra c, ExactMorphism pairing);
};

/// Rigidity witness: coev : I -> C (x) L with the two snake identities, plus
/// the invertible Gram matrix (row l-index, column c-index) it came from.
struct StrongPairWitness {
  ExactMorphism coev;
  Matrix gram;
};

/// Entries: constituent checks under "algebra."/"coalgebra." plus "mich1"
/// (bracket/cobracket) and "mich2" (YB operators).
CheckReport check_michaelis_pair(const MichaelisPair& p);

/// Builds the coalgebra structure on C from a rigidity datum (ev, coev) for
/// the YB-Lie algebra L, exactly as in the elementary-pair construction:
///   gamma   = (C C ev2) (C C lambda C C) (coev2 (x) C C),
///   Upsilon = (C C ev) (C C bracket C) (coev2 (x) C),
/// with ev2 = ev o (L ev C) and coev2 = (C coev L) o coev.
/// Throws SnakeFailure when the snake identities fail.
MichaelisPair elementary_from_adjoint(const YBLieAlgebra& l,
                                      const GradedObject& c_obj,
                                      const ExactMorphism& ev,
                                      const ExactMorphism& coev);

/// Convenience wrapper: C = dual object with the dual basis (identity Gram
/// matrix); asserts the closed forms gamma = lambda-transpose and
/// Upsilon = bracket-transpose under the canonical indexing.
MichaelisPair dual_pair(const YBLieAlgebra& l);

/// Assembles the Gram matrix of ev; if square and invertible, builds coev
/// from the inverse and asserts the snakes.  Throws NotStrong otherwise.
StrongPairWitness strengthen(const MichaelisPair& p);

/// zeta_X = H(C, X (x) ev) o eta^C_{X (x) L} : X (x) L -> H(C,X).
ExactMorphism zeta_at(const MichaelisPair& p, const GradedObject& x);
/// theta_X = H'(L, ev (x) X) o eta'^L_{C (x) X} : C (x) X -> H'(L,X).
ExactMorphism theta_at(const MichaelisPair& p, const GradedObject& x);
/// xi_X = (eps^C_X (x) L) o (H(C,X) (x) coev), the inverse of zeta_X for
/// strong pairs.
ExactMorphism xi_at(const MichaelisPair& p, const StrongPairWitness& w,
                    const GradedObject& x);

/// beta: recovers the pairing from the monad morphism at the unit object,
/// ev = eps^C_I o (zeta_I (x) C).
ExactMorphism ev_from_zeta(const YBLieAlgebra& l, const YBLieCoalgebra& c,
                           const ExactMorphism& zeta_i);
/// Mirrored comonad-side recovery, ev = eps'^L_I o (L (x) theta_I).
ExactMorphism ev_from_theta(const YBLieAlgebra& l, const YBLieCoalgebra& c,
                            const ExactMorphism& theta_i);

/// The Lie-monad structure of H(C,-) evaluated at M:
///   gamma_M   = Pi o H(gamma_C, M) o Pi^-1     on H(C,H(C,M)),
///   upsilon_M = H(Upsilon_C, M) o Pi^-1 : H(C,H(C,M)) -> H(C,M).
/// Construction asserts the Lie-monad axioms at M (antisymmetry, Jacobi and
/// the compatibility square, with the t/w composites of the evaluated
/// natural transformations).
struct HomMonadAt {
  ExactMorphism gamma;
  ExactMorphism upsilon;
};
HomMonadAt hom_monad_structure(const YBLieCoalgebra& c, const GradedObject& m);

/// The two Lie-monad-morphism identities for zeta at the object X:
/// "upsilon_intertwine" and "gamma_intertwine".
CheckReport check_zeta_monad_morphism(const MichaelisPair& p, const GradedObject& x);

/// F: left C-Lie comodules to left L-Lie modules, action
/// (ev (x) X) o (L (x) coaction).
LieModule comodule_to_module(const MichaelisPair& p, const LieComodule& m);
/// G (strong pairs): left L-Lie modules to left C-Lie comodules, coaction
/// (C (x) action) o (coev (x) X).
LieComodule module_to_comodule(const MichaelisPair& p, const StrongPairWitness& w,
                               const LieModule& m);

/// Takeuchi pair: two braided bialgebras and a pairing H (x) K -> I
/// adjoining unit to counit and multiplication to comultiplication.  The
/// nested pairing composites consume the inner (H,K) pair.
struct TakeuchiPair {
  BraidedBialgebra h;
  BraidedBialgebra k;
  ExactMorphism pairing;

  TakeuchiPair(BraidedBialgebra first, BraidedBialgebra second,
               ExactMorphism diamond);
};

/// Entries "a".."e" for the five pairing conditions plus "commutator_identity"
/// (the derived pairing of the commutator bracket against the cocommutator),
/// after constituent checks under "h."/"k.".
CheckReport check_takeuchi(const TakeuchiPair& t);

struct TakeuchiDescent {
  MichaelisPair pair;
  Primitives prim;        // of H
  Indecomposables indec;  // of K
};
/// ev on P(H) (x) Q(K) solved through P (x) coeq from pairing o (eq (x) K).
TakeuchiDescent michaelis_from_takeuchi(const TakeuchiPair& t);

/// Plain (coassociative, counital) left comodule over the bialgebra K.
struct BialgebraComodule {
  GradedObject carrier;
  ExactMorphism coaction;  // M -> K (x) M
};

/// The module-category square: restricting the pairing action along eq
/// equals acting through Q(K) with the descended ev.  Entries "coassoc",
/// "counit" (preconditions reported, not thrown), "square" and "action_law"
/// for the resulting P(H)-Lie module.
CheckReport check_square(const TakeuchiPair& t, const BialgebraComodule& m);

}  // namespace yblie
