#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catgal/equivalence.hpp"
#include "catgal/limits.hpp"

namespace catgal {

// L ⊣ R : A ⇄ P with unit η: Id ⇒ RL and counit ε: LR ⇒ Id.
class Adjunction {
 public:
  const Functor& left() const { return left_; }
  const Functor& right() const { return right_; }
  const NatTrans& unit() const { return unit_; }
  const NatTrans& counit() const { return counit_; }
  const CategoryPtr& domain() const { return left_.src(); }    // A
  const CategoryPtr& codomain() const { return left_.tgt(); }  // P

 private:
  friend Adjunction validate_adjunction(Functor, Functor, NatTrans, NatTrans);
  Adjunction(Functor l, Functor r, NatTrans u, NatTrans c)
      : left_(std::move(l)), right_(std::move(r)), unit_(std::move(u)), counit_(std::move(c)) {}

  Functor left_;
  Functor right_;
  NatTrans unit_;
  NatTrans counit_;
};

// Checks typing, then both triangle identities at every object. Throws
// Error(TriangleIdentityFailure) with witnesses {side, object}, side being
// "left" (ε_L ∘ Lη = id) or "right" (Rε ∘ η_R = id).
Adjunction validate_adjunction(Functor left, Functor right, NatTrans unit, NatTrans counit);

Adjunction identity_adjunction(const CategoryPtr& c);

// m: L a → x in P  ↦  R m ∘ η_a : a → R x in A.
Mor transpose_to_domain(const Adjunction& adj, Obj a, Mor m);
// m: a → R x in A  ↦  ε_x ∘ L m : L a → x in P.
Mor transpose_to_codomain(const Adjunction& adj, Mor m, Obj x);

// (L2 ⊣ R2) ∘ (L1 ⊣ R1): unit R1η2L1 ∘ η1, counit ε2 ∘ L2ε1R2.
Adjunction compose_adjunctions(const Adjunction& second, const Adjunction& first);

// Σ_f ⊣ f* : C/X ⇄ C/Y for f: X → Y.
struct PullbackAdjunction {
  Mor f;
  Slice over_domain;    // C/X
  Slice over_codomain;  // C/Y
  Adjunction adjunction;
};

// Throws MissingPullback naming the first cospan (f, h) without a pullback.
PullbackAdjunction pullback_adjunction(const CategoryPtr& c, Mor f);

enum class AnchorSide { Domain, Codomain };

struct SlicedAdjunction {
  AnchorSide side;
  Obj anchor;        // W in A (Domain) or X in P (Codomain)
  Slice domain;      // A/W or A/RX
  Slice codomain;    // P/LW or P/X
  Adjunction adjunction;
};

// L_W ⊣ R_W : A/W ⇄ P/LW. R_W pulls R h back along η_W; the unit is η^W.
SlicedAdjunction slice_at_domain(const Adjunction& adj, Obj w);
// L_X ⊣ R_X : A/RX ⇄ P/X. L_X is the adjoint transpose, R_X(Z_h) = RZ_{Rh}.
SlicedAdjunction slice_at_codomain(const Adjunction& adj, Obj x);

// For adjunctions L ⊣ R1 and L ⊣ R2 sharing the same left adjoint, the
// canonical comparison θ: R1 ⇒ R2, θ_Z = R2(ε1_Z) ∘ η2_{R1 Z}. It is always
// natural; it is invertible when both really are adjunctions.
NatTrans right_adjoint_comparison(const Adjunction& first, const Adjunction& second);

// Outcome of comparing two adjunctions whose left adjoints should agree.
struct AdjointAgreement {
  bool left_strict = false;            // left adjoints equal as tables
  std::optional<NatTrans> right_iso;   // exhibited invertible θ
  std::string detail;
  bool ok() const { return left_strict && right_iso.has_value(); }
};

AdjointAgreement compare_adjunctions(const Adjunction& a, const Adjunction& b);

// L_W ⊣ R_W against (L_{LW} ⊣ R_{LW}) ∘ (Σ_{η_W} ⊣ η_W*).
AdjointAgreement composition_fact_domain(const Adjunction& adj, Obj w);
// L_X ⊣ R_X against (Σ_{ε_X} ⊣ ε_X*) ∘ (L_{RX} ⊣ R_{RX}).
AdjointAgreement composition_fact_codomain(const Adjunction& adj, Obj x);
// For g: W → V in A: (L_V ⊣ R_V) ∘ (Σ_g ⊣ g*) against (Σ_{Lg} ⊣ (Lg)*) ∘ (L_W ⊣ R_W).
AdjointAgreement commuting_square(const Adjunction& adj, Mor g);

// C/X ≅ (C/Y)/X_f for f: X → Y, both directions.
struct Reassociation {
  Slice over_x;
  Slice over_y;
  Slice iterated;  // (C/Y)/X_f
  Functor forward;
  Functor backward;
};

Reassociation slice_reassociation(const CategoryPtr& c, Mor f);

// For g: Z → X, n: Y → Z and k: Z → Y with k∘n = id_Y, n is a morphism
// Y_{gn} → Z_g of C/X and equalizes
//   a = (Id_X × n)∘(g, k),  b = (g, Id_Z) : Z_g → Z_X.
struct SplitMonoFork {
  Slice slice;   // C/X
  Mor n;         // as a slice morphism
  Mor a;
  Mor b;
  bool is_equalizer = false;
  std::optional<Obj> chosen_apex;  // apex of the canonical equalizer of (a, b)
};

// Throws NotASplitting when k∘n ≠ id, MissingProduct for X×Y or X×Z.
SplitMonoFork split_mono_equalizer(const CategoryPtr& c, Mor g, Mor n, Mor k);

struct LemmaObjectResult {
  std::string object;         // V_f in A/W
  bool unit_iso = false;      // η^W_{V_f}
  bool product_unit_iso = false;  // η^W_{W*V}
  bool biconditional = false;
  std::optional<std::string> splitting;  // name of l∘(Id_W × RL(f, Id_V)) in A
  bool splitting_verified = false;
};

struct LemmaReport {
  std::string anchor;
  bool counit_iso = false;
  std::optional<std::string> counit_failure;     // object of P/LW
  bool unit_hypothesis = false;
  std::optional<std::string> unit_failure;       // X_φ whose W*Σ_W R_W X_φ fails
  std::vector<LemmaObjectResult> objects;        // ordered by object id, empty unless hypotheses hold
  bool hypotheses_hold() const { return counit_iso && unit_hypothesis; }
  bool conclusion_holds() const;
};

// Throws MissingProduct / MissingPullback when a required limit is absent.
LemmaReport lemma_technical_check(const Adjunction& adj, Obj w);

}  // namespace catgal
