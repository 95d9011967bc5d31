#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "catgal/descent.hpp"

namespace catgal {

// A groupoid internal to a finite category. Composable pairs are the
// canonical pullback of (src, tgt): proj1 = a, proj2 = b with src a = tgt b,
// and comp sends (a, b) to a∘b.
struct InternalGroupoid {
  CategoryPtr ambient;
  Obj obj;   // G0
  Obj mor;   // G1
  Mor src;
  Mor tgt;
  Mor ident;
  Mor comp;  // composable-pairs apex → G1
  Mor inverse;
  PullbackSquare composable;
};

// Checks every axiom on generalized elements T → G1 for all objects T.
// Throws AxiomFailure naming the axiom, MissingPullback for the composables.
InternalGroupoid validate_groupoid(const CategoryPtr& ambient, Obj obj, Obj mor, Mor src, Mor tgt, Mor ident,
                                   Mor comp, Mor inverse);

// S×S ⇉ S: src = π2, tgt = π1, ident = diagonal, inverse = swap and
// comp((t, m), (m, s)) = (t, s).
InternalGroupoid pair_groupoid(const CategoryPtr& a, Obj s);

// F applied to every structure map. The composable-pairs square must stay a
// pullback (PullbackNotPreserved otherwise); comp is then read through the
// canonical pullback of the target.
InternalGroupoid image_groupoid(const Functor& f, const InternalGroupoid& g);

// An object with anchor p: X → G0 and action α: G1 ×_{G0} X → X over the
// canonical pullback of (src, p).
struct GObject {
  Obj carrier;
  Mor anchor;
  Mor action;
};

struct ActionCategory {
  CategoryPtr category;
  std::vector<GObject> objects;   // per object
  std::vector<Mor> underlying;    // per morphism, in the ambient
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Obj> by_structure;

  std::optional<Obj> find(const GObject& x) const;
};

bool is_action(const InternalGroupoid& g, const GObject& x);
// [G, ambient]. Carriers whose pullback G1 ×_{G0} X is missing are skipped.
ActionCategory g_object_category(const InternalGroupoid& g, SearchBudget& budget);
ActionCategory g_object_category(const InternalGroupoid& g);

// A groupoid internal to a slice C/L, read in C, with the comparison of
// action categories [G, C/L] → [G', C] (asserted to be an isomorphism).
struct Reindexed {
  InternalGroupoid groupoid;
  ActionCategory slice_actions;
  ActionCategory actions;
  Functor comparison;
};

Reindexed reindex_groupoid(const InternalGroupoid& g, const Slice& slice);

// Global elements 1 → G0 and 1 → G1 as an ordinary finite groupoid.
CategoryPtr external_groupoid(const InternalGroupoid& g);
// A structure-preserving pair of isos G0 ≅ H0, G1 ≅ H1 in the shared ambient.
bool groupoids_isomorphic(const InternalGroupoid& g, const InternalGroupoid& h);

// Everything needed to talk about σ: S → R for an adjunction D ⊣ C : A ⇄ P.
struct SigmaContext {
  Mor sigma;
  PullbackAdjunction along;  // Σ_σ ⊣ σ* : A/S ⇄ A/R
  SlicedAdjunction at_s;     // D_S ⊣ C_S : A/S ⇄ P/DS
};

SigmaContext make_sigma_context(const Adjunction& adj, Mor sigma);

struct SplitVerdict {
  bool split = false;
  Mor unit_component;  // η^S at σ*A_a, in A/S
};

// A_a is an object of A/R.
SplitVerdict is_sigma_split(const SigmaContext& ctx, Obj a_a);

struct Characterization {
  bool split = false;
  bool represented = false;              // some X_φ with σ*A_a ≅ C_S X_φ
  std::optional<std::string> witness;    // X_φ = D_S σ*A_a when split
  bool agrees() const { return split == represented; }
};

struct DescentConditions {
  bool effective = false;                 // (i)
  std::optional<EquivalenceFailure> descent_failure;
  bool counit_iso = false;                // (ii)
  std::optional<std::string> counit_failure;
  bool units_iso = false;                 // (iii)
  std::optional<std::string> unit_failure;
  bool all() const { return effective && counit_iso && units_iso; }
};

DescentConditions check_galois_descent(const SigmaContext& ctx);

// Throws HypothesisFailed unless σ is of Galois descent.
Characterization check_sigma_split_characterization(const SigmaContext& ctx, Obj a_a);

struct SplitSubcategory {
  CategoryPtr category;         // Split_R(σ), full in A/R
  SlicedAdjunction at_r;        // D_R ⊣ C_R
  Adjunction restricted;        // ℒ ⊣ ℛ : Split_R(σ) ⇄ P/DR
};

// Throws FactorizationFailure naming a C_R image that is not σ-split.
SplitSubcategory split_subcategory(const Adjunction& adj, const SigmaContext& ctx);

struct StepFailure {
  std::string step;
  std::string message;
};

struct TrivialGaloisReport {
  std::string object;
  std::optional<bool> descent;          // !: S → 1 of effective descent
  std::optional<bool> sliced_equivalence;
  std::optional<InternalGroupoid> groupoid;
  std::optional<ActionCategory> actions;
  std::optional<Functor> phi;           // A → [G, P]
  std::optional<EquivalenceResult> equivalence;
  std::optional<StepFailure> failure;
  bool ok() const { return !failure && equivalence && static_cast<bool>(*equivalence); }
};

// G = image of the pair groupoid of S under the left adjoint; A → [G, P]
// sends X to D(S×X) anchored by D(π1) with the action induced by
// ((t, s), (s, x)) ↦ (t, x).
TrivialGaloisReport trivial_galois(const Adjunction& adj, Obj s);

struct GaloisReport {
  std::string sigma;
  std::optional<DescentConditions> conditions;
  std::optional<SplitSubcategory> split;
  std::optional<LemmaReport> lemma;                 // step (c)
  std::optional<bool> slice_equivalence;            // Split/S_σ ≃ P/ℒ(S_σ)
  std::optional<bool> restricted_descent;           // step (d)
  std::optional<TrivialGaloisReport> trivial;
  std::optional<Reindexed> galois_groupoid;         // Gal[σ] in P
  std::optional<EquivalenceResult> equivalence;     // Split_R(σ) ≃ [Gal[σ], P]
  std::optional<StepFailure> failure;
  bool ok() const { return !failure && equivalence && static_cast<bool>(*equivalence); }
};

GaloisReport galois_theorem(const Adjunction& adj, Mor sigma);

struct ConverseReport {
  std::string object;
  bool descent = false;
  bool sliced_equivalence = false;
  bool all_split = false;
  std::optional<std::string> unsplit;
  bool galois_descent = false;
  bool split_is_everything = false;
  std::optional<StepFailure> failure;
  bool ok() const { return !failure && all_split && galois_descent && split_is_everything; }
};

ConverseReport converse_check(const Adjunction& adj, Obj w);

}  // namespace catgal
