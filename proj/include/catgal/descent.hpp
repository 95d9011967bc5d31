#pragma once

#include <optional>

#include "catgal/adjunction.hpp"

namespace catgal {

struct Monad {
  CategoryPtr base;
  Functor endo;   // T
  NatTrans unit;  // Id ⇒ T
  NatTrans mult;  // TT ⇒ T
};

// T = RL, unit η, multiplication RεL. The monad laws are asserted and a
// violation raises AxiomFailure (unreachable for a validated adjunction).
Monad monad_of(const Adjunction& adj);

// Eilenberg–Moore category. Objects are algebras, named after their action
// morphism; an algebra map k into the algebra α' is named "k@α'".
struct EMCategory {
  CategoryPtr category;
  Functor forgetful;
  std::vector<Mor> action;  // per EM object, the structure map T c → c
};

bool is_algebra(const Monad& t, Mor action);
EMCategory em_category(const Monad& t);

// P → EM(RL): Z ↦ (RZ, Rε_Z).
Functor comparison_functor(const Adjunction& adj, const EMCategory& em);

struct DescentReport {
  Mor sigma;
  PullbackAdjunction adjunction;  // Σ_σ ⊣ σ*
  Monad monad;
  EMCategory algebras;
  Functor comparison;
  EquivalenceResult verdict;
  bool effective() const { return static_cast<bool>(verdict); }
};

// Throws MissingPullback (naming the cospan) when σ* cannot be formed.
DescentReport effective_descent_check(const CategoryPtr& c, Mor sigma);

// q∘f = q∘g, q∘s = id, f∘t = id, g∘t = s∘q. `swapped` records that the
// roles of f and g were exchanged to find the splitting.
struct SplitFork {
  Mor q;
  Mor s;
  Mor t;
  bool swapped = false;
};

std::optional<SplitFork> split_coequalizer_search(const FinCategory& c, Mor f, Mor g, SearchBudget& budget);
std::optional<SplitFork> split_coequalizer_search(const FinCategory& c, Mor f, Mor g);

}  // namespace catgal
