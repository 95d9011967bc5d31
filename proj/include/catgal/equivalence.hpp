#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catgal/functor.hpp"

namespace catgal {

struct EssentialPreimage {
  Obj source;   // X with F(X) ≅ Y
  Mor iso;      // F(X) → Y in the target
};

struct HomBijection {
  Obj a;
  Obj b;
  std::size_t size;
};

struct EquivalenceWitness {
  Functor functor;
  // Indexed by target object.
  std::vector<EssentialPreimage> ess_surj;
  std::vector<HomBijection> fullness_faithfulness;
};

enum class EquivalenceDefect { NotFaithful, NotFull, NotEssentiallySurjective };

std::string_view to_string(EquivalenceDefect d);

struct EquivalenceFailure {
  EquivalenceDefect defect;
  // Hom-pair (a, b) of the source for NotFaithful/NotFull; for
  // NotEssentiallySurjective `target_object` names the missed object.
  std::string a;
  std::string b;
  std::string target_object;
  std::string message;
};

struct EquivalenceResult {
  std::optional<EquivalenceWitness> witness;
  std::optional<EquivalenceFailure> failure;
  explicit operator bool() const { return witness.has_value(); }
};

// Hom-pairs are examined in (a, b) order of the source, faithfulness before
// fullness, then essential surjectivity in target-object order.
EquivalenceResult check_equivalence(const Functor& f);

// Bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);
// Two-sided inverse of an isomorphism of categories.
Functor inverse_isomorphism(const Functor& f);

struct Skeleton {
  CategoryPtr category;
  Functor projection;  // C → skeleton
  Functor inclusion;   // skeleton → C
  // Chosen isomorphism x → rep(x), per object of C.
  std::vector<Mor> to_representative;
};

// One object per isomorphism class, the least identifier of the class.
Skeleton skeleton(const CategoryPtr& c);

// Strict isomorphism C → D, least assignment in identifier order. Throws
// SearchBudgetExceeded when the budget runs out.
std::optional<Functor> find_isomorphism(const CategoryPtr& c, const CategoryPtr& d, SearchBudget& budget);
std::optional<Functor> find_isomorphism(const CategoryPtr& c, const CategoryPtr& d);

// Some equivalence C → D via skeleta, or nullopt after exhausting the search.
std::optional<EquivalenceWitness> find_equivalence(const CategoryPtr& c, const CategoryPtr& d,
                                                   SearchBudget& budget);
std::optional<EquivalenceWitness> find_equivalence(const CategoryPtr& c, const CategoryPtr& d);

}  // namespace catgal
