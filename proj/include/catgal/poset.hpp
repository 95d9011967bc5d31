#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "catgal/adjunction.hpp"
#include "catgal/gset.hpp"

namespace catgal {

// Thin category with x → y iff leq(x, y). Morphisms are named "id_x" and
// "x->y". A relation that is not a preorder fails validation.
CategoryPtr poset_category(std::vector<std::string> elements,
                           const std::function<bool(const std::string&, const std::string&)>& leq);

// a < b < c < ... on the first n letters.
CategoryPtr chain(std::uint32_t n);

// The arrow x → y of a thin category; IllTyped when there is none.
Mor thin_arrow(const FinCategory& c, Obj x, Obj y);

// Monotone map between thin categories given on object ids.
Functor monotone_functor(CategoryPtr src, CategoryPtr tgt, const std::map<std::string, std::string>& on_objects);

// L ⊣ R between thin categories: unit and counit are the forced arrows.
// Throws HypothesisFailed when a ≤ RLa or LRx ≤ x is missing.
Adjunction galois_connection(CategoryPtr a, CategoryPtr p, const std::map<std::string, std::string>& left,
                             const std::map<std::string, std::string>& right);

// One object "*", a morphism per element, g∘f = g·f.
CategoryPtr group_as_category(const GroupTable& g);

}  // namespace catgal
