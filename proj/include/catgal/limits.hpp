#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "catgal/functor.hpp"

namespace catgal {

// mor_a∘legs[leg_a] == mor_b∘legs[leg_b]
struct ConeEquation {
  std::uint32_t leg_a;
  Mor mor_a;
  std::uint32_t leg_b;
  Mor mor_b;
};

// A finite diagram shape: one leg per target object plus commutation
// constraints. Covers terminal objects, products, pullbacks and equalizers.
struct LimitShape {
  std::vector<Obj> targets;
  std::vector<ConeEquation> equations;
};

struct Limit {
  Obj apex;
  std::vector<Mor> legs;
  // Every cone → its unique mediator. Key: [apex, legs...] as indices.
  std::map<std::vector<std::uint32_t>, Mor> mediators;
};

// The pullback of a cospan f: X → Z ← Y: g, with proj1: apex → X, proj2: apex → Y.
struct PullbackSquare {
  Mor f;
  Mor g;
  Obj apex;
  Mor proj1;
  Mor proj2;
  const Limit* limit;  // owned by the category's memo
};

namespace detail {
struct LimitMemo {
  std::mutex mutex;
  std::map<std::vector<std::uint32_t>, std::shared_ptr<const std::optional<Limit>>> entries;
};
}  // namespace detail

// All cones over `shape` with the given apex, in lexicographic leg order.
std::vector<std::vector<Mor>> cones_over(const FinCategory& c, const LimitShape& shape, Obj apex);
// Universal property of one cone, checked against every apex of c.
bool is_limit_cone(const FinCategory& c, const LimitShape& shape, Obj apex, std::span<const Mor> legs);

// Canonical limit: least apex, then least leg tuple. Memoized per category.
const std::optional<Limit>& find_limit(const FinCategory& c, const LimitShape& shape);

std::optional<Obj> terminal_object(const FinCategory& c);
// The unique morphism x → 1 (requires a terminal object).
Mor to_terminal(const FinCategory& c, Obj x);

const Limit* binary_product(const FinCategory& c, Obj x, Obj y);
std::optional<PullbackSquare> pullback(const FinCategory& c, Mor f, Mor g);
const Limit* equalizer(const FinCategory& c, Mor f, Mor g);

// Throwing variants naming the missing cospan / pair.
const Limit& require_product(const FinCategory& c, Obj x, Obj y);
PullbackSquare require_pullback(const FinCategory& c, Mor f, Mor g);

// The mediator from a cone into a limit; throws IllTyped if `legs` is not a cone.
Mor mediate(const Limit& limit, Obj apex, std::span<const Mor> legs);
Mor mediate(const Limit& limit, std::initializer_list<Mor> legs, const FinCategory& c);

LimitShape product_shape(Obj x, Obj y);
LimitShape pullback_shape(const FinCategory& c, Mor f, Mor g);
LimitShape equalizer_shape(const FinCategory& c, Mor f, Mor g);

// The slice C/X with its forgetful functor. Slice objects carry the name of
// their structure morphism; the slice morphism given by k: g → h is named
// "k@h".
struct Slice {
  CategoryPtr base;
  Obj anchor;
  CategoryPtr category;
  Functor projection;
  std::vector<Mor> structure;                 // slice object → structure morphism
  std::vector<std::optional<Obj>> object_of;  // base morphism → slice object
  std::vector<Mor> underlying;                // slice morphism → base morphism
  std::map<std::pair<std::uint32_t, std::uint32_t>, Mor> by_pair;  // (k, target object) → slice morphism

  Obj object(Mor base_morphism) const;
  Mor morphism(Mor k, Obj target) const;
};

Slice slice_category(const CategoryPtr& c, Obj x);

std::string slice_morphism_name(const std::string& k, const std::string& h);

}  // namespace catgal
