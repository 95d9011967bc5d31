#pragma once

#include <functional>
#include <vector>

#include "catgal/category.hpp"

namespace catgal {

// A validated functor between finite categories.
class Functor {
 public:
  const CategoryPtr& src() const { return src_; }
  const CategoryPtr& tgt() const { return tgt_; }
  const FinCategory& source() const { return *src_; }
  const FinCategory& target() const { return *tgt_; }

  Obj operator()(Obj x) const { return omap_[x.index]; }
  Mor operator()(Mor m) const { return mmap_[m.index]; }

  const std::vector<Obj>& object_map() const { return omap_; }
  const std::vector<Mor>& morphism_map() const { return mmap_; }

 private:
  friend Functor validate_functor(CategoryPtr, CategoryPtr, std::vector<Obj>, std::vector<Mor>);
  Functor(CategoryPtr src, CategoryPtr tgt, std::vector<Obj> omap, std::vector<Mor> mmap)
      : src_(std::move(src)), tgt_(std::move(tgt)), omap_(std::move(omap)), mmap_(std::move(mmap)) {}

  CategoryPtr src_;
  CategoryPtr tgt_;
  std::vector<Obj> omap_;
  std::vector<Mor> mmap_;
};

// Throws ValidationError with DomCodMismatch, IdentityNotPreserved or
// CompositionNotPreserved (first violation found, with witnesses).
Functor validate_functor(CategoryPtr src, CategoryPtr tgt, std::vector<Obj> omap, std::vector<Mor> mmap);

// Builds the tables by evaluating the callbacks, then validates.
Functor make_functor(CategoryPtr src, CategoryPtr tgt, const std::function<Obj(Obj)>& on_objects,
                     const std::function<Mor(Mor)>& on_morphisms);

Functor identity_functor(CategoryPtr c);
// g∘f
Functor compose(const Functor& g, const Functor& f);
bool same_functor(const Functor& a, const Functor& b);
bool parallel(const Functor& a, const Functor& b);

// Inclusion of a full subcategory built by full_subcategory (matched by id).
Functor inclusion_functor(CategoryPtr sub, CategoryPtr ambient);

class NatTrans {
 public:
  const Functor& source_functor() const { return source_; }
  const Functor& target_functor() const { return target_; }
  Mor operator[](Obj x) const { return components_[x.index]; }
  const std::vector<Mor>& components() const { return components_; }

 private:
  friend NatTrans validate_nat_trans(Functor, Functor, std::vector<Mor>);
  NatTrans(Functor s, Functor t, std::vector<Mor> c)
      : source_(std::move(s)), target_(std::move(t)), components_(std::move(c)) {}

  Functor source_;
  Functor target_;
  std::vector<Mor> components_;
};

// Throws NonParallelFunctors, IllTyped (component with the wrong endpoints)
// or NaturalityFailure naming the object pair and morphism.
NatTrans validate_nat_trans(Functor source, Functor target, std::vector<Mor> components);

NatTrans identity_transformation(const Functor& f);
// Whiskering: (α H)_x = α_{H x} and (H α)_x = H(α_x).
NatTrans whisker_right(const NatTrans& alpha, const Functor& h);
NatTrans whisker_left(const Functor& h, const NatTrans& alpha);
// Vertical composite β·α.
NatTrans vertical(const NatTrans& beta, const NatTrans& alpha);

bool is_natural_iso(const NatTrans& alpha);
// Component-wise inverse; requires is_natural_iso.
NatTrans inverse(const NatTrans& alpha);

}  // namespace catgal
