#include "catgal/functor.hpp"

namespace catgal {

namespace {

[[noreturn]] void fail(ErrorKind kind, std::string message, std::vector<std::string> witnesses) {
  throw ValidationError({Violation{kind, std::move(message), std::move(witnesses)}});
}

}  // namespace

Functor validate_functor(CategoryPtr src, CategoryPtr tgt, std::vector<Obj> omap, std::vector<Mor> mmap) {
  const FinCategory& s = *src;
  const FinCategory& t = *tgt;
  if (omap.size() != s.num_objects() || mmap.size() != s.num_morphisms()) {
    fail(ErrorKind::DomCodMismatch, "functor tables do not cover the source category", {});
  }
  for (const Obj x : omap) {
    if (x.index >= t.num_objects()) fail(ErrorKind::UnknownReference, "object image out of range", {});
  }
  for (const Mor m : mmap) {
    if (m.index >= t.num_morphisms()) fail(ErrorKind::UnknownReference, "morphism image out of range", {});
  }
  for (const Mor m : s.morphisms()) {
    const Mor fm = mmap[m.index];
    if (t.dom(fm) != omap[s.dom(m).index] || t.cod(fm) != omap[s.cod(m).index]) {
      fail(ErrorKind::DomCodMismatch,
           "image of '" + s.name(m) + "' is '" + t.name(fm) + "' with the wrong endpoints",
           {s.name(m), t.name(fm)});
    }
  }
  for (const Obj x : s.objects()) {
    if (mmap[s.id(x).index] != t.id(omap[x.index])) {
      fail(ErrorKind::IdentityNotPreserved, "identity of '" + s.name(x) + "' is not preserved",
           {s.name(x), t.name(mmap[s.id(x).index])});
    }
  }
  for (const Mor f : s.morphisms()) {
    for (const Mor g : s.out(s.cod(f))) {
      if (mmap[s.compose(g, f).index] != t.compose(mmap[g.index], mmap[f.index])) {
        fail(ErrorKind::CompositionNotPreserved,
             "F(" + s.name(g) + "∘" + s.name(f) + ") ≠ F(" + s.name(g) + ")∘F(" + s.name(f) + ")",
             {s.name(g), s.name(f)});
      }
    }
  }
  return Functor(std::move(src), std::move(tgt), std::move(omap), std::move(mmap));
}

Functor make_functor(CategoryPtr src, CategoryPtr tgt, const std::function<Obj(Obj)>& on_objects,
                     const std::function<Mor(Mor)>& on_morphisms) {
  std::vector<Obj> omap;
  std::vector<Mor> mmap;
  omap.reserve(src->num_objects());
  mmap.reserve(src->num_morphisms());
  for (const Obj x : src->objects()) omap.push_back(on_objects(x));
  for (const Mor m : src->morphisms()) mmap.push_back(on_morphisms(m));
  return validate_functor(std::move(src), std::move(tgt), std::move(omap), std::move(mmap));
}

Functor identity_functor(CategoryPtr c) {
  auto omap = c->objects();
  auto mmap = c->morphisms();
  return validate_functor(c, c, std::move(omap), std::move(mmap));
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.tgt(), g.src())) {
    throw Error(ErrorKind::IllTyped, "functors are not composable");
  }
  std::vector<Obj> omap;
  std::vector<Mor> mmap;
  for (const Obj x : f.source().objects()) omap.push_back(g(f(x)));
  for (const Mor m : f.source().morphisms()) mmap.push_back(g(f(m)));
  return validate_functor(f.src(), g.tgt(), std::move(omap), std::move(mmap));
}

bool parallel(const Functor& a, const Functor& b) {
  return same_category(a.src(), b.src()) && same_category(a.tgt(), b.tgt());
}

bool same_functor(const Functor& a, const Functor& b) {
  return parallel(a, b) && a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map();
}

Functor inclusion_functor(CategoryPtr sub, CategoryPtr ambient) {
  const FinCategory& s = *sub;
  const FinCategory& a = *ambient;
  return make_functor(
      sub, ambient, [&](Obj x) { return a.object(s.name(x)); },
      [&](Mor m) { return a.morphism(s.name(m)); });
}

NatTrans validate_nat_trans(Functor source, Functor target, std::vector<Mor> components) {
  if (!parallel(source, target)) {
    fail(ErrorKind::NonParallelFunctors, "transformation between non-parallel functors", {});
  }
  const FinCategory& c = source.source();
  const FinCategory& d = source.target();
  if (components.size() != c.num_objects()) {
    fail(ErrorKind::NaturalityFailure, "component table does not cover the source category", {});
  }
  for (const Obj x : c.objects()) {
    const Mor a = components[x.index];
    if (a.index >= d.num_morphisms() || d.dom(a) != source(x) || d.cod(a) != target(x)) {
      fail(ErrorKind::IllTyped, "component at '" + c.name(x) + "' has the wrong endpoints", {c.name(x)});
    }
  }
  for (const Mor m : c.morphisms()) {
    const Obj x = c.dom(m), y = c.cod(m);
    if (d.compose(target(m), components[x.index]) != d.compose(components[y.index], source(m))) {
      fail(ErrorKind::NaturalityFailure,
           "naturality square fails for '" + c.name(m) + "' between '" + c.name(x) + "' and '" + c.name(y) +
               "'",
           {c.name(x), c.name(y), c.name(m)});
    }
  }
  return NatTrans(std::move(source), std::move(target), std::move(components));
}

NatTrans identity_transformation(const Functor& f) {
  std::vector<Mor> comps;
  for (const Obj x : f.source().objects()) comps.push_back(f.target().id(f(x)));
  return validate_nat_trans(f, f, std::move(comps));
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& h) {
  std::vector<Mor> comps;
  for (const Obj x : h.source().objects()) comps.push_back(alpha[h(x)]);
  return validate_nat_trans(compose(alpha.source_functor(), h), compose(alpha.target_functor(), h),
                            std::move(comps));
}

NatTrans whisker_left(const Functor& h, const NatTrans& alpha) {
  std::vector<Mor> comps;
  for (const Mor a : alpha.components()) comps.push_back(h(a));
  return validate_nat_trans(compose(h, alpha.source_functor()), compose(h, alpha.target_functor()),
                            std::move(comps));
}

NatTrans vertical(const NatTrans& beta, const NatTrans& alpha) {
  if (!same_functor(alpha.target_functor(), beta.source_functor())) {
    throw Error(ErrorKind::IllTyped, "transformations are not vertically composable");
  }
  const FinCategory& d = alpha.source_functor().target();
  std::vector<Mor> comps;
  for (const Obj x : alpha.source_functor().source().objects()) {
    comps.push_back(d.compose(beta[x], alpha[x]));
  }
  return validate_nat_trans(alpha.source_functor(), beta.target_functor(), std::move(comps));
}

bool is_natural_iso(const NatTrans& alpha) {
  const FinCategory& d = alpha.source_functor().target();
  for (const Mor a : alpha.components()) {
    if (!is_iso(d, a)) return false;
  }
  return true;
}

NatTrans inverse(const NatTrans& alpha) {
  const FinCategory& d = alpha.source_functor().target();
  std::vector<Mor> comps;
  for (const Mor a : alpha.components()) {
    auto inv = morphism_inverse(d, a);
    if (!inv) throw Error(ErrorKind::IllTyped, "component '" + d.name(a) + "' is not invertible");
    comps.push_back(*inv);
  }
  return validate_nat_trans(alpha.target_functor(), alpha.source_functor(), std::move(comps));
}

}  // namespace catgal
