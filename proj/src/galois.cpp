#include "catgal/galois.hpp"

namespace catgal {

namespace {

[[noreturn]] void axiom(const std::string& message, std::vector<std::string> witnesses = {}) {
  throw Error(ErrorKind::AxiomFailure, message, std::move(witnesses));
}

// The unique u with legs[i]∘u = cone[i], when (apex, legs) is a limit cone.
std::optional<Mor> factor_cone(const FinCategory& c, Obj apex, std::span<const Mor> legs, std::span<const Mor> cone) {
  for (const Mor u : c.hom(c.dom(cone[0]), apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = c.compose(legs[i], u) == cone[i];
    if (ok) return u;
  }
  return std::nullopt;
}

// Re-expresses a morphism out of one pullback cone as a morphism out of the
// canonical pullback of the same cospan.
Mor through_canonical(const FinCategory& c, const PullbackSquare& canonical, Obj apex, Mor p1, Mor p2, Mor m) {
  const std::vector<Mor> legs{p1, p2};
  const std::vector<Mor> cone{canonical.proj1, canonical.proj2};
  const auto u = factor_cone(c, apex, legs, cone);
  if (!u) axiom("cone over (" + c.name(canonical.f) + ", " + c.name(canonical.g) + ") is not a pullback");
  return c.compose(m, *u);
}

std::string what_of(const Error& e) { return e.what(); }

}  // namespace

InternalGroupoid validate_groupoid(const CategoryPtr& ambient, Obj obj, Obj mor, Mor src, Mor tgt, Mor ident,
                                   Mor comp, Mor inverse) {
  const FinCategory& c = *ambient;
  const auto typed = [&](Mor m, Obj d, Obj e) { return c.dom(m) == d && c.cod(m) == e; };
  if (!typed(src, mor, obj) || !typed(tgt, mor, obj) || !typed(ident, obj, mor) || !typed(inverse, mor, mor)) {
    axiom("structure maps have the wrong endpoints");
  }
  const PullbackSquare composable = require_pullback(c, src, tgt);
  if (!typed(comp, composable.apex, mor)) axiom("comp does not start at the composable pairs");
  if (c.compose(src, ident) != c.id(obj) || c.compose(tgt, ident) != c.id(obj)) {
    axiom("identities do not have matching source and target", {c.name(ident)});
  }
  for (const Obj t : c.objects()) {
    const auto els = c.hom(t, mor);
    const auto compose_at = [&](Mor a, Mor b) {
      const std::vector<Mor> legs{a, b};
      return c.compose(comp, mediate(*composable.limit, t, legs));
    };
    for (const Mor a : els) {
      const Mor ia = c.compose(inverse, a);
      if (c.compose(src, ia) != c.compose(tgt, a) || c.compose(tgt, ia) != c.compose(src, a)) {
        axiom("inverse does not swap source and target", {c.name(t), c.name(a)});
      }
      if (compose_at(a, ia) != c.compose(ident, tgt, a) || compose_at(ia, a) != c.compose(ident, src, a)) {
        axiom("inverse law fails", {c.name(t), c.name(a)});
      }
      if (compose_at(c.compose(ident, tgt, a), a) != a || compose_at(a, c.compose(ident, src, a)) != a) {
        axiom("unit law fails", {c.name(t), c.name(a)});
      }
      for (const Mor b : els) {
        if (c.compose(src, a) != c.compose(tgt, b)) continue;
        const Mor ab = compose_at(a, b);
        if (c.compose(src, ab) != c.compose(src, b) || c.compose(tgt, ab) != c.compose(tgt, a)) {
          axiom("composite has the wrong source or target", {c.name(t), c.name(a), c.name(b)});
        }
        for (const Mor d : els) {
          if (c.compose(src, b) != c.compose(tgt, d)) continue;
          if (compose_at(ab, d) != compose_at(a, compose_at(b, d))) {
            axiom("associativity fails", {c.name(t), c.name(a), c.name(b), c.name(d)});
          }
        }
      }
    }
  }
  return InternalGroupoid{ambient, obj, mor, src, tgt, ident, comp, inverse, composable};
}

InternalGroupoid pair_groupoid(const CategoryPtr& ap, Obj s) {
  const FinCategory& a = *ap;
  const Limit& p = require_product(a, s, s);
  const Mor pi1 = p.legs[0], pi2 = p.legs[1];
  const Mor diag = mediate(p, {a.id(s), a.id(s)}, a);
  const Mor swap = mediate(p, {pi2, pi1}, a);
  const PullbackSquare pairs = require_pullback(a, pi2, pi1);
  const Mor comp = mediate(p, {a.compose(pi1, pairs.proj1), a.compose(pi2, pairs.proj2)}, a);
  return validate_groupoid(ap, s, p.apex, pi2, pi1, diag, comp, swap);
}

InternalGroupoid image_groupoid(const Functor& f, const InternalGroupoid& g) {
  if (!same_category(f.src(), g.ambient)) throw Error(ErrorKind::IllTyped, "functor does not start at the ambient");
  const FinCategory& t = f.target();
  const Mor src = f(g.src), tgt = f(g.tgt);
  const Obj apex = f(g.composable.apex);
  const Mor p1 = f(g.composable.proj1), p2 = f(g.composable.proj2);
  const std::vector<Mor> legs{p1, p2};
  if (!is_limit_cone(t, pullback_shape(t, src, tgt), apex, legs)) {
    throw Error(ErrorKind::PullbackNotPreserved,
                "the composable-pairs square over " + g.ambient->name(g.obj) + " is not sent to a pullback",
                {g.ambient->name(g.src), g.ambient->name(g.tgt)});
  }
  const PullbackSquare canonical = require_pullback(t, src, tgt);
  const Mor comp = through_canonical(t, canonical, apex, p1, p2, f(g.comp));
  return validate_groupoid(f.tgt(), f(g.obj), f(g.mor), src, tgt, f(g.ident), comp, f(g.inverse));
}

std::optional<Obj> ActionCategory::find(const GObject& x) const {
  auto it = by_structure.find({x.carrier.index, x.anchor.index, x.action.index});
  if (it == by_structure.end()) return std::nullopt;
  return it->second;
}

bool is_action(const InternalGroupoid& g, const GObject& x) {
  const FinCategory& c = *g.ambient;
  if (c.dom(x.anchor) != x.carrier || c.cod(x.anchor) != g.obj) return false;
  const auto pb = pullback(c, g.src, x.anchor);
  if (!pb || c.dom(x.action) != pb->apex || c.cod(x.action) != x.carrier) return false;
  for (const Obj t : c.objects()) {
    const auto act = [&](Mor a, Mor e) {
      const std::vector<Mor> legs{a, e};
      return c.compose(x.action, mediate(*pb->limit, t, legs));
    };
    const auto pair = [&](Mor a, Mor b) {
      const std::vector<Mor> legs{a, b};
      return c.compose(g.comp, mediate(*g.composable.limit, t, legs));
    };
    for (const Mor e : c.hom(t, x.carrier)) {
      const Mor anchor_e = c.compose(x.anchor, e);
      if (act(c.compose(g.ident, anchor_e), e) != e) return false;
      for (const Mor a : c.hom(t, g.mor)) {
        if (c.compose(g.src, a) != anchor_e) continue;
        const Mor ae = act(a, e);
        if (c.compose(x.anchor, ae) != c.compose(g.tgt, a)) return false;
        for (const Mor b : c.hom(t, g.mor)) {
          if (c.compose(g.src, b) != c.compose(g.tgt, a)) continue;
          if (act(b, ae) != act(pair(b, a), e)) return false;
        }
      }
    }
  }
  return true;
}

ActionCategory g_object_category(const InternalGroupoid& g, SearchBudget& budget) {
  const FinCategory& c = *g.ambient;
  std::vector<GObject> found;
  std::vector<PullbackSquare> squares;
  for (const Obj x : c.objects()) {
    for (const Mor p : c.hom(x, g.obj)) {
      const auto pb = pullback(c, g.src, p);
      if (!pb) continue;
      for (const Mor alpha : c.hom(pb->apex, x)) {
        budget.charge();
        const GObject candidate{x, p, alpha};
        if (is_action(g, candidate)) {
          found.push_back(candidate);
          squares.push_back(*pb);
        }
      }
    }
  }
  const auto object_name = [&](const GObject& x) { return c.name(x.anchor) + "|" + c.name(x.action); };
  CategoryBuilder b;
  for (const auto& x : found) b.add_object(object_name(x));
  struct Local {
    Mor k;
    std::uint32_t tgt;
  };
  std::vector<Local> mors;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_pair;
  for (std::uint32_t i = 0; i < found.size(); ++i) {
    for (std::uint32_t j = 0; j < found.size(); ++j) {
      const GObject& x = found[i];
      const GObject& y = found[j];
      for (const Mor k : c.hom(x.carrier, y.carrier)) {
        budget.charge();
        if (c.compose(y.anchor, k) != x.anchor) continue;
        const std::vector<Mor> legs{squares[i].proj1, c.compose(k, squares[i].proj2)};
        const Mor lifted = mediate(*squares[j].limit, squares[i].apex, legs);
        if (c.compose(y.action, lifted) != c.compose(k, x.action)) continue;
        by_pair.emplace(std::pair{k.index, j}, b.add_morphism(slice_morphism_name(c.name(k), object_name(y)), i, j));
        mors.push_back({k, j});
      }
    }
  }
  for (std::uint32_t i = 0; i < found.size(); ++i) b.set_identity(i, by_pair.at({c.id(found[i].carrier).index, i}));
  b.compose_with([&](std::uint32_t gm, std::uint32_t fm) {
    return by_pair.at({c.compose(mors[gm].k, mors[fm].k).index, mors[gm].tgt});
  });
  ActionCategory out;
  out.category = b.build();
  out.objects.resize(found.size());
  for (const auto& x : found) {
    const Obj o = out.category->object(object_name(x));
    out.objects[o.index] = x;
    out.by_structure.emplace(std::tuple{x.carrier.index, x.anchor.index, x.action.index}, o);
  }
  out.underlying.resize(out.category->num_morphisms());
  for (const auto& m : mors) {
    out.underlying[out.category->morphism(slice_morphism_name(c.name(m.k), object_name(found[m.tgt]))).index] = m.k;
  }
  return out;
}

ActionCategory g_object_category(const InternalGroupoid& g) {
  SearchBudget budget;
  return g_object_category(g, budget);
}

Reindexed reindex_groupoid(const InternalGroupoid& g, const Slice& slice) {
  if (!same_category(g.ambient, slice.category)) throw Error(ErrorKind::IllTyped, "groupoid is not internal to the slice");
  const FinCategory& c = *slice.base;
  const auto under = [&](Mor m) { return slice.underlying[m.index]; };
  const auto carrier = [&](Obj o) { return c.dom(slice.structure[o.index]); };

  const Mor src = under(g.src), tgt = under(g.tgt);
  const Obj pairs = carrier(g.composable.apex);
  const std::vector<Mor> pair_legs{under(g.composable.proj1), under(g.composable.proj2)};
  if (!is_limit_cone(c, pullback_shape(c, src, tgt), pairs, pair_legs)) {
    axiom("the composable pairs in the slice are not a pullback in the base");
  }
  const PullbackSquare canonical = require_pullback(c, src, tgt);
  const Mor comp = through_canonical(c, canonical, pairs, pair_legs[0], pair_legs[1], under(g.comp));
  InternalGroupoid base =
      validate_groupoid(slice.base, carrier(g.obj), carrier(g.mor), src, tgt, under(g.ident), comp, under(g.inverse));

  ActionCategory in_slice = g_object_category(g);
  ActionCategory in_base = g_object_category(base);
  const FinCategory& sc = *g.ambient;

  std::vector<Obj> omap;
  for (const GObject& x : in_slice.objects) {
    const auto pb = pullback(sc, g.src, x.anchor);
    const Mor anchor = under(x.anchor);
    const PullbackSquare canon = require_pullback(c, src, anchor);
    const Mor action = through_canonical(c, canon, carrier(pb->apex), under(pb->proj1), under(pb->proj2),
                                         under(x.action));
    const auto o = in_base.find(GObject{carrier(x.carrier), anchor, action});
    if (!o) axiom("a G-object of the slice is not a G-object of the base", {sc.name(x.action)});
    omap.push_back(*o);
  }
  std::vector<Mor> mmap;
  const FinCategory& bc = *in_base.category;
  for (const Mor m : in_slice.category->morphisms()) {
    const Obj target = omap[in_slice.category->cod(m).index];
    mmap.push_back(bc.morphism(slice_morphism_name(c.name(under(in_slice.underlying[m.index])), bc.name(target))));
  }
  Functor comparison = validate_functor(in_slice.category, in_base.category, std::move(omap), std::move(mmap));
  if (!is_isomorphism(comparison)) axiom("action categories of the slice and of the base differ");
  return Reindexed{std::move(base), std::move(in_slice), std::move(in_base), std::move(comparison)};
}

CategoryPtr external_groupoid(const InternalGroupoid& g) {
  const FinCategory& c = *g.ambient;
  const auto one = terminal_object(c);
  if (!one) throw Error(ErrorKind::MissingTerminal, "ambient category has no terminal object");
  const auto points = c.hom(*one, g.obj);
  const auto arrows = c.hom(*one, g.mor);
  CategoryBuilder b;
  std::map<std::uint32_t, std::uint32_t> obj_of, mor_of;
  for (const Mor x : points) obj_of[x.index] = b.add_object(c.name(x));
  for (const Mor a : arrows) {
    mor_of[a.index] = b.add_morphism(c.name(a), obj_of.at(c.compose(g.src, a).index), obj_of.at(c.compose(g.tgt, a).index));
  }
  for (const Mor x : points) b.set_identity(obj_of.at(x.index), mor_of.at(c.compose(g.ident, x).index));
  for (const Mor f : arrows) {
    for (const Mor h : arrows) {
      if (c.compose(g.src, h) != c.compose(g.tgt, f)) continue;
      const std::vector<Mor> legs{h, f};
      b.set_composite(mor_of.at(h.index), mor_of.at(f.index),
                      mor_of.at(c.compose(g.comp, mediate(*g.composable.limit, *one, legs)).index));
    }
  }
  return b.build();
}

bool groupoids_isomorphic(const InternalGroupoid& g, const InternalGroupoid& h) {
  if (!same_category(g.ambient, h.ambient)) return false;
  const FinCategory& c = *g.ambient;
  for (const Mor f0 : c.hom(g.obj, h.obj)) {
    if (!is_iso(c, f0)) continue;
    for (const Mor f1 : c.hom(g.mor, h.mor)) {
      if (!is_iso(c, f1)) continue;
      if (c.compose(h.src, f1) != c.compose(f0, g.src) || c.compose(h.tgt, f1) != c.compose(f0, g.tgt)) continue;
      if (c.compose(f1, g.ident) != c.compose(h.ident, f0)) continue;
      if (c.compose(f1, g.inverse) != c.compose(h.inverse, f1)) continue;
      const std::vector<Mor> legs{c.compose(f1, g.composable.proj1), c.compose(f1, g.composable.proj2)};
      const Mor f2 = mediate(*h.composable.limit, g.composable.apex, legs);
      if (c.compose(f1, g.comp) == c.compose(h.comp, f2)) return true;
    }
  }
  return false;
}

SigmaContext make_sigma_context(const Adjunction& adj, Mor sigma) {
  PullbackAdjunction along = pullback_adjunction(adj.domain(), sigma);
  SlicedAdjunction at_s = slice_at_domain(adj, adj.domain()->dom(sigma));
  if (!same_category(along.over_domain.category, at_s.domain.category)) {
    axiom("slices over the same object disagree");
  }
  return SigmaContext{sigma, std::move(along), std::move(at_s)};
}

SplitVerdict is_sigma_split(const SigmaContext& ctx, Obj a_a) {
  const Obj pulled = ctx.along.adjunction.right()(a_a);
  const Mor unit = ctx.at_s.adjunction.unit()[pulled];
  return SplitVerdict{is_iso(*ctx.at_s.domain.category, unit), unit};
}

DescentConditions check_galois_descent(const SigmaContext& ctx) {
  DescentConditions out;
  const auto descent = effective_descent_check(ctx.along.over_domain.base, ctx.sigma);
  out.effective = descent.effective();
  out.descent_failure = descent.verdict.failure;

  const FinCategory& pds = *ctx.at_s.codomain.category;
  out.counit_iso = true;
  for (const Obj x : pds.objects()) {
    if (!is_iso(pds, ctx.at_s.adjunction.counit()[x])) {
      out.counit_iso = false;
      out.counit_failure = pds.name(x);
      break;
    }
  }
  out.units_iso = true;
  for (const Obj x : pds.objects()) {
    const Obj in_r = ctx.along.adjunction.left()(ctx.at_s.adjunction.right()(x));
    if (!is_sigma_split(ctx, in_r).split) {
      out.units_iso = false;
      out.unit_failure = pds.name(x);
      break;
    }
  }
  return out;
}

Characterization check_sigma_split_characterization(const SigmaContext& ctx, Obj a_a) {
  const auto conditions = check_galois_descent(ctx);
  if (!conditions.all()) {
    throw Error(ErrorKind::HypothesisFailed, "σ is not of Galois descent", {ctx.along.over_domain.base->name(ctx.sigma)});
  }
  Characterization out;
  const FinCategory& as = *ctx.at_s.domain.category;
  const Obj pulled = ctx.along.adjunction.right()(a_a);
  out.split = is_sigma_split(ctx, a_a).split;
  for (const Obj x : ctx.at_s.codomain.category->objects()) {
    if (find_iso(as, pulled, ctx.at_s.adjunction.right()(x))) {
      out.represented = true;
      break;
    }
  }
  if (out.split) out.witness = ctx.at_s.codomain.category->name(ctx.at_s.adjunction.left()(pulled));
  return out;
}

SplitSubcategory split_subcategory(const Adjunction& adj, const SigmaContext& ctx) {
  const FinCategory& a = *adj.domain();
  SlicedAdjunction at_r = slice_at_domain(adj, a.cod(ctx.sigma));
  const CategoryPtr& ar = at_r.domain.category;
  if (!same_category(ar, ctx.along.over_codomain.category)) axiom("slices over the same object disagree");
  std::vector<Obj> keep;
  std::vector<char> split(ar->num_objects(), 0);
  for (const Obj o : ar->objects()) {
    if (is_sigma_split(ctx, o).split) {
      keep.push_back(o);
      split[o.index] = 1;
    }
  }
  const FinCategory& pdr = *at_r.codomain.category;
  const Functor& c_r = at_r.adjunction.right();
  for (const Obj y : pdr.objects()) {
    if (!split[c_r(y).index]) {
      throw Error(ErrorKind::FactorizationFailure,
                  "C_R(" + pdr.name(y) + ") = " + ar->name(c_r(y)) + " is not σ-split", {pdr.name(y), ar->name(c_r(y))});
    }
  }
  CategoryPtr sub = full_subcategory(*ar, keep);
  const FinCategory& s = *sub;
  const Functor incl = inclusion_functor(sub, ar);
  Functor left = compose(at_r.adjunction.left(), incl);
  Functor right = make_functor(
      at_r.codomain.category, sub, [&](Obj y) { return s.object(ar->name(c_r(y))); },
      [&](Mor m) { return s.morphism(ar->name(c_r(m))); });
  std::vector<Mor> unit;
  for (const Obj o : s.objects()) unit.push_back(s.morphism(ar->name(at_r.adjunction.unit()[incl(o)])));
  auto u = validate_nat_trans(identity_functor(sub), compose(right, left), std::move(unit));
  auto e = validate_nat_trans(compose(left, right), identity_functor(at_r.codomain.category),
                              at_r.adjunction.counit().components());
  Adjunction restricted = validate_adjunction(left, right, std::move(u), std::move(e));
  return SplitSubcategory{std::move(sub), std::move(at_r), std::move(restricted)};
}

TrivialGaloisReport trivial_galois(const Adjunction& adj, Obj s) {
  const CategoryPtr& ap = adj.domain();
  const FinCategory& a = *ap;
  const FinCategory& p = *adj.codomain();
  const Functor& d = adj.left();
  TrivialGaloisReport report;
  report.object = a.name(s);
  try {
    const auto one = terminal_object(a);
    if (!one) {
      report.failure = StepFailure{"descent", "the domain has no terminal object"};
      return report;
    }
    const auto descent = effective_descent_check(ap, to_terminal(a, s));
    report.descent = descent.effective();
    if (!descent.effective()) {
      report.failure = StepFailure{"descent", "!: " + a.name(s) + " → 1 is not of effective descent: " +
                                                  descent.verdict.failure->message};
      return report;
    }
    const auto sliced = slice_at_domain(adj, s);
    const auto eq = check_equivalence(sliced.adjunction.left());
    report.sliced_equivalence = static_cast<bool>(eq);
    if (!eq) {
      report.failure = StepFailure{"sliced", "the adjunction sliced at " + a.name(s) +
                                                 " is not an equivalence: " + eq.failure->message};
      return report;
    }
  } catch (const Error& e) {
    report.failure = StepFailure{"descent", what_of(e)};
    return report;
  }

  try {
    const InternalGroupoid pair = pair_groupoid(ap, s);
    report.groupoid = image_groupoid(d, pair);
    report.actions = g_object_category(*report.groupoid);
    const InternalGroupoid& g = *report.groupoid;
    const ActionCategory& actions = *report.actions;
    const Limit& ss = require_product(a, s, s);

    std::vector<Obj> omap;
    for (const Obj x : a.objects()) {
      const Limit& sx = require_product(a, s, x);
      const PullbackSquare e = require_pullback(a, pair.src, sx.legs[0]);
      const Mor shift = mediate(sx, {a.compose(ss.legs[0], e.proj1), a.compose(sx.legs[1], e.proj2)}, a);
      const Mor anchor = d(sx.legs[0]);
      const std::vector<Mor> legs{d(e.proj1), d(e.proj2)};
      if (!is_limit_cone(p, pullback_shape(p, g.src, anchor), d(e.apex), legs)) {
        throw Error(ErrorKind::PullbackNotPreserved, "pairs over " + a.name(s) + " acting on " + a.name(x) +
                                                         " are not sent to a pullback",
                    {a.name(pair.src), a.name(sx.legs[0])});
      }
      const PullbackSquare canonical = require_pullback(p, g.src, anchor);
      const Mor action = through_canonical(p, canonical, d(e.apex), legs[0], legs[1], d(shift));
      const auto o = actions.find(GObject{d(sx.apex), anchor, action});
      if (!o) {
        report.failure = StepFailure{"phi", "the image of " + a.name(x) + " is not a G-object"};
        return report;
      }
      omap.push_back(*o);
    }
    std::vector<Mor> mmap;
    const FinCategory& ac = *actions.category;
    for (const Mor k : a.morphisms()) {
      const Limit& from = require_product(a, s, a.dom(k));
      const Limit& to = require_product(a, s, a.cod(k));
      const Mor id_k = mediate(to, {from.legs[0], a.compose(k, from.legs[1])}, a);
      const Obj target = omap[a.cod(k).index];
      mmap.push_back(ac.morphism(slice_morphism_name(p.name(d(id_k)), ac.name(target))));
    }
    report.phi = validate_functor(ap, actions.category, std::move(omap), std::move(mmap));
    report.equivalence = check_equivalence(*report.phi);
    if (!*report.equivalence) report.failure = StepFailure{"equivalence", report.equivalence->failure->message};
  } catch (const Error& e) {
    report.failure = StepFailure{"groupoid", what_of(e)};
  }
  return report;
}

GaloisReport galois_theorem(const Adjunction& adj, Mor sigma) {
  const FinCategory& a = *adj.domain();
  GaloisReport report;
  report.sigma = a.name(sigma);
  std::string step = "conditions";
  try {
    const SigmaContext ctx = make_sigma_context(adj, sigma);
    report.conditions = check_galois_descent(ctx);
    if (!report.conditions->all()) {
      const auto& c = *report.conditions;
      report.failure = StepFailure{
          "conditions", !c.effective   ? "(i) σ* is not monadic: " + c.descent_failure->message
                        : !c.counit_iso ? "(ii) sliced counit not invertible at " + *c.counit_failure
                                        : "(iii) sliced unit not invertible over " + *c.unit_failure};
      return report;
    }

    step = "(a)";
    report.split = split_subcategory(adj, ctx);
    const SplitSubcategory& split = *report.split;
    const CategoryPtr& sp = split.category;

    step = "(b)";
    const auto s_sigma = sp->find_object(a.name(sigma));
    if (!s_sigma) {
      report.failure = StepFailure{step, "S_σ is not σ-split"};
      return report;
    }

    step = "(c)";
    report.lemma = lemma_technical_check(split.restricted, *s_sigma);
    if (!report.lemma->hypotheses_hold() || !report.lemma->conclusion_holds()) {
      report.failure = StepFailure{step, "the technical lemma does not apply at S_σ"};
      return report;
    }
    const auto over_s = slice_at_domain(split.restricted, *s_sigma);
    report.slice_equivalence = static_cast<bool>(check_equivalence(over_s.adjunction.left()));
    if (!*report.slice_equivalence) {
      report.failure = StepFailure{step, "Split_R(σ)/S_σ is not equivalent to P/ℒ(S_σ)"};
      return report;
    }

    step = "(d)";
    const auto restricted = effective_descent_check(sp, to_terminal(*sp, *s_sigma));
    report.restricted_descent = restricted.effective();
    if (!restricted.effective()) {
      report.failure = StepFailure{step, "(S_σ)* is not monadic: " + restricted.verdict.failure->message};
      return report;
    }

    step = "trivial";
    report.trivial = trivial_galois(split.restricted, *s_sigma);
    if (!report.trivial->ok()) {
      report.failure = StepFailure{step, report.trivial->failure ? report.trivial->failure->message
                                                                 : "trivial case did not produce an equivalence"};
      return report;
    }

    step = "reindex";
    report.galois_groupoid = reindex_groupoid(*report.trivial->groupoid, split.at_r.codomain);

    step = "equivalence";
    report.equivalence = check_equivalence(compose(report.galois_groupoid->comparison, *report.trivial->phi));
    if (!*report.equivalence) report.failure = StepFailure{step, report.equivalence->failure->message};
  } catch (const Error& e) {
    report.failure = StepFailure{step, what_of(e)};
  }
  return report;
}

ConverseReport converse_check(const Adjunction& adj, Obj w) {
  const FinCategory& a = *adj.domain();
  ConverseReport report;
  report.object = a.name(w);
  std::string step = "hypotheses";
  try {
    if (!terminal_object(a)) {
      report.failure = StepFailure{step, "the domain has no terminal object"};
      return report;
    }
    const Mor bang = to_terminal(a, w);
    const auto descent = effective_descent_check(adj.domain(), bang);
    report.descent = descent.effective();
    report.sliced_equivalence = static_cast<bool>(check_equivalence(slice_at_domain(adj, w).adjunction.left()));
    if (!report.descent || !report.sliced_equivalence) {
      report.failure = StepFailure{step, !report.descent ? "!: " + a.name(w) + " → 1 is not of effective descent"
                                                         : "the adjunction sliced at " + a.name(w) +
                                                               " is not an equivalence"};
      return report;
    }
    step = "split";
    const SigmaContext ctx = make_sigma_context(adj, bang);
    const FinCategory& over_one = *ctx.along.over_codomain.category;
    report.all_split = true;
    for (const Obj o : over_one.objects()) {
      if (!is_sigma_split(ctx, o).split) {
        report.all_split = false;
        report.unsplit = over_one.name(o);
        break;
      }
    }
    step = "conditions";
    report.galois_descent = check_galois_descent(ctx).all();
    step = "(a)";
    const auto split = split_subcategory(adj, ctx);
    report.split_is_everything = split.category->num_objects() == over_one.num_objects() &&
                                 split.category->num_morphisms() == over_one.num_morphisms();
  } catch (const Error& e) {
    report.failure = StepFailure{step, what_of(e)};
  }
  return report;
}

}  // namespace catgal
