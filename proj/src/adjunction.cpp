#include "catgal/adjunction.hpp"

namespace catgal {

namespace {

[[noreturn]] void ill_typed(const std::string& message) { throw Error(ErrorKind::IllTyped, message); }

// The slice object a slice morphism points at, read as its structure map.
Obj target_of(const Slice& s, Mor m) { return s.category->cod(m); }

}  // namespace

Adjunction validate_adjunction(Functor left, Functor right, NatTrans unit, NatTrans counit) {
  if (!same_category(left.src(), right.tgt()) || !same_category(left.tgt(), right.src())) {
    ill_typed("left and right adjoints are not opposed");
  }
  const FinCategory& a = left.source();
  const FinCategory& p = left.target();
  const Functor rl = compose(right, left);
  const Functor lr = compose(left, right);
  if (!same_functor(unit.source_functor(), identity_functor(left.src())) ||
      !same_functor(unit.target_functor(), rl)) {
    ill_typed("unit is not a transformation Id ⇒ RL");
  }
  if (!same_functor(counit.source_functor(), lr) ||
      !same_functor(counit.target_functor(), identity_functor(left.tgt()))) {
    ill_typed("counit is not a transformation LR ⇒ Id");
  }
  for (const Obj x : a.objects()) {
    if (p.compose(counit[left(x)], left(unit[x])) != p.id(left(x))) {
      throw Error(ErrorKind::TriangleIdentityFailure,
                  "ε_L ∘ Lη ≠ id at '" + a.name(x) + "'", {"left", a.name(x)});
    }
  }
  for (const Obj z : p.objects()) {
    if (a.compose(right(counit[z]), unit[right(z)]) != a.id(right(z))) {
      throw Error(ErrorKind::TriangleIdentityFailure,
                  "Rε ∘ η_R ≠ id at '" + p.name(z) + "'", {"right", p.name(z)});
    }
  }
  return Adjunction(std::move(left), std::move(right), std::move(unit), std::move(counit));
}

Adjunction identity_adjunction(const CategoryPtr& c) {
  const Functor id = identity_functor(c);
  return validate_adjunction(id, id, identity_transformation(id), identity_transformation(id));
}

Mor transpose_to_domain(const Adjunction& adj, Obj a, Mor m) {
  const FinCategory& p = *adj.codomain();
  if (p.dom(m) != adj.left()(a)) ill_typed("'" + p.name(m) + "' does not start at L(" + adj.domain()->name(a) + ")");
  return adj.domain()->compose(adj.right()(m), adj.unit()[a]);
}

Mor transpose_to_codomain(const Adjunction& adj, Mor m, Obj x) {
  const FinCategory& a = *adj.domain();
  if (a.cod(m) != adj.right()(x)) ill_typed("'" + a.name(m) + "' does not end at R(" + adj.codomain()->name(x) + ")");
  return adj.codomain()->compose(adj.counit()[x], adj.left()(m));
}

Adjunction compose_adjunctions(const Adjunction& second, const Adjunction& first) {
  const Functor left = compose(second.left(), first.left());
  const Functor right = compose(first.right(), second.right());
  const FinCategory& a = *first.domain();
  const FinCategory& c = *second.codomain();
  std::vector<Mor> unit;
  for (const Obj x : a.objects()) {
    unit.push_back(a.compose(first.right()(second.unit()[first.left()(x)]), first.unit()[x]));
  }
  std::vector<Mor> counit;
  for (const Obj z : c.objects()) {
    counit.push_back(c.compose(second.counit()[z], second.left()(first.counit()[second.right()(z)])));
  }
  auto u = validate_nat_trans(identity_functor(left.src()), compose(right, left), std::move(unit));
  auto e = validate_nat_trans(compose(left, right), identity_functor(left.tgt()), std::move(counit));
  return validate_adjunction(left, right, std::move(u), std::move(e));
}

PullbackAdjunction pullback_adjunction(const CategoryPtr& cp, Mor f) {
  const FinCategory& c = *cp;
  Slice sx = slice_category(cp, c.dom(f));
  Slice sy = slice_category(cp, c.cod(f));
  const FinCategory& x = *sx.category;
  const FinCategory& y = *sy.category;

  std::vector<PullbackSquare> squares;
  for (const Obj o : y.objects()) squares.push_back(require_pullback(c, f, sy.structure[o.index]));

  auto sigma = make_functor(
      sx.category, sy.category, [&](Obj o) { return sy.object(c.compose(f, sx.structure[o.index])); },
      [&](Mor m) {
        const Obj t = target_of(sx, m);
        return sy.morphism(sx.underlying[m.index], sy.object(c.compose(f, sx.structure[t.index])));
      });
  auto star = make_functor(
      sy.category, sx.category, [&](Obj o) { return sx.object(squares[o.index].proj1); },
      [&](Mor m) {
        const auto& from = squares[y.dom(m).index];
        const auto& to = squares[y.cod(m).index];
        const Mor u = mediate(*to.limit, {from.proj1, c.compose(sy.underlying[m.index], from.proj2)}, c);
        return sx.morphism(u, sx.object(to.proj1));
      });

  std::vector<Mor> unit;
  for (const Obj o : x.objects()) {
    const Mor g = sx.structure[o.index];
    const Obj s = sigma(o);
    const auto& sq = squares[s.index];
    const Mor u = mediate(*sq.limit, {g, c.id(c.dom(g))}, c);
    unit.push_back(sx.morphism(u, sx.object(sq.proj1)));
  }
  std::vector<Mor> counit;
  for (const Obj o : y.objects()) counit.push_back(sy.morphism(squares[o.index].proj2, o));

  auto u = validate_nat_trans(identity_functor(sx.category), compose(star, sigma), std::move(unit));
  auto e = validate_nat_trans(compose(sigma, star), identity_functor(sy.category), std::move(counit));
  auto adj = validate_adjunction(sigma, star, std::move(u), std::move(e));
  return PullbackAdjunction{f, std::move(sx), std::move(sy), std::move(adj)};
}

SlicedAdjunction slice_at_codomain(const Adjunction& adj, Obj xo) {
  const FinCategory& a = *adj.domain();
  const FinCategory& p = *adj.codomain();
  const Functor& l = adj.left();
  const Functor& r = adj.right();
  Slice sa = slice_category(adj.domain(), r(xo));
  Slice sp = slice_category(adj.codomain(), xo);
  const Mor eps_x = adj.counit()[xo];

  const auto lx_obj = [&](Obj o) { return sp.object(p.compose(eps_x, l(sa.structure[o.index]))); };
  const auto rx_obj = [&](Obj o) { return sa.object(r(sp.structure[o.index])); };
  auto lx = make_functor(sa.category, sp.category, lx_obj, [&](Mor m) {
    return sp.morphism(l(sa.underlying[m.index]), lx_obj(target_of(sa, m)));
  });
  auto rx = make_functor(sp.category, sa.category, rx_obj, [&](Mor m) {
    return sa.morphism(r(sp.underlying[m.index]), rx_obj(target_of(sp, m)));
  });

  std::vector<Mor> unit;
  for (const Obj o : sa.category->objects()) {
    unit.push_back(sa.morphism(adj.unit()[a.dom(sa.structure[o.index])], rx_obj(lx_obj(o))));
  }
  std::vector<Mor> counit;
  for (const Obj o : sp.category->objects()) {
    counit.push_back(sp.morphism(adj.counit()[p.dom(sp.structure[o.index])], o));
  }
  auto u = validate_nat_trans(identity_functor(sa.category), compose(rx, lx), std::move(unit));
  auto e = validate_nat_trans(compose(lx, rx), identity_functor(sp.category), std::move(counit));
  auto sliced = validate_adjunction(lx, rx, std::move(u), std::move(e));
  return SlicedAdjunction{AnchorSide::Codomain, xo, std::move(sa), std::move(sp), std::move(sliced)};
}

SlicedAdjunction slice_at_domain(const Adjunction& adj, Obj w) {
  const FinCategory& a = *adj.domain();
  const FinCategory& p = *adj.codomain();
  const Functor& l = adj.left();
  const Functor& r = adj.right();
  Slice sa = slice_category(adj.domain(), w);
  Slice sp = slice_category(adj.codomain(), l(w));
  const Mor eta_w = adj.unit()[w];

  std::vector<PullbackSquare> squares;
  for (const Obj o : sp.category->objects()) squares.push_back(require_pullback(a, eta_w, r(sp.structure[o.index])));

  const auto lw_obj = [&](Obj o) { return sp.object(l(sa.structure[o.index])); };
  const auto rw_obj = [&](Obj o) { return sa.object(squares[o.index].proj1); };
  auto lw = make_functor(sa.category, sp.category, lw_obj, [&](Mor m) {
    return sp.morphism(l(sa.underlying[m.index]), lw_obj(target_of(sa, m)));
  });
  auto rw = make_functor(sp.category, sa.category, rw_obj, [&](Mor m) {
    const auto& from = squares[sp.category->dom(m).index];
    const auto& to = squares[sp.category->cod(m).index];
    const Mor u = mediate(*to.limit, {from.proj1, a.compose(r(sp.underlying[m.index]), from.proj2)}, a);
    return sa.morphism(u, sa.object(to.proj1));
  });

  std::vector<Mor> unit;
  for (const Obj o : sa.category->objects()) {
    const Mor g = sa.structure[o.index];
    const auto& sq = squares[lw_obj(o).index];
    const Mor u = mediate(*sq.limit, {g, adj.unit()[a.dom(g)]}, a);
    unit.push_back(sa.morphism(u, sa.object(sq.proj1)));
  }
  std::vector<Mor> counit;
  for (const Obj o : sp.category->objects()) {
    const Obj z = p.dom(sp.structure[o.index]);
    counit.push_back(sp.morphism(p.compose(adj.counit()[z], l(squares[o.index].proj2)), o));
  }
  auto u = validate_nat_trans(identity_functor(sa.category), compose(rw, lw), std::move(unit));
  auto e = validate_nat_trans(compose(lw, rw), identity_functor(sp.category), std::move(counit));
  auto sliced = validate_adjunction(lw, rw, std::move(u), std::move(e));
  return SlicedAdjunction{AnchorSide::Domain, w, std::move(sa), std::move(sp), std::move(sliced)};
}

NatTrans right_adjoint_comparison(const Adjunction& first, const Adjunction& second) {
  if (!same_functor(first.left(), second.left())) ill_typed("adjunctions do not share their left adjoint");
  const FinCategory& a = *first.domain();
  std::vector<Mor> comps;
  for (const Obj z : first.codomain()->objects()) {
    comps.push_back(a.compose(second.right()(first.counit()[z]), second.unit()[first.right()(z)]));
  }
  return validate_nat_trans(first.right(), second.right(), std::move(comps));
}

AdjointAgreement compare_adjunctions(const Adjunction& x, const Adjunction& y) {
  AdjointAgreement out;
  if (!parallel(x.left(), y.left())) {
    out.detail = "adjunctions are not parallel";
    return out;
  }
  out.left_strict = same_functor(x.left(), y.left());
  if (!out.left_strict) {
    out.detail = "left adjoints differ";
    return out;
  }
  NatTrans theta = right_adjoint_comparison(x, y);
  if (!is_natural_iso(theta)) {
    out.detail = "comparison of right adjoints is not invertible";
    return out;
  }
  out.right_iso = std::move(theta);
  return out;
}

AdjointAgreement composition_fact_domain(const Adjunction& adj, Obj w) {
  const auto sliced = slice_at_domain(adj, w);
  const auto along_unit = pullback_adjunction(adj.domain(), adj.unit()[w]);
  const auto at_lw = slice_at_codomain(adj, adj.left()(w));
  return compare_adjunctions(sliced.adjunction, compose_adjunctions(at_lw.adjunction, along_unit.adjunction));
}

AdjointAgreement composition_fact_codomain(const Adjunction& adj, Obj x) {
  const auto sliced = slice_at_codomain(adj, x);
  const auto at_rx = slice_at_domain(adj, adj.right()(x));
  const auto along_counit = pullback_adjunction(adj.codomain(), adj.counit()[x]);
  return compare_adjunctions(sliced.adjunction, compose_adjunctions(along_counit.adjunction, at_rx.adjunction));
}

AdjointAgreement commuting_square(const Adjunction& adj, Mor g) {
  const FinCategory& a = *adj.domain();
  const auto sigma_g = pullback_adjunction(adj.domain(), g);
  const auto sigma_lg = pullback_adjunction(adj.codomain(), adj.left()(g));
  const auto at_w = slice_at_domain(adj, a.dom(g));
  const auto at_v = slice_at_domain(adj, a.cod(g));
  return compare_adjunctions(compose_adjunctions(at_v.adjunction, sigma_g.adjunction),
                             compose_adjunctions(sigma_lg.adjunction, at_w.adjunction));
}

Reassociation slice_reassociation(const CategoryPtr& cp, Mor f) {
  const FinCategory& c = *cp;
  Slice sx = slice_category(cp, c.dom(f));
  Slice sy = slice_category(cp, c.cod(f));
  const Obj xf = sy.object(f);
  Slice it = slice_category(sy.category, xf);

  // C/X object g ↦ the C/Y morphism g: (f∘g) → f.
  const auto as_sy_morphism = [&](Obj o) { return sy.morphism(sx.structure[o.index], xf); };
  auto forward = make_functor(
      sx.category, it.category, [&](Obj o) { return it.object(as_sy_morphism(o)); },
      [&](Mor m) {
        const Obj t = target_of(sx, m);
        const Mor k = sy.morphism(sx.underlying[m.index], sy.object(c.compose(f, sx.structure[t.index])));
        return it.morphism(k, it.object(as_sy_morphism(t)));
      });
  auto backward = make_functor(
      it.category, sx.category,
      [&](Obj o) { return sx.object(sy.underlying[it.structure[o.index].index]); },
      [&](Mor m) {
        const Obj t = target_of(it, m);
        const Mor k = sy.underlying[it.underlying[m.index].index];
        return sx.morphism(k, sx.object(sy.underlying[it.structure[t.index].index]));
      });
  if (!same_functor(compose(backward, forward), identity_functor(sx.category)) ||
      !same_functor(compose(forward, backward), identity_functor(it.category))) {
    throw Error(ErrorKind::AxiomFailure, "reassociation functors are not mutually inverse");
  }
  return Reassociation{std::move(sx), std::move(sy), std::move(it), std::move(forward), std::move(backward)};
}

SplitMonoFork split_mono_equalizer(const CategoryPtr& cp, Mor g, Mor n, Mor k) {
  const FinCategory& c = *cp;
  if (c.cod(n) != c.dom(g) || c.dom(k) != c.cod(n) || c.cod(k) != c.dom(n)) {
    ill_typed("expected g: Z → X, n: Y → Z, k: Z → Y");
  }
  if (c.compose(k, n) != c.id(c.dom(n))) {
    throw Error(ErrorKind::NotASplitting, c.name(k) + "∘" + c.name(n) + " is not the identity",
                {c.name(k), c.name(n)});
  }
  const Obj x = c.cod(g), y = c.dom(n), z = c.dom(g);
  const Limit& xy = require_product(c, x, y);
  const Limit& xz = require_product(c, x, z);
  const Mor gk = mediate(xy, {g, k}, c);
  const Mor id_times_n = mediate(xz, {xy.legs[0], c.compose(n, xy.legs[1])}, c);
  const Mor a_base = c.compose(id_times_n, gk);
  const Mor b_base = mediate(xz, {g, c.id(z)}, c);

  Slice s = slice_category(cp, x);
  const FinCategory& sc = *s.category;
  const Obj zx = s.object(xz.legs[0]);
  SplitMonoFork out{std::move(s), {}, {}, {}, false, std::nullopt};
  out.a = out.slice.morphism(a_base, zx);
  out.b = out.slice.morphism(b_base, zx);
  out.n = out.slice.morphism(n, out.slice.object(g));
  const Obj yf = out.slice.object(c.compose(g, n));
  const std::vector<Mor> legs{out.n};
  out.is_equalizer = is_limit_cone(sc, equalizer_shape(sc, out.a, out.b), yf, legs);
  if (const Limit* eq = equalizer(sc, out.a, out.b)) out.chosen_apex = eq->apex;
  return out;
}

bool LemmaReport::conclusion_holds() const {
  if (!hypotheses_hold()) return false;
  for (const auto& o : objects) {
    if (!o.biconditional) return false;
    if (o.product_unit_iso && !o.splitting_verified) return false;
  }
  return true;
}

LemmaReport lemma_technical_check(const Adjunction& adj, Obj w) {
  const FinCategory& a = *adj.domain();
  const Functor& l = adj.left();
  const Functor& r = adj.right();
  const auto sliced = slice_at_domain(adj, w);
  const Slice& sa = sliced.domain;
  const Slice& sp = sliced.codomain;
  const FinCategory& aw = *sa.category;
  const FinCategory& plw = *sp.category;
  const NatTrans& eta_w = sliced.adjunction.unit();
  const NatTrans& eps_w = sliced.adjunction.counit();

  LemmaReport report;
  report.anchor = a.name(w);

  // W*V = π1: W×V → W as an object of A/W.
  const auto pulled_back = [&](Obj v) { return sa.object(require_product(a, w, v).legs[0]); };

  report.counit_iso = true;
  for (const Obj o : plw.objects()) {
    if (!is_iso(plw, eps_w[o])) {
      report.counit_iso = false;
      report.counit_failure = plw.name(o);
      break;
    }
  }
  report.unit_hypothesis = true;
  for (const Obj o : plw.objects()) {
    const Obj rw = sliced.adjunction.right()(o);
    const Obj target = pulled_back(a.dom(sa.structure[rw.index]));
    if (!is_iso(aw, eta_w[target])) {
      report.unit_hypothesis = false;
      report.unit_failure = plw.name(o);
      break;
    }
  }
  if (!report.hypotheses_hold()) return report;

  for (const Obj o : aw.objects()) {
    const Mor f = sa.structure[o.index];
    const Obj v = a.dom(f);
    const Limit& wv = require_product(a, w, v);
    const Obj wv_obj = sa.object(wv.legs[0]);
    LemmaObjectResult res;
    res.object = aw.name(o);
    res.unit_iso = is_iso(aw, eta_w[o]);
    res.product_unit_iso = is_iso(aw, eta_w[wv_obj]);
    res.biconditional = res.unit_iso == res.product_unit_iso;
    if (res.product_unit_iso) {
      const Mor inv = sa.underlying[morphism_inverse(aw, eta_w[wv_obj])->index];
      const Mor lmap = a.compose(wv.legs[1], inv);
      const auto outer = require_pullback(a, adj.unit()[w], r(l(wv.legs[0])));
      const auto inner = require_pullback(a, adj.unit()[w], r(l(f)));
      const Mor f_id = mediate(wv, {f, a.id(v)}, a);
      const Mor id_times = mediate(*outer.limit, {inner.proj1, a.compose(r(l(f_id)), inner.proj2)}, a);
      const Mor split = a.compose(lmap, id_times);
      res.splitting = a.name(split);
      res.splitting_verified = a.compose(split, sa.underlying[eta_w[o].index]) == a.id(v);
    }
    report.objects.push_back(std::move(res));
  }
  return report;
}

}  // namespace catgal
