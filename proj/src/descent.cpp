#include "catgal/descent.hpp"

#include <map>

namespace catgal {

Monad monad_of(const Adjunction& adj) {
  const FinCategory& a = *adj.domain();
  Functor t = compose(adj.right(), adj.left());
  std::vector<Mor> mult;
  for (const Obj x : a.objects()) mult.push_back(adj.right()(adj.counit()[adj.left()(x)]));
  NatTrans mu = validate_nat_trans(compose(t, t), t, std::move(mult));
  const NatTrans& eta = adj.unit();
  for (const Obj x : a.objects()) {
    const Mor id = t.target().id(t(x));
    if (a.compose(mu[x], eta[t(x)]) != id || a.compose(mu[x], t(eta[x])) != id) {
      throw Error(ErrorKind::AxiomFailure, "monad unit law fails at '" + a.name(x) + "'", {a.name(x)});
    }
    if (a.compose(mu[x], t(mu[x])) != a.compose(mu[x], mu[t(x)])) {
      throw Error(ErrorKind::AxiomFailure, "monad associativity fails at '" + a.name(x) + "'", {a.name(x)});
    }
  }
  return Monad{adj.domain(), std::move(t), eta, std::move(mu)};
}

bool is_algebra(const Monad& t, Mor action) {
  const FinCategory& c = *t.base;
  const Obj x = c.cod(action);
  if (c.dom(action) != t.endo(x)) return false;
  return c.compose(action, t.unit[x]) == c.id(x) &&
         c.compose(action, t.endo(action)) == c.compose(action, t.mult[x]);
}

EMCategory em_category(const Monad& t) {
  const FinCategory& c = *t.base;
  std::vector<Mor> algebras;
  for (const Obj x : c.objects()) {
    for (const Mor alpha : c.hom(t.endo(x), x)) {
      if (is_algebra(t, alpha)) algebras.push_back(alpha);
    }
  }
  CategoryBuilder b;
  for (const Mor alpha : algebras) b.add_object(c.name(alpha));
  struct Local {
    Mor k;
    std::uint32_t tgt;
  };
  std::vector<Local> mors;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> by_pair;
  for (std::uint32_t i = 0; i < algebras.size(); ++i) {
    for (std::uint32_t j = 0; j < algebras.size(); ++j) {
      const Mor ai = algebras[i], aj = algebras[j];
      for (const Mor k : c.hom(c.cod(ai), c.cod(aj))) {
        if (c.compose(aj, t.endo(k)) != c.compose(k, ai)) continue;
        by_pair.emplace(std::pair{k.index, j}, b.add_morphism(slice_morphism_name(c.name(k), c.name(aj)), i, j));
        mors.push_back({k, j});
      }
    }
  }
  for (std::uint32_t i = 0; i < algebras.size(); ++i) {
    b.set_identity(i, by_pair.at({c.id(c.cod(algebras[i])).index, i}));
  }
  b.compose_with([&](std::uint32_t g, std::uint32_t f) {
    return by_pair.at({c.compose(mors[g].k, mors[f].k).index, mors[g].tgt});
  });
  CategoryPtr em = b.build();

  std::vector<Mor> action(em->num_objects());
  for (const Mor alpha : algebras) action[em->object(c.name(alpha)).index] = alpha;
  std::vector<Mor> underlying(em->num_morphisms());
  for (const auto& m : mors) {
    underlying[em->morphism(slice_morphism_name(c.name(m.k), c.name(algebras[m.tgt]))).index] = m.k;
  }
  Functor forget = make_functor(
      em, t.base, [&](Obj o) { return c.cod(action[o.index]); }, [&](Mor m) { return underlying[m.index]; });
  return EMCategory{em, std::move(forget), std::move(action)};
}

Functor comparison_functor(const Adjunction& adj, const EMCategory& em) {
  const FinCategory& a = *adj.domain();
  const FinCategory& e = *em.category;
  const auto algebra_of = [&](Obj z) { return e.object(a.name(adj.right()(adj.counit()[z]))); };
  return make_functor(adj.codomain(), em.category, algebra_of, [&](Mor m) {
    const Obj target = algebra_of(adj.codomain()->cod(m));
    return e.morphism(slice_morphism_name(a.name(adj.right()(m)), a.name(em.action[target.index])));
  });
}

DescentReport effective_descent_check(const CategoryPtr& c, Mor sigma) {
  PullbackAdjunction pb = pullback_adjunction(c, sigma);
  Monad t = monad_of(pb.adjunction);
  EMCategory em = em_category(t);
  Functor k = comparison_functor(pb.adjunction, em);
  EquivalenceResult verdict = check_equivalence(k);
  return DescentReport{sigma, std::move(pb), std::move(t), std::move(em), std::move(k), std::move(verdict)};
}

namespace {

std::optional<SplitFork> search_oriented(const FinCategory& c, Mor f, Mor g, SearchBudget& budget) {
  const Obj a = c.dom(f), b = c.cod(f);
  for (const Obj q_obj : c.objects()) {
    for (const Mor q : c.hom(b, q_obj)) {
      budget.charge();
      if (c.compose(q, f) != c.compose(q, g)) continue;
      for (const Mor s : c.hom(q_obj, b)) {
        budget.charge();
        if (c.compose(q, s) != c.id(q_obj)) continue;
        for (const Mor t : c.hom(b, a)) {
          budget.charge(2);
          if (c.compose(f, t) == c.id(b) && c.compose(g, t) == c.compose(s, q)) return SplitFork{q, s, t, false};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SplitFork> split_coequalizer_search(const FinCategory& c, Mor f, Mor g, SearchBudget& budget) {
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) {
    throw Error(ErrorKind::IllTyped, "split coequalizer of a non-parallel pair");
  }
  if (auto fork = search_oriented(c, f, g, budget)) return fork;
  if (auto fork = search_oriented(c, g, f, budget)) {
    fork->swapped = true;
    return fork;
  }
  return std::nullopt;
}

std::optional<SplitFork> split_coequalizer_search(const FinCategory& c, Mor f, Mor g) {
  SearchBudget budget;
  return split_coequalizer_search(c, f, g, budget);
}

}  // namespace catgal
