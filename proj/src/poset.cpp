#include "catgal/poset.hpp"

#include <algorithm>

namespace catgal {

CategoryPtr poset_category(std::vector<std::string> elements,
                           const std::function<bool(const std::string&, const std::string&)>& leq) {
  std::sort(elements.begin(), elements.end());
  const auto n = static_cast<std::uint32_t>(elements.size());
  CategoryBuilder b;
  for (const auto& x : elements) b.add_object(x);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> arrow;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j && !leq(elements[i], elements[j])) continue;
      const std::string name = i == j ? "id_" + elements[i] : elements[i] + "->" + elements[j];
      arrow[{i, j}] = b.add_morphism(name, i, j);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) b.set_identity(i, arrow.at({i, i}));
  for (const auto& [f, fm] : arrow) {
    for (const auto& [g, gm] : arrow) {
      if (g.first != f.second) continue;
      // a missing x → z is reported by the validator as a missing composite
      if (auto it = arrow.find({f.first, g.second}); it != arrow.end()) b.set_composite(gm, fm, it->second);
    }
  }
  return b.build();
}

CategoryPtr chain(std::uint32_t n) {
  std::vector<std::string> letters;
  for (std::uint32_t i = 0; i < n; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
  return poset_category(letters, [](const std::string& x, const std::string& y) { return x <= y; });
}

Mor thin_arrow(const FinCategory& c, Obj x, Obj y) {
  const auto h = c.hom(x, y);
  if (h.size() != 1) {
    throw Error(ErrorKind::IllTyped, "expected exactly one arrow " + c.name(x) + " → " + c.name(y),
                {c.name(x), c.name(y)});
  }
  return h[0];
}

Functor monotone_functor(CategoryPtr src, CategoryPtr tgt, const std::map<std::string, std::string>& on_objects) {
  const FinCategory& s = *src;
  const FinCategory& t = *tgt;
  std::vector<Obj> omap;
  for (const Obj x : s.objects()) {
    auto it = on_objects.find(s.name(x));
    if (it == on_objects.end()) throw Error(ErrorKind::UnknownObject, "no image for '" + s.name(x) + "'", {s.name(x)});
    omap.push_back(t.object(it->second));
  }
  std::vector<Mor> mmap;
  for (const Mor m : s.morphisms()) mmap.push_back(thin_arrow(t, omap[s.dom(m).index], omap[s.cod(m).index]));
  return validate_functor(std::move(src), std::move(tgt), std::move(omap), std::move(mmap));
}

Adjunction galois_connection(CategoryPtr a, CategoryPtr p, const std::map<std::string, std::string>& left,
                             const std::map<std::string, std::string>& right) {
  Functor l = monotone_functor(a, p, left);
  Functor r = monotone_functor(p, a, right);
  const auto forced = [](const FinCategory& c, Obj x, Obj y) {
    const auto h = c.hom(x, y);
    if (h.empty()) {
      throw Error(ErrorKind::HypothesisFailed, "not a Galois connection: " + c.name(x) + " ≰ " + c.name(y),
                  {c.name(x), c.name(y)});
    }
    return h[0];
  };
  std::vector<Mor> unit, counit;
  for (const Obj x : a->objects()) unit.push_back(forced(*a, x, r(l(x))));
  for (const Obj y : p->objects()) counit.push_back(forced(*p, l(r(y)), y));
  Functor rl = compose(r, l);
  Functor lr = compose(l, r);
  auto eta = validate_nat_trans(identity_functor(a), std::move(rl), std::move(unit));
  auto eps = validate_nat_trans(std::move(lr), identity_functor(p), std::move(counit));
  return validate_adjunction(std::move(l), std::move(r), std::move(eta), std::move(eps));
}

CategoryPtr group_as_category(const GroupTable& g) {
  CategoryBuilder b;
  b.add_object("*");
  for (const auto& e : g.elements) b.add_morphism(e, 0, 0);
  b.set_identity(0, g.unit);
  b.compose_with([&](std::uint32_t x, std::uint32_t y) { return g.mult[x][y]; });
  return b.build();
}

}  // namespace catgal
