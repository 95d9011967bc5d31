#include "catgal/limits.hpp"

#include <set>

namespace catgal {

namespace detail {
std::shared_ptr<LimitMemo> make_limit_memo() { return std::make_shared<LimitMemo>(); }
}  // namespace detail

namespace {

bool satisfies(const FinCategory& c, const LimitShape& shape, std::span<const Mor> legs) {
  for (const auto& e : shape.equations) {
    if (c.compose(e.mor_a, legs[e.leg_a]) != c.compose(e.mor_b, legs[e.leg_b])) return false;
  }
  return true;
}

void enumerate(const FinCategory& c, const LimitShape& shape, Obj apex, std::vector<Mor>& legs,
               std::vector<std::vector<Mor>>& out) {
  const auto i = legs.size();
  if (i == shape.targets.size()) {
    if (satisfies(c, shape, legs)) out.push_back(legs);
    return;
  }
  for (const Mor m : c.hom(apex, shape.targets[i])) {
    legs.push_back(m);
    enumerate(c, shape, apex, legs, out);
    legs.pop_back();
  }
}

std::vector<std::uint32_t> cone_key(Obj apex, std::span<const Mor> legs) {
  std::vector<std::uint32_t> key{apex.index};
  for (const Mor m : legs) key.push_back(m.index);
  return key;
}

std::vector<std::uint32_t> shape_key(const LimitShape& shape) {
  std::vector<std::uint32_t> key;
  for (const Obj x : shape.targets) key.push_back(x.index);
  key.push_back(0xffffffffU);
  for (const auto& e : shape.equations) {
    key.insert(key.end(), {e.leg_a, e.mor_a.index, e.leg_b, e.mor_b.index});
  }
  return key;
}

// Universal property of (apex, legs) given the cone counts of every object.
bool universal(const FinCategory& c, Obj apex, std::span<const Mor> legs, const std::vector<std::size_t>& counts) {
  for (const Obj q : c.objects()) {
    const auto hom = c.hom(q, apex);
    if (hom.size() != counts[q.index]) return false;
    std::set<std::vector<std::uint32_t>> images;
    for (const Mor m : hom) {
      std::vector<std::uint32_t> img;
      img.reserve(legs.size());
      for (const Mor l : legs) img.push_back(c.compose(l, m).index);
      if (!images.insert(std::move(img)).second) return false;
    }
  }
  return true;
}

std::vector<std::size_t> cone_counts(const FinCategory& c, const LimitShape& shape) {
  std::vector<std::size_t> counts;
  for (const Obj q : c.objects()) counts.push_back(cones_over(c, shape, q).size());
  return counts;
}

}  // namespace

std::vector<std::vector<Mor>> cones_over(const FinCategory& c, const LimitShape& shape, Obj apex) {
  std::vector<std::vector<Mor>> out;
  std::vector<Mor> legs;
  enumerate(c, shape, apex, legs, out);
  return out;
}

bool is_limit_cone(const FinCategory& c, const LimitShape& shape, Obj apex, std::span<const Mor> legs) {
  if (!satisfies(c, shape, legs)) return false;
  return universal(c, apex, legs, cone_counts(c, shape));
}

const std::optional<Limit>& find_limit(const FinCategory& c, const LimitShape& shape) {
  auto& memo = c.limit_memo();
  const auto key = shape_key(shape);
  std::lock_guard lock(memo.mutex);
  if (auto it = memo.entries.find(key); it != memo.entries.end()) return *it->second;

  std::optional<Limit> result;
  const auto counts = cone_counts(c, shape);
  for (const Obj p : c.objects()) {
    bool sizes_match = true;
    for (const Obj q : c.objects()) {
      if (c.hom(q, p).size() != counts[q.index]) {
        sizes_match = false;
        break;
      }
    }
    if (!sizes_match) continue;
    for (const auto& legs : cones_over(c, shape, p)) {
      if (!universal(c, p, legs, counts)) continue;
      Limit lim{p, legs, {}};
      for (const Obj q : c.objects()) {
        for (const Mor m : c.hom(q, p)) {
          std::vector<Mor> composed;
          for (const Mor l : legs) composed.push_back(c.compose(l, m));
          lim.mediators.emplace(cone_key(q, composed), m);
        }
      }
      result = std::move(lim);
      break;
    }
    if (result) break;
  }
  auto stored = std::make_shared<const std::optional<Limit>>(std::move(result));
  return *memo.entries.emplace(key, std::move(stored)).first->second;
}

std::optional<Obj> terminal_object(const FinCategory& c) {
  const auto& lim = find_limit(c, LimitShape{});
  if (!lim) return std::nullopt;
  return lim->apex;
}

Mor to_terminal(const FinCategory& c, Obj x) {
  const auto one = terminal_object(c);
  if (!one) throw Error(ErrorKind::MissingTerminal, "category has no terminal object");
  return c.hom(x, *one).front();
}

LimitShape product_shape(Obj x, Obj y) { return LimitShape{{x, y}, {}}; }

LimitShape pullback_shape(const FinCategory& c, Mor f, Mor g) {
  if (c.cod(f) != c.cod(g)) {
    throw Error(ErrorKind::IllTyped, "pullback of non-cospan (" + c.name(f) + ", " + c.name(g) + ")");
  }
  return LimitShape{{c.dom(f), c.dom(g)}, {ConeEquation{0, f, 1, g}}};
}

LimitShape equalizer_shape(const FinCategory& c, Mor f, Mor g) {
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) {
    throw Error(ErrorKind::IllTyped, "equalizer of non-parallel pair (" + c.name(f) + ", " + c.name(g) + ")");
  }
  return LimitShape{{c.dom(f)}, {ConeEquation{0, f, 0, g}}};
}

const Limit* binary_product(const FinCategory& c, Obj x, Obj y) {
  const auto& lim = find_limit(c, product_shape(x, y));
  return lim ? &*lim : nullptr;
}

std::optional<PullbackSquare> pullback(const FinCategory& c, Mor f, Mor g) {
  const auto& lim = find_limit(c, pullback_shape(c, f, g));
  if (!lim) return std::nullopt;
  return PullbackSquare{f, g, lim->apex, lim->legs[0], lim->legs[1], &*lim};
}

const Limit* equalizer(const FinCategory& c, Mor f, Mor g) {
  const auto& lim = find_limit(c, equalizer_shape(c, f, g));
  return lim ? &*lim : nullptr;
}

const Limit& require_product(const FinCategory& c, Obj x, Obj y) {
  if (const Limit* p = binary_product(c, x, y)) return *p;
  throw Error(ErrorKind::MissingProduct, "no product of " + c.name(x) + " and " + c.name(y),
              {c.name(x), c.name(y)});
}

PullbackSquare require_pullback(const FinCategory& c, Mor f, Mor g) {
  if (auto p = pullback(c, f, g)) return *p;
  throw Error(ErrorKind::MissingPullback,
              "no pullback of the cospan " + c.name(f) + ": " + c.name(c.dom(f)) + " → " + c.name(c.cod(f)) +
                  " ← " + c.name(c.dom(g)) + " :" + c.name(g),
              {c.name(f), c.name(g)});
}

Mor mediate(const Limit& limit, Obj apex, std::span<const Mor> legs) {
  auto it = limit.mediators.find(cone_key(apex, legs));
  if (it == limit.mediators.end()) throw Error(ErrorKind::IllTyped, "legs do not form a cone over the limit");
  return it->second;
}

Mor mediate(const Limit& limit, std::initializer_list<Mor> legs, const FinCategory& c) {
  const std::vector<Mor> v(legs);
  if (v.empty()) throw Error(ErrorKind::IllTyped, "mediate needs at least one leg");
  return mediate(limit, c.dom(v.front()), v);
}

std::string slice_morphism_name(const std::string& k, const std::string& h) {
  const auto wrap = [](const std::string& s) {
    return s.find('@') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(k) + "@" + wrap(h);
}

Obj Slice::object(Mor base_morphism) const {
  const auto& o = object_of.at(base_morphism.index);
  if (!o) throw Error(ErrorKind::IllTyped, "morphism does not land in the slice anchor");
  return *o;
}

Mor Slice::morphism(Mor k, Obj target) const {
  auto it = by_pair.find({k.index, target.index});
  if (it == by_pair.end()) throw Error(ErrorKind::IllTyped, "no such slice morphism");
  return it->second;
}

Slice slice_category(const CategoryPtr& cp, Obj x) {
  const FinCategory& c = *cp;
  CategoryBuilder b;
  std::vector<Mor> objs;  // local object → structure morphism
  std::vector<std::int64_t> local_of(c.num_morphisms(), -1);
  for (const Obj z : c.objects()) {
    for (const Mor g : c.hom(z, x)) {
      local_of[g.index] = b.add_object(c.name(g));
      objs.push_back(g);
    }
  }
  struct Local {
    Mor k;
    std::uint32_t src;
    std::uint32_t tgt;
  };
  std::vector<Local> mors;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> local_by_pair;
  for (std::uint32_t i = 0; i < objs.size(); ++i) {
    for (std::uint32_t j = 0; j < objs.size(); ++j) {
      const Mor g = objs[i], h = objs[j];
      for (const Mor k : c.hom(c.dom(g), c.dom(h))) {
        if (c.compose(h, k) != g) continue;
        const auto idx = b.add_morphism(slice_morphism_name(c.name(k), c.name(h)), i, j);
        mors.push_back({k, i, j});
        local_by_pair.emplace(std::pair{k.index, j}, idx);
      }
    }
  }
  for (std::uint32_t i = 0; i < objs.size(); ++i) {
    b.set_identity(i, local_by_pair.at({c.id(c.dom(objs[i])).index, i}));
  }
  b.compose_with([&](std::uint32_t g, std::uint32_t f) {
    return local_by_pair.at({c.compose(mors[g].k, mors[f].k).index, mors[g].tgt});
  });
  auto sc = b.build();
  const FinCategory& s = *sc;

  Slice out{cp, x, sc, identity_functor(sc), {}, {}, {}, {}};
  out.structure.resize(s.num_objects());
  out.object_of.assign(c.num_morphisms(), std::nullopt);
  for (const Mor g : objs) {
    const Obj o = s.object(c.name(g));
    out.structure[o.index] = g;
    out.object_of[g.index] = o;
  }
  out.underlying.resize(s.num_morphisms());
  for (const auto& m : mors) {
    const Obj tgt = s.object(c.name(objs[m.tgt]));
    const Mor sm = s.morphism(slice_morphism_name(c.name(m.k), c.name(objs[m.tgt])));
    out.underlying[sm.index] = m.k;
    out.by_pair.emplace(std::pair{m.k.index, tgt.index}, sm);
  }
  out.projection = make_functor(
      sc, cp, [&](Obj o) { return c.dom(out.structure[o.index]); },
      [&](Mor m) { return out.underlying[m.index]; });
  return out;
}

}  // namespace catgal
