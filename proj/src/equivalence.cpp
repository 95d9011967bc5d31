#include "catgal/equivalence.hpp"

#include <algorithm>
#include <deque>

namespace catgal {

std::string_view to_string(EquivalenceDefect d) {
  switch (d) {
    case EquivalenceDefect::NotFaithful: return "NotFaithful";
    case EquivalenceDefect::NotFull: return "NotFull";
    case EquivalenceDefect::NotEssentiallySurjective: return "NotEssentiallySurjective";
  }
  return "Unknown";
}

EquivalenceResult check_equivalence(const Functor& f) {
  const FinCategory& s = f.source();
  const FinCategory& t = f.target();
  EquivalenceResult result;
  std::vector<HomBijection> homs;
  std::vector<char> hit;
  for (const Obj a : s.objects()) {
    for (const Obj b : s.objects()) {
      const auto src_hom = s.hom(a, b);
      const auto tgt_hom = t.hom(f(a), f(b));
      hit.assign(t.num_morphisms(), 0);
      for (const Mor m : src_hom) {
        if (hit[f(m).index]) {
          result.failure = EquivalenceFailure{EquivalenceDefect::NotFaithful, s.name(a), s.name(b), {},
                                              "two morphisms " + s.name(a) + " → " + s.name(b) +
                                                  " share the image " + t.name(f(m))};
          return result;
        }
        hit[f(m).index] = 1;
      }
      if (src_hom.size() != tgt_hom.size()) {
        result.failure = EquivalenceFailure{
            EquivalenceDefect::NotFull, s.name(a), s.name(b), {},
            "hom(" + s.name(a) + ", " + s.name(b) + ") has " + std::to_string(src_hom.size()) +
                " elements but its image hom-set has " + std::to_string(tgt_hom.size())};
        return result;
      }
      homs.push_back({a, b, src_hom.size()});
    }
  }
  std::vector<EssentialPreimage> ess;
  for (const Obj y : t.objects()) {
    std::optional<EssentialPreimage> found;
    for (const Obj x : s.objects()) {
      if (auto iso = find_iso(t, f(x), y)) {
        found = EssentialPreimage{x, *iso};
        break;
      }
    }
    if (!found) {
      result.failure = EquivalenceFailure{EquivalenceDefect::NotEssentiallySurjective, {}, {}, t.name(y),
                                          "no object maps isomorphically onto " + t.name(y)};
      return result;
    }
    ess.push_back(*found);
  }
  result.witness = EquivalenceWitness{f, std::move(ess), std::move(homs)};
  return result;
}

bool is_isomorphism(const Functor& f) {
  const FinCategory& s = f.source();
  const FinCategory& t = f.target();
  if (s.num_objects() != t.num_objects() || s.num_morphisms() != t.num_morphisms()) return false;
  std::vector<char> seen(t.num_morphisms(), 0);
  for (const Mor m : s.morphisms()) {
    if (seen[f(m).index]) return false;
    seen[f(m).index] = 1;
  }
  std::vector<char> seen_obj(t.num_objects(), 0);
  for (const Obj x : s.objects()) {
    if (seen_obj[f(x).index]) return false;
    seen_obj[f(x).index] = 1;
  }
  return true;
}

Functor inverse_isomorphism(const Functor& f) {
  if (!is_isomorphism(f)) throw Error(ErrorKind::IllTyped, "functor is not an isomorphism of categories");
  std::vector<Obj> omap(f.target().num_objects());
  std::vector<Mor> mmap(f.target().num_morphisms());
  for (const Obj x : f.source().objects()) omap[f(x).index] = x;
  for (const Mor m : f.source().morphisms()) mmap[f(m).index] = m;
  return validate_functor(f.tgt(), f.src(), std::move(omap), std::move(mmap));
}

Skeleton skeleton(const CategoryPtr& cp) {
  const FinCategory& c = *cp;
  std::vector<Obj> rep(c.num_objects());
  std::vector<Mor> to_rep(c.num_objects());
  std::vector<Obj> reps;
  for (const Obj x : c.objects()) {
    bool placed = false;
    for (const Obj r : reps) {
      if (auto iso = find_iso(c, x, r)) {
        rep[x.index] = r;
        to_rep[x.index] = *iso;
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(x);
      rep[x.index] = x;
      to_rep[x.index] = c.id(x);
    }
  }
  auto sk = full_subcategory(c, reps);
  const FinCategory& k = *sk;
  auto projection = make_functor(
      cp, sk, [&](Obj x) { return k.object(c.name(rep[x.index])); },
      [&](Mor m) {
        const Obj x = c.dom(m), y = c.cod(m);
        const Mor back = *morphism_inverse(c, to_rep[x.index]);
        return k.morphism(c.name(c.compose(to_rep[y.index], m, back)));
      });
  auto inclusion = inclusion_functor(sk, cp);
  return Skeleton{sk, std::move(projection), std::move(inclusion), std::move(to_rep)};
}

namespace {

constexpr std::uint32_t kUnset = 0xffffffffU;

// Backtracking search for an isomorphism of categories with forced
// propagation along composites.
class IsoSearch {
 public:
  IsoSearch(const FinCategory& c, const FinCategory& d, SearchBudget& budget)
      : c_(c), d_(d), budget_(budget), omap_(c.num_objects(), kUnset), mmap_(c.num_morphisms(), kUnset),
        oused_(d.num_objects(), 0), mused_(d.num_morphisms(), 0) {}

  bool run() {
    if (c_.num_objects() != d_.num_objects() || c_.num_morphisms() != d_.num_morphisms()) return false;
    return assign_objects(0);
  }

  std::vector<Obj> object_map() const {
    std::vector<Obj> out;
    for (auto v : omap_) out.push_back(Obj{v});
    return out;
  }
  std::vector<Mor> morphism_map() const {
    std::vector<Mor> out;
    for (auto v : mmap_) out.push_back(Mor{v});
    return out;
  }

 private:
  bool assign_objects(std::uint32_t i) {
    if (i == c_.num_objects()) {
      const auto mark = trail_.size();
      bool ok = true;
      for (const Obj x : c_.objects()) {
        if (!assign(c_.id(x), d_.id(Obj{omap_[x.index]}))) {
          ok = false;
          break;
        }
      }
      if (ok && assign_morphisms(0)) return true;
      undo(mark);
      return false;
    }
    for (const Obj y : d_.objects()) {
      if (oused_[y.index]) continue;
      budget_.charge();
      bool compatible = true;
      for (std::uint32_t j = 0; j < i && compatible; ++j) {
        const Obj a{j}, b{i};
        const Obj fa{omap_[j]};
        compatible = c_.hom(a, b).size() == d_.hom(fa, y).size() &&
                     c_.hom(b, a).size() == d_.hom(y, fa).size();
      }
      compatible = compatible && c_.hom(Obj{i}, Obj{i}).size() == d_.hom(y, y).size();
      if (!compatible) continue;
      omap_[i] = y.index;
      oused_[y.index] = 1;
      if (assign_objects(i + 1)) return true;
      omap_[i] = kUnset;
      oused_[y.index] = 0;
    }
    return false;
  }

  bool assign_morphisms(std::uint32_t from) {
    std::uint32_t m = from;
    while (m < c_.num_morphisms() && mmap_[m] != kUnset) ++m;
    if (m == c_.num_morphisms()) return true;
    const Mor src{m};
    const Obj a{omap_[c_.dom(src).index]}, b{omap_[c_.cod(src).index]};
    for (const Mor cand : d_.hom(a, b)) {
      if (mused_[cand.index]) continue;
      const auto mark = trail_.size();
      if (assign(src, cand) && assign_morphisms(m + 1)) return true;
      undo(mark);
    }
    return false;
  }

  // Assigns m ↦ n and propagates every composite now determined.
  bool assign(Mor m0, Mor n0) {
    std::deque<std::pair<Mor, Mor>> queue{{m0, n0}};
    while (!queue.empty()) {
      auto [m, n] = queue.front();
      queue.pop_front();
      if (mmap_[m.index] != kUnset) {
        if (mmap_[m.index] != n.index) return false;
        continue;
      }
      if (mused_[n.index]) return false;
      if (d_.dom(n).index != omap_[c_.dom(m).index] || d_.cod(n).index != omap_[c_.cod(m).index]) return false;
      mmap_[m.index] = n.index;
      mused_[n.index] = 1;
      trail_.push_back(m.index);
      for (const Mor g : c_.out(c_.cod(m))) {
        if (mmap_[g.index] == kUnset) continue;
        budget_.charge(2);
        queue.emplace_back(c_.compose(g, m), d_.compose(Mor{mmap_[g.index]}, n));
      }
      for (const Obj x : c_.objects()) {
        for (const Mor f : c_.hom(x, c_.dom(m))) {
          if (mmap_[f.index] == kUnset) continue;
          budget_.charge(2);
          queue.emplace_back(c_.compose(m, f), d_.compose(n, Mor{mmap_[f.index]}));
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto m = trail_.back();
      trail_.pop_back();
      mused_[mmap_[m]] = 0;
      mmap_[m] = kUnset;
    }
  }

  const FinCategory& c_;
  const FinCategory& d_;
  SearchBudget& budget_;
  std::vector<std::uint32_t> omap_;
  std::vector<std::uint32_t> mmap_;
  std::vector<char> oused_;
  std::vector<char> mused_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace

std::optional<Functor> find_isomorphism(const CategoryPtr& c, const CategoryPtr& d, SearchBudget& budget) {
  IsoSearch search(*c, *d, budget);
  if (!search.run()) return std::nullopt;
  return validate_functor(c, d, search.object_map(), search.morphism_map());
}

std::optional<Functor> find_isomorphism(const CategoryPtr& c, const CategoryPtr& d) {
  SearchBudget budget;
  return find_isomorphism(c, d, budget);
}

std::optional<EquivalenceWitness> find_equivalence(const CategoryPtr& c, const CategoryPtr& d,
                                                   SearchBudget& budget) {
  const Skeleton sc = skeleton(c);
  const Skeleton sd = skeleton(d);
  auto iso = find_isomorphism(sc.category, sd.category, budget);
  if (!iso) return std::nullopt;
  const Functor f = compose(sd.inclusion, compose(*iso, sc.projection));
  auto checked = check_equivalence(f);
  if (!checked) {
    throw Error(ErrorKind::AxiomFailure, "skeleton isomorphism did not induce an equivalence");
  }
  return std::move(checked.witness);
}

std::optional<EquivalenceWitness> find_equivalence(const CategoryPtr& c, const CategoryPtr& d) {
  SearchBudget budget;
  return find_equivalence(c, d, budget);
}

}  // namespace catgal
