#include "catgal/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catgal {

namespace {

constexpr std::size_t kMaxViolations = 32;

std::uint64_t pair_key(std::uint32_t g, std::uint32_t f) {
  return (static_cast<std::uint64_t>(g) << 32) | f;
}

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  void add(const std::string& s) {
    add(s.size());
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
};

std::vector<std::uint32_t> sorted_order(const std::vector<std::string>& names) {
  std::vector<std::uint32_t> order(names.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return names[a] < names[b]; });
  return order;
}

void check_names(const std::vector<std::string>& names, std::string_view sort,
                 std::vector<Violation>& out) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) {
      out.push_back({ErrorKind::EmptyId, std::string("empty ") + std::string(sort) + " identifier", {}});
    } else if (!seen.insert(n).second) {
      out.push_back({ErrorKind::DuplicateId,
                     "duplicate " + std::string(sort) + " identifier '" + n + "'", {n}});
    }
  }
}

}  // namespace

std::uint32_t CategoryBuilder::add_object(std::string name) {
  object_names_.push_back(std::move(name));
  identities_.emplace_back();
  return static_cast<std::uint32_t>(object_names_.size() - 1);
}

std::uint32_t CategoryBuilder::add_morphism(std::string name, std::uint32_t dom, std::uint32_t cod) {
  morphism_names_.push_back(std::move(name));
  doms_.push_back(dom);
  cods_.push_back(cod);
  return static_cast<std::uint32_t>(morphism_names_.size() - 1);
}

void CategoryBuilder::set_identity(std::uint32_t object, std::uint32_t morphism) {
  identities_.at(object) = morphism;
}

void CategoryBuilder::set_composite(std::uint32_t g, std::uint32_t f, std::uint32_t gf) {
  auto [it, inserted] = composites_.emplace(pair_key(g, f), gf);
  if (!inserted) duplicate_composites_.push_back({g, f, gf});
}

std::vector<Violation> CategoryBuilder::check() const { return assemble().second; }

CategoryPtr CategoryBuilder::build() const {
  auto [category, violations] = assemble();
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return category;
}

// Structural checks, re-indexing in identifier order, then the category laws.
std::pair<std::shared_ptr<FinCategory>, std::vector<Violation>> CategoryBuilder::assemble() const {
  const auto& object_names = object_names_;
  const auto& morphism_names = morphism_names_;
  const auto& doms = doms_;
  const auto& cods = cods_;
  const auto& identities = identities_;
  const auto& composites = composites_;
  const auto& duplicates = duplicate_composites_;
  std::pair<std::shared_ptr<FinCategory>, std::vector<Violation>> out;
  auto& v = out.second;
  const auto full = [&] { return v.size() >= kMaxViolations; };
  const auto mname = [&](std::uint32_t m) { return morphism_names[m]; };
  const auto oname = [&](std::uint32_t x) { return object_names[x]; };
  const std::size_t n_obj = object_names.size();
  const std::size_t n_mor = morphism_names.size();

  check_names(object_names, "object", v);
  check_names(morphism_names, "morphism", v);
  for (std::uint32_t m = 0; m < n_mor; ++m) {
    if (doms[m] >= n_obj || cods[m] >= n_obj) {
      v.push_back({ErrorKind::UnknownReference, "morphism '" + mname(m) + "' has an undeclared endpoint",
                   {mname(m)}});
    }
  }
  if (!v.empty()) return out;

  for (std::uint32_t x = 0; x < n_obj; ++x) {
    if (!identities[x]) {
      v.push_back({ErrorKind::MissingIdentity, "object '" + oname(x) + "' has no identity", {oname(x)}});
    } else if (*identities[x] >= n_mor || doms[*identities[x]] != x || cods[*identities[x]] != x) {
      v.push_back({ErrorKind::BrokenIdentityLaw,
                   "identity of '" + oname(x) + "' is not an endomorphism of it", {oname(x)}});
    }
  }
  for (const auto& [g, f, gf] : duplicates) {
    if (full()) break;
    v.push_back({ErrorKind::DuplicateComposite,
                 "composite of (" + mname(g) + ", " + mname(f) + ") given twice", {mname(g), mname(f)}});
  }
  for (const auto& [key, gf] : composites) {
    if (full()) break;
    const auto g = static_cast<std::uint32_t>(key >> 32);
    const auto f = static_cast<std::uint32_t>(key & 0xffffffffU);
    if (g >= n_mor || f >= n_mor || gf >= n_mor) {
      v.push_back({ErrorKind::UnknownReference, "composition entry refers to an unknown morphism", {}});
      continue;
    }
    if (cods[f] != doms[g]) {
      v.push_back({ErrorKind::IllTypedComposite,
                   "composite given for non-composable pair (" + mname(g) + ", " + mname(f) + ")",
                   {mname(g), mname(f), mname(gf)}});
    } else if (doms[gf] != doms[f] || cods[gf] != cods[g]) {
      v.push_back({ErrorKind::IllTypedComposite,
                   mname(g) + "∘" + mname(f) + " = " + mname(gf) + " has the wrong endpoints",
                   {mname(g), mname(f), mname(gf)}});
    }
  }
  if (!v.empty()) return out;
  for (std::uint32_t f = 0; f < n_mor && !full(); ++f) {
    for (std::uint32_t g = 0; g < n_mor && !full(); ++g) {
      if (doms[g] == cods[f] && !composites.contains(pair_key(g, f))) {
        v.push_back({ErrorKind::MissingComposite,
                     "no composite for (" + mname(g) + ", " + mname(f) + ")", {mname(g), mname(f)}});
      }
    }
  }
  if (!v.empty()) return out;

  // Re-index in identifier order.
  const auto obj_order = sorted_order(object_names);
  const auto mor_order = sorted_order(morphism_names);
  std::vector<std::uint32_t> obj_new(n_obj), mor_new(n_mor);
  for (std::uint32_t i = 0; i < n_obj; ++i) obj_new[obj_order[i]] = i;
  for (std::uint32_t i = 0; i < n_mor; ++i) mor_new[mor_order[i]] = i;

  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  FinCategory& cat = *c;
  cat.object_names_.resize(n_obj);
  cat.objects_.resize(n_obj);
  cat.identities_.resize(n_obj);
  for (std::uint32_t i = 0; i < n_obj; ++i) {
    cat.object_names_[i] = object_names[obj_order[i]];
    cat.objects_[i] = Obj{i};
    cat.identities_[i] = mor_new[*identities[obj_order[i]]];
    cat.object_index_.emplace(cat.object_names_[i], i);
  }
  cat.morphism_names_.resize(n_mor);
  cat.morphisms_.resize(n_mor);
  cat.doms_.resize(n_mor);
  cat.cods_.resize(n_mor);
  for (std::uint32_t i = 0; i < n_mor; ++i) {
    const auto old = mor_order[i];
    cat.morphism_names_[i] = morphism_names[old];
    cat.morphisms_[i] = Mor{i};
    cat.doms_[i] = obj_new[doms[old]];
    cat.cods_[i] = obj_new[cods[old]];
    cat.morphism_index_.emplace(cat.morphism_names_[i], i);
  }
  cat.homs_.assign(n_obj * n_obj, {});
  cat.outs_.assign(n_obj, {});
  cat.out_pos_.resize(n_mor);
  for (std::uint32_t i = 0; i < n_mor; ++i) {
    cat.homs_[cat.doms_[i] * n_obj + cat.cods_[i]].push_back(Mor{i});
    cat.out_pos_[i] = static_cast<std::uint32_t>(cat.outs_[cat.doms_[i]].size());
    cat.outs_[cat.doms_[i]].push_back(Mor{i});
  }
  cat.composites_.resize(n_mor);
  for (std::uint32_t f = 0; f < n_mor; ++f) {
    const auto& next = cat.outs_[cat.cods_[f]];
    auto& row = cat.composites_[f];
    row.resize(next.size());
    for (std::size_t k = 0; k < next.size(); ++k) {
      const auto g = next[k].index;
      row[k] = mor_new[composites.at(pair_key(mor_order[g], mor_order[f]))];
    }
  }

  // Identity laws.
  for (const Mor f : cat.morphisms_) {
    if (full()) break;
    const Mor left = cat.compose(cat.id(cat.cod(f)), f);
    const Mor right = cat.compose(f, cat.id(cat.dom(f)));
    if (left != f || right != f) {
      const Mor bad = left != f ? left : right;
      const Obj at = left != f ? cat.cod(f) : cat.dom(f);
      v.push_back({ErrorKind::BrokenIdentityLaw,
                   "identity law fails for '" + cat.name(f) + "' at '" + cat.name(at) + "' (got '" +
                       cat.name(bad) + "')",
                   {cat.name(f), cat.name(cat.id(at)), cat.name(bad)}});
    }
  }
  // Associativity over all composable triples.
  for (const Mor f : cat.morphisms_) {
    if (full()) break;
    for (const Mor g : cat.out(cat.cod(f))) {
      const Mor gf = cat.compose(g, f);
      for (const Mor h : cat.out(cat.cod(g))) {
        const Mor lhs = cat.compose(cat.compose(h, g), f);
        const Mor rhs = cat.compose(h, gf);
        if (lhs != rhs && !full()) {
          v.push_back({ErrorKind::BrokenAssociativity,
                       "(" + cat.name(h) + "∘" + cat.name(g) + ")∘" + cat.name(f) + " ≠ " + cat.name(h) +
                           "∘(" + cat.name(g) + "∘" + cat.name(f) + ")",
                       {cat.name(h), cat.name(g), cat.name(f)}});
        }
      }
    }
  }
  if (!v.empty()) return out;

  Fnv fp;
  for (const auto& n : cat.object_names_) fp.add(n);
  for (std::uint32_t i = 0; i < n_mor; ++i) {
    fp.add(cat.morphism_names_[i]);
    fp.add(cat.doms_[i]);
    fp.add(cat.cods_[i]);
  }
  for (auto i : cat.identities_) fp.add(i);
  for (const auto& row : cat.composites_) {
    for (auto x : row) fp.add(x);
  }
  cat.fingerprint_ = fp.h;
  cat.limit_memo_ = detail::make_limit_memo();
  out.first = c;
  return out;
}

std::optional<Obj> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return Obj{it->second};
}

std::optional<Mor> FinCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return Mor{it->second};
}

Obj FinCategory::object(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(ErrorKind::UnknownObject, "no object '" + std::string(name) + "'", {std::string(name)});
}

Mor FinCategory::morphism(std::string_view name) const {
  if (auto m = find_morphism(name)) return *m;
  throw Error(ErrorKind::UnknownMorphism, "no morphism '" + std::string(name) + "'", {std::string(name)});
}

Mor FinCategory::compose(Mor g, Mor f) const {
  if (cods_[f.index] != doms_[g.index]) {
    throw Error(ErrorKind::IllTyped, "cannot compose " + name(g) + " after " + name(f),
                {name(g), name(f)});
  }
  return Mor{composites_[f.index][out_pos_[g.index]]};
}

bool FinCategory::same_as(const FinCategory& o) const {
  if (this == &o) return true;
  return fingerprint_ == o.fingerprint_ && object_names_ == o.object_names_ &&
         morphism_names_ == o.morphism_names_ && doms_ == o.doms_ && cods_ == o.cods_ &&
         identities_ == o.identities_ && composites_ == o.composites_;
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = object_names_;
  for (const Mor m : morphisms_) raw.morphisms.push_back({name(m), name(dom(m)), name(cod(m))});
  for (const Obj x : objects_) raw.identities.emplace(name(x), name(id(x)));
  for (const Mor f : morphisms_) {
    for (const Mor g : out(cod(f))) raw.composition.push_back({name(g), name(f), name(compose(g, f))});
  }
  std::sort(raw.composition.begin(), raw.composition.end());
  return raw;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

namespace {

// Builder from identifier tables; unknown references become violations.
std::pair<CategoryBuilder, std::vector<Violation>> builder_from_raw(const RawCategory& raw) {
  CategoryBuilder b;
  std::vector<Violation> v;
  std::unordered_map<std::string, std::uint32_t> objs, mors;
  for (const auto& o : raw.objects) objs.emplace(o, b.add_object(o));
  constexpr std::uint32_t kBad = 0xffffffffU;
  for (const auto& m : raw.morphisms) {
    auto d = objs.find(m.dom), c = objs.find(m.cod);
    if (d == objs.end() || c == objs.end()) {
      v.push_back({ErrorKind::UnknownReference,
                   "morphism '" + m.name + "' refers to undeclared object '" +
                       (d == objs.end() ? m.dom : m.cod) + "'",
                   {m.name}});
    }
    mors.emplace(m.name, b.add_morphism(m.name, d == objs.end() ? kBad : d->second,
                                        c == objs.end() ? kBad : c->second));
  }
  for (const auto& [o, m] : raw.identities) {
    auto oi = objs.find(o);
    auto mi = mors.find(m);
    if (oi == objs.end() || mi == mors.end()) {
      v.push_back({ErrorKind::UnknownReference, "identity entry (" + o + ", " + m + ") is undeclared", {o, m}});
      continue;
    }
    b.set_identity(oi->second, mi->second);
  }
  for (const auto& [g, f, gf] : raw.composition) {
    auto gi = mors.find(g), fi = mors.find(f), hi = mors.find(gf);
    if (gi == mors.end() || fi == mors.end() || hi == mors.end()) {
      v.push_back({ErrorKind::UnknownReference,
                   "composition entry [" + g + ", " + f + ", " + gf + "] names an undeclared morphism",
                   {g, f, gf}});
      continue;
    }
    b.set_composite(gi->second, fi->second, hi->second);
  }
  return {std::move(b), std::move(v)};
}

}  // namespace

std::vector<Violation> check_category(const RawCategory& raw) {
  auto [b, v] = builder_from_raw(raw);
  if (!v.empty()) return v;
  return b.check();
}

CategoryPtr validate_category(const RawCategory& raw) {
  auto [b, v] = builder_from_raw(raw);
  if (!v.empty()) throw ValidationError(std::move(v));
  return b.build();
}

std::optional<Mor> morphism_inverse(const FinCategory& c, Mor m) {
  if (m.index >= c.num_morphisms()) {
    throw Error(ErrorKind::UnknownMorphism, "morphism index out of range");
  }
  const Obj a = c.dom(m), b = c.cod(m);
  for (const Mor k : c.hom(b, a)) {
    if (c.compose(k, m) == c.id(a) && c.compose(m, k) == c.id(b)) return k;
  }
  return std::nullopt;
}

bool is_iso(const FinCategory& c, Mor m) { return morphism_inverse(c, m).has_value(); }

std::optional<Mor> find_iso(const FinCategory& c, Obj a, Obj b) {
  for (const Mor m : c.hom(a, b)) {
    if (is_iso(c, m)) return m;
  }
  return std::nullopt;
}

CategoryPtr full_subcategory(const FinCategory& c, const std::vector<Obj>& keep) {
  CategoryBuilder b;
  std::vector<std::int64_t> local(c.num_objects(), -1);
  for (const Obj x : keep) local[x.index] = b.add_object(c.name(x));
  std::vector<std::int64_t> mlocal(c.num_morphisms(), -1);
  std::vector<Mor> back;
  for (const Mor m : c.morphisms()) {
    if (local[c.dom(m).index] >= 0 && local[c.cod(m).index] >= 0) {
      mlocal[m.index] = b.add_morphism(c.name(m), static_cast<std::uint32_t>(local[c.dom(m).index]),
                                       static_cast<std::uint32_t>(local[c.cod(m).index]));
      back.push_back(m);
    }
  }
  for (const Obj x : keep) {
    b.set_identity(static_cast<std::uint32_t>(local[x.index]),
                   static_cast<std::uint32_t>(mlocal[c.id(x).index]));
  }
  b.compose_with([&](std::uint32_t g, std::uint32_t f) {
    return static_cast<std::uint32_t>(mlocal[c.compose(back[g], back[f]).index]);
  });
  return b.build();
}

}  // namespace catgal
