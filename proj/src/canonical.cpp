#include "catgal/canonical.hpp"

#include <algorithm>
#include <optional>

namespace catgal {

namespace {

using Key = std::vector<std::uint64_t>;

// Replaces every key by its rank among the distinct keys.
std::vector<std::uint32_t> ranks(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    out.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  }
  return out;
}

std::size_t classes(const std::vector<std::uint32_t>& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

struct Colouring {
  std::vector<std::uint32_t> obj;
  std::vector<std::uint32_t> mor;
};

class Canonizer {
 public:
  Canonizer(const FinCategory& c, SearchBudget& budget) : c_(c), budget_(budget), into_(c.num_objects()) {
    for (const Mor m : c.morphisms()) into_[c.cod(m).index].push_back(m);
  }

  std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> run() {
    Colouring start;
    start.obj.assign(c_.num_objects(), 0);
    for (const Mor m : c_.morphisms()) {
      start.mor.push_back((c_.is_identity(m) ? 0u : 2u) + (c_.dom(m) == c_.cod(m) ? 0u : 1u));
    }
    start.mor = ranks_of(start.mor);
    search(refine(std::move(start)));
    return {best_obj_, best_mor_};
  }

 private:
  static std::vector<std::uint32_t> ranks_of(const std::vector<std::uint32_t>& v) {
    std::vector<Key> keys;
    for (const auto x : v) keys.push_back({x});
    return ranks(keys);
  }

  static std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

  Colouring refine(Colouring col) const {
    for (;;) {
      budget_.charge(c_.num_morphisms() + 1);
      std::vector<Key> okeys, mkeys;
      for (const Obj x : c_.objects()) {
        Key out, in;
        for (const Mor m : c_.out(x)) out.push_back(pack(col.mor[m.index], col.obj[c_.cod(m).index]));
        for (const Mor m : into_[x.index]) in.push_back(pack(col.mor[m.index], col.obj[c_.dom(m).index]));
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        Key k{col.obj[x.index], out.size()};
        k.insert(k.end(), out.begin(), out.end());
        k.insert(k.end(), in.begin(), in.end());
        okeys.push_back(std::move(k));
      }
      for (const Mor f : c_.morphisms()) {
        Key after, before;
        for (const Mor g : c_.out(c_.cod(f))) after.push_back(pack(col.mor[g.index], col.mor[c_.compose(g, f).index]));
        for (const Mor h : into_[c_.dom(f).index]) {
          before.push_back(pack(col.mor[h.index], col.mor[c_.compose(f, h).index]));
        }
        std::sort(after.begin(), after.end());
        std::sort(before.begin(), before.end());
        Key k{col.mor[f.index], col.obj[c_.dom(f).index], col.obj[c_.cod(f).index], after.size()};
        k.insert(k.end(), after.begin(), after.end());
        k.insert(k.end(), before.begin(), before.end());
        mkeys.push_back(std::move(k));
      }
      Colouring next{ranks(okeys), ranks(mkeys)};
      const bool stable = classes(next.obj) == classes(col.obj) && classes(next.mor) == classes(col.mor);
      col = std::move(next);
      if (stable) return col;
    }
  }

  // First cell with more than one member: objects before morphisms.
  static std::optional<std::pair<bool, std::uint32_t>> first_cell(const Colouring& col) {
    const auto find = [](const std::vector<std::uint32_t>& v) -> std::optional<std::uint32_t> {
      std::vector<std::uint32_t> count(v.size(), 0);
      for (const auto x : v) ++count[x];
      for (std::uint32_t k = 0; k < count.size(); ++k) {
        if (count[k] > 1) return k;
      }
      return std::nullopt;
    };
    if (auto k = find(col.obj)) return std::pair{true, *k};
    if (auto k = find(col.mor)) return std::pair{false, *k};
    return std::nullopt;
  }

  void search(const Colouring& col) {
    budget_.charge();
    const auto cell = first_cell(col);
    if (!cell) {
      leaf(col);
      return;
    }
    const auto& v = cell->first ? col.obj : col.mor;
    for (std::uint32_t i = 0; i < v.size(); ++i) {
      if (v[i] != cell->second) continue;
      Colouring next = col;
      auto& w = cell->first ? next.obj : next.mor;
      std::vector<Key> keys;
      for (std::uint32_t j = 0; j < w.size(); ++j) keys.push_back({w[j], j == i ? 0u : 1u});
      w = ranks(keys);
      search(refine(std::move(next)));
    }
  }

  void leaf(const Colouring& col) {
    const std::size_t nm = c_.num_morphisms();
    std::vector<std::uint32_t> by_label(nm);
    for (std::uint32_t m = 0; m < nm; ++m) by_label[col.mor[m]] = m;
    std::vector<std::uint32_t> code;
    for (const auto m : by_label) {
      code.push_back(col.obj[c_.dom(Mor{m}).index]);
      code.push_back(col.obj[c_.cod(Mor{m}).index]);
    }
    for (const auto f : by_label) {
      for (const auto g : by_label) {
        if (c_.dom(Mor{g}) == c_.cod(Mor{f})) code.push_back(col.mor[c_.compose(Mor{g}, Mor{f}).index]);
      }
    }
    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_obj_ = col.obj;
      best_mor_ = col.mor;
    }
  }

  const FinCategory& c_;
  SearchBudget& budget_;
  std::vector<std::vector<Mor>> into_;
  std::vector<std::uint32_t> best_code_;
  std::vector<std::uint32_t> best_obj_;
  std::vector<std::uint32_t> best_mor_;
};

std::string label(char prefix, std::uint32_t i, std::size_t count) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

CategoryPtr canonical_relabel(const CategoryPtr& cp, SearchBudget& budget) {
  const FinCategory& c = *cp;
  auto [obj, mor] = Canonizer(c, budget).run();
  CategoryBuilder b;
  std::vector<std::uint32_t> local_obj(c.num_objects()), local_mor(c.num_morphisms());
  std::vector<std::uint32_t> obj_at(c.num_objects()), mor_at(c.num_morphisms());
  for (std::uint32_t x = 0; x < obj.size(); ++x) obj_at[obj[x]] = x;
  for (std::uint32_t m = 0; m < mor.size(); ++m) mor_at[mor[m]] = m;
  for (std::uint32_t k = 0; k < obj_at.size(); ++k) local_obj[obj_at[k]] = b.add_object(label('o', k, obj.size()));
  for (std::uint32_t k = 0; k < mor_at.size(); ++k) {
    const Mor m{mor_at[k]};
    local_mor[m.index] = b.add_morphism(label('f', k, mor.size()), local_obj[c.dom(m).index], local_obj[c.cod(m).index]);
  }
  for (const Obj x : c.objects()) b.set_identity(local_obj[x.index], local_mor[c.id(x).index]);
  for (const Mor f : c.morphisms()) {
    for (const Mor g : c.out(c.cod(f))) {
      b.set_composite(local_mor[g.index], local_mor[f.index], local_mor[c.compose(g, f).index]);
    }
  }
  return b.build();
}

CategoryPtr canonical_relabel(const CategoryPtr& c) {
  SearchBudget budget;
  return canonical_relabel(c, budget);
}

}  // namespace catgal
