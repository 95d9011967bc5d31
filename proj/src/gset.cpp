#include "catgal/gset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace catgal {

namespace {

[[noreturn]] void not_a_group(const std::string& message) { throw Error(ErrorKind::NotAGroup, message); }

std::uint32_t compose_perm_index(const std::vector<std::string>& perms, const std::string& a, const std::string& b) {
  std::string ab(a.size(), '0');
  for (std::size_t x = 0; x < a.size(); ++x) ab[x] = a[static_cast<std::size_t>(b[x] - '0')];
  return static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
}

using Table = std::vector<std::uint32_t>;

// Tabulates a category whose objects are finite sets and whose morphisms are
// the functions produced by `maps`, composed as functions.
struct Concrete {
  CategoryPtr category;
  std::vector<Table> tables;  // per morphism
};

Concrete concrete_category(const std::vector<std::string>& names,
                           const std::function<std::vector<Table>(std::uint32_t, std::uint32_t)>& maps) {
  CategoryBuilder b;
  for (const auto& n : names) b.add_object(n);
  std::map<std::tuple<std::uint32_t, std::uint32_t, Table>, std::uint32_t> index;
  std::vector<Table> local_tables;
  std::vector<std::string> local_names;
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    for (std::uint32_t j = 0; j < names.size(); ++j) {
      for (auto& t : maps(i, j)) {
        auto name = map_name(names[i], names[j], t);
        const auto m = b.add_morphism(name, i, j);
        index.emplace(std::tuple{i, j, t}, m);
        local_tables.push_back(std::move(t));
        local_names.push_back(std::move(name));
      }
    }
  }
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    std::uint32_t size = 0;
    // The identity is the unique endomap with table 0, 1, ...; find its size
    // from any endomap (there is at least the identity).
    for (std::uint32_t m = 0; m < local_tables.size(); ++m) {
      if (b.dom(m) == i && b.cod(m) == i) {
        size = static_cast<std::uint32_t>(local_tables[m].size());
        break;
      }
    }
    Table id(size);
    for (std::uint32_t x = 0; x < size; ++x) id[x] = x;
    b.set_identity(i, index.at({i, i, id}));
  }
  b.compose_with([&](std::uint32_t g, std::uint32_t f) {
    const Table& tf = local_tables[f];
    const Table& tg = local_tables[g];
    Table gf(tf.size());
    for (std::size_t x = 0; x < tf.size(); ++x) gf[x] = tg[tf[x]];
    return index.at({b.dom(f), b.cod(g), gf});
  });
  Concrete out{b.build(), {}};
  out.tables.resize(out.category->num_morphisms());
  for (std::size_t m = 0; m < local_names.size(); ++m) {
    out.tables[out.category->morphism(local_names[m]).index] = std::move(local_tables[m]);
  }
  return out;
}

std::vector<Table> all_functions(std::uint32_t from, std::uint32_t to) {
  std::vector<Table> out;
  if (from == 0) return {Table{}};
  if (to == 0) return out;
  Table t(from, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = from;
    while (i > 0) {
      --i;
      if (++t[i] < to) break;
      t[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::uint64_t stabilizer_mask(const GroupTable& g, const GSet& x, std::uint32_t e) {
  std::uint64_t mask = 0;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (x.act[a][e] == e) mask |= std::uint64_t{1} << a;
  }
  return mask;
}

std::uint64_t conjugacy_canonical(const GroupTable& g, std::uint64_t h) {
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::uint64_t conj = 0;
    for (std::uint32_t b = 0; b < g.order(); ++b) {
      if (h >> b & 1U) conj |= std::uint64_t{1} << g.mult[g.mult[a][b]][g.inverse[a]];
    }
    best = std::min(best, conj);
  }
  return best;
}

}  // namespace

GroupTable validate_group(GroupTable g) {
  const auto n = static_cast<std::uint32_t>(g.elements.size());
  if (n == 0) not_a_group("a group has at least one element");
  if (n > 64) not_a_group("groups of order above 64 are not supported");
  if (g.mult.size() != n) not_a_group("multiplication table has the wrong number of rows");
  for (const auto& row : g.mult) {
    if (row.size() != n) not_a_group("multiplication table row has the wrong length");
    for (const auto v : row) {
      if (v >= n) not_a_group("multiplication table is not closed");
    }
  }
  if (g.unit >= n) not_a_group("unit is not an element");
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.mult[g.unit][a] != a || g.mult[a][g.unit] != a) {
      not_a_group("unit law fails at '" + g.elements[a] + "'");
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]]) {
          not_a_group("associativity fails at (" + g.elements[a] + ", " + g.elements[b] + ", " + g.elements[c] + ")");
        }
      }
    }
  }
  g.inverse.assign(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (g.mult[a][b] == g.unit && g.mult[b][a] == g.unit) g.inverse[a] = b;
    }
    if (g.inverse[a] == n) not_a_group("'" + g.elements[a] + "' has no inverse");
  }
  return g;
}

GroupTable gen_group(std::string_view name) {
  GroupTable g;
  g.name = std::string(name);
  if (name == "C2" || name == "C3" || name == "C4") {
    const std::uint32_t n = static_cast<std::uint32_t>(name[1] - '0');
    for (std::uint32_t a = 0; a < n; ++a) g.elements.push_back(std::to_string(a));
    g.mult.assign(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    }
  } else if (name == "S3") {
    g.elements = {"012", "021", "102", "120", "201", "210"};
    g.mult.assign(6, std::vector<std::uint32_t>(6));
    for (std::uint32_t a = 0; a < 6; ++a) {
      for (std::uint32_t b = 0; b < 6; ++b) g.mult[a][b] = compose_perm_index(g.elements, g.elements[a], g.elements[b]);
    }
  } else {
    throw Error(ErrorKind::NotAGroup, "unknown group '" + g.name + "' (expected C2, C3, C4 or S3)", {g.name});
  }
  return validate_group(std::move(g));
}

void validate_action(const GroupTable& g, const GSet& x) {
  const auto fail = [&](const std::string& m) { throw Error(ErrorKind::NotAnAction, x.name + ": " + m, {x.name}); };
  if (x.act.size() != g.order()) fail("one row per group element expected");
  for (const auto& row : x.act) {
    if (row.size() != x.size) fail("row length differs from the carrier size");
    for (const auto v : row) {
      if (v >= x.size) fail("action leaves the carrier");
    }
  }
  for (std::uint32_t e = 0; e < x.size; ++e) {
    if (x.act[g.unit][e] != e) fail("unit does not act trivially");
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        if (x.act[a][x.act[b][e]] != x.act[g.mult[a][b]][e]) fail("action is not compatible with multiplication");
      }
    }
  }
}

GSet trivial_gset(const GroupTable& g, std::uint32_t n) {
  GSet x{n == 0 ? "0" : n == 1 ? "1" : "T" + std::to_string(n), n, {}};
  Table id(n);
  for (std::uint32_t e = 0; e < n; ++e) id[e] = e;
  x.act.assign(g.order(), id);
  return x;
}

GSet regular_gset(const GroupTable& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  GSet x{g.name, n, g.mult};
  return x;
}

GSet gset_product(const GroupTable& g, const GSet& x, const GSet& y) {
  GSet p{x.name + "x" + y.name, x.size * y.size, {}};
  p.act.assign(g.order(), Table(p.size));
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t i = 0; i < x.size; ++i) {
      for (std::uint32_t j = 0; j < y.size; ++j) p.act[a][i * y.size + j] = x.act[a][i] * y.size + y.act[a][j];
    }
  }
  return p;
}

GSet gset_coproduct(const GroupTable& g, const GSet& x, const GSet& y, std::string name) {
  GSet s{std::move(name), x.size + y.size, {}};
  s.act.assign(g.order(), Table(s.size));
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t i = 0; i < x.size; ++i) s.act[a][i] = x.act[a][i];
    for (std::uint32_t j = 0; j < y.size; ++j) s.act[a][x.size + j] = x.size + y.act[a][j];
  }
  return s;
}

GSet parse_seed(const GroupTable& g, std::string_view token) {
  const std::string tok(token);
  const auto bad = [&]() -> GSet {
    throw Error(ErrorKind::SchemaError, "unknown seed '" + tok + "' (expected 0, 1, Tn, G, GxG or kG)", {tok});
  };
  const auto number = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) bad();
    return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  };
  if (tok == "0") return trivial_gset(g, 0);
  if (tok == "1") return trivial_gset(g, 1);
  if (tok.size() > 1 && tok[0] == 'T') return trivial_gset(g, number(std::string_view(tok).substr(1)));
  if (tok == "G") return regular_gset(g);
  if (tok == "GxG") return gset_product(g, regular_gset(g), regular_gset(g));
  if (tok.size() > 1 && tok.back() == 'G') {
    const auto k = number(std::string_view(tok).substr(0, tok.size() - 1));
    if (k == 0) return trivial_gset(g, 0);
    GSet acc = regular_gset(g);
    for (std::uint32_t i = 1; i < k; ++i) acc = gset_coproduct(g, acc, regular_gset(g), "");
    acc.name = std::to_string(k) + g.name;
    if (k == 1) acc.name = g.name;
    return acc;
  }
  return bad();
}

std::vector<std::uint32_t> orbit_indices(const GroupTable& g, const GSet& x) {
  constexpr auto kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> orbit(x.size, kNone);
  std::uint32_t next = 0;
  for (std::uint32_t e = 0; e < x.size; ++e) {
    if (orbit[e] != kNone) continue;
    for (std::uint32_t a = 0; a < g.order(); ++a) orbit[x.act[a][e]] = next;
    ++next;
  }
  return orbit;
}

std::uint32_t orbit_count(const GroupTable& g, const GSet& x) {
  const auto o = orbit_indices(g, x);
  return o.empty() ? 0 : *std::max_element(o.begin(), o.end()) + 1;
}

std::vector<Table> equivariant_maps(const GroupTable& g, const GSet& x, const GSet& y) {
  const auto orbit = orbit_indices(g, x);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < x.size; ++e) {
    if (orbit[e] == reps.size()) reps.push_back(e);
  }
  // Candidate images per representative: points whose stabilizer contains the representative's.
  std::vector<std::vector<std::uint32_t>> candidates;
  for (const auto r : reps) {
    const auto sr = stabilizer_mask(g, x, r);
    std::vector<std::uint32_t> c;
    for (std::uint32_t e = 0; e < y.size; ++e) {
      if ((stabilizer_mask(g, y, e) & sr) == sr) c.push_back(e);
    }
    candidates.push_back(std::move(c));
  }
  std::vector<Table> out;
  std::vector<std::uint32_t> choice(reps.size(), 0);
  for (const auto& c : candidates) {
    if (c.empty()) return out;
  }
  while (true) {
    Table t(x.size);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::uint32_t a = 0; a < g.order(); ++a) t[x.act[a][reps[i]]] = y.act[a][candidates[i][choice[i]]];
    }
    out.push_back(std::move(t));
    std::size_t i = reps.size();
    while (i > 0) {
      --i;
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (reps.empty()) return out;
  }
}

std::vector<std::uint64_t> iso_signature(const GroupTable& g, const GSet& x) {
  const auto orbit = orbit_indices(g, x);
  std::vector<std::uint64_t> sig;
  std::uint32_t seen = 0;
  for (std::uint32_t e = 0; e < x.size; ++e) {
    if (orbit[e] != seen) continue;
    sig.push_back(conjugacy_canonical(g, stabilizer_mask(g, x, e)));
    ++seen;
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string map_name(const std::string& x, const std::string& y, const std::vector<std::uint32_t>& table) {
  std::string s = x + "->" + y + "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(table[i]);
  }
  return s + "]";
}

namespace {

class Saturation {
 public:
  Saturation(const GroupTable& g, std::uint32_t bound) : g_(g), bound_(bound) {}

  bool add(GSet x) {
    validate_action(g_, x);
    auto sig = iso_signature(g_, x);
    if (signatures_.contains(sig)) return false;
    if (x.size > bound_) {
      throw Error(ErrorKind::ClosureBoundExceeded,
                  "closure needs '" + x.name + "' with " + std::to_string(x.size) + " elements, above the bound " +
                      std::to_string(bound_),
                  {x.name});
    }
    while (names_.contains(x.name)) x.name += "'";
    names_.insert(x.name);
    signatures_.insert(std::move(sig));
    objects_.push_back(std::move(x));
    return true;
  }

  const std::vector<GSet>& objects() const { return objects_; }

 private:
  const GroupTable& g_;
  std::uint32_t bound_;
  std::set<std::vector<std::uint64_t>> signatures_;
  std::set<std::string> names_;
  std::vector<GSet> objects_;
};

GSet subset_gset(const GroupTable& g, const GSet& x, const std::vector<std::uint32_t>& keep, std::string name) {
  std::vector<std::uint32_t> pos(x.size, 0);
  for (std::uint32_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  GSet s{std::move(name), static_cast<std::uint32_t>(keep.size()), {}};
  s.act.assign(g.order(), Table(s.size));
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t i = 0; i < keep.size(); ++i) s.act[a][i] = pos[x.act[a][keep[i]]];
  }
  return s;
}

}  // namespace

GSetFragment gen_gset_fragment(const GroupTable& g, const std::vector<GSet>& seeds, ClosureFlags flags,
                               std::uint32_t bound) {
  Saturation sat(g, bound);
  for (const auto& s : seeds) sat.add(s);
  bool changed = true;
  while (changed) {
    changed = false;
    // A snapshot: objects added in this round are revisited in the next one.
    const std::vector<GSet> objs = sat.objects();
    for (const auto& x : objs) changed |= sat.add(trivial_gset(g, orbit_count(g, x)));
    if (flags.terminal) changed |= sat.add(trivial_gset(g, 1));
    if (flags.products) {
      for (std::size_t i = 0; i < objs.size(); ++i) {
        for (std::size_t j = i; j < objs.size(); ++j) changed |= sat.add(gset_product(g, objs[i], objs[j]));
      }
    }
    if (flags.pullbacks) {
      for (const auto& z : objs) {
        for (const auto& x : objs) {
          for (const auto& y : objs) {
            for (const auto& f : equivariant_maps(g, x, z)) {
              for (const auto& h : equivariant_maps(g, y, z)) {
                std::vector<std::uint32_t> keep;
                const GSet p = gset_product(g, x, y);
                for (std::uint32_t i = 0; i < x.size; ++i) {
                  for (std::uint32_t j = 0; j < y.size; ++j) {
                    if (f[i] == h[j]) keep.push_back(i * y.size + j);
                  }
                }
                changed |= sat.add(subset_gset(g, p, keep, "pb[" + map_name(x.name, z.name, f) + "," +
                                                               map_name(y.name, z.name, h) + "]"));
              }
            }
          }
        }
      }
    }
    if (flags.equalizers) {
      for (const auto& x : objs) {
        for (const auto& y : objs) {
          const auto maps = equivariant_maps(g, x, y);
          for (std::size_t i = 0; i < maps.size(); ++i) {
            for (std::size_t j = i + 1; j < maps.size(); ++j) {
              std::vector<std::uint32_t> keep;
              for (std::uint32_t e = 0; e < x.size; ++e) {
                if (maps[i][e] == maps[j][e]) keep.push_back(e);
              }
              changed |= sat.add(subset_gset(g, x, keep, "eq[" + map_name(x.name, y.name, maps[i]) + "," +
                                                             map_name(x.name, y.name, maps[j]) + "]"));
            }
          }
        }
      }
    }
  }

  std::vector<GSet> objs = sat.objects();
  std::sort(objs.begin(), objs.end(), [](const GSet& a, const GSet& b) { return a.name < b.name; });
  std::vector<std::string> names;
  for (const auto& x : objs) names.push_back(x.name);
  Concrete a = concrete_category(names, [&](std::uint32_t i, std::uint32_t j) {
    return equivariant_maps(g, objs[i], objs[j]);
  });

  std::set<std::uint32_t> counts;
  for (const auto& x : objs) counts.insert(orbit_count(g, x));
  CategoryPtr p = finset_category({counts.begin(), counts.end()});
  const FinCategory& ac = *a.category;
  const FinCategory& pc = *p;

  const auto size_name = [](std::uint32_t n) { return std::to_string(n); };
  std::map<std::uint32_t, Obj> trivial_of;  // orbit count → trivial object of A
  for (std::uint32_t i = 0; i < objs.size(); ++i) {
    if (iso_signature(g, objs[i]) == iso_signature(g, trivial_gset(g, objs[i].size))) {
      trivial_of.emplace(objs[i].size, ac.object(objs[i].name));
    }
  }
  std::vector<GSet> by_index(ac.num_objects());
  for (auto& x : objs) by_index[ac.object(x.name).index] = x;
  std::vector<std::vector<std::uint32_t>> orbits;
  for (const auto& x : by_index) orbits.push_back(orbit_indices(g, x));

  Functor left = make_functor(
      a.category, p, [&](Obj x) { return pc.object(size_name(orbit_count(g, by_index[x.index]))); },
      [&](Mor m) {
        const Obj x = ac.dom(m), y = ac.cod(m);
        const auto nx = orbit_count(g, by_index[x.index]);
        Table t(nx);
        for (std::uint32_t e = 0; e < by_index[x.index].size; ++e) {
          t[orbits[x.index][e]] = orbits[y.index][a.tables[m.index][e]];
        }
        return pc.morphism(map_name(size_name(nx), size_name(orbit_count(g, by_index[y.index])), t));
      });
  const auto trivial_at = [&](Obj n) { return trivial_of.at(static_cast<std::uint32_t>(std::stoul(pc.name(n)))); };
  Functor right = make_functor(p, a.category, trivial_at, [&](Mor m) {
    const Obj x = trivial_at(pc.dom(m)), y = trivial_at(pc.cod(m));
    // Trivial carriers are labelled 0..n-1, so the table carries over.
    const std::string& name = pc.name(m);
    const std::string table = name.substr(name.find('['));
    return ac.morphism(ac.name(x) + "->" + ac.name(y) + table);
  });
  std::vector<Mor> unit;
  for (const Obj x : ac.objects()) {
    unit.push_back(ac.morphism(map_name(ac.name(x), ac.name(right(left(x))), orbits[x.index])));
  }
  std::vector<Mor> counit;
  for (const Obj n : pc.objects()) counit.push_back(pc.id(n));
  auto u = validate_nat_trans(identity_functor(a.category), compose(right, left), std::move(unit));
  auto e = validate_nat_trans(compose(left, right), identity_functor(p), std::move(counit));
  Adjunction adj = validate_adjunction(left, right, std::move(u), std::move(e));
  return GSetFragment{g, std::move(by_index), std::move(a.tables), a.category, p, std::move(adj)};
}

CategoryPtr finset_category(const std::vector<std::uint32_t>& sizes) {
  std::vector<std::string> names;
  for (const auto n : sizes) names.push_back(std::to_string(n));
  return concrete_category(names, [&](std::uint32_t i, std::uint32_t j) { return all_functions(sizes[i], sizes[j]); })
      .category;
}

}  // namespace catgal
