// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "catgal/canonical.hpp"
#include "catgal/io.hpp"
#include "support/corpus.hpp"
#include "support/views.hpp"

using namespace catgal;

namespace {

// Pinned tolerances.
constexpr double kSecondsPerGroup = 60.0;
constexpr std::size_t kMutants = 100;
constexpr std::uint64_t kMutationSeed = 20240611;
constexpr std::size_t kMinSharpness = 2;

struct GroupCase {
  const char* name;
  std::uint32_t bound;
};
// S3 gets room for G x G, the only limit of {1, G} beyond the seeds.
constexpr GroupCase kGroups[] = {{"C2", 8}, {"C3", 9}, {"S3", 36}};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

void report(int n, const Outcome& o, bool& all) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n;
  for (std::size_t i = 0; i < o.notes.size(); ++i) std::cout << (i ? "; " : ": ") << o.notes[i];
  std::cout << "\n";
  all = all && o.pass;
}

// Runs f, turning engine errors into a failure note.
template <class F>
bool guarded(Outcome& o, const std::string& what, F&& f) {
  try {
    f();
    return true;
  } catch (const Error& e) {
    o.fail(what + ": " + e.what());
    return false;
  }
}

std::vector<std::vector<std::uint32_t>> composition_table(const FinCategory& c) {
  std::vector<std::vector<std::uint32_t>> t(c.num_morphisms(), std::vector<std::uint32_t>(c.num_morphisms()));
  for (const Mor f : c.morphisms()) {
    for (const Mor g : c.morphisms()) t[f.index][g.index] = c.compose(f, g).index;
  }
  return t;
}

Outcome criterion1() {
  Outcome o;
  for (const auto& [name, bound] : kGroups) {
    const auto start = std::chrono::steady_clock::now();
    const GroupTable g = gen_group(name);
    const std::string tag = std::string(name) + "@" + std::to_string(bound);
    guarded(o, tag, [&] {
      const GSetFragment frag =
          gen_gset_fragment(g, {parse_seed(g, "1"), parse_seed(g, "G")}, ClosureFlags::all(), bound);
      const Obj regular = frag.category->object(name);
      const TrivialGaloisReport r = trivial_galois(frag.adjunction, regular);
      if (!r.descent.value_or(false)) o.fail(tag + ": (a) no effective descent");
      if (!r.sliced_equivalence.value_or(false)) o.fail(tag + ": (b) sliced adjunction is not an equivalence");
      if (r.groupoid) {
        const CategoryPtr gal = external_groupoid(*r.groupoid);
        const bool shape = gal->num_objects() == 1 && gal->num_morphisms() == g.order();
        if (!shape || !oracle::isomorphic_tables(composition_table(*gal), g.mult)) {
          o.fail(tag + ": (c) Gal is not the group");
        }
      }
      if (!r.ok()) o.fail(tag + ": (d) " + (r.failure ? r.failure->message : "no equivalence"));
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kSecondsPerGroup) o.fail(tag + ": took " + std::to_string(secs) + "s");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& [name, adj] : corpus::adjunctions()) {
    const FinCategory& a = *adj.domain();
    if (!terminal_object(a)) continue;
    for (const Obj s : a.objects()) {
      const TrivialGaloisReport t = trivial_galois(adj, s);
      const GaloisReport g = galois_theorem(adj, to_terminal(a, s));
      if (!t.ok() || !g.ok()) continue;
      ++compared;
      const auto lhs = canonical_relabel(skeleton(external_groupoid(*t.groupoid)).category);
      const auto rhs = canonical_relabel(skeleton(external_groupoid(g.galois_groupoid->groupoid)).category);
      const std::string where = name + " at " + a.name(s);
      if (!same_category(lhs, rhs)) o.fail(where + ": groupoid skeleta differ");
      if (!find_equivalence(t.actions->category, g.galois_groupoid->actions.category)) {
        o.fail(where + ": action categories are not equivalent");
      }
    }
  }
  if (compared == 0) o.fail("no instance where both run");
  o.note(std::to_string(compared) + " instances compared");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t applied = 0, objects = 0, sharp = 0;
  for (const auto& [name, adj] : corpus::adjunctions()) {
    for (const Obj w : adj.domain()->objects()) {
      const std::string where = name + " at " + adj.domain()->name(w);
      try {
        const LemmaReport r = lemma_technical_check(adj, w);
        if (!r.hypotheses_hold()) {
          ++sharp;
          continue;
        }
        ++applied;
        for (const auto& x : r.objects) {
          ++objects;
          if (!x.biconditional) o.fail(where + ": biconditional fails at " + x.object);
          if (x.unit_iso && !x.splitting_verified) o.fail(where + ": splitting fails at " + x.object);
        }
      } catch (const Error&) {
        // products or pullbacks missing: the lemma does not apply
      }
    }
  }
  if (sharp < kMinSharpness) o.fail("only " + std::to_string(sharp) + " hypothesis failures");
  o.note(std::to_string(applied) + " instances, " + std::to_string(objects) + " objects, " +
         std::to_string(sharp) + " hypothesis failures");
  return o;
}

bool reference_adjunction(const Adjunction& adj) {
  const auto a = views::tables(*adj.domain());
  const auto p = views::tables(*adj.codomain());
  const auto lo = views::object_map(adj.left());
  const auto ro = views::object_map(adj.right());
  const auto rm = views::morphism_map(adj.right());
  const auto unit = views::components(adj.unit());
  return oracle::triangle_violations(a, p, lo, views::morphism_map(adj.left()), ro, rm, unit,
                                     views::components(adj.counit())) == 0 &&
         oracle::hom_bijections(a, p, lo, ro, rm, unit);
}

// Counts a check that may not apply because a limit is missing.
template <class F>
void applicable(Outcome& o, std::size_t& n, const std::string& where, F&& f) {
  try {
    if (!f()) o.fail(where);
    ++n;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MissingPullback && e.kind() != ErrorKind::MissingProduct) o.fail(where + ": " + e.what());
  }
}

Outcome criterion4() {
  Outcome o;
  std::size_t pb = 0, facts = 0, squares = 0, reassoc = 0, monos = 0;
  for (const auto& [name, c] : corpus::categories()) {
    for (const Mor f : c->morphisms()) {
      const std::string where = name + " " + c->name(f);
      applicable(o, pb, "pullback adjunction " + where, [&] { return reference_adjunction(pullback_adjunction(c, f).adjunction); });
      applicable(o, reassoc, "reassociation " + where, [&] {
        const Reassociation r = slice_reassociation(c, f);
        return is_isomorphism(r.forward) &&
               same_functor(compose(r.backward, r.forward), identity_functor(r.over_x.category));
      });
      for (const Mor k : c->hom(c->cod(f), c->dom(f))) {
        if (c->compose(k, f) != c->id(c->dom(f))) continue;
        for (const Obj x : c->objects()) {
          for (const Mor g : c->hom(c->cod(f), x)) {
            applicable(o, monos, "split mono " + where, [&] { return split_mono_equalizer(c, g, f, k).is_equalizer; });
          }
        }
      }
    }
  }
  for (const auto& [name, adj] : corpus::adjunctions()) {
    for (const Obj w : adj.domain()->objects()) {
      applicable(o, facts, name + " domain fact", [&] { return composition_fact_domain(adj, w).ok(); });
    }
    for (const Obj x : adj.codomain()->objects()) {
      applicable(o, facts, name + " codomain fact", [&] { return composition_fact_codomain(adj, x).ok(); });
    }
    for (const Mor g : adj.domain()->morphisms()) {
      applicable(o, squares, name + " square", [&] { return commuting_square(adj, g).ok(); });
    }
  }
  std::ostringstream s;
  s << pb << " pullback adjunctions, " << facts << " composition facts, " << squares << " squares, " << reassoc
    << " reassociations, " << monos << " split monos";
  o.note(s.str());
  return o;
}

Outcome criterion5() {
  Outcome o;
  // positive oracle on the fragments of criterion 1
  for (const auto& [name, bound] : kGroups) {
    const GroupTable g = gen_group(name);
    const std::string tag = std::string(name) + "@" + std::to_string(bound);
    guarded(o, tag, [&] {
      const GSetFragment frag =
          gen_gset_fragment(g, {parse_seed(g, "1"), parse_seed(g, "G")}, ClosureFlags::all(), bound);
      const Mor bang = to_terminal(*frag.category, frag.category->object(name));
      if (!effective_descent_check(frag.category, bang).effective()) o.fail(tag + ": !: G -> 1 not effective");
    });
  }
  const auto d2 = corpus::delta2();
  if (effective_descent_check(d2, d2->morphism("a->b")).effective()) {
    o.fail("a->b in the walking arrow is effective");
  } else {
    o.note("a->b not effective as expected");
  }
  std::size_t ids = 0;
  for (const auto& [name, c] : corpus::categories()) {
    for (const Obj x : c->objects()) {
      ++ids;
      if (!effective_descent_check(c, c->id(x)).effective()) o.fail("identity of " + name + "/" + c->name(x));
    }
  }
  o.note(std::to_string(ids) + " identities checked");
  return o;
}

// Each mutant changes one entry, and is kept only if the reference checker
// agrees that it is broken.
Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(kMutationSeed);
  const auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const auto cats = corpus::categories();
  const auto adjs = corpus::adjunctions();
  std::size_t kept = 0, caught = 0, discarded = 0;
  std::size_t per_kind[3] = {0, 0, 0};

  const auto rejects = [](auto&& f) {
    try {
      f();
      return false;
    } catch (const Error&) {
      return true;
    }
  };

  while (kept < kMutants) {
    const std::size_t kind = kept % 3;
    bool broken = false, detected = false;
    if (kind == 0) {
      RawCategory raw = cats[pick(cats.size())].category->to_raw();
      auto& row = raw.composition[pick(raw.composition.size())];
      const std::string was = row[2];
      row[2] = raw.morphisms[pick(raw.morphisms.size())].name;
      if (row[2] == was) continue;
      broken = oracle::law_violations(raw) > 0;
      detected = !check_category(raw).empty() && rejects([&] { (void)validate_category(raw); });
    } else if (kind == 1) {
      const Adjunction& adj = adjs[pick(adjs.size())].adjunction;
      const Functor& f = pick(2) ? adj.left() : adj.right();
      std::vector<Mor> mmap;
      for (const Mor m : f.source().morphisms()) mmap.push_back(f(m));
      std::vector<Obj> omap;
      for (const Obj x : f.source().objects()) omap.push_back(f(x));
      const std::size_t i = pick(mmap.size());
      const Mor replacement{static_cast<std::uint32_t>(pick(f.target().num_morphisms()))};
      if (replacement == mmap[i]) continue;
      mmap[i] = replacement;
      oracle::Names om, mm;
      for (const Obj x : f.source().objects()) om[f.source().name(x)] = f.target().name(omap[x.index]);
      for (const Mor m : f.source().morphisms()) mm[f.source().name(m)] = f.target().name(mmap[m.index]);
      broken = oracle::functor_violations(views::tables(f.source()), views::tables(f.target()), om, mm) > 0;
      detected = rejects([&] { (void)validate_functor(f.src(), f.tgt(), omap, mmap); });
    } else {
      const Adjunction& adj = adjs[pick(adjs.size())].adjunction;
      const bool unit_side = pick(2);
      const NatTrans& t = unit_side ? adj.unit() : adj.counit();
      std::vector<Mor> comps = t.components();
      const FinCategory& c = t.source_functor().target();
      const std::size_t i = pick(comps.size());
      const Obj from = t.source_functor()(Obj{static_cast<std::uint32_t>(i)});
      const Obj to = t.target_functor()(Obj{static_cast<std::uint32_t>(i)});
      // stay well-typed so the mutation reaches naturality and the triangles
      const auto hom = c.hom(from, to);
      const Mor replacement = hom[pick(hom.size())];
      if (replacement == comps[i]) continue;
      comps[i] = replacement;
      oracle::Names unit = views::components(adj.unit()), counit = views::components(adj.counit());
      const FinCategory& s = t.source_functor().source();
      (unit_side ? unit : counit)[s.name(Obj{static_cast<std::uint32_t>(i)})] = c.name(replacement);
      const auto a = views::tables(*adj.domain());
      const auto p = views::tables(*adj.codomain());
      const auto lo = views::object_map(adj.left()), lm = views::morphism_map(adj.left());
      const auto ro = views::object_map(adj.right()), rm = views::morphism_map(adj.right());
      broken = oracle::triangle_violations(a, p, lo, lm, ro, rm, unit, counit) > 0;
      detected = rejects([&] {
        const NatTrans mutated = validate_nat_trans(t.source_functor(), t.target_functor(), comps);
        (void)validate_adjunction(adj.left(), adj.right(), unit_side ? mutated : adj.unit(),
                                  unit_side ? adj.counit() : mutated);
      });
    }
    if (!broken) {
      ++discarded;
      continue;
    }
    ++kept;
    ++per_kind[kind];
    caught += detected;
  }
  if (caught != kept) o.fail(std::to_string(kept - caught) + " mutants slipped through");
  std::ostringstream s;
  s << caught << "/" << kept << " caught (composition " << per_kind[0] << ", functor " << per_kind[1]
    << ", unit/counit " << per_kind[2] << "), discarded as still valid: " << discarded;
  o.note(s.str());
  return o;
}

Outcome criterion7(const std::string& corpus_dir) {
  Outcome o;
  std::size_t files = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir)) paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    ++files;
    guarded(o, path.filename().string(), [&] {
      const std::string text = read_file(path.string());
      const Document d = parse(text);
      const std::string once = serialize(d);
      if (once != text) o.fail(path.filename().string() + ": serialize(parse(file)) differs from the file");
      if (serialize(parse(once)) != once) o.fail(path.filename().string() + ": second serialization differs");
      if (!same_document(parse(once), d)) o.fail(path.filename().string() + ": round trip changed the value");
    });
  }
  for (const auto& [name, c] : corpus::categories()) {
    const auto base = serialize(make_document(canonical_relabel(c)));
    const auto other = serialize(make_document(canonical_relabel(validate_category(views::renamed(c->to_raw(), 99)))));
    if (base != other) o.fail(name + ": canonical form depends on labels");
  }
  if (files == 0) o.fail("no corpus files in " + corpus_dir);
  o.note(std::to_string(files) + " corpus files");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus_dir = argc > 1 ? argv[1] : std::string(CATGAL_TEST_DATA) + "/corpus";
  bool all = true;
  report(1, criterion1(), all);
  report(2, criterion2(), all);
  report(3, criterion3(), all);
  report(4, criterion4(), all);
  report(5, criterion5(), all);
  report(6, criterion6(), all);
  report(7, criterion7(corpus_dir), all);
  return all ? 0 : 1;
}
