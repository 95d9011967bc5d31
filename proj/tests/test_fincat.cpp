#include <doctest.h>

#include "catgal/canonical.hpp"
#include "support/corpus.hpp"
#include "support/views.hpp"

using namespace catgal;

namespace {

ErrorKind first_violation(const RawCategory& raw) {
  const auto v = check_category(raw);
  REQUIRE_FALSE(v.empty());
  return v.front().kind;
}

RawCategory delta2_raw() { return corpus::delta2()->to_raw(); }

}  // namespace

TEST_SUITE("fincat") {
  TEST_CASE("corpus categories satisfy the laws according to the reference checker") {
    for (const auto& [name, c] : corpus::categories()) {
      CAPTURE(name);
      CHECK(oracle::law_violations(c->to_raw()) == 0);
      CHECK(same_category(validate_category(c->to_raw()), c));
    }
  }

  TEST_CASE("frozen sizes") {
    // Counted by hand: chain3 has 3 identities and 3 arrows, the lattice 4 + 5.
    CHECK(corpus::chain3()->num_morphisms() == 6);
    CHECK(corpus::lattice()->num_morphisms() == 9);
    CHECK(corpus::iso_pair()->num_morphisms() == 4);
    CHECK(corpus::parallel()->num_morphisms() == 4);
  }

  TEST_CASE("identifiers order the handles") {
    const auto c = corpus::lattice();
    std::vector<std::string> names;
    for (const Obj x : c->objects()) names.push_back(c->name(x));
    CHECK(names == std::vector<std::string>{"bot", "l", "r", "top"});
    CHECK(c->morphism("bot->l").index < c->morphism("bot->r").index);
  }

  TEST_CASE("missing identity") {
    RawCategory raw = delta2_raw();
    raw.identities.erase("b");
    CHECK(first_violation(raw) == ErrorKind::MissingIdentity);
    CHECK_THROWS_AS(validate_category(raw), ValidationError);
  }

  TEST_CASE("missing and ill-typed composites") {
    RawCategory raw = delta2_raw();
    raw.composition.pop_back();
    CHECK(first_violation(raw) == ErrorKind::MissingComposite);

    raw = delta2_raw();
    raw.composition.push_back({"a->b", "a->b", "a->b"});
    CHECK(first_violation(raw) == ErrorKind::IllTypedComposite);
  }

  TEST_CASE("duplicate ids and composites") {
    RawCategory raw = delta2_raw();
    raw.morphisms.push_back({"a->b", "a", "b"});
    CHECK(first_violation(raw) == ErrorKind::DuplicateId);

    raw = delta2_raw();
    raw.composition.push_back(raw.composition.front());
    CHECK(first_violation(raw) == ErrorKind::DuplicateComposite);
  }

  TEST_CASE("broken unit law and associativity") {
    RawCategory raw = corpus::iso_pair()->to_raw();
    for (auto& row : raw.composition) {
      if (row[0] == "g" && row[1] == "f") row[2] = "id_a";
      if (row[0] == "f" && row[1] == "id_a") row[2] = "f";
    }
    CHECK(check_category(raw).empty());

    // a one-object monoid {1, x} with x·x = x, then broken to x·x = 1 with x·1 = 1
    RawCategory m;
    m.objects = {"*"};
    m.morphisms = {{"1", "*", "*"}, {"x", "*", "*"}};
    m.identities = {{"*", "1"}};
    m.composition = {{"1", "1", "1"}, {"x", "1", "x"}, {"1", "x", "x"}, {"x", "x", "x"}};
    CHECK(check_category(m).empty());
    m.composition[1][2] = "1";
    CHECK(first_violation(m) == ErrorKind::BrokenIdentityLaw);
    CHECK(oracle::law_violations(m) > 0);
  }

  TEST_CASE("unknown references") {
    RawCategory raw = delta2_raw();
    raw.morphisms.push_back({"c->a", "c", "a"});
    CHECK(first_violation(raw) == ErrorKind::UnknownReference);
    CHECK_THROWS_AS((void)corpus::delta2()->object("c"), Error);
  }

  TEST_CASE("isomorphisms and inverses") {
    const auto c = corpus::iso_pair();
    CHECK(is_iso(*c, c->morphism("f")));
    CHECK(morphism_inverse(*c, c->morphism("f")) == c->morphism("g"));
    CHECK(find_iso(*c, c->object("a"), c->object("b")) == c->morphism("f"));
    const auto d = corpus::delta2();
    CHECK_FALSE(is_iso(*d, d->morphism("a->b")));
  }

  TEST_CASE("full subcategory keeps identifiers") {
    const auto c = corpus::lattice();
    const auto sub = full_subcategory(*c, {c->object("bot"), c->object("top")});
    CHECK(sub->num_objects() == 2);
    CHECK(sub->num_morphisms() == 3);
    CHECK(sub->find_morphism("bot->top"));
    const Functor incl = inclusion_functor(sub, c);
    CHECK(oracle::functor_violations(views::tables(*sub), views::tables(*c), views::object_map(incl),
                                     views::morphism_map(incl)) == 0);
  }

  TEST_CASE("composition respects the reference table") {
    for (const auto& [name, c] : corpus::categories()) {
      const auto t = views::tables(*c);
      for (const Mor f : c->morphisms()) {
        for (const Mor g : c->out(c->cod(f))) {
          CHECK(c->name(c->compose(g, f)) == t.comp.at({c->name(g), c->name(f)}));
        }
      }
    }
  }
}

TEST_SUITE("functor") {
  TEST_CASE("identity and composite functors pass the reference laws") {
    for (const auto& [name, c] : corpus::categories()) {
      const Functor id = identity_functor(c);
      const Functor twice = compose(id, id);
      CHECK(same_functor(id, twice));
      const auto t = views::tables(*c);
      CHECK(oracle::functor_violations(t, t, views::object_map(twice), views::morphism_map(twice)) == 0);
    }
  }

  TEST_CASE("a map sending an arrow to the wrong place is rejected") {
    const auto d2 = corpus::delta2();
    const auto c3 = corpus::chain3();
    auto omap = std::vector<Obj>{c3->object("a"), c3->object("c")};
    auto mmap = std::vector<Mor>{c3->morphism("a->b"), c3->morphism("id_a"), c3->morphism("id_c")};
    CHECK_THROWS_AS(validate_functor(d2, c3, omap, mmap), ValidationError);
    mmap[0] = c3->morphism("a->c");
    CHECK_NOTHROW(validate_functor(d2, c3, omap, mmap));
  }

  TEST_CASE("object map inconsistent with the morphism map") {
    const auto c = corpus::parallel();
    std::vector<Obj> omap = c->objects();
    std::vector<Mor> mmap = c->morphisms();
    mmap[c->morphism("id_a").index] = c->morphism("id_a");
    std::swap(mmap[c->morphism("f").index], mmap[c->morphism("g").index]);
    CHECK_NOTHROW(validate_functor(c, c, omap, mmap));
    omap[0] = c->object("b");
    try {
      (void)validate_functor(c, c, omap, mmap);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DomCodMismatch);
    }
  }

  TEST_CASE("naturality: identity transformation and a broken one") {
    const auto c = corpus::chain3();
    const Functor id = identity_functor(c);
    const NatTrans t = identity_transformation(id);
    CHECK(is_natural_iso(t));
    const auto bot = monotone_functor(c, c, {{"a", "a"}, {"b", "a"}, {"c", "a"}});
    std::vector<Mor> comps{c->morphism("id_a"), c->morphism("a->b"), c->morphism("a->c")};
    const NatTrans to_id = validate_nat_trans(bot, id, comps);
    CHECK_FALSE(is_natural_iso(to_id));
    CHECK(oracle::naturality_violations(views::tables(*c), views::tables(*c), views::object_map(bot),
                                        views::morphism_map(bot), views::morphism_map(id),
                                        views::components(to_id)) == 0);
    comps[1] = c->morphism("id_b");
    CHECK_THROWS_AS(validate_nat_trans(bot, id, comps), Error);
  }
}

TEST_SUITE("equivalence") {
  TEST_CASE("skeleton size agrees with the iso-class oracle") {
    for (const auto& [name, c] : corpus::categories()) {
      CAPTURE(name);
      const Skeleton s = skeleton(c);
      CHECK(s.category->num_objects() == oracle::iso_classes(views::tables(*c)));
      CHECK(check_equivalence(s.inclusion));
      CHECK(check_equivalence(s.projection));
    }
  }

  TEST_CASE("collapsing a chain is not full") {
    const auto d2 = corpus::delta2();
    const auto d1 = corpus::delta1();
    const auto f = monotone_functor(d2, d1, {{"a", "a"}, {"b", "a"}});
    const auto r = check_equivalence(f);
    REQUIRE_FALSE(r);
    CHECK(r.failure->defect == EquivalenceDefect::NotFull);
    CHECK(r.failure->a == "b");
    CHECK(r.failure->b == "a");
  }

  TEST_CASE("an isomorphic pair is equivalent to a point but not isomorphic to it") {
    const auto p = corpus::iso_pair();
    const auto d1 = corpus::delta1();
    const auto f = make_functor(
        p, d1, [&](Obj) { return d1->object("a"); }, [&](Mor) { return d1->morphism("id_a"); });
    CHECK(check_equivalence(f));
    CHECK_FALSE(is_isomorphism(f));
    CHECK_FALSE(find_isomorphism(p, d1));
    CHECK(find_equivalence(p, d1));
  }

  TEST_CASE("missing an object is not essentially surjective") {
    const auto d1 = corpus::delta1();
    const auto d2 = corpus::delta2();
    const auto f = monotone_functor(d1, d2, {{"a", "a"}});
    const auto r = check_equivalence(f);
    REQUIRE_FALSE(r);
    CHECK(r.failure->defect == EquivalenceDefect::NotEssentiallySurjective);
    CHECK(r.failure->target_object == "b");
  }

  TEST_CASE("equivalence search agrees with isomorphism of skeleta") {
    const auto all = corpus::categories();
    for (const auto& [n1, c] : all) {
      if (c->num_morphisms() > 16) continue;
      for (const auto& [n2, d] : all) {
        if (d->num_morphisms() > 16) continue;
        CAPTURE(n1);
        CAPTURE(n2);
        const bool eq = find_equivalence(c, d).has_value();
        const bool iso = find_isomorphism(skeleton(c).category, skeleton(d).category).has_value();
        CHECK(eq == iso);
      }
    }
  }

  TEST_CASE("isomorphism search inverts") {
    const auto c = corpus::lattice();
    const auto renamed = validate_category(views::renamed(c->to_raw(), 7));
    const auto f = find_isomorphism(c, renamed);
    REQUIRE(f);
    CHECK(is_isomorphism(*f));
    CHECK(same_functor(compose(inverse_isomorphism(*f), *f), identity_functor(c)));
  }
}

TEST_SUITE("canonical") {
  TEST_CASE("relabelling does not change the canonical tables") {
    for (const auto& [name, c] : corpus::categories()) {
      CAPTURE(name);
      const auto base = canonical_relabel(c);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto other = canonical_relabel(validate_category(views::renamed(c->to_raw(), seed)));
        CHECK(same_category(base, other));
      }
    }
  }

  TEST_CASE("non-isomorphic categories stay apart") {
    CHECK_FALSE(same_category(canonical_relabel(corpus::discrete2()), canonical_relabel(corpus::delta2())));
    CHECK_FALSE(same_category(canonical_relabel(corpus::parallel()), canonical_relabel(corpus::iso_pair())));
  }
}
