#include <doctest.h>

#include "support/corpus.hpp"
#include "support/views.hpp"

using namespace catgal;

namespace {

// Greatest lower bound in a thin category, by brute force over the tables.
std::optional<std::string> meet(const oracle::Tables& t, const std::string& x, const std::string& y) {
  const auto below = [&](const std::string& u, const std::string& v) { return !t.hom(u, v).empty(); };
  for (const auto& m : t.objects) {
    if (!below(m, x) || !below(m, y)) continue;
    bool greatest = true;
    for (const auto& z : t.objects) {
      if (below(z, x) && below(z, y) && !below(z, m)) greatest = false;
    }
    if (greatest) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("limits") {
  TEST_CASE("products in thin categories are meets") {
    for (const auto& c : {corpus::chain3(), corpus::lattice(), corpus::delta2(), corpus::discrete2()}) {
      const auto t = views::tables(*c);
      for (const Obj x : c->objects()) {
        for (const Obj y : c->objects()) {
          const auto expected = meet(t, c->name(x), c->name(y));
          const Limit* p = binary_product(*c, x, y);
          REQUIRE((p != nullptr) == expected.has_value());
          if (p) CHECK(c->name(p->apex) == *expected);
        }
      }
    }
  }

  TEST_CASE("terminal objects") {
    CHECK(corpus::lattice()->name(*terminal_object(*corpus::lattice())) == "top");
    CHECK(corpus::delta2()->name(*terminal_object(*corpus::delta2())) == "b");
    CHECK_FALSE(terminal_object(*corpus::discrete2()));
    CHECK_FALSE(terminal_object(*corpus::parallel()));
    const auto& frag = corpus::c2_orbits();
    CHECK(frag.category->name(*terminal_object(*frag.category)) == "1");
    CHECK_THROWS_AS(to_terminal(*corpus::discrete2(), Obj{0}), Error);
  }

  TEST_CASE("G-set products exist exactly where the fragment holds the product's orbit type") {
    const auto& frag = corpus::c2_orbits();
    const FinCategory& c = *frag.category;
    for (const Obj x : c.objects()) {
      for (const Obj y : c.objects()) {
        const GSet product = gset_product(frag.group, frag.objects[x.index], frag.objects[y.index]);
        const auto sig = iso_signature(frag.group, product);
        bool present = false;
        for (const auto& o : frag.objects) present = present || iso_signature(frag.group, o) == sig;
        const Limit* p = binary_product(c, x, y);
        CAPTURE(c.name(x));
        CAPTURE(c.name(y));
        CHECK((p != nullptr) == present);
        if (p) CHECK(iso_signature(frag.group, frag.objects[p->apex.index]) == sig);
      }
    }
    CHECK_THROWS_WITH_AS(require_product(c, c.object("C2"), c.object("2C2")), doctest::Contains("C2"), Error);
  }

  TEST_CASE("every cone mediates uniquely into the chosen limit") {
    const auto c = corpus::lattice();
    for (const Obj x : c->objects()) {
      for (const Obj y : c->objects()) {
        const Limit* p = binary_product(*c, x, y);
        if (!p) continue;
        for (const Obj a : c->objects()) {
          for (const auto& cone : cones_over(*c, product_shape(x, y), a)) {
            const Mor u = mediate(*p, a, cone);
            CHECK(c->compose(p->legs[0], u) == cone[0]);
            CHECK(c->compose(p->legs[1], u) == cone[1]);
          }
        }
      }
    }
  }

  TEST_CASE("pullbacks commute, are limits and are canonical") {
    for (const auto& [name, c] : corpus::categories()) {
      for (const Mor f : c->morphisms()) {
        for (const Mor g : c->morphisms()) {
          if (c->cod(f) != c->cod(g)) continue;
          const auto pb = pullback(*c, f, g);
          if (!pb) continue;
          CHECK(c->compose(f, pb->proj1) == c->compose(g, pb->proj2));
          const std::vector<Mor> legs{pb->proj1, pb->proj2};
          CHECK(is_limit_cone(*c, pullback_shape(*c, f, g), pb->apex, legs));
          const auto again = pullback(*c, f, g);
          CHECK(again->apex == pb->apex);
          CHECK(again->proj1 == pb->proj1);
        }
      }
    }
  }

  TEST_CASE("missing pullback names the cospan") {
    const auto& frag = corpus::c2_orbits();
    const FinCategory& c = *frag.category;
    const Mor a = to_terminal(c, c.object("C2"));
    const Mor b = to_terminal(c, c.object("2C2"));
    CHECK_FALSE(pullback(c, a, b));
    try {
      (void)require_pullback(c, a, b);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingPullback);
      CHECK(std::string(e.what()).find("C2->1[0,0]") != std::string::npos);
    }
  }

  TEST_CASE("equalizers") {
    const auto& frag = corpus::c2_orbits();
    const FinCategory& c = *frag.category;
    const Mor id = c.id(c.object("C2"));
    const Mor swap = c.morphism("C2->C2[1,0]");
    const Limit* e = equalizer(c, id, swap);
    REQUIRE(e);
    CHECK(c.name(e->apex) == "0");  // no fixed points
    const auto p = corpus::parallel();
    CHECK_FALSE(equalizer(*p, p->morphism("f"), p->morphism("g")));
    CHECK_THROWS_AS(equalizer_shape(*p, p->morphism("f"), p->id(p->object("a"))), Error);
  }

  TEST_CASE("slices of posets are down-sets") {
    const auto lat = corpus::lattice();
    const Slice over_top = slice_category(lat, lat->object("top"));
    CHECK(find_isomorphism(over_top.category, lat));
    const Slice over_l = slice_category(lat, lat->object("l"));
    CHECK(find_isomorphism(over_l.category, corpus::delta2()));
    CHECK(over_l.category->find_object("bot->l"));
    CHECK(over_l.category->find_morphism("bot->l@l->l") == std::nullopt);
    CHECK(over_l.category->find_morphism("bot->l@id_l"));
  }

  TEST_CASE("slice sizes match a direct count") {
    for (const auto& [name, c] : corpus::categories()) {
      const auto t = views::tables(*c);
      for (const Obj x : c->objects()) {
        std::size_t objects = 0, morphisms = 0;
        for (const auto& [g, ge] : t.ends) {
          if (ge.second != c->name(x)) continue;
          ++objects;
          for (const auto& [h, he] : t.ends) {
            if (he.second != c->name(x)) continue;
            for (const auto& k : t.hom(ge.first, he.first)) morphisms += t.comp.at({h, k}) == g;
          }
        }
        const Slice s = slice_category(c, x);
        CAPTURE(name);
        CHECK(s.category->num_objects() == objects);
        CHECK(s.category->num_morphisms() == morphisms);
      }
    }
  }

  TEST_CASE("slice morphism names bracket nested slices") {
    CHECK(slice_morphism_name("k", "h") == "k@h");
    CHECK(slice_morphism_name("k@h", "m") == "(k@h)@m");
    CHECK(slice_morphism_name("k", "h@m") == "k@(h@m)");
    const auto c = corpus::chain3();
    const Slice s = slice_category(c, c->object("c"));
    const Slice ss = slice_category(s.category, s.category->object("b->c"));
    CHECK(ss.category->find_morphism("(a->b@b->c)@(id_b@b->c)"));
  }
}
