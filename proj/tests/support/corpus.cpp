#include "corpus.hpp"

namespace corpus {

namespace {

bool standard_leq(const std::string& x, const std::string& y) { return x <= y; }

}  // namespace

CategoryPtr delta1() { return poset_category({"a"}, standard_leq); }
CategoryPtr delta2() { return poset_category({"a", "b"}, standard_leq); }
CategoryPtr chain3() { return chain(3); }

CategoryPtr discrete2() {
  return poset_category({"a", "b"}, [](const std::string&, const std::string&) { return false; });
}

CategoryPtr iso_pair() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}};
  raw.composition = {{"id_a", "id_a", "id_a"}, {"id_b", "id_b", "id_b"}, {"f", "id_a", "f"}, {"id_b", "f", "f"},
                     {"g", "id_b", "g"},       {"id_a", "g", "g"},       {"g", "f", "id_a"}, {"f", "g", "id_b"}};
  return validate_category(raw);
}

CategoryPtr lattice() {
  return poset_category({"bot", "l", "r", "top"},
                        [](const std::string& x, const std::string& y) { return x == "bot" || y == "top"; });
}

CategoryPtr parallel() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}};
  raw.composition = {{"id_a", "id_a", "id_a"}, {"id_b", "id_b", "id_b"}, {"f", "id_a", "f"},
                     {"id_b", "f", "f"},       {"g", "id_a", "g"},       {"id_b", "g", "g"}};
  return validate_category(raw);
}

const GSetFragment& c2_orbits() {
  static const GSetFragment frag = [] {
    const GroupTable g = gen_group("C2");
    std::vector<GSet> seeds;
    for (const char* s : {"0", "1", "T2", "G", "2G"}) seeds.push_back(parse_seed(g, s));
    return gen_gset_fragment(g, seeds, ClosureFlags::none(), 8);
  }();
  return frag;
}

const GSetFragment& c3_orbits() {
  static const GSetFragment frag = [] {
    const GroupTable g = gen_group("C3");
    std::vector<GSet> seeds;
    for (const char* s : {"0", "1", "G"}) seeds.push_back(parse_seed(g, s));
    return gen_gset_fragment(g, seeds, ClosureFlags::none(), 9);
  }();
  return frag;
}

Adjunction chain_counit_failure() {
  return galois_connection(delta2(), chain3(), {{"a", "a"}, {"b", "c"}}, {{"a", "a"}, {"b", "a"}, {"c", "b"}});
}

Adjunction lattice_counit_failure() {
  return galois_connection(delta2(), lattice(), {{"a", "bot"}, {"b", "top"}},
                           {{"bot", "a"}, {"l", "a"}, {"r", "a"}, {"top", "b"}});
}

std::vector<NamedCategory> categories() {
  return {{"delta1", delta1()},
          {"delta2", delta2()},
          {"discrete2", discrete2()},
          {"iso_pair", iso_pair()},
          {"chain3", chain3()},
          {"lattice", lattice()},
          {"parallel", parallel()},
          {"c2_gsets", c2_orbits().category},
          {"c2_orbit_sets", c2_orbits().sets},
          {"c3_gsets", c3_orbits().category},
          {"c2_group", group_as_category(gen_group("C2"))},
          {"s3_group", group_as_category(gen_group("S3"))}};
}

std::vector<NamedAdjunction> adjunctions() {
  return {{"id_delta1", identity_adjunction(delta1())},
          {"id_delta2", identity_adjunction(delta2())},
          {"id_iso_pair", identity_adjunction(iso_pair())},
          {"id_chain3", identity_adjunction(chain3())},
          {"id_lattice", identity_adjunction(lattice())},
          {"bottom_inclusion", galois_connection(delta1(), delta2(), {{"a", "a"}}, {{"a", "a"}, {"b", "a"}})},
          {"collapse_delta2", galois_connection(delta2(), delta1(), {{"a", "a"}, {"b", "a"}}, {{"a", "b"}})},
          {"chain_counit_failure", chain_counit_failure()},
          {"lattice_counit_failure", lattice_counit_failure()},
          {"c2_orbits", c2_orbits().adjunction},
          {"c3_orbits", c3_orbits().adjunction}};
}

}  // namespace corpus
