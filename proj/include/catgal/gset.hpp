#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catgal/adjunction.hpp"

namespace catgal {

struct GroupTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::uint32_t>> mult;  // mult[a][b] = a·b
  std::uint32_t unit = 0;
  std::vector<std::uint32_t> inverse;

  std::size_t order() const { return elements.size(); }
};

// Throws NotAGroup naming the failing law.
GroupTable validate_group(GroupTable g);
// C2, C3, C4 or S3.
GroupTable gen_group(std::string_view name);

// A finite left action: act[g][x] = g·x on {0, ..., size-1}.
struct GSet {
  std::string name;
  std::uint32_t size = 0;
  std::vector<std::vector<std::uint32_t>> act;
};

// Throws NotAnAction.
void validate_action(const GroupTable& g, const GSet& x);

GSet trivial_gset(const GroupTable& g, std::uint32_t n);
GSet regular_gset(const GroupTable& g);
GSet gset_product(const GroupTable& g, const GSet& x, const GSet& y);
GSet gset_coproduct(const GroupTable& g, const GSet& x, const GSet& y, std::string name);

// Seed tokens: "0", "1", "Tn", "G", "GxG", "kG" (G is the regular action).
GSet parse_seed(const GroupTable& g, std::string_view token);

// Orbit index of every element, orbits numbered by their least element.
std::vector<std::uint32_t> orbit_indices(const GroupTable& g, const GSet& x);
std::uint32_t orbit_count(const GroupTable& g, const GSet& x);

// All equivariant maps x → y as image tables, in lexicographic order.
std::vector<std::vector<std::uint32_t>> equivariant_maps(const GroupTable& g, const GSet& x, const GSet& y);

// Complete invariant of the isomorphism class: sorted multiset of the
// conjugacy classes of orbit stabilizers.
std::vector<std::uint64_t> iso_signature(const GroupTable& g, const GSet& x);

// Concrete maps are named "X->Y[i0,i1,...]".
std::string map_name(const std::string& x, const std::string& y, const std::vector<std::uint32_t>& table);

struct ClosureFlags {
  bool terminal = false;
  bool products = false;
  bool pullbacks = false;
  bool equalizers = false;

  static ClosureFlags all() { return {true, true, true, true}; }
  static ClosureFlags none() { return {}; }
};

struct GSetFragment {
  GroupTable group;
  std::vector<GSet> objects;                           // indexed by object of `category`
  std::vector<std::vector<std::uint32_t>> tables;      // indexed by morphism of `category`
  CategoryPtr category;                                // G-sets, all equivariant maps
  CategoryPtr sets;                                    // orbit sets, all maps
  Adjunction adjunction;                               // orbits ⊣ trivial action
};

// Saturates the seeds under the flagged limits and under "trivial action on
// the orbit set", then tabulates both categories and the adjunction. Throws
// ClosureBoundExceeded naming the first object larger than `bound` elements.
GSetFragment gen_gset_fragment(const GroupTable& g, const std::vector<GSet>& seeds, ClosureFlags flags,
                               std::uint32_t bound);

// FinSet on the given sizes with all maps; objects are named by their size.
CategoryPtr finset_category(const std::vector<std::uint32_t>& sizes);

}  // namespace catgal
