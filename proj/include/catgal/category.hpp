#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catgal/error.hpp"

namespace catgal {

// Object and morphism handles. Indices follow the lexicographic order of the
// identifiers, so "least index" and "lexicographically least id" coincide.
struct Obj {
  std::uint32_t index = 0;
  auto operator<=>(const Obj&) const = default;
};

struct Mor {
  std::uint32_t index = 0;
  auto operator<=>(const Mor&) const = default;
};

namespace detail {
struct LimitMemo;
std::shared_ptr<LimitMemo> make_limit_memo();
}  // namespace detail

// Category tables keyed by identifier, as read from a document.
struct RawMorphism {
  std::string name;
  std::string dom;
  std::string cod;
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::string> identities;
  // entries [g, f, g∘f]
  std::vector<std::array<std::string, 3>> composition;
};

class FinCategory;
using CategoryPtr = std::shared_ptr<const FinCategory>;

// Index-based construction path used by every derived construction (slices,
// algebra categories, fragments). build() runs the full validator.
class CategoryBuilder {
 public:
  std::uint32_t add_object(std::string name);
  std::uint32_t add_morphism(std::string name, std::uint32_t dom, std::uint32_t cod);
  void set_identity(std::uint32_t object, std::uint32_t morphism);
  void set_composite(std::uint32_t g, std::uint32_t f, std::uint32_t gf);

  // Fills in g∘f for every composable pair using `fn(g, f)`.
  template <class Fn>
  void compose_with(Fn&& fn) {
    for (std::uint32_t f = 0; f < doms_.size(); ++f) {
      for (std::uint32_t g = 0; g < doms_.size(); ++g) {
        if (doms_[g] == cods_[f]) set_composite(g, f, fn(g, f));
      }
    }
  }

  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_morphisms() const { return morphism_names_.size(); }
  std::uint32_t dom(std::uint32_t m) const { return doms_[m]; }
  std::uint32_t cod(std::uint32_t m) const { return cods_[m]; }

  // Validates and freezes. Throws ValidationError listing the violations.
  CategoryPtr build() const;

  // All violations (capped), without throwing.
  std::vector<Violation> check() const;

 private:
  friend class FinCategory;
  std::pair<std::shared_ptr<FinCategory>, std::vector<Violation>> assemble() const;

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<std::uint32_t> doms_;
  std::vector<std::uint32_t> cods_;
  std::vector<std::optional<std::uint32_t>> identities_;
  std::unordered_map<std::uint64_t, std::uint32_t> composites_;
  std::vector<std::array<std::uint32_t, 3>> duplicate_composites_;
};

// A validated finite category. Immutable; shared through CategoryPtr.
class FinCategory {
 public:
  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_morphisms() const { return morphism_names_.size(); }

  const std::vector<Obj>& objects() const { return objects_; }
  const std::vector<Mor>& morphisms() const { return morphisms_; }

  const std::string& name(Obj x) const { return object_names_[x.index]; }
  const std::string& name(Mor m) const { return morphism_names_[m.index]; }

  std::optional<Obj> find_object(std::string_view name) const;
  std::optional<Mor> find_morphism(std::string_view name) const;
  // Throw UnknownObject / UnknownMorphism.
  Obj object(std::string_view name) const;
  Mor morphism(std::string_view name) const;

  Obj dom(Mor m) const { return Obj{doms_[m.index]}; }
  Obj cod(Mor m) const { return Obj{cods_[m.index]}; }
  Mor id(Obj x) const { return Mor{identities_[x.index]}; }
  bool is_identity(Mor m) const { return id(dom(m)) == m; }

  std::span<const Mor> hom(Obj a, Obj b) const { return homs_[a.index * num_objects() + b.index]; }
  std::span<const Mor> out(Obj a) const { return outs_[a.index]; }

  // g∘f; throws IllTyped unless cod(f) == dom(g).
  Mor compose(Mor g, Mor f) const;
  // h∘g∘f
  Mor compose(Mor h, Mor g, Mor f) const { return compose(h, compose(g, f)); }

  // Structural fingerprint (names and tables); equal categories share it.
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool same_as(const FinCategory& other) const;

  RawCategory to_raw() const;

  detail::LimitMemo& limit_memo() const { return *limit_memo_; }

 private:
  friend class CategoryBuilder;
  FinCategory() = default;

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<Obj> objects_;
  std::vector<Mor> morphisms_;
  std::vector<std::uint32_t> doms_;
  std::vector<std::uint32_t> cods_;
  std::vector<std::uint32_t> identities_;
  std::vector<std::vector<Mor>> homs_;
  std::vector<std::vector<Mor>> outs_;
  std::vector<std::uint32_t> out_pos_;
  // composites_[f][out_pos_[g]] = g∘f
  std::vector<std::vector<std::uint32_t>> composites_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
  std::uint64_t fingerprint_ = 0;
  std::shared_ptr<detail::LimitMemo> limit_memo_;
};

bool same_category(const CategoryPtr& a, const CategoryPtr& b);

// Raw tables in, validated category out (or ValidationError).
CategoryPtr validate_category(const RawCategory& raw);
// Every violation found, empty when the tables form a category.
std::vector<Violation> check_category(const RawCategory& raw);

// The unique two-sided inverse of m, if any.
std::optional<Mor> morphism_inverse(const FinCategory& c, Mor m);
bool is_iso(const FinCategory& c, Mor m);
// Least isomorphism a → b.
std::optional<Mor> find_iso(const FinCategory& c, Obj a, Obj b);

// Full subcategory on `keep` (identifiers unchanged).
CategoryPtr full_subcategory(const FinCategory& c, const std::vector<Obj>& keep);

}  // namespace catgal
