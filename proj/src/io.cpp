#include "catgal/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

namespace catgal {

std::string_view to_string(DocKind kind) {
  switch (kind) {
    case DocKind::Category: return "category";
    case DocKind::Functor: return "functor";
    case DocKind::NatTrans: return "nat_trans";
    case DocKind::Adjunction: return "adjunction";
    case DocKind::Groupoid: return "groupoid";
    case DocKind::Report: return "report";
  }
  return "?";
}

Document make_document(CategoryPtr c) { return {DocKind::Category, std::move(c)}; }
Document make_document(Functor f) { return {DocKind::Functor, std::move(f)}; }
Document make_document(NatTrans t) { return {DocKind::NatTrans, std::move(t)}; }
Document make_document(Adjunction a) { return {DocKind::Adjunction, std::move(a)}; }
Document make_document(InternalGroupoid g) { return {DocKind::Groupoid, std::move(g)}; }
Document make_report(Json payload) { return {DocKind::Report, std::move(payload)}; }

// ---------------------------------------------------------------- writing

Json category_payload(const FinCategory& c) {
  Json out;
  out["objects"] = Json::array();
  for (const Obj x : c.objects()) out["objects"].push_back(c.name(x));
  out["morphisms"] = Json::array();
  for (const Mor m : c.morphisms()) {
    out["morphisms"].push_back({{"id", c.name(m)}, {"dom", c.name(c.dom(m))}, {"cod", c.name(c.cod(m))}});
  }
  out["identities"] = Json::object();
  for (const Obj x : c.objects()) out["identities"][c.name(x)] = c.name(c.id(x));
  std::vector<std::array<std::string, 3>> table;
  for (const Mor f : c.morphisms()) {
    for (const Mor g : c.out(c.cod(f))) table.push_back({c.name(g), c.name(f), c.name(c.compose(g, f))});
  }
  std::sort(table.begin(), table.end());
  out["composition"] = table;
  return out;
}

Json functor_maps(const Functor& f) {
  const FinCategory& s = f.source();
  const FinCategory& t = f.target();
  Json out;
  out["objects"] = Json::object();
  out["morphisms"] = Json::object();
  for (const Obj x : s.objects()) out["objects"][s.name(x)] = t.name(f(x));
  for (const Mor m : s.morphisms()) out["morphisms"][s.name(m)] = t.name(f(m));
  return out;
}

namespace {

Json components(const NatTrans& t) {
  const FinCategory& s = t.source_functor().source();
  const FinCategory& c = t.source_functor().target();
  Json out = Json::object();
  for (const Obj x : s.objects()) out[s.name(x)] = c.name(t[x]);
  return out;
}

Json payload_of(const DocValue& v) {
  struct Visitor {
    Json operator()(const CategoryPtr& c) const { return category_payload(*c); }
    Json operator()(const Functor& f) const {
      Json out = functor_maps(f);
      out["source"] = category_payload(f.source());
      out["target"] = category_payload(f.target());
      return out;
    }
    Json operator()(const NatTrans& t) const {
      const Functor& f = t.source_functor();
      return {{"source_category", category_payload(f.source())},
              {"target_category", category_payload(f.target())},
              {"source", functor_maps(f)},
              {"target", functor_maps(t.target_functor())},
              {"components", components(t)}};
    }
    Json operator()(const Adjunction& a) const {
      return {{"domain", category_payload(*a.domain())},
              {"codomain", category_payload(*a.codomain())},
              {"left", functor_maps(a.left())},
              {"right", functor_maps(a.right())},
              {"unit", components(a.unit())},
              {"counit", components(a.counit())}};
    }
    Json operator()(const InternalGroupoid& g) const {
      const FinCategory& c = *g.ambient;
      return {{"ambient", category_payload(c)}, {"obj", c.name(g.obj)},       {"mor", c.name(g.mor)},
              {"src", c.name(g.src)},           {"tgt", c.name(g.tgt)},       {"ident", c.name(g.ident)},
              {"comp", c.name(g.comp)},         {"inverse", c.name(g.inverse)}};
    }
    Json operator()(const Json& j) const { return j; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

std::string serialize(const Document& doc) {
  Json out{{"kind", to_string(doc.kind)}, {"version", kFormatVersion}, {"payload", payload_of(doc.value)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------- reading

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (const char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

std::string at_key(const std::string& at, const std::string& key) { return at + "/" + escape_token(key); }
std::string at_index(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

[[noreturn]] void schema(const std::string& at, const std::string& what) {
  throw Error(ErrorKind::SchemaError, what + " at " + (at.empty() ? "/" : at), {at});
}

const Json& field(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) schema(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(at, "missing field '" + key + "'");
  return *it;
}

const Json& as_object(const Json& j, const std::string& at) {
  if (!j.is_object()) schema(at, "expected an object");
  return j;
}

const Json& as_array(const Json& j, const std::string& at) {
  if (!j.is_array()) schema(at, "expected an array");
  return j;
}

const std::string& as_string(const Json& j, const std::string& at) {
  if (!j.is_string()) schema(at, "expected a string");
  return j.get_ref<const std::string&>();
}

const std::string& reference(const Json& j, const std::set<std::string>& declared, const char* what,
                             const std::string& at) {
  const std::string& id = as_string(j, at);
  if (!declared.count(id)) {
    throw Error(ErrorKind::ReferenceToUndeclaredId, std::string("undeclared ") + what + " '" + id + "' at " + at,
                {id, at});
  }
  return id;
}

struct Declared {
  std::set<std::string> objects;
  std::set<std::string> morphisms;
};

Declared declared_ids(const FinCategory& c) {
  Declared d;
  for (const Obj x : c.objects()) d.objects.insert(c.name(x));
  for (const Mor m : c.morphisms()) d.morphisms.insert(c.name(m));
  return d;
}

CategoryPtr decode_category(const Json& j, const std::string& at) {
  as_object(j, at);
  RawCategory raw;
  Declared d;
  const std::string objects_at = at_key(at, "objects");
  const Json& objects = as_array(field(j, "objects", at), objects_at);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    raw.objects.push_back(as_string(objects[i], at_index(objects_at, i)));
    d.objects.insert(raw.objects.back());
  }
  const std::string morphisms_at = at_key(at, "morphisms");
  const Json& morphisms = as_array(field(j, "morphisms", at), morphisms_at);
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string m_at = at_index(morphisms_at, i);
    raw.morphisms.push_back({as_string(field(morphisms[i], "id", m_at), at_key(m_at, "id")),
                             reference(field(morphisms[i], "dom", m_at), d.objects, "object", at_key(m_at, "dom")),
                             reference(field(morphisms[i], "cod", m_at), d.objects, "object", at_key(m_at, "cod"))});
    d.morphisms.insert(raw.morphisms.back().name);
  }
  const std::string ids_at = at_key(at, "identities");
  for (const auto& [x, m] : as_object(field(j, "identities", at), ids_at).items()) {
    const std::string x_at = at_key(ids_at, x);
    if (!d.objects.count(x)) {
      throw Error(ErrorKind::ReferenceToUndeclaredId, "undeclared object '" + x + "' at " + x_at, {x, x_at});
    }
    raw.identities[x] = reference(m, d.morphisms, "morphism", x_at);
  }
  const std::string comp_at = at_key(at, "composition");
  const Json& table = as_array(field(j, "composition", at), comp_at);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string row_at = at_index(comp_at, i);
    const Json& row = as_array(table[i], row_at);
    if (row.size() != 3) schema(row_at, "expected a triple [g, f, g∘f]");
    std::array<std::string, 3> entry;
    for (std::size_t k = 0; k < 3; ++k) entry[k] = reference(row[k], d.morphisms, "morphism", at_index(row_at, k));
    raw.composition.push_back(std::move(entry));
  }
  return validate_category(raw);
}

struct DecodedMaps {
  std::vector<Obj> omap;
  std::vector<Mor> mmap;
};

DecodedMaps decode_maps(const Json& j, const FinCategory& s, const FinCategory& t, const std::string& at) {
  const Declared ds = declared_ids(s);
  const Declared dt = declared_ids(t);
  DecodedMaps out;
  const std::string o_at = at_key(at, "objects");
  const std::string m_at = at_key(at, "morphisms");
  const Json& objects = as_object(field(j, "objects", at), o_at);
  const Json& morphisms = as_object(field(j, "morphisms", at), m_at);
  for (const auto& [k, v] : objects.items()) {
    if (!ds.objects.count(k)) {
      throw Error(ErrorKind::ReferenceToUndeclaredId, "undeclared object '" + k + "' at " + at_key(o_at, k),
                  {k, at_key(o_at, k)});
    }
    reference(v, dt.objects, "object", at_key(o_at, k));
  }
  for (const auto& [k, v] : morphisms.items()) {
    if (!ds.morphisms.count(k)) {
      throw Error(ErrorKind::ReferenceToUndeclaredId, "undeclared morphism '" + k + "' at " + at_key(m_at, k),
                  {k, at_key(m_at, k)});
    }
    reference(v, dt.morphisms, "morphism", at_key(m_at, k));
  }
  for (const Obj x : s.objects()) {
    auto it = objects.find(s.name(x));
    if (it == objects.end()) schema(o_at, "no image for object '" + s.name(x) + "'");
    out.omap.push_back(t.object(it->get<std::string>()));
  }
  for (const Mor m : s.morphisms()) {
    auto it = morphisms.find(s.name(m));
    if (it == morphisms.end()) schema(m_at, "no image for morphism '" + s.name(m) + "'");
    out.mmap.push_back(t.morphism(it->get<std::string>()));
  }
  return out;
}

Functor decode_functor(const Json& j, const CategoryPtr& s, const CategoryPtr& t, const std::string& at) {
  auto maps = decode_maps(j, *s, *t, at);
  return validate_functor(s, t, std::move(maps.omap), std::move(maps.mmap));
}

std::vector<Mor> decode_components(const Json& j, const FinCategory& s, const FinCategory& t, const std::string& at) {
  const Declared ds = declared_ids(s);
  const Declared dt = declared_ids(t);
  as_object(j, at);
  for (const auto& [k, v] : j.items()) {
    if (!ds.objects.count(k)) {
      throw Error(ErrorKind::ReferenceToUndeclaredId, "undeclared object '" + k + "' at " + at_key(at, k),
                  {k, at_key(at, k)});
    }
    reference(v, dt.morphisms, "morphism", at_key(at, k));
  }
  std::vector<Mor> out;
  for (const Obj x : s.objects()) {
    auto it = j.find(s.name(x));
    if (it == j.end()) schema(at, "no component at '" + s.name(x) + "'");
    out.push_back(t.morphism(it->get<std::string>()));
  }
  return out;
}

DocValue decode(DocKind kind, const Json& p) {
  const std::string at = "/payload";
  switch (kind) {
    case DocKind::Category:
      return decode_category(p, at);
    case DocKind::Functor: {
      auto s = decode_category(field(p, "source", at), at + "/source");
      auto t = decode_category(field(p, "target", at), at + "/target");
      return decode_functor(p, s, t, at);
    }
    case DocKind::NatTrans: {
      auto s = decode_category(field(p, "source_category", at), at + "/source_category");
      auto t = decode_category(field(p, "target_category", at), at + "/target_category");
      Functor f = decode_functor(field(p, "source", at), s, t, at + "/source");
      Functor g = decode_functor(field(p, "target", at), s, t, at + "/target");
      auto comps = decode_components(field(p, "components", at), *s, *t, at + "/components");
      return validate_nat_trans(std::move(f), std::move(g), std::move(comps));
    }
    case DocKind::Adjunction: {
      auto a = decode_category(field(p, "domain", at), at + "/domain");
      auto q = decode_category(field(p, "codomain", at), at + "/codomain");
      Functor l = decode_functor(field(p, "left", at), a, q, at + "/left");
      Functor r = decode_functor(field(p, "right", at), q, a, at + "/right");
      auto unit = decode_components(field(p, "unit", at), *a, *a, at + "/unit");
      auto counit = decode_components(field(p, "counit", at), *q, *q, at + "/counit");
      auto eta = validate_nat_trans(identity_functor(a), compose(r, l), std::move(unit));
      auto eps = validate_nat_trans(compose(l, r), identity_functor(q), std::move(counit));
      return validate_adjunction(std::move(l), std::move(r), std::move(eta), std::move(eps));
    }
    case DocKind::Groupoid: {
      auto c = decode_category(field(p, "ambient", at), at + "/ambient");
      const Declared d = declared_ids(*c);
      const auto obj = [&](const char* key) {
        return c->object(reference(field(p, key, at), d.objects, "object", at_key(at, key)));
      };
      const auto mor = [&](const char* key) {
        return c->morphism(reference(field(p, key, at), d.morphisms, "morphism", at_key(at, key)));
      };
      return validate_groupoid(c, obj("obj"), obj("mor"), mor("src"), mor("tgt"), mor("ident"), mor("comp"),
                               mor("inverse"));
    }
    case DocKind::Report:
      return as_object(p, at);
  }
  schema(at, "unreachable kind");
}

}  // namespace

Document parse(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find(": "); pos != std::string::npos) detail = detail.substr(pos + 2);
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail,
                {std::to_string(line), std::to_string(column)});
  }
  const std::string& kind = as_string(field(root, "kind", ""), "/kind");
  const std::string& version = as_string(field(root, "version", ""), "/version");
  std::optional<DocKind> k;
  for (const DocKind c : {DocKind::Category, DocKind::Functor, DocKind::NatTrans, DocKind::Adjunction,
                          DocKind::Groupoid, DocKind::Report}) {
    if (kind == to_string(c)) k = c;
  }
  if (!k) {
    throw Error(ErrorKind::UnknownKind,
                "unknown kind '" + kind + "' (expected category, functor, nat_trans, adjunction, groupoid or report)",
                {kind});
  }
  if (version != kFormatVersion) {
    throw Error(ErrorKind::VersionMismatch,
                "version '" + version + "' is not supported (expected " + std::string(kFormatVersion) + ")", {version});
  }
  return Document{*k, decode(*k, field(root, "payload", ""))};
}

bool same_document(const Document& a, const Document& b) {
  if (a.kind != b.kind || a.value.index() != b.value.index()) return false;
  struct Visitor {
    const DocValue& other;
    bool operator()(const CategoryPtr& c) const { return same_category(c, std::get<CategoryPtr>(other)); }
    bool operator()(const Functor& f) const { return same_functor(f, std::get<Functor>(other)); }
    bool operator()(const NatTrans& t) const {
      const auto& u = std::get<NatTrans>(other);
      return same_functor(t.source_functor(), u.source_functor()) &&
             same_functor(t.target_functor(), u.target_functor()) && t.components() == u.components();
    }
    bool operator()(const Adjunction& x) const {
      const auto& y = std::get<Adjunction>(other);
      return same_functor(x.left(), y.left()) && same_functor(x.right(), y.right()) &&
             x.unit().components() == y.unit().components() && x.counit().components() == y.counit().components();
    }
    bool operator()(const InternalGroupoid& g) const {
      const auto& h = std::get<InternalGroupoid>(other);
      return same_category(g.ambient, h.ambient) && g.obj == h.obj && g.mor == h.mor && g.src == h.src &&
             g.tgt == h.tgt && g.ident == h.ident && g.comp == h.comp && g.inverse == h.inverse;
    }
    bool operator()(const Json& j) const { return j == std::get<Json>(other); }
  };
  return std::visit(Visitor{b.value}, a.value);
}

// ---------------------------------------------------------------- reports

namespace {

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json failure_json(const std::optional<StepFailure>& f) {
  if (!f) return nullptr;
  return {{"step", f->step}, {"message", f->message}};
}

Json equivalence_failure(const std::optional<EquivalenceFailure>& f) {
  if (!f) return nullptr;
  Json out{{"defect", to_string(f->defect)}, {"message", f->message}};
  if (f->defect == EquivalenceDefect::NotEssentiallySurjective) {
    out["object"] = f->target_object;
  } else {
    out["pair"] = {f->a, f->b};
  }
  return out;
}

Json groupoid_json(const InternalGroupoid& g) {
  const FinCategory& c = *g.ambient;
  Json out{{"obj", c.name(g.obj)},     {"mor", c.name(g.mor)},   {"src", c.name(g.src)},
           {"tgt", c.name(g.tgt)},     {"ident", c.name(g.ident)}, {"comp", c.name(g.comp)},
           {"inverse", c.name(g.inverse)}};
  if (terminal_object(c)) {
    const CategoryPtr ext = external_groupoid(g);
    out["external"] = {{"objects", ext->num_objects()}, {"morphisms", ext->num_morphisms()}};
  } else {
    out["external"] = nullptr;
  }
  return out;
}

Json conditions_json(const DescentConditions& c) {
  return {{"effective", c.effective},
          {"descent_failure", equivalence_failure(c.descent_failure)},
          {"counit_iso", c.counit_iso},
          {"counit_failure", optional_string(c.counit_failure)},
          {"units_iso", c.units_iso},
          {"unit_failure", optional_string(c.unit_failure)}};
}

template <class T, class Fn>
Json maybe(const std::optional<T>& v, Fn&& fn) {
  return v ? Json(fn(*v)) : Json(nullptr);
}

}  // namespace

Json report_json(const EquivalenceResult& r) {
  return {{"equivalence", static_cast<bool>(r)}, {"failure", equivalence_failure(r.failure)}};
}

Json report_json(const DescentReport& r) {
  const FinCategory& c = *r.adjunction.over_domain.base;
  return {{"report", "descent"},
          {"sigma", c.name(r.sigma)},
          {"effective", r.effective()},
          {"algebras", r.algebras.category->num_objects()},
          {"failure", equivalence_failure(r.verdict.failure)}};
}

Json report_json(const LemmaReport& r) {
  Json objects = Json::array();
  for (const auto& o : r.objects) {
    objects.push_back({{"object", o.object},
                       {"unit_iso", o.unit_iso},
                       {"product_unit_iso", o.product_unit_iso},
                       {"biconditional", o.biconditional},
                       {"splitting", optional_string(o.splitting)},
                       {"splitting_verified", o.splitting_verified}});
  }
  return {{"report", "lemma"},
          {"anchor", r.anchor},
          {"counit_iso", r.counit_iso},
          {"counit_failure", optional_string(r.counit_failure)},
          {"unit_hypothesis", r.unit_hypothesis},
          {"unit_failure", optional_string(r.unit_failure)},
          {"hypotheses_hold", r.hypotheses_hold()},
          {"conclusion_holds", r.conclusion_holds()},
          {"objects", objects}};
}

Json report_json(const AdjointAgreement& r) {
  return {{"left_strict", r.left_strict}, {"right_iso", r.right_iso.has_value()}, {"detail", r.detail}, {"ok", r.ok()}};
}

Json report_json(const TrivialGaloisReport& r) {
  return {{"report", "trivial-galois"},
          {"object", r.object},
          {"ok", r.ok()},
          {"descent", maybe(r.descent, [](bool b) { return b; })},
          {"sliced_equivalence", maybe(r.sliced_equivalence, [](bool b) { return b; })},
          {"groupoid", maybe(r.groupoid, groupoid_json)},
          {"actions", maybe(r.actions, [](const ActionCategory& a) { return a.category->num_objects(); })},
          {"equivalence", maybe(r.equivalence, [](const EquivalenceResult& e) { return report_json(e); })},
          {"failure", failure_json(r.failure)}};
}

Json report_json(const GaloisReport& r) {
  Json split = nullptr;
  if (r.split) {
    split = Json::array();
    for (const Obj o : r.split->category->objects()) split.push_back(r.split->category->name(o));
  }
  Json trivial = nullptr;
  if (r.trivial) {
    trivial = report_json(*r.trivial);
    // the groupoid there lives in P/DR; the reindexed one below is the answer
    trivial.erase("report");
  }
  return {{"report", "galois"},
          {"sigma", r.sigma},
          {"ok", r.ok()},
          {"conditions", maybe(r.conditions, conditions_json)},
          {"split", split},
          {"lemma", maybe(r.lemma, [](const LemmaReport& l) { return report_json(l); })},
          {"slice_equivalence", maybe(r.slice_equivalence, [](bool b) { return b; })},
          {"restricted_descent", maybe(r.restricted_descent, [](bool b) { return b; })},
          {"trivial", trivial},
          {"galois_groupoid", maybe(r.galois_groupoid, [](const Reindexed& g) { return groupoid_json(g.groupoid); })},
          {"equivalence", maybe(r.equivalence, [](const EquivalenceResult& e) { return report_json(e); })},
          {"failure", failure_json(r.failure)}};
}

Json report_json(const ConverseReport& r) {
  return {{"report", "converse"},
          {"object", r.object},
          {"ok", r.ok()},
          {"descent", r.descent},
          {"sliced_equivalence", r.sliced_equivalence},
          {"all_split", r.all_split},
          {"unsplit", optional_string(r.unsplit)},
          {"galois_descent", r.galois_descent},
          {"split_is_everything", r.split_is_everything},
          {"failure", failure_json(r.failure)}};
}

// ---------------------------------------------------------------- files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read '" + path + "'", {path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::SchemaError, "cannot write '" + tmp + "'", {path});
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::SchemaError, "short write to '" + tmp + "'", {path});
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorKind::SchemaError, "cannot rename onto '" + path + "': " + ec.message(), {path});
  }
}

}  // namespace catgal
