// catgal: command-line front end. Results go to stdout, diagnostics to
// stderr; the exit status is 0 exactly when the requested verdict holds,
// 1 when it does not and 2 on malformed input or usage.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catgal/gset.hpp"
#include "catgal/io.hpp"

using namespace catgal;

namespace {

struct Options {
  std::string format = "text";
  bool quiet = false;
  std::uint64_t budget = 0;
};

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kBroken = 2;

Document load(const std::string& path) { return parse(read_file(path)); }

template <class T>
const T& expect(const Document& doc, DocKind kind, const std::string& path) {
  if (doc.kind != kind) {
    throw Error(ErrorKind::SchemaError,
                "'" + path + "' holds a document of kind " + std::string(to_string(doc.kind)) +
                    ", expected " + std::string(to_string(kind)),
                {path});
  }
  return std::get<T>(doc.value);
}

std::string render_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Text form of a report: one "key: value" line per top-level field.
std::string text_report(const Json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) out << k << ": " << render_value(v) << "\n";
  return out.str();
}

std::string text_summary(const Document& doc) {
  std::ostringstream out;
  out << to_string(doc.kind) << "\n";
  const auto counts = [&](const char* label, const FinCategory& c) {
    out << label << ": " << c.num_objects() << " objects, " << c.num_morphisms() << " morphisms\n";
  };
  if (const auto* c = std::get_if<CategoryPtr>(&doc.value)) counts("category", **c);
  if (const auto* f = std::get_if<Functor>(&doc.value)) {
    counts("source", f->source());
    counts("target", f->target());
  }
  if (const auto* t = std::get_if<NatTrans>(&doc.value)) {
    counts("source", t->source_functor().source());
    counts("target", t->source_functor().target());
  }
  if (const auto* a = std::get_if<Adjunction>(&doc.value)) {
    counts("domain", *a->domain());
    counts("codomain", *a->codomain());
  }
  if (const auto* g = std::get_if<InternalGroupoid>(&doc.value)) {
    counts("ambient", *g->ambient);
    out << "objects: " << g->ambient->name(g->obj) << "\nmorphisms: " << g->ambient->name(g->mor) << "\n";
  }
  if (const auto* r = std::get_if<Json>(&doc.value)) out << text_report(*r);
  return out.str();
}

void emit(const Options& opt, const Document& doc) {
  if (opt.quiet) return;
  std::cout << (opt.format == "structured" ? serialize(doc) : text_summary(doc));
}

void emit_report(const Options& opt, const Json& report) {
  if (opt.quiet) return;
  std::cout << (opt.format == "structured" ? serialize(make_report(report)) : text_report(report));
}

// Malformed documents, as opposed to well-formed ones whose tables fail a law.
bool is_format_error(ErrorKind k) {
  return k == ErrorKind::SyntaxError || k == ErrorKind::UnknownKind || k == ErrorKind::VersionMismatch ||
         k == ErrorKind::ReferenceToUndeclaredId || k == ErrorKind::SchemaError;
}

int verdict(bool positive) { return positive ? kPositive : kNegative; }

ClosureFlags parse_closure(const std::string& text) {
  if (text == "all") return ClosureFlags::all();
  if (text == "none") return ClosureFlags::none();
  ClosureFlags flags;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "terminal") flags.terminal = true;
    else if (token == "products") flags.products = true;
    else if (token == "pullbacks") flags.pullbacks = true;
    else if (token == "equalizers") flags.equalizers = true;
    else throw Error(ErrorKind::SchemaError, "unknown closure flag '" + token + "'", {token});
  }
  return flags;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categorical Galois theory toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--budget", opt.budget, "search budget (composition lookups)");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--quiet", opt.quiet, "print nothing on stdout");

  std::string file, file2, at, domain_at, codomain_at, sigma, object, out_path;
  std::string group, seeds, closure = "all";
  std::uint32_t bound = 8;

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  validate->add_option("file", file)->required();

  auto* slice = app.add_subcommand("slice", "slice category C/X");
  slice->add_option("category", file)->required();
  slice->add_option("--at", at)->required();

  auto* adjoint = app.add_subcommand("adjoint-check", "check an adjunction document");
  adjoint->add_option("adjunction", file)->required();

  auto* slice_adj = app.add_subcommand("slice-adj", "sliced adjunction at an object of either side");
  slice_adj->add_option("adjunction", file)->required();
  auto* side = slice_adj->add_option_group("side", "exactly one of");
  side->add_option("--domain-at", domain_at, "object W of the domain");
  side->add_option("--codomain-at", codomain_at, "object X of the codomain");
  side->require_option(1);

  auto* descent = app.add_subcommand("descent", "is σ of effective descent");
  descent->add_option("category", file)->required();
  descent->add_option("--sigma", sigma)->required();

  auto* lemma = app.add_subcommand("lemma", "technical lemma at W");
  lemma->add_option("adjunction", file)->required();
  lemma->add_option("--at", at)->required();

  auto* galois = app.add_subcommand("galois", "Galois theorem for σ");
  galois->add_option("adjunction", file)->required();
  galois->add_option("--sigma", sigma)->required();
  galois->add_option("--out", out_path, "also write the report document here");

  auto* trivial = app.add_subcommand("trivial-galois", "trivial case: σ = !: S → 1");
  trivial->add_option("adjunction", file)->required();
  trivial->add_option("--object", object)->required();

  auto* equiv = app.add_subcommand("equiv", "search for an equivalence between two categories");
  equiv->add_option("first", file)->required();
  equiv->add_option("second", file2)->required();

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gset = gen->add_subcommand("gset", "G-set fragment with the orbit adjunction");
  gset->add_option("--group", group)->required()->check(CLI::IsMember({"C2", "C3", "C4", "S3"}));
  gset->add_option("--seeds", seeds, "comma-separated: 0, 1, Tn, G, GxG, kG")->required();
  gset->add_option("--bound", bound)->required();
  gset->add_option("--closure", closure, "all, none or a list of terminal,products,pullbacks,equalizers");
  gset->add_option("--out", out_path, "write the adjunction document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPositive : kBroken;
  }
  if (opt.budget > 0) ::setenv("CATGAL_BUDGET", std::to_string(opt.budget).c_str(), 1);

  try {
    if (validate->parsed()) {
      const std::string text = read_file(file);
      try {
        emit(opt, parse(text));
      } catch (const Error& e) {
        if (is_format_error(e.kind())) throw;
        std::cerr << "invalid: " << e.what() << "\n";
        return kNegative;
      }
      return kPositive;
    }
    if (adjoint->parsed()) {
      const std::string text = read_file(file);
      try {
        const Document doc = parse(text);
        expect<Adjunction>(doc, DocKind::Adjunction, file);
        emit(opt, doc);
      } catch (const Error& e) {
        if (is_format_error(e.kind())) throw;
        std::cerr << "not an adjunction: " << e.what() << "\n";
        return kNegative;
      }
      return kPositive;
    }
    if (slice->parsed()) {
      const CategoryPtr c = expect<CategoryPtr>(load(file), DocKind::Category, file);
      emit(opt, make_document(slice_category(c, c->object(at)).category));
      return kPositive;
    }
    if (slice_adj->parsed()) {
      const Adjunction adj = expect<Adjunction>(load(file), DocKind::Adjunction, file);
      const SlicedAdjunction s = !domain_at.empty() ? slice_at_domain(adj, adj.domain()->object(domain_at))
                                                    : slice_at_codomain(adj, adj.codomain()->object(codomain_at));
      emit(opt, make_document(s.adjunction));
      return kPositive;
    }
    if (descent->parsed()) {
      const CategoryPtr c = expect<CategoryPtr>(load(file), DocKind::Category, file);
      const DescentReport r = effective_descent_check(c, c->morphism(sigma));
      emit_report(opt, report_json(r));
      return verdict(r.effective());
    }
    if (lemma->parsed()) {
      const Adjunction adj = expect<Adjunction>(load(file), DocKind::Adjunction, file);
      const LemmaReport r = lemma_technical_check(adj, adj.domain()->object(at));
      emit_report(opt, report_json(r));
      return verdict(r.hypotheses_hold() && r.conclusion_holds());
    }
    if (galois->parsed()) {
      const Adjunction adj = expect<Adjunction>(load(file), DocKind::Adjunction, file);
      const GaloisReport r = galois_theorem(adj, adj.domain()->morphism(sigma));
      const Json report = report_json(r);
      if (!out_path.empty()) write_file_atomic(out_path, serialize(make_report(report)));
      emit_report(opt, report);
      if (r.failure) std::cerr << "failed at " << r.failure->step << ": " << r.failure->message << "\n";
      return verdict(r.ok());
    }
    if (trivial->parsed()) {
      const Adjunction adj = expect<Adjunction>(load(file), DocKind::Adjunction, file);
      const TrivialGaloisReport r = trivial_galois(adj, adj.domain()->object(object));
      emit_report(opt, report_json(r));
      if (r.failure) std::cerr << "failed at " << r.failure->step << ": " << r.failure->message << "\n";
      return verdict(r.ok());
    }
    if (equiv->parsed()) {
      const CategoryPtr a = expect<CategoryPtr>(load(file), DocKind::Category, file);
      const CategoryPtr b = expect<CategoryPtr>(load(file2), DocKind::Category, file2);
      const auto w = find_equivalence(a, b);
      Json report{{"report", "equiv"}, {"equivalent", w.has_value()}};
      if (w) report["functor"] = functor_maps(w->functor);
      emit_report(opt, report);
      return verdict(w.has_value());
    }
    if (gset->parsed()) {
      const GroupTable g = gen_group(group);
      std::vector<GSet> seed_sets;
      for (const auto& token : split_list(seeds)) seed_sets.push_back(parse_seed(g, token));
      const GSetFragment frag = gen_gset_fragment(g, seed_sets, parse_closure(closure), bound);
      const Document doc = make_document(frag.adjunction);
      if (!out_path.empty()) write_file_atomic(out_path, serialize(doc));
      emit(opt, doc);
      return kPositive;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBroken;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBroken;
  }
  return kBroken;
}
