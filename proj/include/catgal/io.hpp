#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "catgal/galois.hpp"

namespace catgal {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "catgal/1";

enum class DocKind { Category, Functor, NatTrans, Adjunction, Groupoid, Report };

std::string_view to_string(DocKind kind);

// One value per document. Reports are kept as their JSON payload.
using DocValue = std::variant<CategoryPtr, Functor, NatTrans, Adjunction, InternalGroupoid, Json>;

struct Document {
  DocKind kind;
  DocValue value;
};

Document make_document(CategoryPtr c);
Document make_document(Functor f);
Document make_document(NatTrans t);
Document make_document(Adjunction a);
Document make_document(InternalGroupoid g);
Document make_report(Json payload);

// Throws SyntaxError (with line and column), SchemaError, UnknownKind,
// VersionMismatch or ReferenceToUndeclaredId (with a JSON pointer), then
// whatever the validators raise on the decoded tables.
Document parse(std::string_view text);

// Canonical text: keys sorted, ids in lexicographic order, two-space
// indentation, trailing newline.
std::string serialize(const Document& doc);

// Structural equality of two decoded values.
bool same_document(const Document& a, const Document& b);

// Payloads, shared by serialize and the report builders.
Json category_payload(const FinCategory& c);
Json functor_maps(const Functor& f);

Json report_json(const EquivalenceResult& r);
Json report_json(const DescentReport& r);
Json report_json(const LemmaReport& r);
Json report_json(const AdjointAgreement& r);
Json report_json(const TrivialGaloisReport& r);
Json report_json(const GaloisReport& r);
Json report_json(const ConverseReport& r);

// Reads a whole file; writes through a temporary file and a rename.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace catgal
