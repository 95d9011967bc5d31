#include "catgal/error.hpp"

#include <cstdlib>
#include <string>

namespace catgal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyId: return "EmptyId";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::DuplicateComposite: return "DuplicateComposite";
    case ErrorKind::IllTypedComposite: return "IllTypedComposite";
    case ErrorKind::BrokenIdentityLaw: return "BrokenIdentityLaw";
    case ErrorKind::BrokenAssociativity: return "BrokenAssociativity";
    case ErrorKind::DomCodMismatch: return "DomCodMismatch";
    case ErrorKind::IdentityNotPreserved: return "IdentityNotPreserved";
    case ErrorKind::CompositionNotPreserved: return "CompositionNotPreserved";
    case ErrorKind::NonParallelFunctors: return "NonParallelFunctors";
    case ErrorKind::NaturalityFailure: return "NaturalityFailure";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::MissingTerminal: return "MissingTerminal";
    case ErrorKind::MissingProduct: return "MissingProduct";
    case ErrorKind::MissingPullback: return "MissingPullback";
    case ErrorKind::NotASplitting: return "NotASplitting";
    case ErrorKind::TriangleIdentityFailure: return "TriangleIdentityFailure";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::PullbackNotPreserved: return "PullbackNotPreserved";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::ReferenceToUndeclaredId: return "ReferenceToUndeclaredId";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::ClosureBoundExceeded: return "ClosureBoundExceeded";
  }
  return "Unknown";
}

namespace {

std::string render(ErrorKind kind, const std::string& message) {
  std::string out(to_string(kind));
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

std::string render_all(const std::vector<Violation>& violations) {
  if (violations.empty()) return "validation failed";
  std::string out = render(violations.front().kind, violations.front().message);
  if (violations.size() > 1) {
    out += " (+" + std::to_string(violations.size() - 1) + " more)";
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> witnesses)
    : std::runtime_error(render(kind, message)),
      kind_(kind),
      witnesses_(std::move(witnesses)) {}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorKind::SchemaError : violations.front().kind,
            render_all(violations),
            violations.empty() ? std::vector<std::string>{} : violations.front().witnesses),
      violations_(std::move(violations)) {}

std::uint64_t SearchBudget::default_limit() {
  if (const char* env = std::getenv("CATGAL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

void SearchBudget::exceeded() const {
  throw Error(ErrorKind::SearchBudgetExceeded,
              "search budget of " + std::to_string(limit_) + " composition lookups exhausted");
}

}  // namespace catgal
