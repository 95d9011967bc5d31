#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catgal {

// Every structured error the engine can raise. Property failures (a functor
// that is not an equivalence, a unit that is not invertible) are reported as
// data and never show up here.
enum class ErrorKind {
  // category tables
  EmptyId,
  DuplicateId,
  UnknownReference,
  MissingIdentity,
  MissingComposite,
  DuplicateComposite,
  IllTypedComposite,
  BrokenIdentityLaw,
  BrokenAssociativity,
  // functors and transformations
  DomCodMismatch,
  IdentityNotPreserved,
  CompositionNotPreserved,
  NonParallelFunctors,
  NaturalityFailure,
  // lookups
  UnknownObject,
  UnknownMorphism,
  IllTyped,
  SearchBudgetExceeded,
  // limits, adjunctions, descent, groupoids
  MissingTerminal,
  MissingProduct,
  MissingPullback,
  NotASplitting,
  TriangleIdentityFailure,
  HypothesisFailed,
  PullbackNotPreserved,
  AxiomFailure,
  FactorizationFailure,
  // documents
  SyntaxError,
  UnknownKind,
  VersionMismatch,
  ReferenceToUndeclaredId,
  SchemaError,
  // generators
  NotAGroup,
  NotAnAction,
  ClosureBoundExceeded,
};

std::string_view to_string(ErrorKind kind);

struct Violation {
  ErrorKind kind;
  std::string message;
  std::vector<std::string> witnesses;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witnesses = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witnesses_;
};

// Raised by the validators; carries every violation found (capped), the first
// one also being exposed through Error::kind().
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Counts elementary composition lookups made by an exhaustive search and
// throws SearchBudgetExceeded once the limit is passed.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = default_limit()) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) exceeded();
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

  // 10^7 unless CATGAL_BUDGET is set in the environment.
  static std::uint64_t default_limit();

 private:
  [[noreturn]] void exceeded() const;

  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace catgal
