#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ramur {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (rationals, JSON documents, model files).
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class IssueKind {
  NegativeProbability,
  MassExceedsOne,
  MissingMenu,
  UnknownAlternative,
  DuplicateMenu,
  BadAlternativeId,
  DuplicateAlternative,
  BadProbability,
};

std::string issue_kind_name(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string alternative;         // offending id, empty when not applicable
  std::vector<std::string> menu;   // offending menu, empty when not applicable
  std::string detail;
};

std::string describe(const ValidationIssue& issue);

/// Dataset validation failure. Carries every violated condition, not just the
/// first one encountered.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

/// Transitive closure would make the relation reflexive.
class CycleError : public Error {
 public:
  CycleError(const std::string& message, std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// The revealed relation is not a strict partial order; the data is
/// inconsistent with the axioms that were supposed to hold.
class NotPartialOrder : public Error {
 public:
  NotPartialOrder(const std::string& message, std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// Equal-split attention construction failed for the supplied order.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// A recovered model does not reproduce the data it was recovered from.
class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

/// The two reference-set computations disagree (a regularity violation).
class InconsistentReferences : public Error {
 public:
  using Error::Error;
};

/// Pairwise preference elicitation produced both directions or neither.
class IncoherentElicitation : public Error {
 public:
  using Error::Error;
};

/// Attention table violates the distribution conditions required by a model.
class InvalidAttention : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was requested beyond the configured cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace ramur
