#include "ramur/errors.hpp"

#include <sstream>

namespace ramur {

std::string issue_kind_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::NegativeProbability: return "NegativeProbability";
    case IssueKind::MassExceedsOne: return "MassExceedsOne";
    case IssueKind::MissingMenu: return "MissingMenu";
    case IssueKind::UnknownAlternative: return "UnknownAlternative";
    case IssueKind::DuplicateMenu: return "DuplicateMenu";
    case IssueKind::BadAlternativeId: return "BadAlternativeId";
    case IssueKind::DuplicateAlternative: return "DuplicateAlternative";
    case IssueKind::BadProbability: return "BadProbability";
  }
  return "Unknown";
}

std::string describe(const ValidationIssue& issue) {
  std::ostringstream out;
  out << issue_kind_name(issue.kind);
  if (!issue.alternative.empty()) out << " alt=" << issue.alternative;
  if (!issue.menu.empty()) {
    out << " menu={";
    for (std::size_t i = 0; i < issue.menu.size(); ++i) {
      if (i) out << ",";
      out << issue.menu[i];
    }
    out << "}";
  }
  if (!issue.detail.empty()) out << ": " << issue.detail;
  return out.str();
}

namespace {

std::string summarize(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  out << issues.size() << " validation issue" << (issues.size() == 1 ? "" : "s");
  for (const auto& issue : issues) out << "\n  " << describe(issue);
  return out.str();
}

std::string with_cycle(const std::string& message, const std::vector<int>& cycle) {
  std::ostringstream out;
  out << message << " (cycle:";
  for (int v : cycle) out << " " << v;
  out << ")";
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(summarize(issues)), issues_(std::move(issues)) {}

CycleError::CycleError(const std::string& message, std::vector<int> cycle)
    : Error(with_cycle(message, cycle)), cycle_(std::move(cycle)) {}

NotPartialOrder::NotPartialOrder(const std::string& message, std::vector<int> cycle)
    : Error(with_cycle(message, cycle)), cycle_(std::move(cycle)) {}

}  // namespace ramur
