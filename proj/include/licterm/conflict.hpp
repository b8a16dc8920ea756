#pragma once

#include <string>
#include <vector>

#include "licterm/dataset.hpp"
#include "licterm/expression.hpp"
#include "licterm/profile.hpp"

namespace licterm {

/// C1: the project grants a right the component forbids.
/// C2: the project omits an obligation the component requires.
/// C3: the project fails to preserve a right granted by a copyleft component.
enum class ConflictType : std::uint8_t { C1, C2, C3 };

inline constexpr std::size_t kConflictTypeCount = 3;

std::string_view to_string(ConflictType t) noexcept;

struct ConflictFinding {
  ConflictType ctype;
  Term term;
  std::string parent_id;
  std::string dep_id;
  Attitude parent_attitude;
  Attitude dep_attitude;

  friend bool operator==(const ConflictFinding&, const ConflictFinding&) = default;
};

/// Which parent attitudes make a copyleft grant a C3 conflict. Broad is the
/// default (anything but Can); Narrow requires an explicit Cannot.
enum class C3Reading : std::uint8_t { Broad, Narrow };

struct RuleOptions {
  /// Also flag Can -> NotMentioned on rights as C1.
  bool strict_not_mentioned = false;
  C3Reading c3 = C3Reading::Broad;
};

/// All findings for `parent` used with component `dep`, ordered by type then
/// term catalog order. Both profiles must be valid.
std::vector<ConflictFinding> check_profiles(const LicenseProfile& parent, const LicenseProfile& dep,
                                            const RuleOptions& opts);

inline std::vector<ConflictFinding> check_profiles(const LicenseProfile& parent,
                                                   const LicenseProfile& dep,
                                                   bool strict_not_mentioned) {
  return check_profiles(parent, dep, RuleOptions{strict_not_mentioned, C3Reading::Broad});
}

/// Bit i set when type i fires at least once. Same rules as check_profiles
/// without materializing findings.
std::uint8_t conflict_type_mask(const LicenseProfile& parent, const LicenseProfile& dep,
                                const RuleOptions& opts) noexcept;

struct ExpressionVerdict {
  bool conflict_free = true;
  /// Findings of the chosen branch assignment (empty when conflict free).
  std::vector<ConflictFinding> findings;
  /// Licenses of the chosen OR branches on each side.
  std::vector<LicenseRef> parent_choice;
  std::vector<LicenseRef> dep_choice;
  /// Ids absent from the dataset; they contribute no findings.
  std::vector<std::string> unknown_licenses;
  std::vector<std::string> warnings;
};

/// Lifts the pairwise rules to expressions. OR is the licensee's choice (a
/// node is conflict free if any branch is) and AND requires every conjunct.
/// Returns the branch assignment with the fewest findings; ties go to the
/// earliest assignment in left-to-right order.
ExpressionVerdict check_expressions(const LicenseExpression& parent, const LicenseExpression& dep,
                                    const Dataset& ds, const RuleOptions& opts);

inline ExpressionVerdict check_expressions(const LicenseExpression& parent,
                                           const LicenseExpression& dep, const Dataset& ds,
                                           bool strict_not_mentioned) {
  return check_expressions(parent, dep, ds, RuleOptions{strict_not_mentioned, C3Reading::Broad});
}

/// One sentence naming both licenses, the term, both attitudes and the rule.
std::string explain(const ConflictFinding& f);

}  // namespace licterm
