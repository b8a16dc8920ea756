#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "licterm/dataset.hpp"
#include "licterm/expression.hpp"

namespace licterm {

enum class UnresolvableReason { NoLicense, FileReference, Url, HashLike, UnknownName };

std::string_view to_string(UnresolvableReason r) noexcept;

struct Resolved {
  LicenseExpression expr;
};

struct Unresolvable {
  UnresolvableReason reason;
  std::string raw;
};

using NormalizationOutcome = std::variant<Resolved, Unresolvable>;

/// Maps a raw registry license string to a canonical SPDX expression.
///
/// Pipeline: trim; empty / UNLICENSED / none are NoLicense; file references
/// ("SEE LICENSE IN ...", relative paths, LICENSE files); URLs; runs of 32 or
/// more hex digits; then a whole-string match against known ids and full
/// names, then the alias table, then an SPDX expression parse whose leaves
/// are each canonicalized the same way. Anything left is UnknownName.
///
/// Deprecated GNU ids map to their -only form and a trailing '+' maps to the
/// -or-later id when SPDX defines one; otherwise the '+' is kept as or_later.
NormalizationOutcome normalize(std::string_view raw, const AliasTable& aliases,
                               const KnownLicenses& known);

/// Canonical text for a normalization outcome: the rendered expression, or
/// `unresolvable:<reason>`.
std::string outcome_key(const NormalizationOutcome& o);

}  // namespace licterm
