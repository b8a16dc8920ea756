#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace licterm {

enum class TermKind : std::uint8_t { Right, Obligation };

/// The 22 standardized license terms. Rights come first, then obligations;
/// the enumerator order is the catalog order used everywhere (file format,
/// finding ordering, histograms).
enum class Term : std::uint8_t {
  // rights
  Distribute,
  Modify,
  CommercialUse,
  PrivateUse,
  HoldLiable,
  PlaceWarranty,
  UseTrademark,
  UsePatentClaims,
  Sublicense,
  Relicense,
  StaticallyLink,
  // obligations
  IncludeCopyright,
  IncludeLicense,
  IncludeNotice,
  IncludeOriginal,
  IncludeInstallInstructions,
  DiscloseSource,
  StateChanges,
  GiveCredit,
  Rename,
  ContactAuthor,
  CompensateForDamages,
};

inline constexpr std::size_t kTermCount = 22;
inline constexpr std::size_t kRightCount = 11;

enum class Attitude : std::uint8_t { Can, Cannot, Must, NotMentioned };

inline constexpr std::size_t kAttitudeCount = 4;

enum class CopyleftClass : std::uint8_t { None, Weak, Strong };

struct TermInfo {
  Term term;
  TermKind kind;
  std::string_view id;          // lower-kebab-case machine key
  std::string_view display;     // human name
  std::string_view definition;  // short gloss
};

/// All 22 terms in catalog order: 11 rights, then 11 obligations.
std::span<const TermInfo, kTermCount> term_catalog() noexcept;

constexpr std::size_t index_of(Term t) noexcept { return static_cast<std::size_t>(t); }

constexpr Term term_at(std::size_t i) noexcept { return static_cast<Term>(i); }

constexpr TermKind kind_of(Term t) noexcept {
  return index_of(t) < kRightCount ? TermKind::Right : TermKind::Obligation;
}

std::string_view to_string(Term t) noexcept;
std::string_view to_string(TermKind k) noexcept;
std::string_view to_string(Attitude a) noexcept;
std::string_view to_string(CopyleftClass c) noexcept;

std::optional<Term> parse_term(std::string_view id) noexcept;
std::optional<Attitude> parse_attitude(std::string_view s) noexcept;
std::optional<CopyleftClass> parse_copyleft(std::string_view s) noexcept;

/// Whether `a` is a legal attitude for a term of kind `k`
/// (rights: can/cannot/not-mentioned; obligations: must/not-mentioned).
constexpr bool attitude_allowed(TermKind k, Attitude a) noexcept {
  if (a == Attitude::NotMentioned) return true;
  if (k == TermKind::Right) return a == Attitude::Can || a == Attitude::Cannot;
  return a == Attitude::Must;
}

}  // namespace licterm
