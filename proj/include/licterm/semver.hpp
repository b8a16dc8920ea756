#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace licterm {

/// Semantic version: MAJOR.MINOR.PATCH[-prerelease][+build].
struct Version {
  std::uint64_t major = 0;
  std::uint64_t minor = 0;
  std::uint64_t patch = 0;
  std::vector<std::string> prerelease;
  std::vector<std::string> build;

  bool is_prerelease() const noexcept { return !prerelease.empty(); }
  bool same_tuple(const Version& o) const noexcept {
    return major == o.major && minor == o.minor && patch == o.patch;
  }

  /// Precedence order; ties on precedence fall back to build metadata, so
  /// this is a total order consistent with ==.
  friend std::strong_ordering operator<=>(const Version& a, const Version& b);
  friend bool operator==(const Version&, const Version&) = default;
};

/// -1, 0, 1 by semver precedence (build metadata ignored).
int compare_precedence(const Version& a, const Version& b) noexcept;

/// Strict parse: no leading 'v', no leading zeros, all three numbers present.
std::optional<Version> parse_version(std::string_view text);

std::string to_string(const Version& v);

enum class CmpOp { Lt, Le, Gt, Ge, Eq };

struct Comparator {
  CmpOp op;
  Version bound;
  /// True when the bound was written in the range text rather than
  /// synthesized by desugaring (e.g. the `<2.0.0-0` of `^1.2.3`).
  bool explicit_bound = true;

  bool test(const Version& v) const noexcept;
};

/// A conjunction of comparators; an empty set matches every release.
struct ComparatorSet {
  std::vector<Comparator> comparators;

  /// Prerelease versions only match when an explicit comparator bound is a
  /// prerelease of the same major.minor.patch.
  bool satisfied_by(const Version& v) const noexcept;
};

/// npm-style range: `||`-separated conjunctions of exact versions, x-ranges,
/// partials, `^`, `~`, comparators and hyphen ranges.
class VersionRange {
 public:
  std::vector<ComparatorSet> sets;

  bool satisfied_by(const Version& v) const noexcept;
};

/// nullopt for text outside the supported grammar (tags, URLs, ...).
std::optional<VersionRange> parse_range(std::string_view text);

/// Highest available version satisfying the range, or nullopt (no match).
std::optional<Version> resolve_range(const VersionRange& range, std::span<const Version> available);

}  // namespace licterm
