#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "licterm/term.hpp"

namespace licterm {

/// Attitudes keyed by term. A slot may be empty while a profile is being
/// assembled; a valid profile has all 22 slots set.
class TermAttitudes {
 public:
  TermAttitudes() = default;

  /// Every term set to `fill`.
  static TermAttitudes uniform(Attitude fill) noexcept;

  void set(Term t, Attitude a) noexcept { slots_[index_of(t)] = a; }
  void erase(Term t) noexcept { slots_[index_of(t)].reset(); }

  std::optional<Attitude> get(Term t) const noexcept { return slots_[index_of(t)]; }

  /// Attitude of a term that is known to be present (valid profiles only).
  Attitude at(Term t) const noexcept { return *slots_[index_of(t)]; }

  bool contains(Term t) const noexcept { return slots_[index_of(t)].has_value(); }
  bool is_total() const noexcept;

  friend bool operator==(const TermAttitudes&, const TermAttitudes&) = default;

 private:
  std::array<std::optional<Attitude>, kTermCount> slots_{};
};

struct LicenseProfile {
  std::string spdx_id;
  std::string full_name;
  TermAttitudes terms;
  CopyleftClass copyleft = CopyleftClass::None;
  std::string notes;

  friend bool operator==(const LicenseProfile&, const LicenseProfile&) = default;
};

struct Violation {
  std::optional<Term> term;  // empty for profile-level rules
  std::string rule;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

bool is_spdx_id_charset(std::string_view id) noexcept;

ValidationResult validate_profile(const LicenseProfile& p);

}  // namespace licterm
