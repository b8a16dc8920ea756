#include "licterm/profile.hpp"

#include <algorithm>
#include <cctype>

namespace licterm {

TermAttitudes TermAttitudes::uniform(Attitude fill) noexcept {
  TermAttitudes t;
  for (auto& s : t.slots_) s = fill;
  return t;
}

bool TermAttitudes::is_total() const noexcept {
  return std::all_of(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); });
}

bool is_spdx_id_charset(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  });
}

ValidationResult validate_profile(const LicenseProfile& p) {
  ValidationResult result;
  if (p.spdx_id.empty()) {
    result.violations.push_back({std::nullopt, "spdx_id is empty"});
  } else if (!is_spdx_id_charset(p.spdx_id)) {
    result.violations.push_back(
        {std::nullopt, "spdx_id '" + p.spdx_id + "' has characters outside [A-Za-z0-9.+-]"});
  }

  for (const auto& info : term_catalog()) {
    const auto a = p.terms.get(info.term);
    if (!a) {
      result.violations.push_back(
          {info.term, "terms mapping not total: missing " + std::string(info.id)});
      continue;
    }
    if (attitude_allowed(info.kind, *a)) continue;
    std::string rule = info.kind == TermKind::Right ? "right cannot be " : "obligation cannot be ";
    switch (*a) {
      case Attitude::Can:
        rule += "Can";
        break;
      case Attitude::Cannot:
        rule += "Cannot";
        break;
      case Attitude::Must:
        rule += "Must";
        break;
      case Attitude::NotMentioned:
        rule += "NotMentioned";
        break;
    }
    result.violations.push_back({info.term, std::move(rule)});
  }
  return result;
}

}  // namespace licterm
