#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "licterm/profile.hpp"

namespace licterm {

/// Curated license profiles keyed by canonical (case-sensitive) SPDX id.
struct Dataset {
  std::map<std::string, LicenseProfile> profiles;
  std::string version;
  std::string provenance;

  std::size_t size() const noexcept { return profiles.size(); }
  bool empty() const noexcept { return profiles.empty(); }
};

/// Dataset file: one tab-separated `key=value` record per line.
/// See docs/formats.md for the field list.
Dataset parse_dataset(std::string_view text, const std::string& source = "<dataset>");
Dataset load_dataset(const std::filesystem::path& path);

/// Canonical serialization: directives first, then records sorted by id,
/// keys in catalog order. parse_dataset(serialize_dataset(d)) == d.
std::string serialize_dataset(const Dataset& ds);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

/// Exact, case-sensitive lookup. Normalization is a separate step.
const LicenseProfile* lookup(const Dataset& ds, std::string_view id) noexcept;

/// Case-fold, trim and collapse internal whitespace runs to one space.
std::string normalize_alias_key(std::string_view raw);

struct AliasTable {
  std::map<std::string, std::string> entries;  // normalized raw -> spdx id

  /// Inserts after normalizing `raw`.
  void add(std::string_view raw, std::string spdx_id);
  const std::string* find(std::string_view raw) const;
};

/// Two tab-separated columns per line: raw form, SPDX id. `#` starts a comment line.
AliasTable parse_alias_table(std::string_view text, const std::string& source = "<aliases>");
AliasTable load_alias_table(const std::filesystem::path& path);

struct KnownLicense {
  std::string id;
  CopyleftClass copyleft = CopyleftClass::None;
  std::string full_name;
};

/// SPDX license and exception identifiers that normalization may resolve to,
/// with full names and copyleft classes.
class KnownLicenses {
 public:
  void add_license(KnownLicense lic);
  void add_exception(std::string id);

  /// Adds every dataset profile (dataset copyleft and name win over the list).
  void merge(const Dataset& ds);

  bool contains(std::string_view exact_id) const;

  /// Case-insensitive id match, or full-name match.
  std::optional<std::string> resolve_license(std::string_view raw) const;
  std::optional<std::string> resolve_exception(std::string_view raw) const;

  std::optional<CopyleftClass> copyleft_of(std::string_view exact_id) const;

  std::size_t license_count() const noexcept { return licenses_.size(); }
  std::size_t exception_count() const noexcept { return exceptions_.size(); }

 private:
  std::map<std::string, KnownLicense, std::less<>> licenses_;
  std::map<std::string, std::string, std::less<>> folded_ids_;    // folded -> id
  std::map<std::string, std::string, std::less<>> folded_names_;  // folded full name -> id
  std::map<std::string, std::string, std::less<>> exceptions_;    // folded -> id
};

/// License list: `id<TAB>copyleft<TAB>full name`. Exception list: `id<TAB>full name`.
KnownLicenses parse_known_licenses(std::string_view licenses_text,
                                   std::string_view exceptions_text,
                                   const std::string& source = "<known>");

/// Throws ValidationError when an alias points at an id that is neither in
/// the dataset nor in the known list.
void validate_aliases(const AliasTable& aliases, const Dataset& ds, const KnownLicenses& known);

// Bundled data compiled into the library.
Dataset seed_dataset();
AliasTable seed_aliases();
KnownLicenses seed_known_licenses();

std::string_view seed_dataset_text() noexcept;

}  // namespace licterm
