#include "licterm/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "licterm/errors.hpp"
#include "text_util.hpp"

namespace licterm {

namespace {

constexpr std::string_view kVersionDirective = "@version=";
constexpr std::string_view kProvenanceDirective = "@provenance=";

LicenseProfile parse_record(std::string_view line, const std::string& source, std::size_t lineno) {
  LicenseProfile p;
  std::set<std::string, std::less<>> seen;
  bool have_name = false;
  bool have_copyleft = false;

  for (std::string_view field : detail::split(line, '\t')) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(source, lineno, "field '" + std::string(field) + "' is not key=value");
    }
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (!seen.insert(std::string(key)).second) {
      throw FormatError(source, lineno, "duplicate key '" + std::string(key) + "'");
    }

    if (key == "spdx_id") {
      p.spdx_id = value;
    } else if (key == "full_name") {
      p.full_name = value;
      have_name = true;
    } else if (key == "copyleft") {
      const auto c = parse_copyleft(value);
      if (!c) {
        throw FormatError(source, lineno, "copyleft must be none, weak or strong, got '" +
                                              std::string(value) + "'");
      }
      p.copyleft = *c;
      have_copyleft = true;
    } else if (key == "notes") {
      p.notes = value;
    } else if (const auto term = parse_term(key)) {
      const auto a = parse_attitude(value);
      if (!a) {
        throw FormatError(source, lineno,
                          "attitude for " + std::string(key) + " must be can, cannot, must or "
                          "not-mentioned, got '" + std::string(value) + "'");
      }
      p.terms.set(*term, *a);
    } else {
      throw FormatError(source, lineno, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!seen.contains("spdx_id")) throw FormatError(source, lineno, "record has no spdx_id");
  if (!have_name) throw FormatError(source, lineno, "record has no full_name");
  if (!have_copyleft) throw FormatError(source, lineno, "record has no copyleft");
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void check_value(const std::string& v, std::string_view what) {
  if (v.find_first_of("\t\n\r") != std::string::npos) {
    throw std::invalid_argument(std::string(what) + " contains a tab or newline");
  }
}

}  // namespace

Dataset parse_dataset(std::string_view text, const std::string& source) {
  Dataset ds;
  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with(kVersionDirective)) {
      ds.version = line.substr(kVersionDirective.size());
      continue;
    }
    if (line.starts_with(kProvenanceDirective)) {
      ds.provenance = line.substr(kProvenanceDirective.size());
      continue;
    }
    if (line.front() == '@') {
      throw FormatError(source, lineno, "unknown directive '" + std::string(line) + "'");
    }

    LicenseProfile p = parse_record(line, source, lineno);
    const auto vr = validate_profile(p);
    if (!vr.ok()) {
      const auto& v = vr.violations.front();
      throw ValidationError(p.spdx_id, v.term ? std::string(to_string(*v.term)) : std::string(),
                            source + ":" + std::to_string(lineno) + ": license '" + p.spdx_id +
                                "': " + v.rule);
    }
    std::string id = p.spdx_id;
    if (!ds.profiles.emplace(id, std::move(p)).second) {
      throw FormatError(source, lineno, "duplicate spdx_id '" + id + "'");
    }
  }
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path), path.string());
}

std::string serialize_dataset(const Dataset& ds) {
  std::string out;
  if (!ds.version.empty()) {
    check_value(ds.version, "version");
    out.append(kVersionDirective).append(ds.version).push_back('\n');
  }
  if (!ds.provenance.empty()) {
    check_value(ds.provenance, "provenance");
    out.append(kProvenanceDirective).append(ds.provenance).push_back('\n');
  }
  for (const auto& [id, p] : ds.profiles) {
    check_value(p.full_name, "full_name");
    check_value(p.notes, "notes");
    out.append("spdx_id=").append(p.spdx_id);
    out.append("\tfull_name=").append(p.full_name);
    out.append("\tcopyleft=").append(to_string(p.copyleft));
    for (const auto& info : term_catalog()) {
      const auto a = p.terms.get(info.term).value_or(Attitude::NotMentioned);
      out.append("\t").append(info.id).append("=").append(to_string(a));
    }
    if (!p.notes.empty()) out.append("\tnotes=").append(p.notes);
    out.push_back('\n');
  }
  return out;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << serialize_dataset(ds);
  if (!out) throw IoError("error writing " + path.string());
}

const LicenseProfile* lookup(const Dataset& ds, std::string_view id) noexcept {
  if (id.empty()) return nullptr;
  const auto it = ds.profiles.find(std::string(id));
  return it == ds.profiles.end() ? nullptr : &it->second;
}

std::string normalize_alias_key(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

void AliasTable::add(std::string_view raw, std::string spdx_id) {
  entries[normalize_alias_key(raw)] = std::move(spdx_id);
}

const std::string* AliasTable::find(std::string_view raw) const {
  const auto it = entries.find(normalize_alias_key(raw));
  return it == entries.end() ? nullptr : &it->second;
}

AliasTable parse_alias_table(std::string_view text, const std::string& source) {
  AliasTable table;
  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    if (detail::trim(line).empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 2) {
      throw FormatError(source, lineno, "alias record needs exactly 2 tab-separated columns");
    }
    const auto raw = detail::trim(cols[0]);
    const auto id = detail::trim(cols[1]);
    if (raw.empty() || !is_spdx_id_charset(id)) {
      throw FormatError(source, lineno, "malformed alias record");
    }
    table.add(raw, std::string(id));
  }
  return table;
}

AliasTable load_alias_table(const std::filesystem::path& path) {
  return parse_alias_table(read_file(path), path.string());
}

void KnownLicenses::add_license(KnownLicense lic) {
  folded_ids_[detail::fold(lic.id)] = lic.id;
  if (!lic.full_name.empty()) folded_names_[normalize_alias_key(lic.full_name)] = lic.id;
  std::string id = lic.id;
  licenses_[id] = std::move(lic);
}

void KnownLicenses::add_exception(std::string id) {
  auto key = detail::fold(id);
  exceptions_[std::move(key)] = std::move(id);
}

void KnownLicenses::merge(const Dataset& ds) {
  for (const auto& [id, p] : ds.profiles) {
    add_license({id, p.copyleft, p.full_name});
  }
}

bool KnownLicenses::contains(std::string_view exact_id) const {
  return licenses_.find(exact_id) != licenses_.end();
}

std::optional<std::string> KnownLicenses::resolve_license(std::string_view raw) const {
  if (const auto it = folded_ids_.find(detail::fold(raw)); it != folded_ids_.end()) {
    return it->second;
  }
  if (const auto it = folded_names_.find(normalize_alias_key(raw)); it != folded_names_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<std::string> KnownLicenses::resolve_exception(std::string_view raw) const {
  if (const auto it = exceptions_.find(detail::fold(raw)); it != exceptions_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<CopyleftClass> KnownLicenses::copyleft_of(std::string_view exact_id) const {
  const auto it = licenses_.find(exact_id);
  if (it == licenses_.end()) return std::nullopt;
  return it->second.copyleft;
}

KnownLicenses parse_known_licenses(std::string_view licenses_text,
                                   std::string_view exceptions_text, const std::string& source) {
  KnownLicenses known;
  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(licenses_text)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 3 || !is_spdx_id_charset(cols[0])) {
      throw FormatError(source, lineno, "license list record needs id, copyleft, full name");
    }
    const auto copyleft = parse_copyleft(cols[1]);
    if (!copyleft) throw FormatError(source, lineno, "bad copyleft class");
    known.add_license({std::string(cols[0]), *copyleft, std::string(cols[2])});
  }
  lineno = 0;
  for (std::string_view line : detail::split_lines(exceptions_text)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.empty() || !is_spdx_id_charset(cols[0])) {
      throw FormatError(source + "(exceptions)", lineno, "malformed exception record");
    }
    known.add_exception(std::string(cols[0]));
  }
  return known;
}

void validate_aliases(const AliasTable& aliases, const Dataset& ds, const KnownLicenses& known) {
  for (const auto& [raw, id] : aliases.entries) {
    if (lookup(ds, id) == nullptr && !known.contains(id)) {
      throw ValidationError(id, "", "alias '" + raw + "' targets unknown SPDX id '" + id + "'");
    }
  }
}

}  // namespace licterm
