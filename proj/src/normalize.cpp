#include "licterm/normalize.hpp"

#include <cctype>

#include "licterm/errors.hpp"
#include "text_util.hpp"

namespace licterm {

std::string_view to_string(UnresolvableReason r) noexcept {
  switch (r) {
    case UnresolvableReason::NoLicense:
      return "no-license";
    case UnresolvableReason::FileReference:
      return "file-reference";
    case UnresolvableReason::Url:
      return "url";
    case UnresolvableReason::HashLike:
      return "hash-like";
    case UnresolvableReason::UnknownName:
      return "unknown-name";
  }
  return "?";
}

std::string outcome_key(const NormalizationOutcome& o) {
  if (const auto* r = std::get_if<Resolved>(&o)) return render(r->expr);
  return "unresolvable:" + std::string(to_string(std::get<Unresolvable>(o).reason));
}

namespace {

bool is_url(std::string_view s) {
  return s.find("://") != std::string_view::npos || detail::istarts_with(s, "www.");
}

bool is_license_file_name(std::string_view name) {
  for (std::string_view stem : {"license", "licence", "copying", "unlicense"}) {
    if (!detail::istarts_with(name, stem)) continue;
    const auto rest = name.substr(stem.size());
    if (rest.empty()) return true;
    if (rest.front() == '.' || rest.front() == '-' || rest.front() == '_') return true;
  }
  return false;
}

bool is_file_reference(std::string_view s) {
  if (detail::istarts_with(s, "see licen") || detail::istarts_with(s, "see file") ||
      detail::istarts_with(s, "file:")) {
    return true;
  }
  if (is_url(s)) return false;
  if (s.starts_with("./") || s.starts_with("../") || s.starts_with("/") || s.starts_with("~/")) {
    return true;
  }
  if (s.find('\\') != std::string_view::npos) return true;
  if (s.find(' ') != std::string_view::npos) return false;

  const auto slash = s.rfind('/');
  const auto base = slash == std::string_view::npos ? s : s.substr(slash + 1);
  // Bare "Unlicense" is a license id, not a file.
  if (detail::iequals(base, "unlicense")) return false;
  if (is_license_file_name(base)) return true;
  if (slash != std::string_view::npos) {
    for (std::string_view ext : {".txt", ".md", ".html", ".htm", ".rst"}) {
      if (detail::iends_with(base, ext)) return true;
    }
  }
  return false;
}

bool has_hex_run(std::string_view s, std::size_t min_len) {
  std::size_t run = 0;
  for (char c : s) {
    run = std::isxdigit(static_cast<unsigned char>(c)) ? run + 1 : 0;
    if (run >= min_len) return true;
  }
  return false;
}

/// Collapses whitespace and upper-cases free-standing and/or/with words so
/// that registry strings like "MIT or Apache-2.0" reach the strict grammar.
std::string clean_for_parse(std::string_view s) {
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (detail::iequals(word, "and") || detail::iequals(word, "or") ||
        detail::iequals(word, "with")) {
      for (auto& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    out += word;
    word.clear();
  };
  for (char c : s) {
    if (detail::is_space(c)) {
      flush();
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else if (c == '(' || c == ')') {
      flush();
      out.push_back(c);
    } else {
      word.push_back(c);
    }
  }
  flush();
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::optional<std::string> resolve_id(std::string_view raw, const AliasTable& aliases,
                                      const KnownLicenses& known) {
  if (auto id = known.resolve_license(raw)) return id;
  if (const auto* target = aliases.find(raw)) return *target;
  return std::nullopt;
}

std::optional<LicenseRef> canonical_ref(const LicenseRef& in, const AliasTable& aliases,
                                        const KnownLicenses& known) {
  auto id = resolve_id(in.id, aliases, known);
  if (!id) {
    // Deprecated bare GNU ids ("GPL-2.0") map to the -only form.
    id = known.resolve_license(in.id + "-only");
  }
  if (!id) return std::nullopt;

  LicenseRef out{*id, in.or_later, std::nullopt};
  if (out.or_later) {
    std::string_view base = out.id;
    if (base.ends_with("-or-later")) {
      out.or_later = false;
    } else {
      if (base.ends_with("-only")) base.remove_suffix(5);
      if (auto later = known.resolve_license(std::string(base) + "-or-later")) {
        out.id = *later;
        out.or_later = false;
      }
    }
  }
  if (in.exception) {
    auto exc = known.resolve_exception(*in.exception);
    if (!exc) return std::nullopt;
    out.exception = std::move(*exc);
  }
  return out;
}

std::optional<LicenseExpression> canonical_tree(const LicenseExpression& e,
                                                const AliasTable& aliases,
                                                const KnownLicenses& known) {
  if (e.is_ref()) {
    auto ref = canonical_ref(e.ref(), aliases, known);
    if (!ref) return std::nullopt;
    return LicenseExpression(std::move(*ref));
  }
  auto lhs = canonical_tree(e.lhs(), aliases, known);
  if (!lhs) return std::nullopt;
  auto rhs = canonical_tree(e.rhs(), aliases, known);
  if (!rhs) return std::nullopt;
  return LicenseExpression(e.op(), std::move(*lhs), std::move(*rhs));
}

}  // namespace

NormalizationOutcome normalize(std::string_view raw, const AliasTable& aliases,
                               const KnownLicenses& known) {
  const auto s = detail::trim(raw);
  auto fail = [&](UnresolvableReason r) { return Unresolvable{r, std::string(raw)}; };

  if (s.empty() || detail::iequals(s, "UNLICENSED") || detail::iequals(s, "none")) {
    return fail(UnresolvableReason::NoLicense);
  }
  if (is_file_reference(s)) return fail(UnresolvableReason::FileReference);
  if (is_url(s)) return fail(UnresolvableReason::Url);
  if (has_hex_run(s, 32)) return fail(UnresolvableReason::HashLike);

  if (auto id = resolve_id(s, aliases, known)) {
    return Resolved{LicenseExpression(LicenseRef{std::move(*id), false, std::nullopt})};
  }

  const std::string cleaned = clean_for_parse(s);
  if (auto id = resolve_id(cleaned, aliases, known)) {
    return Resolved{LicenseExpression(LicenseRef{std::move(*id), false, std::nullopt})};
  }
  try {
    auto parsed = parse_expression(cleaned);
    if (auto canon = canonical_tree(parsed, aliases, known)) return Resolved{std::move(*canon)};
  } catch (const SyntaxError&) {
  }
  return fail(UnresolvableReason::UnknownName);
}

}  // namespace licterm
