#include "licterm/semver.hpp"

#include <algorithm>
#include <charconv>

#include "text_util.hpp"

namespace licterm {

namespace {

// Larger components are rejected so that desugaring can add one safely.
constexpr std::uint64_t kMaxComponent = 9007199254740991ULL;

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

bool is_ident_char(char c) noexcept {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-';
}

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

std::optional<std::uint64_t> parse_number(std::string_view s) {
  if (!all_digits(s) || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v > kMaxComponent) return std::nullopt;
  return v;
}

std::optional<std::vector<std::string>> parse_idents(std::string_view s, bool numeric_strict) {
  std::vector<std::string> out;
  for (const auto& part : detail::split(s, '.')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), is_ident_char)) return std::nullopt;
    if (numeric_strict && all_digits(part) && part.size() > 1 && part[0] == '0') return std::nullopt;
    out.emplace_back(part);
  }
  return out;
}

int compare_ident(const std::string& a, const std::string& b) noexcept {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
  }
  if (na != nb) return na ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

/// Splits "core-pre+build"; each tail is nullopt when absent.
struct VersionParts {
  std::string_view core;
  std::optional<std::string_view> pre;
  std::optional<std::string_view> build;
};

VersionParts split_version(std::string_view s) {
  VersionParts p;
  if (const auto plus = s.find('+'); plus != std::string_view::npos) {
    p.build = s.substr(plus + 1);
    s = s.substr(0, plus);
  }
  if (const auto dash = s.find('-'); dash != std::string_view::npos) {
    p.pre = s.substr(dash + 1);
    s = s.substr(0, dash);
  }
  p.core = s;
  return p;
}

bool fill_tails(const VersionParts& parts, Version& v) {
  if (parts.pre) {
    auto ids = parse_idents(*parts.pre, true);
    if (!ids) return false;
    v.prerelease = std::move(*ids);
  }
  if (parts.build) {
    auto ids = parse_idents(*parts.build, false);
    if (!ids) return false;
    v.build = std::move(*ids);
  }
  return true;
}

}  // namespace

int compare_precedence(const Version& a, const Version& b) noexcept {
  if (a.major != b.major) return a.major < b.major ? -1 : 1;
  if (a.minor != b.minor) return a.minor < b.minor ? -1 : 1;
  if (a.patch != b.patch) return a.patch < b.patch ? -1 : 1;
  if (a.prerelease.empty() || b.prerelease.empty()) {
    if (a.prerelease.empty() == b.prerelease.empty()) return 0;
    return a.prerelease.empty() ? 1 : -1;
  }
  const auto n = std::min(a.prerelease.size(), b.prerelease.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = compare_ident(a.prerelease[i], b.prerelease[i]); c != 0) return c;
  }
  if (a.prerelease.size() == b.prerelease.size()) return 0;
  return a.prerelease.size() < b.prerelease.size() ? -1 : 1;
}

std::strong_ordering operator<=>(const Version& a, const Version& b) {
  if (const int c = compare_precedence(a, b); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.build <=> b.build;
}

std::optional<Version> parse_version(std::string_view text) {
  const auto parts = split_version(text);
  const auto nums = detail::split(parts.core, '.');
  if (nums.size() != 3) return std::nullopt;
  Version v;
  const auto ma = parse_number(nums[0]);
  const auto mi = parse_number(nums[1]);
  const auto pa = parse_number(nums[2]);
  if (!ma || !mi || !pa) return std::nullopt;
  v.major = *ma;
  v.minor = *mi;
  v.patch = *pa;
  if (!fill_tails(parts, v)) return std::nullopt;
  return v;
}

std::string to_string(const Version& v) {
  std::string s = std::to_string(v.major) + "." + std::to_string(v.minor) + "." +
                  std::to_string(v.patch);
  auto join = [&](char lead, const std::vector<std::string>& ids) {
    if (ids.empty()) return;
    s += lead;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) s += '.';
      s += ids[i];
    }
  };
  join('-', v.prerelease);
  join('+', v.build);
  return s;
}

bool Comparator::test(const Version& v) const noexcept {
  const int c = compare_precedence(v, bound);
  switch (op) {
    case CmpOp::Lt:
      return c < 0;
    case CmpOp::Le:
      return c <= 0;
    case CmpOp::Gt:
      return c > 0;
    case CmpOp::Ge:
      return c >= 0;
    case CmpOp::Eq:
      return c == 0;
  }
  return false;
}

bool ComparatorSet::satisfied_by(const Version& v) const noexcept {
  for (const auto& c : comparators) {
    if (!c.test(v)) return false;
  }
  if (!v.is_prerelease()) return true;
  return std::any_of(comparators.begin(), comparators.end(), [&](const Comparator& c) {
    return c.explicit_bound && c.bound.is_prerelease() && c.bound.same_tuple(v);
  });
}

bool VersionRange::satisfied_by(const Version& v) const noexcept {
  return std::any_of(sets.begin(), sets.end(),
                     [&](const ComparatorSet& s) { return s.satisfied_by(v); });
}

namespace {

/// A possibly partial version; nullopt components are wildcards or absent.
struct Partial {
  std::optional<std::uint64_t> major, minor, patch;
  Version full;  // valid when patch is set (carries prerelease/build)
};

bool is_wild(std::string_view s) noexcept { return s == "x" || s == "X" || s == "*"; }

std::optional<Partial> parse_partial(std::string_view s) {
  if (!s.empty() && (s[0] == 'v' || s[0] == 'V')) s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  const auto parts = split_version(s);
  const auto nums = detail::split(parts.core, '.');
  if (nums.empty() || nums.size() > 3) return std::nullopt;

  Partial p;
  std::optional<std::uint64_t>* slots[3] = {&p.major, &p.minor, &p.patch};
  bool wild = false;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (is_wild(nums[i])) {
      wild = true;
      continue;
    }
    const auto n = parse_number(nums[i]);
    if (!n) return std::nullopt;
    if (!wild) *slots[i] = n;
  }
  if (p.patch) {
    p.full.major = *p.major;
    p.full.minor = *p.minor;
    p.full.patch = *p.patch;
    if (!fill_tails(parts, p.full)) return std::nullopt;
  } else if (parts.pre) {
    return std::nullopt;
  } else if (parts.build && !parse_idents(*parts.build, false)) {
    return std::nullopt;
  }
  return p;
}

Version make(std::uint64_t ma, std::uint64_t mi, std::uint64_t pa, bool floor = false) {
  Version v;
  v.major = ma;
  v.minor = mi;
  v.patch = pa;
  if (floor) v.prerelease = {"0"};
  return v;
}

Comparator synth(CmpOp op, Version v) { return {op, std::move(v), false}; }
Comparator lit(CmpOp op, Version v) { return {op, std::move(v), true}; }

// Matches nothing: no version precedes 0.0.0-0.
std::vector<Comparator> nothing() { return {synth(CmpOp::Lt, make(0, 0, 0, true))}; }

std::vector<Comparator> desugar_x(const Partial& p) {
  if (!p.major) return {};
  if (!p.minor) {
    return {synth(CmpOp::Ge, make(*p.major, 0, 0)), synth(CmpOp::Lt, make(*p.major + 1, 0, 0, true))};
  }
  if (!p.patch) {
    return {synth(CmpOp::Ge, make(*p.major, *p.minor, 0)),
            synth(CmpOp::Lt, make(*p.major, *p.minor + 1, 0, true))};
  }
  return {lit(CmpOp::Eq, p.full)};
}

std::vector<Comparator> desugar_tilde(const Partial& p) {
  if (!p.patch) return desugar_x(p);
  return {lit(CmpOp::Ge, p.full), synth(CmpOp::Lt, make(*p.major, *p.minor + 1, 0, true))};
}

std::vector<Comparator> desugar_caret(const Partial& p) {
  if (!p.major) return {};
  const auto ma = *p.major;
  if (!p.minor) return desugar_x(p);
  const auto mi = *p.minor;
  if (!p.patch) {
    const auto upper = ma > 0 ? make(ma + 1, 0, 0, true) : make(0, mi + 1, 0, true);
    return {synth(CmpOp::Ge, make(ma, mi, 0)), synth(CmpOp::Lt, upper)};
  }
  const auto pa = *p.patch;
  Version upper = ma > 0 ? make(ma + 1, 0, 0, true)
                         : (mi > 0 ? make(0, mi + 1, 0, true) : make(0, 0, pa + 1, true));
  return {lit(CmpOp::Ge, p.full), synth(CmpOp::Lt, upper)};
}

std::vector<Comparator> desugar_primitive(CmpOp op, const Partial& p) {
  if (op == CmpOp::Eq) return desugar_x(p);
  if (p.patch) return {lit(op, p.full)};
  if (!p.major) {
    return (op == CmpOp::Gt || op == CmpOp::Lt) ? nothing() : std::vector<Comparator>{};
  }
  const auto ma = *p.major;
  const auto mi = p.minor.value_or(0);
  switch (op) {
    case CmpOp::Gt:
      return {synth(CmpOp::Ge, p.minor ? make(ma, mi + 1, 0) : make(ma + 1, 0, 0))};
    case CmpOp::Ge:
      return {synth(CmpOp::Ge, make(ma, mi, 0))};
    case CmpOp::Lt:
      return {synth(CmpOp::Lt, make(ma, mi, 0, true))};
    case CmpOp::Le:
      return {synth(CmpOp::Lt, p.minor ? make(ma, mi + 1, 0, true) : make(ma + 1, 0, 0, true))};
    case CmpOp::Eq:
      break;
  }
  return {};
}

std::optional<std::vector<Comparator>> desugar_hyphen(const Partial& lo, const Partial& hi) {
  std::vector<Comparator> out;
  if (lo.major) {
    out.push_back(lo.patch ? lit(CmpOp::Ge, lo.full)
                           : synth(CmpOp::Ge, make(*lo.major, lo.minor.value_or(0), 0)));
  }
  if (hi.major) {
    if (hi.patch) {
      out.push_back(lit(CmpOp::Le, hi.full));
    } else if (hi.minor) {
      out.push_back(synth(CmpOp::Lt, make(*hi.major, *hi.minor + 1, 0, true)));
    } else {
      out.push_back(synth(CmpOp::Lt, make(*hi.major + 1, 0, 0, true)));
    }
  }
  return out;
}

std::optional<std::vector<Comparator>> parse_simple(std::string_view tok) {
  enum class Kind { X, Tilde, Caret, Prim };
  Kind kind = Kind::X;
  CmpOp op = CmpOp::Eq;
  if (tok.starts_with("~>")) {
    kind = Kind::Tilde;
    tok.remove_prefix(2);
  } else if (tok.starts_with("~")) {
    kind = Kind::Tilde;
    tok.remove_prefix(1);
  } else if (tok.starts_with("^")) {
    kind = Kind::Caret;
    tok.remove_prefix(1);
  } else if (tok.starts_with(">=")) {
    kind = Kind::Prim, op = CmpOp::Ge;
    tok.remove_prefix(2);
  } else if (tok.starts_with("<=")) {
    kind = Kind::Prim, op = CmpOp::Le;
    tok.remove_prefix(2);
  } else if (tok.starts_with(">")) {
    kind = Kind::Prim, op = CmpOp::Gt;
    tok.remove_prefix(1);
  } else if (tok.starts_with("<")) {
    kind = Kind::Prim, op = CmpOp::Lt;
    tok.remove_prefix(1);
  } else if (tok.starts_with("=")) {
    tok.remove_prefix(1);
  }
  const auto p = parse_partial(tok);
  if (!p) return std::nullopt;
  switch (kind) {
    case Kind::X:
      return desugar_x(*p);
    case Kind::Tilde:
      return desugar_tilde(*p);
    case Kind::Caret:
      return desugar_caret(*p);
    case Kind::Prim:
      return desugar_primitive(op, *p);
  }
  return std::nullopt;
}

bool is_op_char(char c) noexcept { return c == '<' || c == '>' || c == '=' || c == '^' || c == '~'; }

/// Whitespace-separated tokens with operators glued to their operand.
std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> toks;
  std::string cur;
  bool pending_op = false;
  for (char c : s) {
    if (detail::is_space(c)) {
      if (!cur.empty() && !pending_op) {
        toks.push_back(std::move(cur));
        cur.clear();
      }
      continue;
    }
    if (is_op_char(c)) {
      if (!pending_op && !cur.empty()) {
        toks.push_back(std::move(cur));
        cur.clear();
      }
      pending_op = true;
    } else {
      pending_op = false;
    }
    cur += c;
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

std::optional<ComparatorSet> parse_conjunction(std::string_view s) {
  const auto toks = tokenize(s);
  ComparatorSet set;
  if (toks.size() == 3 && toks[1] == "-") {
    const auto lo = parse_partial(toks[0]);
    const auto hi = parse_partial(toks[2]);
    if (!lo || !hi) return std::nullopt;
    set.comparators = *desugar_hyphen(*lo, *hi);
    return set;
  }
  for (const auto& t : toks) {
    if (t == "-") return std::nullopt;
    auto cmps = parse_simple(t);
    if (!cmps) return std::nullopt;
    set.comparators.insert(set.comparators.end(), cmps->begin(), cmps->end());
  }
  return set;
}

}  // namespace

std::optional<VersionRange> parse_range(std::string_view text) {
  VersionRange r;
  std::string_view rest = text;
  while (true) {
    const auto bar = rest.find("||");
    const auto part = rest.substr(0, bar);
    auto set = parse_conjunction(part);
    if (!set) return std::nullopt;
    r.sets.push_back(std::move(*set));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 2);
  }
  return r;
}

std::optional<Version> resolve_range(const VersionRange& range, std::span<const Version> available) {
  std::optional<Version> best;
  for (const auto& v : available) {
    if (range.satisfied_by(v) && (!best || *best < v)) best = v;
  }
  return best;
}

}  // namespace licterm
