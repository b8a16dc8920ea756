#include "licterm/registry.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "licterm/errors.hpp"
#include "licterm/normalize.hpp"
#include "text_util.hpp"

namespace licterm {

using ojson = nlohmann::ordered_json;

std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto num = [&](std::size_t pos, std::size_t len) -> std::optional<int> {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  const auto y = num(0, 4);
  const auto m = num(5, 2);
  const auto d = num(8, 2);
  if (!y || !m || !d) return std::nullopt;
  const Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
                  std::chrono::day{static_cast<unsigned>(*d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string to_string(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

ojson parse_line(std::string_view line, const std::string& source, std::size_t lineno) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(source, lineno, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError(source, lineno, "record is not a JSON object");
  return j;
}

const std::string& need_string(const ojson& j, const char* key, const std::string& source,
                               std::size_t lineno) {
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(source, lineno, std::string("missing field '") + key + "'");
  if (!it->is_string()) {
    throw FormatError(source, lineno, std::string("field '") + key + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

std::size_t need_index(const ojson& j, const char* key, const std::string& source,
                       std::size_t lineno) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_unsigned()) {
    throw FormatError(source, lineno, std::string("field '") + key + "' must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

void only_keys(const ojson& j, std::initializer_list<std::string_view> allowed,
               const std::string& source, std::size_t lineno) {
  for (const auto& [k, v] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw FormatError(source, lineno, "unknown field '" + k + "'");
    }
  }
}

Version need_version(const ojson& j, const std::string& source, std::size_t lineno) {
  const auto& text = need_string(j, "version", source, lineno);
  const auto v = parse_version(text);
  if (!v) throw FormatError(source, lineno, "version '" + text + "' is not MAJOR.MINOR.PATCH semver");
  return *v;
}

Date need_date(const ojson& j, const std::string& source, std::size_t lineno) {
  const auto& text = need_string(j, "published", source, lineno);
  const auto d = parse_date(text);
  if (!d) throw FormatError(source, lineno, "published '" + text + "' is not a YYYY-MM-DD date");
  return *d;
}

std::string version_key(const std::string& package, const Version& v) {
  Version core = v;
  core.build.clear();
  return package + '\n' + to_string(core);
}

}  // namespace

std::vector<VersionRecord> parse_snapshot(std::string_view text, const std::string& source) {
  std::vector<VersionRecord> out;
  std::set<std::string> seen;
  std::size_t lineno = 0;
  for (const auto raw : detail::split_lines(text)) {
    ++lineno;
    if (detail::trim(raw).empty()) continue;
    const auto j = parse_line(raw, source, lineno);
    only_keys(j, {"package", "version", "published", "license", "dependencies"}, source, lineno);

    VersionRecord r;
    r.package = need_string(j, "package", source, lineno);
    if (r.package.empty()) throw FormatError(source, lineno, "empty package name");
    r.version = need_version(j, source, lineno);
    r.published = need_date(j, source, lineno);

    if (const auto it = j.find("license"); it != j.end()) {
      if (it->is_string()) {
        r.license_raw = it->get<std::string>();
      } else if (it->is_object() && it->size() == 1 && it->contains("type") &&
                 (*it)["type"].is_string()) {
        r.license_raw = (*it)["type"].get<std::string>();
      } else if (!it->is_null()) {
        throw FormatError(source, lineno, "field 'license' must be a string, null or {\"type\": string}");
      }
    }
    if (const auto it = j.find("dependencies"); it != j.end()) {
      if (!it->is_object()) throw FormatError(source, lineno, "field 'dependencies' must be an object");
      for (const auto& [name, range] : it->items()) {
        if (!range.is_string()) {
          throw FormatError(source, lineno, "range for dependency '" + name + "' must be a string");
        }
        if (name.empty()) throw FormatError(source, lineno, "empty dependency name");
        r.dependencies.emplace_back(name, range.get<std::string>());
      }
    }

    if (!seen.insert(version_key(r.package, r.version)).second) {
      throw DuplicateVersion(source, lineno,
                             "duplicate version " + r.package + "@" + to_string(r.version));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VersionRecord> load_snapshot(const std::filesystem::path& path) {
  return parse_snapshot(read_file(path), path.string());
}

std::string serialize_snapshot(const std::vector<VersionRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    ojson j;
    j["package"] = r.package;
    j["version"] = to_string(r.version);
    j["published"] = to_string(r.published);
    j["license"] = r.license_raw;
    ojson deps = ojson::object();
    for (const auto& [name, range] : r.dependencies) deps[name] = range;
    j["dependencies"] = std::move(deps);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string_view to_string(UnresolvedReason r) noexcept {
  switch (r) {
    case UnresolvedReason::UnknownPackage:
      return "unknown-package";
    case UnresolvedReason::NoMatch:
      return "no-match";
    case UnresolvedReason::UnparsableRange:
      return "unparsable-range";
  }
  return "?";
}

std::optional<std::size_t> DependencyGraph::find(std::string_view package, const Version& v) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), std::make_pair(package, &v),
                                   [](const GraphNode& n, const auto& key) {
                                     if (n.package != key.first) return n.package < key.first;
                                     return n.version < *key.second;
                                   });
  if (it == nodes.end() || it->package != package || it->version != v) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

namespace {

struct GraphPlan {
  DependencyGraph graph;
  std::vector<const VersionRecord*> by_node;
  std::map<std::string, std::vector<std::size_t>, std::less<>> versions_of;
};

GraphPlan plan_graph(const std::vector<VersionRecord>& records) {
  GraphPlan p;
  p.by_node.reserve(records.size());
  for (const auto& r : records) p.by_node.push_back(&r);
  std::sort(p.by_node.begin(), p.by_node.end(), [](const VersionRecord* a, const VersionRecord* b) {
    return std::tie(a->package, a->version) < std::tie(b->package, b->version);
  });
  p.graph.nodes.reserve(records.size());
  for (std::size_t i = 0; i < p.by_node.size(); ++i) {
    const auto& r = *p.by_node[i];
    p.graph.nodes.push_back({r.package, r.version, r.published, r.license_raw});
    p.versions_of[r.package].push_back(i);
  }
  return p;
}

struct NodeResult {
  std::vector<GraphEdge> edges;
  std::vector<UnresolvedDependency> unresolved;
};

NodeResult resolve_node(const GraphPlan& p, std::size_t i) {
  NodeResult res;
  auto deps = p.by_node[i]->dependencies;
  std::sort(deps.begin(), deps.end());
  for (const auto& [name, range_text] : deps) {
    const auto pkg = p.versions_of.find(name);
    if (pkg == p.versions_of.end()) {
      res.unresolved.push_back({i, name, range_text, UnresolvedReason::UnknownPackage});
      continue;
    }
    const auto range = parse_range(range_text);
    if (!range) {
      res.unresolved.push_back({i, name, range_text, UnresolvedReason::UnparsableRange});
      continue;
    }
    // Candidates are in ascending version order, so the last match is the highest.
    std::optional<std::size_t> best;
    for (const auto node : pkg->second) {
      if (range->satisfied_by(p.graph.nodes[node].version)) best = node;
    }
    if (best) {
      res.edges.push_back({i, *best, range_text});
    } else {
      res.unresolved.push_back({i, name, range_text, UnresolvedReason::NoMatch});
    }
  }
  return res;
}

DependencyGraph assemble(GraphPlan&& p, std::vector<NodeResult>&& results) {
  for (auto& r : results) {
    p.graph.edges.insert(p.graph.edges.end(), r.edges.begin(), r.edges.end());
    p.graph.unresolved.insert(p.graph.unresolved.end(), r.unresolved.begin(), r.unresolved.end());
  }
  return std::move(p.graph);
}

}  // namespace

DependencyGraph build_graph(const std::vector<VersionRecord>& records) {
  GraphPlan p = plan_graph(records);
  const auto n = static_cast<std::int64_t>(p.by_node.size());
  std::vector<NodeResult> results(p.by_node.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    results[static_cast<std::size_t>(i)] = resolve_node(p, static_cast<std::size_t>(i));
  }
  return assemble(std::move(p), std::move(results));
}

DependencyGraph build_graph_serial(const std::vector<VersionRecord>& records) {
  GraphPlan p = plan_graph(records);
  std::vector<NodeResult> results;
  results.reserve(p.by_node.size());
  for (std::size_t i = 0; i < p.by_node.size(); ++i) results.push_back(resolve_node(p, i));
  return assemble(std::move(p), std::move(results));
}

bool audit_graph(const DependencyGraph& g) {
  for (const auto& e : g.edges) {
    if (e.from >= g.nodes.size() || e.to >= g.nodes.size()) return false;
    const auto range = parse_range(e.range);
    if (!range || !range->satisfied_by(g.nodes[e.to].version)) return false;
  }
  return std::all_of(g.unresolved.begin(), g.unresolved.end(),
                     [&](const UnresolvedDependency& u) { return u.from < g.nodes.size(); });
}

namespace {

constexpr std::string_view kGraphFormat = "licterm-graph";
constexpr int kGraphFormatVersion = 1;

std::optional<UnresolvedReason> parse_reason(std::string_view s) {
  for (auto r : {UnresolvedReason::UnknownPackage, UnresolvedReason::NoMatch,
                 UnresolvedReason::UnparsableRange}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

}  // namespace

std::string serialize_graph(const DependencyGraph& g) {
  std::string out;
  auto emit = [&](const ojson& j) {
    out += j.dump();
    out += '\n';
  };
  ojson head;
  head["kind"] = "graph";
  head["format"] = kGraphFormat;
  head["format_version"] = kGraphFormatVersion;
  head["nodes"] = g.nodes.size();
  head["edges"] = g.edges.size();
  head["unresolved"] = g.unresolved.size();
  emit(head);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    ojson j;
    j["kind"] = "node";
    j["id"] = i;
    j["package"] = n.package;
    j["version"] = to_string(n.version);
    j["published"] = to_string(n.published);
    j["license"] = n.license_raw;
    emit(j);
  }
  for (const auto& e : g.edges) {
    ojson j;
    j["kind"] = "edge";
    j["from"] = e.from;
    j["to"] = e.to;
    j["range"] = e.range;
    emit(j);
  }
  for (const auto& u : g.unresolved) {
    ojson j;
    j["kind"] = "unresolved";
    j["from"] = u.from;
    j["package"] = u.package;
    j["range"] = u.range;
    j["reason"] = to_string(u.reason);
    emit(j);
  }
  return out;
}

DependencyGraph parse_graph(std::string_view text, const std::string& source) {
  DependencyGraph g;
  bool have_header = false;
  std::size_t want_nodes = 0, want_edges = 0, want_unresolved = 0;
  std::size_t lineno = 0;
  for (const auto raw : detail::split_lines(text)) {
    ++lineno;
    if (detail::trim(raw).empty()) continue;
    const auto j = parse_line(raw, source, lineno);
    const auto& kind = need_string(j, "kind", source, lineno);
    if (!have_header) {
      if (kind != "graph") throw FormatError(source, lineno, "first record must be the graph header");
      only_keys(j, {"kind", "format", "format_version", "nodes", "edges", "unresolved"}, source, lineno);
      if (need_string(j, "format", source, lineno) != kGraphFormat ||
          need_index(j, "format_version", source, lineno) != kGraphFormatVersion) {
        throw FormatError(source, lineno, "unsupported graph format");
      }
      want_nodes = need_index(j, "nodes", source, lineno);
      want_edges = need_index(j, "edges", source, lineno);
      want_unresolved = need_index(j, "unresolved", source, lineno);
      have_header = true;
      continue;
    }
    if (kind == "node") {
      only_keys(j, {"kind", "id", "package", "version", "published", "license"}, source, lineno);
      if (!g.edges.empty() || !g.unresolved.empty()) {
        throw FormatError(source, lineno, "node records must precede edges");
      }
      if (need_index(j, "id", source, lineno) != g.nodes.size()) {
        throw FormatError(source, lineno, "node ids must be consecutive from 0");
      }
      GraphNode n{need_string(j, "package", source, lineno), need_version(j, source, lineno),
                  need_date(j, source, lineno), need_string(j, "license", source, lineno)};
      if (!g.nodes.empty() && !(std::tie(g.nodes.back().package, g.nodes.back().version) <
                                std::tie(n.package, n.version))) {
        throw FormatError(source, lineno, "nodes must be sorted by (package, version) without duplicates");
      }
      g.nodes.push_back(std::move(n));
    } else if (kind == "edge") {
      only_keys(j, {"kind", "from", "to", "range"}, source, lineno);
      GraphEdge e{need_index(j, "from", source, lineno), need_index(j, "to", source, lineno),
                  need_string(j, "range", source, lineno)};
      if (e.from >= want_nodes || e.to >= want_nodes || e.from >= g.nodes.size() ||
          e.to >= g.nodes.size()) {
        throw FormatError(source, lineno, "edge references an unknown node");
      }
      g.edges.push_back(std::move(e));
    } else if (kind == "unresolved") {
      only_keys(j, {"kind", "from", "package", "range", "reason"}, source, lineno);
      const auto& reason = need_string(j, "reason", source, lineno);
      const auto r = parse_reason(reason);
      if (!r) throw FormatError(source, lineno, "unknown reason '" + reason + "'");
      UnresolvedDependency u{need_index(j, "from", source, lineno),
                             need_string(j, "package", source, lineno),
                             need_string(j, "range", source, lineno), *r};
      if (u.from >= g.nodes.size()) throw FormatError(source, lineno, "unresolved entry references an unknown node");
      g.unresolved.push_back(std::move(u));
    } else {
      throw FormatError(source, lineno, "unknown record kind '" + kind + "'");
    }
  }
  if (!have_header) throw FormatError(source, lineno, "missing graph header");
  if (g.nodes.size() != want_nodes || g.edges.size() != want_edges ||
      g.unresolved.size() != want_unresolved) {
    throw FormatError(source, lineno, "record counts do not match the graph header");
  }
  return g;
}

void save_graph(const DependencyGraph& g, const std::filesystem::path& path) {
  write_file(path, serialize_graph(g));
}

DependencyGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_file(path), path.string());
}

std::string_view to_string(ChangeClass c) noexcept {
  switch (c) {
    case ChangeClass::PermissiveToPermissive:
      return "permissive->permissive";
    case ChangeClass::PermissiveToCopyleft:
      return "permissive->copyleft";
    case ChangeClass::CopyleftToPermissive:
      return "copyleft->permissive";
    case ChangeClass::CopyleftToCopyleft:
      return "copyleft->copyleft";
    case ChangeClass::InvolvingUnresolvable:
      return "involving-unresolvable";
  }
  return "?";
}

namespace {

bool is_copyleft_id(const std::string& id, const KnownLicenses& known, const Dataset& ds) {
  if (const auto* p = lookup(ds, id)) return p->copyleft != CopyleftClass::None;
  return known.copyleft_of(id).value_or(CopyleftClass::None) != CopyleftClass::None;
}

bool is_copyleft(const LicenseExpression& e, const KnownLicenses& known, const Dataset& ds) {
  const auto alts = alternatives(e);
  return std::all_of(alts.begin(), alts.end(), [&](const std::vector<LicenseRef>& alt) {
    return std::any_of(alt.begin(), alt.end(),
                       [&](const LicenseRef& r) { return is_copyleft_id(r.id, known, ds); });
  });
}

}  // namespace

std::vector<LicenseChange> license_changes(const std::vector<VersionRecord>& records,
                                           const AliasTable& aliases, const KnownLicenses& known,
                                           const Dataset& ds) {
  std::map<std::string, std::vector<const VersionRecord*>> by_package;
  for (const auto& r : records) by_package[r.package].push_back(&r);

  struct Normalized {
    std::string key;
    std::optional<bool> copyleft;  // nullopt when unresolvable
  };
  std::map<std::string, Normalized, std::less<>> cache;
  auto normalized = [&](const std::string& raw) -> const Normalized& {
    if (const auto it = cache.find(raw); it != cache.end()) return it->second;
    const auto o = normalize(raw, aliases, known);
    Normalized n{outcome_key(o), std::nullopt};
    if (const auto* res = std::get_if<Resolved>(&o)) n.copyleft = is_copyleft(res->expr, known, ds);
    return cache.emplace(raw, std::move(n)).first->second;
  };

  std::vector<LicenseChange> out;
  for (auto& [package, versions] : by_package) {
    std::sort(versions.begin(), versions.end(), [](const VersionRecord* a, const VersionRecord* b) {
      if (const int c = compare_precedence(a->version, b->version); c != 0) return c < 0;
      if (a->published != b->published) return a->published < b->published;
      return a->version.build < b->version.build;
    });
    for (std::size_t i = 1; i < versions.size(); ++i) {
      const auto& prev = normalized(versions[i - 1]->license_raw);
      const auto& cur = normalized(versions[i]->license_raw);
      if (prev.key == cur.key) continue;
      ChangeClass cls;
      if (!prev.copyleft || !cur.copyleft) {
        cls = ChangeClass::InvolvingUnresolvable;
      } else if (*prev.copyleft) {
        cls = *cur.copyleft ? ChangeClass::CopyleftToCopyleft : ChangeClass::CopyleftToPermissive;
      } else {
        cls = *cur.copyleft ? ChangeClass::PermissiveToCopyleft : ChangeClass::PermissiveToPermissive;
      }
      out.push_back({package, prev.key, cur.key, to_string(versions[i]->version), cls});
    }
  }
  return out;
}

}  // namespace licterm
