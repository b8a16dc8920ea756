#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "licterm/dataset.hpp"
#include "licterm/semver.hpp"

namespace licterm {

using Date = std::chrono::year_month_day;

/// Strict YYYY-MM-DD; nullopt for malformed or impossible dates.
std::optional<Date> parse_date(std::string_view text);
std::string to_string(const Date& d);

struct VersionRecord {
  std::string package;
  Version version;
  Date published;
  std::string license_raw;
  std::vector<std::pair<std::string, std::string>> dependencies;  // (name, range) in file order

  friend bool operator==(const VersionRecord&, const VersionRecord&) = default;
};

/// JSON Lines snapshot, one record per line (docs/formats.md). Records are
/// returned in file order. Throws IoError, FormatError (source:line) and
/// DuplicateVersion.
std::vector<VersionRecord> parse_snapshot(std::string_view text,
                                          const std::string& source = "<snapshot>");
std::vector<VersionRecord> load_snapshot(const std::filesystem::path& path);

std::string serialize_snapshot(const std::vector<VersionRecord>& records);

enum class UnresolvedReason { UnknownPackage, NoMatch, UnparsableRange };

std::string_view to_string(UnresolvedReason r) noexcept;

struct GraphNode {
  std::string package;
  Version version;
  Date published;
  std::string license_raw;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::size_t from;  // node index of the dependent
  std::size_t to;    // node index of the resolved dependency version
  std::string range;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct UnresolvedDependency {
  std::size_t from;
  std::string package;
  std::string range;
  UnresolvedReason reason;

  friend bool operator==(const UnresolvedDependency&, const UnresolvedDependency&) = default;
};

/// Direct-dependency graph. Nodes are sorted by (package, version); edges
/// and unresolved entries by dependent node, then dependency name.
struct DependencyGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<UnresolvedDependency> unresolved;

  std::optional<std::size_t> find(std::string_view package, const Version& v) const;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

/// Resolves every dependency range against all snapshot versions of the
/// named package. Records are resolved in parallel; the result does not
/// depend on record order or scheduling.
DependencyGraph build_graph(const std::vector<VersionRecord>& records);

/// Single-threaded reference.
DependencyGraph build_graph_serial(const std::vector<VersionRecord>& records);

/// Every edge target satisfies its range and every index is in bounds.
bool audit_graph(const DependencyGraph& g);

/// JSON Lines graph file (docs/formats.md).
std::string serialize_graph(const DependencyGraph& g);
DependencyGraph parse_graph(std::string_view text, const std::string& source = "<graph>");
void save_graph(const DependencyGraph& g, const std::filesystem::path& path);
DependencyGraph load_graph(const std::filesystem::path& path);

enum class ChangeClass {
  PermissiveToPermissive,
  PermissiveToCopyleft,
  CopyleftToPermissive,
  CopyleftToCopyleft,
  InvolvingUnresolvable,
};

std::string_view to_string(ChangeClass c) noexcept;

struct LicenseChange {
  std::string package;
  std::string from;  // outcome_key of the previous version
  std::string to;
  std::string at_version;
  ChangeClass classification;

  friend bool operator==(const LicenseChange&, const LicenseChange&) = default;
};

/// Per package, versions in precedence order (publish date breaks ties);
/// one entry whenever the normalized license differs from the previous
/// version's. Raw-text-only differences are not changes. An expression is
/// copyleft when every OR alternative contains a copyleft license (dataset
/// class first, then the known list). Output is sorted by package, then
/// version order.
std::vector<LicenseChange> license_changes(const std::vector<VersionRecord>& records,
                                           const AliasTable& aliases, const KnownLicenses& known,
                                           const Dataset& ds);

}  // namespace licterm
