#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "licterm/conflict.hpp"
#include "licterm/dataset.hpp"
#include "licterm/matrix.hpp"
#include "licterm/registry.hpp"

namespace licterm {

/// (parent root expression, dependency root expression), both rendered canonically.
using LicensePair = std::pair<std::string, std::string>;

struct ScanReport {
  std::size_t total_edges = 0;
  TypeCounts edges_with_findings{};  // edges with >= 1 finding of each type
  std::size_t edges_with_any_finding = 0;
  std::size_t unknown_license_edges = 0;     // an endpoint's license is unresolvable
  std::size_t edges_with_unprofiled_ids = 0;  // resolved, but an id has no profile
  std::array<std::map<LicensePair, std::size_t>, kConflictTypeCount> pair_counts;
  /// (year, bucket) -> packages whose latest version released that year
  /// carries that license. Buckets: rendered expression, or
  /// "no-license" / "unresolvable:<reason>".
  std::map<std::pair<int, std::string>, std::size_t> usage;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanContext {
  const Dataset& dataset;
  const AliasTable& aliases;
  const KnownLicenses& known;
  RuleOptions rules{};
};

/// Edges are checked in parallel against a per-node normalization cache.
ScanReport scan(const DependencyGraph& g, const ScanContext& ctx);

/// Single-threaded reference.
ScanReport scan_serial(const DependencyGraph& g, const ScanContext& ctx);

/// Findings for one edge, exactly as check_expressions reports them; empty
/// when an endpoint is unresolvable.
std::vector<ConflictFinding> edge_findings(const DependencyGraph& g, const GraphEdge& e,
                                           const ScanContext& ctx);

/// Usage bucket for a raw license string.
std::string usage_bucket(std::string_view raw, const AliasTable& aliases, const KnownLicenses& known);

struct RankedPair {
  LicensePair pair;
  std::size_t edges;
};

struct RankedTable {
  std::array<std::vector<RankedPair>, kConflictTypeCount> top;
  /// Sum over the listed rows, and the type's edge total.
  TypeCounts listed_total{};
  TypeCounts type_total{};
};

/// Top k pairs per type by edge count, ties broken by pair text. Throws
/// std::invalid_argument when k < 1.
RankedTable rank_pairs(const ScanReport& report, std::size_t k);

}  // namespace licterm
