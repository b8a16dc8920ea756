#pragma once

// Brute-force reference implementations. None of these call into the code
// under test beyond plain data types.

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "generators.hpp"
#include "licterm/conflict.hpp"
#include "licterm/miner.hpp"

namespace licterm::testing {

/// Conflict rules as a lookup table over (term kind, parent, dep, copyleft).
std::vector<ConflictFinding> oracle_findings(const LicenseProfile& parent, const LicenseProfile& dep,
                                             bool strict);

struct OracleMatrix {
  std::array<std::size_t, 3> pair_counts{};
  std::map<std::string, std::array<std::size_t, 3>> degrees;
};

OracleMatrix oracle_matrix(const Dataset& ds, bool strict);

/// Every itemset over the items present in the dataset, enumerated as
/// subsets; sorted by (support desc, size asc, items).
std::vector<FrequentPattern> oracle_itemsets(const Dataset& ds, std::size_t min_support);

int oracle_compare(const OVersion& a, const OVersion& b);
bool oracle_satisfies(const GenRange& r, const OVersion& v);

/// (dependent "pkg@ver", dependency "pkg@ver", range) triples and
/// (dependent, name, range, reason) entries resolved by linear scan.
struct OracleGraph {
  std::set<std::tuple<std::string, std::string, std::string>> edges;
  std::set<std::tuple<std::string, std::string, std::string, std::string>> unresolved;
};

OracleGraph oracle_graph(const SyntheticSnapshot& snap);

}  // namespace licterm::testing
