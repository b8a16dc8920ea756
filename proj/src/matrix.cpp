#include "licterm/matrix.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace licterm {

ConflictMatrix build_matrix(const Dataset& ds, const RuleOptions& opts) {
  std::vector<const LicenseProfile*> profiles;
  profiles.reserve(ds.size());
  for (const auto& [id, p] : ds.profiles) profiles.push_back(&p);
  const auto n = static_cast<std::int64_t>(profiles.size());

  // masks[i * n + j]: conflict types fired for parent i, dependency j.
  std::vector<std::uint8_t> masks(static_cast<std::size_t>(n * n), 0);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      if (i == j) continue;
      masks[static_cast<std::size_t>(i * n + j)] =
          conflict_type_mask(*profiles[i], *profiles[j], opts);
    }
  }

  std::vector<TypeCounts> degrees(static_cast<std::size_t>(n), TypeCounts{});
  std::size_t c1 = 0, c2 = 0, c3 = 0;

#pragma omp parallel for schedule(static) reduction(+ : c1, c2, c3)
  for (std::int64_t i = 0; i < n; ++i) {
    TypeCounts row{};
    for (std::int64_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto out = masks[static_cast<std::size_t>(i * n + j)];
      const auto either = out | masks[static_cast<std::size_t>(j * n + i)];
      c1 += out & 1u;
      c2 += (out >> 1) & 1u;
      c3 += (out >> 2) & 1u;
      for (std::size_t t = 0; t < kConflictTypeCount; ++t) row[t] += (either >> t) & 1u;
    }
    degrees[static_cast<std::size_t>(i)] = row;
  }

  ConflictMatrix m;
  m.pair_counts = {c1, c2, c3};
  for (std::int64_t i = 0; i < n; ++i) {
    m.degrees.emplace(profiles[i]->spdx_id, degrees[static_cast<std::size_t>(i)]);
  }
  return m;
}

ConflictMatrix build_matrix_serial(const Dataset& ds, const RuleOptions& opts) {
  ConflictMatrix m;
  std::map<std::string, std::array<std::set<std::string>, kConflictTypeCount>> partners;
  for (const auto& [id, p] : ds.profiles) partners[id];

  for (const auto& [pid, parent] : ds.profiles) {
    for (const auto& [did, dep] : ds.profiles) {
      if (pid == did) continue;
      std::array<bool, kConflictTypeCount> fired{};
      for (const auto& f : check_profiles(parent, dep, opts)) {
        fired[static_cast<std::size_t>(f.ctype)] = true;
      }
      for (std::size_t t = 0; t < kConflictTypeCount; ++t) {
        if (!fired[t]) continue;
        ++m.pair_counts[t];
        partners[pid][t].insert(did);
        partners[did][t].insert(pid);
      }
    }
  }
  for (const auto& [id, sets] : partners) {
    TypeCounts d{};
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) d[t] = sets[t].size();
    m.degrees.emplace(id, d);
  }
  return m;
}

}  // namespace licterm
