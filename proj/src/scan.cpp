#include "licterm/scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "licterm/normalize.hpp"

namespace licterm {

namespace {

enum class EdgeKind : std::uint8_t { Checked, Unknown };

struct EdgeResult {
  EdgeKind kind = EdgeKind::Unknown;
  std::uint8_t mask = 0;
  bool unprofiled = false;
  LicensePair pair;
};

std::uint8_t mask_of(const std::vector<ConflictFinding>& findings) {
  std::uint8_t m = 0;
  for (const auto& f : findings) m |= std::uint8_t(1u << static_cast<unsigned>(f.ctype));
  return m;
}

EdgeResult check_edge(const NormalizationOutcome& parent, const NormalizationOutcome& dep,
                      const ScanContext& ctx) {
  EdgeResult r;
  const auto* p = std::get_if<Resolved>(&parent);
  const auto* d = std::get_if<Resolved>(&dep);
  if (p == nullptr || d == nullptr) return r;
  const auto verdict = check_expressions(p->expr, d->expr, ctx.dataset, ctx.rules);
  r.kind = EdgeKind::Checked;
  r.mask = mask_of(verdict.findings);
  r.unprofiled = !verdict.unknown_licenses.empty();
  r.pair = {render(p->expr), render(d->expr)};
  return r;
}

void add_usage(const DependencyGraph& g, const std::vector<std::string>& bucket_of_node,
               ScanReport& rep) {
  // Nodes are grouped by package; pick the most recently published version
  // per (package, year), higher precedence on equal dates.
  std::size_t begin = 0;
  while (begin < g.nodes.size()) {
    std::size_t end = begin;
    while (end < g.nodes.size() && g.nodes[end].package == g.nodes[begin].package) ++end;
    std::map<int, std::size_t> latest;
    for (std::size_t i = begin; i < end; ++i) {
      const int year = static_cast<int>(g.nodes[i].published.year());
      auto [it, fresh] = latest.emplace(year, i);
      if (!fresh) {
        const auto& cur = g.nodes[it->second];
        const auto& cand = g.nodes[i];
        if (std::tie(cand.published, cand.version) > std::tie(cur.published, cur.version)) it->second = i;
      }
    }
    for (const auto& [year, node] : latest) ++rep.usage[{year, bucket_of_node[node]}];
    begin = end;
  }
}

std::string bucket_of(const NormalizationOutcome& o) {
  if (const auto* u = std::get_if<Unresolvable>(&o); u && u->reason == UnresolvableReason::NoLicense) {
    return "no-license";
  }
  return outcome_key(o);
}

ScanReport aggregate(const DependencyGraph& g, const std::vector<EdgeResult>& results,
                     const std::vector<std::string>& buckets) {
  ScanReport rep;
  rep.total_edges = g.edges.size();
  for (const auto& r : results) {
    if (r.kind == EdgeKind::Unknown) {
      ++rep.unknown_license_edges;
      continue;
    }
    if (r.unprofiled) ++rep.edges_with_unprofiled_ids;
    if (r.mask != 0) ++rep.edges_with_any_finding;
    for (std::size_t t = 0; t < kConflictTypeCount; ++t) {
      if (((r.mask >> t) & 1u) == 0) continue;
      ++rep.edges_with_findings[t];
      ++rep.pair_counts[t][r.pair];
    }
  }
  add_usage(g, buckets, rep);
  return rep;
}

}  // namespace

std::string usage_bucket(std::string_view raw, const AliasTable& aliases, const KnownLicenses& known) {
  return bucket_of(normalize(raw, aliases, known));
}

ScanReport scan(const DependencyGraph& g, const ScanContext& ctx) {
  // Distinct raw strings are normalized once each.
  std::map<std::string_view, std::size_t> slot_of_raw;
  std::vector<std::string_view> raws;
  std::vector<std::size_t> slot(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto [it, fresh] = slot_of_raw.emplace(g.nodes[i].license_raw, raws.size());
    if (fresh) raws.push_back(g.nodes[i].license_raw);
    slot[i] = it->second;
  }
  std::vector<NormalizationOutcome> outcomes(raws.size(), Unresolvable{});
  const auto nr = static_cast<std::int64_t>(raws.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < nr; ++i) {
    outcomes[static_cast<std::size_t>(i)] = normalize(raws[static_cast<std::size_t>(i)], ctx.aliases, ctx.known);
  }

  std::vector<EdgeResult> results(g.edges.size());
  const auto ne = static_cast<std::int64_t>(g.edges.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < ne; ++i) {
    const auto& e = g.edges[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = check_edge(outcomes[slot[e.from]], outcomes[slot[e.to]], ctx);
  }

  std::vector<std::string> buckets(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) buckets[i] = bucket_of(outcomes[slot[i]]);
  return aggregate(g, results, buckets);
}

ScanReport scan_serial(const DependencyGraph& g, const ScanContext& ctx) {
  std::vector<EdgeResult> results;
  results.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    results.push_back(check_edge(normalize(g.nodes[e.from].license_raw, ctx.aliases, ctx.known),
                                 normalize(g.nodes[e.to].license_raw, ctx.aliases, ctx.known), ctx));
  }
  std::vector<std::string> buckets;
  buckets.reserve(g.nodes.size());
  for (const auto& n : g.nodes) buckets.push_back(usage_bucket(n.license_raw, ctx.aliases, ctx.known));
  return aggregate(g, results, buckets);
}

std::vector<ConflictFinding> edge_findings(const DependencyGraph& g, const GraphEdge& e,
                                           const ScanContext& ctx) {
  const auto p = normalize(g.nodes[e.from].license_raw, ctx.aliases, ctx.known);
  const auto d = normalize(g.nodes[e.to].license_raw, ctx.aliases, ctx.known);
  const auto* pr = std::get_if<Resolved>(&p);
  const auto* dr = std::get_if<Resolved>(&d);
  if (pr == nullptr || dr == nullptr) return {};
  return check_expressions(pr->expr, dr->expr, ctx.dataset, ctx.rules).findings;
}

RankedTable rank_pairs(const ScanReport& report, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  RankedTable t;
  for (std::size_t ty = 0; ty < kConflictTypeCount; ++ty) {
    std::vector<RankedPair> rows;
    for (const auto& [pair, n] : report.pair_counts[ty]) rows.push_back({pair, n});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RankedPair& a, const RankedPair& b) { return a.edges > b.edges; });
    if (rows.size() > k) rows.resize(k);
    for (const auto& r : rows) t.listed_total[ty] += r.edges;
    t.type_total[ty] = report.edges_with_findings[ty];
    t.top[ty] = std::move(rows);
  }
  return t;
}

}  // namespace licterm
