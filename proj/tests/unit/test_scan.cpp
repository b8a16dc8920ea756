#include <gtest/gtest.h>

#include <variant>

#include "../support/oracles.hpp"
#include "licterm/normalize.hpp"
#include "licterm/scan.hpp"

namespace licterm {
namespace {

class Scan : public ::testing::Test {
 protected:
  void SetUp() override {
    ds = seed_dataset();
    aliases = seed_aliases();
    known = seed_known_licenses();
    known.merge(ds);
  }

  ScanContext ctx() const { return ScanContext{ds, aliases, known, {}}; }

  DependencyGraph two_node(const std::string& parent, const std::string& dep) const {
    std::vector<VersionRecord> recs(2);
    recs[0].package = "app";
    recs[0].version = *parse_version("1.0.0");
    recs[0].published = *parse_date("2021-01-01");
    recs[0].license_raw = parent;
    recs[0].dependencies = {{"lib", "^1.0.0"}};
    recs[1].package = "lib";
    recs[1].version = *parse_version("1.2.0");
    recs[1].published = *parse_date("2020-01-01");
    recs[1].license_raw = dep;
    return build_graph(recs);
  }

  Dataset ds;
  AliasTable aliases;
  KnownLicenses known;
};

TEST_F(Scan, SingleEdgeMitToCcBy) {
  const auto rep = scan(two_node("MIT", "CC-BY-4.0"), ctx());
  EXPECT_EQ(rep.total_edges, 1u);
  EXPECT_EQ(rep.edges_with_findings[0], 1u);
  EXPECT_EQ(rep.edges_with_any_finding, 1u);
  const auto t = rank_pairs(rep, 10);
  ASSERT_EQ(t.top[0].size(), 1u);
  EXPECT_EQ(t.top[0][0].pair, (LicensePair{"MIT", "CC-BY-4.0"}));
  EXPECT_EQ(t.top[0][0].edges, 1u);
}

TEST_F(Scan, SingleEdgeMitToApacheIsC2Only) {
  const auto rep = scan(two_node("mit", "Apache 2.0"), ctx());
  EXPECT_EQ(rep.edges_with_findings, (TypeCounts{0, 1, 0}));
  EXPECT_EQ(rep.pair_counts[1].begin()->first, (LicensePair{"MIT", "Apache-2.0"}));
}

TEST_F(Scan, UnresolvableEndpointIsCountedNotChecked) {
  for (const char* raw : {"", "SEE LICENSE IN LICENSE", "Some Weird License"}) {
    const auto rep = scan(two_node("MIT", raw), ctx());
    EXPECT_EQ(rep.unknown_license_edges, 1u) << raw;
    EXPECT_EQ(rep.edges_with_any_finding, 0u) << raw;
  }
  const auto rep = scan(two_node("AFL-3.0", "MIT"), ctx());
  EXPECT_EQ(rep.unknown_license_edges, 0u);
  EXPECT_EQ(rep.edges_with_unprofiled_ids, 1u);
  EXPECT_EQ(rep.edges_with_any_finding, 0u);
}

TEST_F(Scan, OrChoiceClearsEdge) {
  EXPECT_EQ(scan(two_node("MIT", "CC-BY-4.0 OR MIT"), ctx()).edges_with_any_finding, 0u);
  EXPECT_EQ(scan(two_node("MIT", "CC-BY-4.0 AND MIT"), ctx()).edges_with_findings[0], 1u);
}

TEST_F(Scan, CountsEqualNaivePerEdgeRecheck) {
  for (std::uint64_t seed = 11; seed <= 13; ++seed) {
    const auto g = build_graph(testing::synthetic_snapshot(seed, 300).records);
    ASSERT_GT(g.edges.size(), 50u);
    const auto c = ctx();
    const auto rep = scan(g, c);
    EXPECT_EQ(rep, scan_serial(g, c));

    TypeCounts per_type{};
    std::size_t any = 0, unknown = 0, blocked = 0;
    for (const auto& e : g.edges) {
      const auto p = normalize(g.nodes[e.from].license_raw, aliases, known);
      const auto d = normalize(g.nodes[e.to].license_raw, aliases, known);
      const auto* pr = std::get_if<Resolved>(&p);
      const auto* dr = std::get_if<Resolved>(&d);
      if (pr == nullptr || dr == nullptr) {
        ++unknown;
        continue;
      }
      const auto verdict = check_expressions(pr->expr, dr->expr, ds, RuleOptions{});
      std::array<bool, 3> seen{};
      for (const auto& f : verdict.findings) seen[static_cast<std::size_t>(f.ctype)] = true;
      for (std::size_t t = 0; t < 3; ++t) per_type[t] += seen[t] ? 1 : 0;
      any += verdict.findings.empty() ? 0 : 1;
      ASSERT_EQ(edge_findings(g, e, c), verdict.findings);

      // Exhaustive over OR assignments: the edge conflicts iff no
      // assignment of alternatives is finding-free.
      bool every_assignment_conflicts = true;
      for (const auto& pa : alternatives(pr->expr)) {
        for (const auto& da : alternatives(dr->expr)) {
          bool found = false;
          for (const auto& pl : pa) {
            for (const auto& dl : da) {
              const auto* pp = lookup(ds, pl.id);
              const auto* dp = lookup(ds, dl.id);
              if (pp && dp && !testing::oracle_findings(*pp, *dp, false).empty()) found = true;
            }
          }
          if (!found) every_assignment_conflicts = false;
        }
      }
      blocked += every_assignment_conflicts ? 1 : 0;
    }
    EXPECT_EQ(rep.edges_with_findings, per_type);
    EXPECT_EQ(rep.edges_with_any_finding, any);
    EXPECT_EQ(rep.edges_with_any_finding, blocked);
    EXPECT_EQ(rep.unknown_license_edges, unknown);
    for (std::size_t t = 0; t < 3; ++t) {
      std::size_t sum = 0;
      for (const auto& [pair, n] : rep.pair_counts[t]) sum += n;
      EXPECT_EQ(sum, rep.edges_with_findings[t]);
    }
  }
}

TEST_F(Scan, RankPairs) {
  ScanReport rep;
  rep.pair_counts[0] = {{{"A", "X"}, 3}, {{"B", "X"}, 5}, {{"C", "X"}, 3}, {{"D", "X"}, 1}};
  rep.edges_with_findings[0] = 12;
  const auto t = rank_pairs(rep, 3);
  ASSERT_EQ(t.top[0].size(), 3u);
  EXPECT_EQ(t.top[0][0].pair.first, "B");
  EXPECT_EQ(t.top[0][1].pair.first, "A");
  EXPECT_EQ(t.top[0][2].pair.first, "C");
  EXPECT_EQ(t.listed_total[0], 11u);
  EXPECT_EQ(t.type_total[0], 12u);
  EXPECT_TRUE(t.top[1].empty());
  EXPECT_EQ(rank_pairs(rep, 100).top[0].size(), 4u);
  EXPECT_THROW(rank_pairs(rep, 0), std::invalid_argument);
}

TEST_F(Scan, UsageTakesLatestVersionPerYear) {
  std::vector<VersionRecord> recs;
  auto add = [&](const char* pkg, const char* ver, const char* date, const char* lic) {
    VersionRecord r;
    r.package = pkg;
    r.version = *parse_version(ver);
    r.published = *parse_date(date);
    r.license_raw = lic;
    recs.push_back(r);
  };
  add("a", "1.0.0", "2019-01-01", "ISC");
  add("a", "1.1.0", "2019-12-01", "mit");
  add("a", "2.0.0", "2020-03-01", "");
  add("b", "0.1.0", "2019-06-01", "MIT");
  add("b", "0.2.0", "2019-06-01", "Apache-2.0");
  const auto rep = scan(build_graph(recs), ctx());
  const std::map<std::pair<int, std::string>, std::size_t> want = {
      {{2019, "MIT"}, 1}, {{2019, "Apache-2.0"}, 1}, {{2020, "no-license"}, 1}};
  EXPECT_EQ(rep.usage, want);
  EXPECT_EQ(usage_bucket("https://x.org/l", aliases, known), "unresolvable:url");
}

}  // namespace
}  // namespace licterm
