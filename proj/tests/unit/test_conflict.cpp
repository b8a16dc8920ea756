#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "../support/oracles.hpp"
#include "licterm/conflict.hpp"
#include "licterm/matrix.hpp"

namespace licterm {
namespace {

bool contains(const std::vector<ConflictFinding>& fs, ConflictType t, Term term) {
  return std::any_of(fs.begin(), fs.end(), [&](const auto& f) { return f.ctype == t && f.term == term; });
}

std::size_t count_type(const std::vector<ConflictFinding>& fs, ConflictType t) {
  return static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [&](const auto& f) { return f.ctype == t; }));
}

class SeedConflicts : public ::testing::Test {
 protected:
  void SetUp() override { ds = seed_dataset(); }
  const LicenseProfile& p(const char* id) const { return *lookup(ds, id); }
  std::vector<ConflictFinding> check(const char* a, const char* b, bool strict = false) const {
    return check_profiles(p(a), p(b), strict);
  }
  Dataset ds;
};

TEST_F(SeedConflicts, MitToCcBy4IsC1OnSublicense) {
  const auto fs = check("MIT", "CC-BY-4.0");
  ASSERT_TRUE(contains(fs, ConflictType::C1, Term::Sublicense));
  const auto it = std::find_if(fs.begin(), fs.end(), [](const auto& f) { return f.term == Term::Sublicense; });
  EXPECT_EQ(it->parent_attitude, Attitude::Can);
  EXPECT_EQ(it->dep_attitude, Attitude::Cannot);
}

TEST_F(SeedConflicts, MitToCc0IsC1OnSublicense) {
  EXPECT_TRUE(contains(check("MIT", "CC0-1.0"), ConflictType::C1, Term::Sublicense));
}

TEST_F(SeedConflicts, PermissiveToApacheIsC2Only) {
  for (auto parent : {"MIT", "ISC"}) {
    const auto fs = check(parent, "Apache-2.0");
    EXPECT_TRUE(contains(fs, ConflictType::C2, Term::IncludeNotice)) << parent;
    EXPECT_TRUE(contains(fs, ConflictType::C2, Term::StateChanges)) << parent;
    EXPECT_EQ(count_type(fs, ConflictType::C1), 0u) << parent;
    EXPECT_EQ(count_type(fs, ConflictType::C3), 0u) << parent;
  }
}

TEST_F(SeedConflicts, PermissiveToMplIsC3OnPatents) {
  for (auto parent : {"MIT", "ISC"}) {
    EXPECT_TRUE(contains(check(parent, "MPL-2.0"), ConflictType::C3, Term::UsePatentClaims)) << parent;
  }
}

TEST_F(SeedConflicts, UnlicenseToMitIsC2) {
  EXPECT_GT(count_type(check("Unlicense", "MIT"), ConflictType::C2), 0u);
}

TEST_F(SeedConflicts, SelfCheckIsEmpty) {
  for (const auto& [id, prof] : ds.profiles) {
    for (bool strict : {false, true}) EXPECT_TRUE(check_profiles(prof, prof, strict).empty()) << id;
  }
}

TEST_F(SeedConflicts, GnuListProperty) {
  const auto& gpl = p("GPL-3.0-only");
  for (const auto& [id, prof] : ds.profiles) {
    if (prof.copyleft != CopyleftClass::None) continue;
    bool lacks = false;
    for (std::size_t i = 0; i < kRightCount; ++i) {
      const Term t = term_at(i);
      if (gpl.terms.at(t) == Attitude::Can && prof.terms.at(t) != Attitude::Can) lacks = true;
    }
    if (lacks) {
      EXPECT_GT(count_type(check_profiles(prof, gpl, false), ConflictType::C3), 0u) << id;
    }
  }
}

TEST_F(SeedConflicts, NarrowC3ReadingNeedsExplicitCannot) {
  RuleOptions narrow;
  narrow.c3 = C3Reading::Narrow;
  EXPECT_FALSE(contains(check_profiles(p("MIT"), p("MPL-2.0"), narrow), ConflictType::C3, Term::UsePatentClaims));
  EXPECT_TRUE(contains(check_profiles(p("CC0-1.0"), p("MPL-2.0"), narrow), ConflictType::C3, Term::UsePatentClaims));
}

TEST_F(SeedConflicts, MaskAgreesWithFindings) {
  for (bool strict : {false, true}) {
    const RuleOptions opts{strict, C3Reading::Broad};
    for (const auto& [a, pa] : ds.profiles) {
      for (const auto& [b, pb] : ds.profiles) {
        std::uint8_t m = 0;
        for (const auto& f : check_profiles(pa, pb, opts)) m |= std::uint8_t(1u << static_cast<unsigned>(f.ctype));
        EXPECT_EQ(conflict_type_mask(pa, pb, opts), m) << a << " -> " << b;
      }
    }
  }
}

TEST(ConflictProperties, EngineEqualsOracleOnRandomPairs) {
  testing::Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto a = testing::random_profile(rng, "A");
    const auto b = testing::random_profile(rng, "B");
    for (bool strict : {false, true}) {
      ASSERT_EQ(check_profiles(a, b, strict), testing::oracle_findings(a, b, strict)) << "case " << i;
    }
  }
}

TEST(ConflictProperties, FindingInvariantsAndNoMustCannot) {
  testing::Rng rng(8);
  for (int i = 0; i < 5000; ++i) {
    const auto a = testing::random_profile(rng, "A");
    const auto b = testing::random_profile(rng, "B");
    for (const auto& f : check_profiles(a, b, true)) {
      const bool must_cannot = (f.parent_attitude == Attitude::Must && f.dep_attitude == Attitude::Cannot) ||
                               (f.parent_attitude == Attitude::Cannot && f.dep_attitude == Attitude::Must);
      ASSERT_FALSE(must_cannot);
      switch (f.ctype) {
        case ConflictType::C1:
          ASSERT_EQ(kind_of(f.term), TermKind::Right);
          ASSERT_EQ(f.parent_attitude, Attitude::Can);
          break;
        case ConflictType::C2:
          ASSERT_EQ(kind_of(f.term), TermKind::Obligation);
          ASSERT_EQ(f.parent_attitude, Attitude::NotMentioned);
          ASSERT_EQ(f.dep_attitude, Attitude::Must);
          break;
        case ConflictType::C3:
          ASSERT_EQ(kind_of(f.term), TermKind::Right);
          ASSERT_NE(b.copyleft, CopyleftClass::None);
          ASSERT_EQ(f.dep_attitude, Attitude::Can);
          ASSERT_NE(f.parent_attitude, Attitude::Can);
          break;
      }
    }
  }
}

TEST(ConflictProperties, StrictModeIsMonotone) {
  testing::Rng rng(9);
  for (int i = 0; i < 5000; ++i) {
    const auto a = testing::random_profile(rng, "A");
    const auto b = testing::random_profile(rng, "B");
    const auto loose = check_profiles(a, b, false);
    const auto strict = check_profiles(a, b, true);
    for (const auto& f : loose) ASSERT_NE(std::find(strict.begin(), strict.end(), f), strict.end());
  }
}

TEST(ConflictProperties, NoC3WithoutCopyleft) {
  testing::Rng rng(10);
  for (int i = 0; i < 2000; ++i) {
    auto a = testing::random_profile(rng, "A");
    auto b = testing::random_profile(rng, "B");
    a.copyleft = b.copyleft = CopyleftClass::None;
    EXPECT_EQ(count_type(check_profiles(a, b, true), ConflictType::C3), 0u);
    EXPECT_EQ(count_type(check_profiles(b, a, true), ConflictType::C3), 0u);
  }
}

class ExpressionChecks : public SeedConflicts {
 protected:
  ExpressionVerdict run(const char* a, const char* b) const {
    return check_expressions(parse_expression(a), parse_expression(b), ds, false);
  }
};

TEST_F(ExpressionChecks, OrPicksConflictFreeBranch) {
  const auto v = run("MIT", "CC-BY-4.0 OR MIT");
  EXPECT_TRUE(v.conflict_free);
  ASSERT_EQ(v.dep_choice.size(), 1u);
  EXPECT_EQ(v.dep_choice[0].id, "MIT");
}

TEST_F(ExpressionChecks, AndRequiresEveryConjunct) {
  const auto v = run("MIT", "MIT AND Apache-2.0");
  EXPECT_FALSE(v.conflict_free);
  EXPECT_TRUE(contains(v.findings, ConflictType::C2, Term::IncludeNotice));
  for (const auto& f : v.findings) EXPECT_EQ(f.dep_id, "Apache-2.0");
}

TEST_F(ExpressionChecks, ParentOrIsAlsoAChoice) {
  EXPECT_TRUE(run("CC-BY-4.0 OR MIT", "MIT").conflict_free);
}

TEST_F(ExpressionChecks, UnknownIdsWarnWithoutFindings) {
  const auto v = run("MIT", "Xyz-1.0");
  EXPECT_TRUE(v.conflict_free);
  EXPECT_EQ(v.unknown_licenses, std::vector<std::string>{"Xyz-1.0"});
  EXPECT_FALSE(v.warnings.empty());
}

TEST_F(ExpressionChecks, MinimalAssignmentIsChosen) {
  const auto v = run("MIT", "CC-BY-4.0 OR Apache-2.0");
  EXPECT_FALSE(v.conflict_free);
  const auto direct = check_profiles(p("MIT"), p("Apache-2.0"), false);
  EXPECT_EQ(v.findings.size(), std::min(direct.size(), check("MIT", "CC-BY-4.0").size()));
}

TEST_F(ExpressionChecks, ExceptionAndCopyleftPairsWarn) {
  const auto v = run("GPL-3.0-only", "LGPL-3.0-only WITH Classpath-exception-2.0");
  const auto has = [&](std::string_view s) {
    return std::any_of(v.warnings.begin(), v.warnings.end(), [&](const auto& w) { return w.find(s) != std::string::npos; });
  };
  EXPECT_TRUE(has("Classpath-exception-2.0"));
  EXPECT_TRUE(has("copyleft"));
}

TEST(Explain, NamesRuleLicensesAndTerm) {
  const ConflictFinding cases[] = {
      {ConflictType::C1, Term::Sublicense, "MIT", "CC0-1.0", Attitude::Can, Attitude::Cannot},
      {ConflictType::C2, Term::IncludeNotice, "ISC", "Apache-2.0", Attitude::NotMentioned, Attitude::Must},
      {ConflictType::C3, Term::UsePatentClaims, "ISC", "MPL-2.0", Attitude::NotMentioned, Attitude::Can},
  };
  for (const auto& f : cases) {
    const auto s = explain(f);
    for (const auto& token : {std::string(to_string(f.ctype)), f.parent_id, f.dep_id,
                              std::string(to_string(f.term)), std::string(to_string(f.parent_attitude)),
                              std::string(to_string(f.dep_attitude))}) {
      EXPECT_NE(s.find(token), std::string::npos) << s << " missing " << token;
    }
    EXPECT_EQ(s, explain(f));
  }
}

TEST(Matrix, SeedEqualsOracleAndSerial) {
  const auto ds = seed_dataset();
  for (bool strict : {false, true}) {
    const RuleOptions opts{strict, C3Reading::Broad};
    const auto par = build_matrix(ds, opts);
    const auto ser = build_matrix_serial(ds, opts);
    const auto ora = testing::oracle_matrix(ds, strict);
    EXPECT_EQ(par, ser);
    EXPECT_EQ(par.pair_counts, ora.pair_counts);
    EXPECT_EQ(par.degrees, ora.degrees);
  }
}

TEST(Matrix, SingleLicenseHasNoPairs) {
  Dataset ds;
  ds.profiles.emplace("MIT", *lookup(seed_dataset(), "MIT"));
  const auto m = build_matrix(ds, RuleOptions{});
  EXPECT_EQ(m.pair_counts, (TypeCounts{0, 0, 0}));
  EXPECT_EQ(m.degrees.at("MIT"), (TypeCounts{0, 0, 0}));
}

TEST(Matrix, RandomDatasetsMatchSerial) {
  testing::Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    const auto ds = testing::random_dataset(rng, 60);
    EXPECT_EQ(build_matrix(ds, RuleOptions{}), build_matrix_serial(ds, RuleOptions{}));
  }
}

TEST(Matrix, FullScaleSizeRunsUnderASecond) {
  testing::Rng rng(12);
  const auto ds = testing::random_dataset(rng, 453);
  const auto start = std::chrono::steady_clock::now();
  const auto m = build_matrix(ds, RuleOptions{});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(elapsed, std::chrono::seconds(1));
  EXPECT_EQ(m.degrees.size(), 453u);
}

}  // namespace
}  // namespace licterm
