#include <gtest/gtest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "licterm/semver.hpp"

namespace licterm {
namespace {

using testing::Rng;

Version v(const char* s) {
  auto out = parse_version(s);
  if (!out) throw std::runtime_error(std::string("bad version in test: ") + s);
  return *out;
}

bool sat(const char* range, const char* version) {
  const auto r = parse_range(range);
  if (!r) throw std::runtime_error(std::string("bad range in test: ") + range);
  return r->satisfied_by(v(version));
}

TEST(Version, ParsesStrictly) {
  const auto x = v("1.2.3-alpha.1+build.5");
  EXPECT_EQ(x.major, 1u);
  EXPECT_EQ(x.minor, 2u);
  EXPECT_EQ(x.patch, 3u);
  EXPECT_EQ(x.prerelease, (std::vector<std::string>{"alpha", "1"}));
  EXPECT_EQ(x.build, (std::vector<std::string>{"build", "5"}));
  for (const char* bad : {"1.2", "01.2.3", "1.02.3", "v1.2.3", "1.2.3-", "1.2.3-01", "1.2.3+", "", "1.2.3.4",
                          "a.b.c", "1.2.3-al$pha", "99999999999999999999.0.0"}) {
    EXPECT_FALSE(parse_version(bad)) << bad;
  }
}

TEST(Version, RoundTripsText) {
  for (const char* s : {"0.0.0", "1.2.3-rc.1", "10.20.30+meta", "1.0.0-alpha-beta.0+x.y"}) {
    EXPECT_EQ(to_string(v(s)), s);
  }
}

TEST(Version, PrecedenceChain) {
  const char* chain[] = {"1.0.0-alpha",      "1.0.0-alpha.1", "1.0.0-alpha.beta", "1.0.0-beta",
                         "1.0.0-beta.2",     "1.0.0-beta.11", "1.0.0-rc.1",       "1.0.0",
                         "1.0.1",            "1.10.0",        "2.0.0"};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    EXPECT_EQ(compare_precedence(v(chain[i]), v(chain[i + 1])), -1) << chain[i];
    EXPECT_LT(v(chain[i]), v(chain[i + 1]));
  }
  EXPECT_EQ(compare_precedence(v("1.0.0+a"), v("1.0.0+b")), 0);
  EXPECT_NE(v("1.0.0+a"), v("1.0.0+b"));
}

TEST(Range, ResolveExamples) {
  const std::vector<Version> avail = {v("1.2.3"), v("1.2.4"), v("1.3.0"), v("2.0.0")};
  EXPECT_EQ(resolve_range(*parse_range("^1.2.3"), avail), v("1.3.0"));
  EXPECT_EQ(resolve_range(*parse_range("~1.2.3"), avail), v("1.2.4"));
  EXPECT_EQ(resolve_range(*parse_range("*"), {}), std::nullopt);
  EXPECT_EQ(resolve_range(*parse_range(">2.0.0"), avail), std::nullopt);
  EXPECT_EQ(resolve_range(*parse_range(""), avail), v("2.0.0"));
}

TEST(Range, Desugaring) {
  EXPECT_TRUE(sat("^0.2.3", "0.2.9"));
  EXPECT_FALSE(sat("^0.2.3", "0.3.0"));
  EXPECT_TRUE(sat("^0.0.3", "0.0.3"));
  EXPECT_FALSE(sat("^0.0.3", "0.0.4"));
  EXPECT_TRUE(sat("^0.x", "0.9.9"));
  EXPECT_FALSE(sat("^0.x", "1.0.0"));
  EXPECT_TRUE(sat("~1", "1.9.0"));
  EXPECT_FALSE(sat("~1", "2.0.0"));
  EXPECT_TRUE(sat("1.2.x", "1.2.7"));
  EXPECT_FALSE(sat("1.2.x", "1.3.0"));
  EXPECT_TRUE(sat("1.2.3 - 2.3", "2.3.9"));
  EXPECT_FALSE(sat("1.2.3 - 2.3", "2.4.0"));
  EXPECT_TRUE(sat(">1.2", "1.3.0"));
  EXPECT_FALSE(sat(">1.2", "1.2.9"));
  EXPECT_TRUE(sat("<=1.2", "1.2.9"));
  EXPECT_FALSE(sat("<1.2", "1.2.0"));
  EXPECT_TRUE(sat(">= 1.0.0 <2", "1.5.0"));
  EXPECT_TRUE(sat("1.0.0 || >=3", "3.1.0"));
  EXPECT_FALSE(sat("1.0.0 || >=3", "2.0.0"));
  EXPECT_TRUE(sat("v1.2.3", "1.2.3"));
  EXPECT_TRUE(sat("=1.2.3", "1.2.3+build"));
}

TEST(Range, PrereleasesNeedAnExplicitSameTupleBound) {
  EXPECT_TRUE(sat(">=1.2.3-alpha", "1.2.3-beta"));
  EXPECT_FALSE(sat(">=1.2.3-alpha", "1.2.4-beta"));
  EXPECT_TRUE(sat(">=1.2.3-alpha", "1.2.4"));
  EXPECT_FALSE(sat("^1.2.3", "1.3.0-rc.1"));
  EXPECT_FALSE(sat("*", "1.0.0-rc.1"));
  EXPECT_FALSE(sat("<2.0.0", "2.0.0-rc.1"));
}

TEST(Range, RejectsUnsupportedText) {
  for (const char* bad : {"latest", "next", "git+https://example.com/x.git", "file:../local", "1.2.3.4", ">=>1",
                          "^", "1.2.3 -", "npm:foo@1", "~^1", "1 - ", "<=", "="}) {
    EXPECT_FALSE(parse_range(bad)) << bad;
  }
}

TEST(Range, EmptyDisjunctMatchesAnyRelease) {
  EXPECT_TRUE(sat("1.2.3 || ", "9.0.0"));
  EXPECT_TRUE(sat("||", "0.0.1"));
  EXPECT_FALSE(sat("||", "0.0.1-rc.1"));
}

TEST(Range, AgreesWithOracleOnRandomCases) {
  Rng rng(61);
  for (int round = 0; round < 10000; ++round) {
    const auto gen = testing::random_range(rng);
    const auto parsed = parse_range(gen.text);
    ASSERT_TRUE(parsed) << gen.text;

    std::vector<Version> avail;
    std::vector<testing::OVersion> oavail;
    const int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      const auto ov = testing::random_oversion(rng);
      oavail.push_back(ov);
      avail.push_back(*parse_version(testing::text_of(ov)));
    }

    const testing::OVersion* best = nullptr;
    for (std::size_t i = 0; i < oavail.size(); ++i) {
      const bool want = testing::oracle_satisfies(gen, oavail[i]);
      ASSERT_EQ(parsed->satisfied_by(avail[i]), want) << gen.text << " on " << testing::text_of(oavail[i]);
      if (want && (best == nullptr || testing::oracle_compare(oavail[i], *best) > 0)) best = &oavail[i];
    }
    const auto got = resolve_range(*parsed, avail);
    if (best == nullptr) {
      ASSERT_FALSE(got) << gen.text;
    } else {
      ASSERT_TRUE(got) << gen.text;
      ASSERT_EQ(to_string(*got), testing::text_of(*best)) << gen.text;
    }
  }
}

TEST(Range, ResolutionIgnoresAvailabilityOrder) {
  Rng rng(62);
  for (int round = 0; round < 500; ++round) {
    const auto parsed = parse_range(testing::random_range(rng).text);
    std::vector<Version> avail;
    for (int i = 0; i < 6; ++i) avail.push_back(*parse_version(testing::text_of(testing::random_oversion(rng))));
    const auto a = resolve_range(*parsed, avail);
    std::shuffle(avail.begin(), avail.end(), rng);
    ASSERT_EQ(a, resolve_range(*parsed, avail));
  }
}

}  // namespace
}  // namespace licterm
