#include <gtest/gtest.h>

#include "licterm/normalize.hpp"

namespace licterm {
namespace {

class Normalize : public ::testing::Test {
 protected:
  void SetUp() override {
    ds = seed_dataset();
    aliases = seed_aliases();
    known = seed_known_licenses();
    known.merge(ds);
  }

  std::string key(std::string_view raw) const { return outcome_key(normalize(raw, aliases, known)); }

  Dataset ds;
  AliasTable aliases;
  KnownLicenses known;
};

TEST_F(Normalize, NoLicense) {
  for (auto raw : {"", "   ", "UNLICENSED", "unlicensed", "none", "NONE"}) {
    EXPECT_EQ(key(raw), "unresolvable:no-license") << raw;
  }
}

TEST_F(Normalize, FileReferences) {
  for (auto raw : {"SEE LICENSE IN LICENSE.TXT", "see license in LICENSE", "SEE LICENCE IN COPYING",
                   "./LICENSE", "LICENSE.md", "file:LICENSE", "docs/license.txt", "..\\LICENSE"}) {
    EXPECT_EQ(key(raw), "unresolvable:file-reference") << raw;
  }
  EXPECT_EQ(key("Unlicense"), "Unlicense");
}

TEST_F(Normalize, Urls) {
  for (auto raw : {"https://opensource.org/licenses/MIT", "http://example.com/l.html", "www.wtfpl.net"}) {
    EXPECT_EQ(key(raw), "unresolvable:url") << raw;
  }
}

TEST_F(Normalize, Hashes) {
  EXPECT_EQ(key("d41d8cd98f00b204e9800998ecf8427e"), "unresolvable:hash-like");
  EXPECT_EQ(key("sha256:9f86d081884c7d659a2feaa0c55ad015a3bf4f1b2b0b822cd15d6c15b0f00a08"),
            "unresolvable:hash-like");
}

TEST_F(Normalize, CaseAndFullNames) {
  EXPECT_EQ(key("mit"), "MIT");
  EXPECT_EQ(key("Apache License 2.0"), "Apache-2.0");
  EXPECT_EQ(key("apache-2.0"), "Apache-2.0");
  EXPECT_EQ(key("  ISC  "), "ISC");
}

TEST_F(Normalize, Aliases) {
  EXPECT_EQ(key("Apache2"), "Apache-2.0");
  EXPECT_EQ(key("BSD"), "BSD-2-Clause");
  EXPECT_EQ(key("Expat"), "MIT");
  EXPECT_EQ(key("GPLv3"), "GPL-3.0-only");
}

TEST_F(Normalize, Expressions) {
  EXPECT_EQ(key("(MIT OR Apache-2.0)"), "MIT OR Apache-2.0");
  EXPECT_EQ(key("mit or apache-2.0"), "MIT OR Apache-2.0");
  EXPECT_EQ(key("MIT AND (BSD-3-Clause OR ISC)"), "MIT AND (BSD-3-Clause OR ISC)");
  EXPECT_EQ(key("GPL-2.0-only WITH Classpath-exception-2.0"), "GPL-2.0-only WITH Classpath-exception-2.0");
  EXPECT_EQ(key("MIT OR Frobnicate"), "unresolvable:unknown-name");
}

TEST_F(Normalize, GnuIdForms) {
  EXPECT_EQ(key("GPL-3.0"), "GPL-3.0-only");
  EXPECT_EQ(key("GPL-3.0+"), "GPL-3.0-or-later");
  EXPECT_EQ(key("GPL-2.0-only+"), "GPL-2.0-or-later");
  EXPECT_EQ(key("GPL-3.0-or-later"), "GPL-3.0-or-later");
  EXPECT_EQ(key("MPL-2.0+"), "MPL-2.0+");
}

TEST_F(Normalize, UnknownNamesKeepRaw) {
  const auto o = normalize("  My Custom License ", aliases, known);
  ASSERT_TRUE(std::holds_alternative<Unresolvable>(o));
  EXPECT_EQ(std::get<Unresolvable>(o).reason, UnresolvableReason::UnknownName);
  EXPECT_EQ(std::get<Unresolvable>(o).raw, "  My Custom License ");
  EXPECT_EQ(key("LicenseRef-custom"), "unresolvable:unknown-name");
}

TEST_F(Normalize, IdempotentOnRenderedResults) {
  for (auto raw : {"mit", "Apache 2.0", "(mit OR apache2)", "GPLv3+", "GPL-2.0+ WITH Classpath-exception-2.0",
                   "BSD AND ISC", "LGPL-2.1", "zlib"}) {
    const auto first = normalize(raw, aliases, known);
    ASSERT_TRUE(std::holds_alternative<Resolved>(first)) << raw;
    const auto rendered = render(std::get<Resolved>(first).expr);
    const auto second = normalize(rendered, aliases, known);
    ASSERT_TRUE(std::holds_alternative<Resolved>(second)) << rendered;
    EXPECT_EQ(std::get<Resolved>(second).expr, std::get<Resolved>(first).expr) << raw;
  }
}

}  // namespace
}  // namespace licterm
