#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "licterm/dataset.hpp"
#include "licterm/expression.hpp"
#include "licterm/registry.hpp"

namespace licterm::testing {

using Rng = std::mt19937_64;

/// Valid random profile; rights draw from {can, cannot, not-mentioned},
/// obligations from {must, not-mentioned}.
LicenseProfile random_profile(Rng& rng, const std::string& id);

/// Random profile restricted to a small item vocabulary so that exhaustive
/// itemset enumeration stays cheap.
LicenseProfile random_sparse_profile(Rng& rng, const std::string& id,
                                     const std::vector<std::pair<Term, Attitude>>& vocabulary);

Dataset random_dataset(Rng& rng, std::size_t n);

/// Random expression over a fixed id pool, with WITH and '+' leaves.
LicenseExpression random_expression(Rng& rng, int depth);

// Version ranges --------------------------------------------------------------

struct OVersion {
  std::uint64_t major = 0, minor = 0, patch = 0;
  std::vector<std::string> pre;
};

std::string text_of(const OVersion& v);

/// Partial with `parts` specified components (0 = wildcard / empty).
struct GenPartial {
  int parts = 3;
  std::uint64_t major = 0, minor = 0, patch = 0;
  std::vector<std::string> pre;  // only when parts == 3
  std::string text;             // as written
};

enum class GenOp { None, Eq, Caret, Tilde, Gt, Ge, Lt, Le };

struct GenSimple {
  GenOp op;
  GenPartial p;
};

struct GenConj {
  bool hyphen = false;
  GenPartial lo, hi;
  std::vector<GenSimple> simples;
};

struct GenRange {
  std::vector<GenConj> conjs;
  std::string text;
};

OVersion random_oversion(Rng& rng);
GenRange random_range(Rng& rng);

struct SyntheticSnapshot {
  std::vector<VersionRecord> records;
  /// Parsed form of every range text used; nullopt for deliberately
  /// unparsable forms.
  std::map<std::string, std::optional<GenRange>> ranges;
};

SyntheticSnapshot synthetic_snapshot(std::uint64_t seed, std::size_t n_records);

}  // namespace licterm::testing
