#pragma once

#include <array>
#include <map>
#include <string>

#include "licterm/conflict.hpp"
#include "licterm/dataset.hpp"

namespace licterm {

using TypeCounts = std::array<std::size_t, kConflictTypeCount>;

/// All-pairs conflict summary over a dataset.
///
/// pair_counts[T] counts ordered (parent, dep) pairs, parent != dep, with at
/// least one finding of type T. degrees[L][T] is the number of other
/// licenses M such that (L, M) or (M, L) conflicts under T.
struct ConflictMatrix {
  TypeCounts pair_counts{};
  std::map<std::string, TypeCounts> degrees;

  friend bool operator==(const ConflictMatrix&, const ConflictMatrix&) = default;
};

/// OpenMP kernel: rows of the ordered-pair space are split across threads;
/// the result does not depend on scheduling.
ConflictMatrix build_matrix(const Dataset& ds, const RuleOptions& opts);

/// Single-threaded reference built on check_profiles.
ConflictMatrix build_matrix_serial(const Dataset& ds, const RuleOptions& opts);

}  // namespace licterm
