#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "licterm/dataset.hpp"

namespace licterm {

/// A (term, attitude) pair held by a license. NotMentioned is never an item.
struct TermItem {
  Term term;
  Attitude attitude;

  friend auto operator<=>(const TermItem&, const TermItem&) = default;
};

/// Number of distinct items: Can or Cannot on each right, Must on each obligation.
inline constexpr std::size_t kItemCount = 2 * kRightCount + (kTermCount - kRightCount);

/// Dense bit position of an item in [0, kItemCount); requires a legal item.
std::size_t item_bit(TermItem item) noexcept;
TermItem item_from_bit(std::size_t bit) noexcept;

using ItemMask = std::uint64_t;

/// Items held by a profile as a bit mask.
ItemMask profile_items(const LicenseProfile& p) noexcept;

std::vector<TermItem> items_of(ItemMask mask);

struct FrequentPattern {
  std::vector<TermItem> items;            // ascending
  std::size_t support_count = 0;          // == supporting_ids.size()
  std::vector<std::string> supporting_ids;  // ascending

  friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

/// Every itemset (size >= 1) held by at least `min_support` licenses, with
/// exact supports, sorted by descending support, ascending size, then items.
/// FP-Growth; the conditional trees of the top-level items are mined in
/// parallel. Throws InvalidThreshold when min_support < 1.
std::vector<FrequentPattern> mine(const Dataset& ds, std::int64_t min_support);

/// Same result, single-threaded.
std::vector<FrequentPattern> mine_serial(const Dataset& ds, std::int64_t min_support);

/// Output order used by mine().
bool pattern_order(const FrequentPattern& a, const FrequentPattern& b);

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Greedy near-duplicate removal over patterns in mine() order. A pattern is
/// similar to a kept one when the Jaccard index of their supporting sets is
/// >= jaccard_min and one itemset contains the other; of two similar
/// patterns the one with more items is kept. The result is in mine() order.
/// Throws std::invalid_argument
/// unless 0 < jaccard_min <= 1.
std::vector<FrequentPattern> dedup_similar(const std::vector<FrequentPattern>& patterns,
                                           double jaccard_min);

struct AttitudeHistogram {
  // counts[term][attitude]
  std::array<std::array<std::size_t, kAttitudeCount>, kTermCount> counts{};

  std::size_t count(Term t, Attitude a) const noexcept {
    return counts[index_of(t)][static_cast<std::size_t>(a)];
  }
};

AttitudeHistogram common_term_report(const Dataset& ds);

}  // namespace licterm
