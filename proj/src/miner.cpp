#include "licterm/miner.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "licterm/errors.hpp"

namespace licterm {

std::size_t item_bit(TermItem item) noexcept {
  const auto i = index_of(item.term);
  if (i < kRightCount) return item.attitude == Attitude::Can ? i : kRightCount + i;
  return 2 * kRightCount + (i - kRightCount);
}

TermItem item_from_bit(std::size_t bit) noexcept {
  if (bit < kRightCount) return {term_at(bit), Attitude::Can};
  if (bit < 2 * kRightCount) return {term_at(bit - kRightCount), Attitude::Cannot};
  return {term_at(bit - 2 * kRightCount + kRightCount), Attitude::Must};
}

ItemMask profile_items(const LicenseProfile& p) noexcept {
  ItemMask m = 0;
  for (std::size_t i = 0; i < kTermCount; ++i) {
    const auto a = p.terms.get(term_at(i));
    if (!a || *a == Attitude::NotMentioned) continue;
    m |= ItemMask{1} << item_bit({term_at(i), *a});
  }
  return m;
}

std::vector<TermItem> items_of(ItemMask mask) {
  std::vector<TermItem> out;
  while (mask != 0) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
    out.push_back(item_from_bit(bit));
    mask &= mask - 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct MinedSet {
  ItemMask items;
  std::size_t support;
};

using WeightedBase = std::vector<std::pair<std::vector<int>, std::size_t>>;

/// Prefix tree over frequency-ranked items with per-item node chains.
class FpTree {
 public:
  FpTree(const WeightedBase& base, std::size_t min_support) {
    std::array<std::size_t, kItemCount> freq{};
    for (const auto& [items, w] : base) {
      for (int it : items) freq[static_cast<std::size_t>(it)] += w;
    }
    for (std::size_t it = 0; it < kItemCount; ++it) {
      if (freq[it] >= min_support) items_.push_back(static_cast<int>(it));
    }
    // Most frequent first; item code breaks ties so the tree shape is fixed.
    std::sort(items_.begin(), items_.end(), [&](int a, int b) {
      const auto fa = freq[static_cast<std::size_t>(a)];
      const auto fb = freq[static_cast<std::size_t>(b)];
      return fa != fb ? fa > fb : a < b;
    });
    rank_.fill(-1);
    for (std::size_t r = 0; r < items_.size(); ++r) rank_[static_cast<std::size_t>(items_[r])] = int(r);
    head_.fill(-1);
    support_ = freq;

    nodes_.push_back({-1, 0, -1, -1, {}});
    std::vector<int> path;
    for (const auto& [items, w] : base) {
      path.clear();
      for (int it : items) {
        if (rank_[static_cast<std::size_t>(it)] >= 0) path.push_back(it);
      }
      std::sort(path.begin(), path.end(), [&](int a, int b) {
        return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
      });
      insert(path, w);
    }
  }

  const std::vector<int>& items() const noexcept { return items_; }
  std::size_t support(int item) const noexcept { return support_[static_cast<std::size_t>(item)]; }

  /// Prefix paths of every node holding `item`, weighted by node count.
  WeightedBase conditional_base(int item) const {
    WeightedBase base;
    for (int n = head_[static_cast<std::size_t>(item)]; n >= 0; n = nodes_[n].next) {
      std::vector<int> prefix;
      for (int p = nodes_[n].parent; p > 0; p = nodes_[p].parent) prefix.push_back(nodes_[p].item);
      if (!prefix.empty()) base.emplace_back(std::move(prefix), nodes_[n].count);
    }
    return base;
  }

 private:
  struct Node {
    int item;
    std::size_t count;
    int parent;
    int next;
    std::vector<std::pair<int, int>> children;  // (item, node)
  };

  void insert(const std::vector<int>& path, std::size_t w) {
    int cur = 0;
    for (int it : path) {
      int child = -1;
      for (const auto& [ci, cn] : nodes_[cur].children) {
        if (ci == it) {
          child = cn;
          break;
        }
      }
      if (child < 0) {
        child = static_cast<int>(nodes_.size());
        nodes_.push_back({it, 0, cur, head_[static_cast<std::size_t>(it)], {}});
        head_[static_cast<std::size_t>(it)] = child;
        nodes_[cur].children.emplace_back(it, child);
      }
      nodes_[child].count += w;
      cur = child;
    }
  }

  std::vector<Node> nodes_;
  std::vector<int> items_;
  std::array<int, kItemCount> rank_{};
  std::array<int, kItemCount> head_{};
  std::array<std::size_t, kItemCount> support_{};
};

void grow(const FpTree& tree, int item, ItemMask suffix, std::size_t min_support,
          std::vector<MinedSet>& out) {
  const ItemMask pattern = suffix | (ItemMask{1} << item);
  out.push_back({pattern, tree.support(item)});
  const auto base = tree.conditional_base(item);
  if (base.empty()) return;
  const FpTree cond(base, min_support);
  for (int next : cond.items()) grow(cond, next, pattern, min_support, out);
}

std::vector<FrequentPattern> finish(const Dataset& ds, std::vector<MinedSet> sets) {
  std::vector<std::pair<ItemMask, const std::string*>> txns;
  txns.reserve(ds.size());
  for (const auto& [id, p] : ds.profiles) txns.emplace_back(profile_items(p), &id);

  std::vector<FrequentPattern> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    FrequentPattern fp;
    fp.items = items_of(s.items);
    for (const auto& [mask, id] : txns) {
      if ((mask & s.items) == s.items) fp.supporting_ids.push_back(*id);
    }
    fp.support_count = fp.supporting_ids.size();
    if (fp.support_count != s.support) {
      throw std::logic_error("FP-Growth support disagrees with transaction scan");
    }
    out.push_back(std::move(fp));
  }
  std::sort(out.begin(), out.end(), pattern_order);
  return out;
}

WeightedBase transactions(const Dataset& ds) {
  WeightedBase base;
  base.reserve(ds.size());
  for (const auto& [id, p] : ds.profiles) {
    std::vector<int> items;
    ItemMask m = profile_items(p);
    while (m != 0) {
      items.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    base.emplace_back(std::move(items), 1);
  }
  return base;
}

std::size_t checked_threshold(std::int64_t min_support) {
  if (min_support < 1) {
    throw InvalidThreshold("min_support must be >= 1, got " + std::to_string(min_support));
  }
  return static_cast<std::size_t>(min_support);
}

}  // namespace

bool pattern_order(const FrequentPattern& a, const FrequentPattern& b) {
  if (a.support_count != b.support_count) return a.support_count > b.support_count;
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return a.items < b.items;
}

std::vector<FrequentPattern> mine(const Dataset& ds, std::int64_t min_support) {
  const auto minsup = checked_threshold(min_support);
  const FpTree tree(transactions(ds), minsup);
  const auto& top = tree.items();
  const auto n = static_cast<std::int64_t>(top.size());
  std::vector<std::vector<MinedSet>> partial(top.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    grow(tree, top[static_cast<std::size_t>(i)], 0, minsup, partial[static_cast<std::size_t>(i)]);
  }

  std::vector<MinedSet> all;
  for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
  return finish(ds, std::move(all));
}

std::vector<FrequentPattern> mine_serial(const Dataset& ds, std::int64_t min_support) {
  const auto minsup = checked_threshold(min_support);
  const FpTree tree(transactions(ds), minsup);
  std::vector<MinedSet> all;
  for (int item : tree.items()) grow(tree, item, 0, minsup, all);
  return finish(ds, std::move(all));
}

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<std::string> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  const auto uni = a.size() + b.size() - inter.size();
  return static_cast<double>(inter.size()) / static_cast<double>(uni);
}

namespace {

bool nested(const std::vector<TermItem>& a, const std::vector<TermItem>& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<FrequentPattern> dedup_similar(const std::vector<FrequentPattern>& patterns,
                                           double jaccard_min) {
  if (!(jaccard_min > 0.0 && jaccard_min <= 1.0)) {
    throw std::invalid_argument("jaccard_min must be in (0, 1]");
  }
  std::vector<FrequentPattern> kept;
  for (const auto& p : patterns) {
    auto similar = std::find_if(kept.begin(), kept.end(), [&](const FrequentPattern& k) {
      // Small slack so that ratios like 9/10 meet a 0.9 threshold.
      return jaccard(p.supporting_ids, k.supporting_ids) >= jaccard_min - 1e-12 &&
             nested(p.items, k.items);
    });
    if (similar == kept.end()) {
      kept.push_back(p);
    } else if (p.items.size() > similar->items.size()) {
      *similar = p;
    }
  }
  std::sort(kept.begin(), kept.end(), pattern_order);
  return kept;
}

AttitudeHistogram common_term_report(const Dataset& ds) {
  AttitudeHistogram h;
  for (const auto& [id, p] : ds.profiles) {
    for (std::size_t i = 0; i < kTermCount; ++i) {
      const auto a = p.terms.get(term_at(i)).value_or(Attitude::NotMentioned);
      ++h.counts[i][static_cast<std::size_t>(a)];
    }
  }
  return h;
}

}  // namespace licterm
