#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

/// Sorted, duplicate-free list of the transactions containing an itemset.
/// Its length is the itemset's support.
using TidList = std::vector<Tid>;

/// Result of a (possibly early-stopped) TID-list intersection.
///
/// `comparisons` counts executed merge-loop iterations, one per three-way
/// element comparison. `end_i`/`end_j` are the 1-based cursor values at
/// return, matching the index convention of the merge walk.
struct IntersectOutcome {
  TidList result;
  std::uint64_t comparisons = 0;
  bool early_stopped = false;
  std::uint64_t skipped_u = 0;
  std::uint64_t skipped_v = 0;
  std::uint64_t end_i = 1;
  std::uint64_t end_j = 1;
};

/// TID-lists of all items with frequency >= minSup, in ascending-frequency
/// order (ties by ascending item id) — the Eclat search order.
std::vector<std::pair<Item, TidList>> build_tidlists(const TransactionDB& db,
                                                     std::uint64_t min_sup);

/// Sorted-merge intersection of two TID-lists.
IntersectOutcome intersect(const TidList& u, const TidList& v);

/// Intersection that tracks skipped elements on each side and breaks as soon
/// as the unskipped remainder of either list drops below minSup, certifying
/// |u ∩ v| < minSup. The partial result is returned; its length is then
/// guaranteed to fail the caller's frequency test.
IntersectOutcome intersect_es(const TidList& u, const TidList& v, std::uint64_t min_sup);

}  // namespace fim
