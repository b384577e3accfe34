#pragma once

#include <cstdint>
#include <vector>

#include "fim/tidlist.hpp"
#include "fim/types.hpp"

namespace fim {

/// Diffset of an itemset: the TIDs present in its generating parent's list
/// but absent from its own. Support of the owner is derived, never stored
/// alongside the raw tids except here.
struct DiffList {
  std::vector<Tid> tids;
  std::uint64_t owner_support = 0;
};

/// Result of a (possibly early-stopped) diffset computation.
struct DiffOutcome {
  std::vector<Tid> result;
  std::uint64_t comparisons = 0;
  bool early_stopped = false;
  std::uint64_t end_i = 1;
  std::uint64_t end_j = 1;
};

/// Sorted-merge set difference u \ v, including the tail of u beyond the end
/// of v. `comparisons` counts merge-loop iterations only (the tail append is
/// comparison-free).
DiffOutcome difference(const std::vector<Tid>& u, const std::vector<Tid>& v);

/// Difference that returns as soon as the candidate's support bound
/// parent_support - |result| falls below minSup. The partial result certifies
/// infrequency: the true support parent_support - |u \ v| can only be smaller.
DiffOutcome difference_es(const std::vector<Tid>& u, const std::vector<Tid>& v,
                          std::uint64_t parent_support, std::uint64_t min_sup);

/// Support of a node from its generating parent's support and its diffset
/// size. Throws std::logic_error if diff_size exceeds parent_support.
std::uint64_t support_from_diffset(std::uint64_t parent_support, std::uint64_t diff_size);

/// Diffset of a 2-itemset from the level-1 TID-lists: D(xy) = T(x) - T(y).
/// The stored level-1 representation is the TID-list, which flips the
/// argument roles relative to the deeper-level call D(Pxy) = D(Py) - D(Px).
DiffList first_level_diffset(const TidList& tx, const TidList& ty);

}  // namespace fim
