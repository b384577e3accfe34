#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

/// Exhaustive mining result: every itemset with support >= minSup, keyed by
/// canonical itemset.
struct OracleResult {
  std::map<Itemset, std::uint64_t> entries;
};

/// Exact support of an itemset by scanning the database. The empty itemset
/// is contained in every transaction.
std::uint64_t support_of(const TransactionDB& db, std::span<const Item> itemset);

/// Deliberately simple level-wise reference miner used to certify the real
/// schemes. Enumerates itemsets of size <= max_k (unbounded by default) with
/// subset-based pruning and per-itemset database scans. Refuses databases
/// with more than 24 frequent items unless `force` is set.
OracleResult brute_force_mine(const TransactionDB& db, std::uint64_t min_sup,
                              std::optional<std::uint64_t> max_k = std::nullopt,
                              bool force = false);

}  // namespace fim
