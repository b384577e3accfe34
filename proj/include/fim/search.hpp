#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

enum class Algo { Eclat, DEclat, PrePostPlus };

/// Mining scheme: algorithm plus kernel flavour (standard or Early-Stopping).
struct Scheme {
  Algo algo = Algo::Eclat;
  bool early_stopping = false;

  bool operator==(const Scheme&) const = default;
};

/// Stable machine name ("eclat", "declat", "prepost").
std::string algo_name(Algo algo);
/// Display name ("Eclat", "dEclat", "PrePost+", with "-ES" when early stopping).
std::string scheme_name(const Scheme& scheme);

/// Per-run instrumentation. Candidates are k-itemset proposals with k >= 2
/// (one per kernel call); expanded nodes are the frequent ones among them;
/// num_frequent additionally counts the frequent 1-itemsets.
struct RunMetrics {
  std::uint64_t num_candidates = 0;
  std::uint64_t num_expanded = 0;
  std::uint64_t num_frequent = 0;
  std::uint64_t num_comparisons = 0;
  std::chrono::nanoseconds runtime{0};

  void count_candidate() { ++num_candidates; }
  void count_expansion() { ++num_expanded; }
  void add_comparisons(std::uint64_t n) { num_comparisons += n; }

  double runtime_ms() const {
    return std::chrono::duration<double, std::milli>(runtime).count();
  }
};

/// Frequent itemsets in DFS discovery order. Itemsets are canonical
/// (ascending original item ids) regardless of the scheme's internal order.
struct MiningResult {
  std::vector<std::pair<Itemset, std::uint64_t>> frequent;
  RunMetrics metrics;
};

/// Mines all itemsets with support >= minSup using the given scheme. The
/// three algorithms share one depth-first class traversal over the
/// ascending-frequency item order, so their outputs, discovery order and
/// candidate/expanded counts coincide; only the per-candidate kernels (and
/// hence comparison counts) differ. Throws std::invalid_argument when
/// min_sup < 1.
MiningResult mine(const TransactionDB& db, std::uint64_t min_sup, Scheme scheme);

}  // namespace fim
