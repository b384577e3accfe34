#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fim/types.hpp"

namespace fim {

/// Malformed input text (bad token, negative id). Message names the line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be opened or read.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// One transaction: item ids sorted ascending, duplicates removed at parse time.
/// After reorder_and_prune the sequence follows the item order instead.
using Transaction = std::vector<Item>;

struct TransactionDB {
  /// Transaction ids are 1-based positions in this vector.
  static constexpr Tid kTidBase = 1;

  std::vector<Transaction> transactions;
  /// Sorted, deduplicated union of all items occurring in `transactions`.
  std::vector<Item> item_universe;

  std::size_t size() const { return transactions.size(); }
  bool empty() const { return transactions.empty(); }

  /// Recomputes item_universe from the transactions.
  void rebuild_universe();

  bool operator==(const TransactionDB&) const = default;
};

enum class OrderDirection { AscendingFrequency, DescendingFrequency };

/// Total order over the frequent items of a database. Ranks are dense 0..size-1.
class ItemOrder {
 public:
  ItemOrder() : direction_(OrderDirection::AscendingFrequency) {}
  ItemOrder(std::vector<Item> sequence, OrderDirection direction);

  std::size_t size() const { return sequence_.size(); }
  bool empty() const { return sequence_.empty(); }
  Item item_at(std::size_t rank) const { return sequence_.at(rank); }
  const std::vector<Item>& sequence() const { return sequence_; }
  OrderDirection direction() const { return direction_; }

  bool contains(Item item) const { return rank_.count(item) != 0; }
  /// Rank of `item`, or nullopt if the item is not in the order.
  std::optional<std::uint32_t> rank_of(Item item) const;

  /// Same items in reverse sequence. Reversing an ascending-frequency order
  /// yields a valid descending-frequency order (and vice versa).
  ItemOrder reversed() const;

 private:
  std::vector<Item> sequence_;
  std::unordered_map<Item, std::uint32_t> rank_;
  OrderDirection direction_;
};

/// Minimum-support threshold: an absolute count or a fraction of |DB|.
class SupportThreshold {
 public:
  static SupportThreshold absolute(std::uint64_t count);
  static SupportThreshold relative(double fraction);

  bool is_relative() const { return relative_.has_value(); }
  std::uint64_t absolute_value() const { return absolute_; }
  double relative_value() const { return relative_.value(); }

  /// Resolves to an absolute count for a database of n transactions.
  std::uint64_t resolve(std::uint64_t n) const;

 private:
  SupportThreshold() = default;
  std::uint64_t absolute_ = 0;
  std::optional<double> relative_;
};

/// Resolves `spec` against a database of `n` transactions. Relative thresholds
/// use ceiling ("at least" semantics) and clamp to >= 1.
std::uint64_t resolve_minsup(const SupportThreshold& spec, std::uint64_t n);

/// Parses FIMI text: one transaction per line, whitespace-separated decimal
/// item ids, blank lines ignored. Items are deduplicated and sorted ascending.
TransactionDB parse_fimi(std::istream& in);
TransactionDB parse_fimi(const std::string& text);

/// Reads a FIMI file from disk. Throws IoError if unreadable.
TransactionDB load_fimi(const std::string& path);

/// Writes FIMI text: items ascending by id, space-separated, one transaction
/// per newline-terminated line. Inverse of parse_fimi for canonical databases
/// without empty transactions.
void write_fimi(const TransactionDB& db, std::ostream& out);
std::string write_fimi(const TransactionDB& db);

/// Number of transactions containing each item.
std::unordered_map<Item, std::uint64_t> item_frequencies(const TransactionDB& db);

/// Orders the items with frequency >= minSup by frequency, ties broken by
/// ascending item id in both directions.
ItemOrder compute_order(const TransactionDB& db, std::uint64_t min_sup,
                        OrderDirection direction);

/// Keeps only ordered items, rewrites each transaction in order-rank sequence.
/// Transactions that lose all items are retained as empty so |DB| is stable.
TransactionDB reorder_and_prune(const TransactionDB& db, const ItemOrder& order);

/// Deterministic synthetic database: per-transaction items drawn without
/// replacement from a power-law item popularity (weight of item i is
/// proportional to 1/(i+1)^0.8), transaction lengths Poisson-like around
/// mean_len with a minimum of one item.
TransactionDB generate_synthetic(std::uint64_t n_trans, std::uint32_t n_items,
                                 double mean_len, std::uint64_t seed);

}  // namespace fim
