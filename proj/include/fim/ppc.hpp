#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/types.hpp"

namespace fim {

/// Node of a PPC-tree. Children are kept in insertion order, which fixes the
/// DFS traversal and therefore the pre/post ranks deterministically.
struct PPCNode {
  static constexpr std::uint32_t kUnranked = std::numeric_limits<std::uint32_t>::max();

  Item name = 0;
  std::uint64_t frequency = 0;
  std::vector<std::uint32_t> children;
  std::uint32_t pre = kUnranked;
  std::uint32_t post = kUnranked;
};

/// Prefix tree over reordered transactions. Node 0 is the null root; it has
/// no name and stays unranked.
class PPCTree {
 public:
  PPCTree() { nodes_.emplace_back(); }

  static constexpr std::uint32_t kRoot = 0;

  /// Inserts one reordered transaction, incrementing shared-prefix
  /// frequencies and branching where needed. Empty transactions are no-ops.
  void insert(const Transaction& tx);

  const PPCNode& node(std::uint32_t index) const { return nodes_[index]; }
  const PPCNode& root() const { return nodes_[kRoot]; }
  /// Number of item nodes, excluding the root.
  std::size_t item_node_count() const { return nodes_.size() - 1; }

  /// All nodes including the root, in creation order.
  const std::vector<PPCNode>& nodes() const { return nodes_; }
  std::vector<PPCNode>& nodes() { return nodes_; }

  /// Indented debug dump, one node per line: name, frequency, pre, post.
  void dump(std::ostream& out) const;
  std::string dump() const;

 private:
  std::vector<PPCNode> nodes_;
};

/// PP-code of a tree node: pre-order rank, post-order rank, frequency.
/// Node Y is an ancestor of node X iff Y.pre < X.pre and Y.post > X.post.
struct PPCode {
  std::uint32_t pre = 0;
  std::uint32_t post = 0;
  std::uint64_t freq = 0;

  bool operator==(const PPCode&) const = default;
};

/// N-list: PP-codes in strictly ascending pre order. The itemset's support is
/// the sum of the freq fields.
using NList = std::vector<PPCode>;

/// Result of a (possibly early-stopped) N-list intersection.
struct NLOutcome {
  NList result;
  std::uint64_t comparisons = 0;
  bool early_stopped = false;
  std::uint64_t skip = 0;
};

/// Builds the PPC-tree from a database already reordered and pruned in
/// descending-frequency order.
PPCTree build_ppc_tree(const TransactionDB& reordered_db);

/// Assigns 0-based pre-order and post-order ranks to all item nodes,
/// visiting children in insertion order. The root stays unranked.
void assign_pre_post(PPCTree& tree);

/// N-list of every item in `order` (absent items map to empty lists).
/// Requires ranks to be assigned.
std::map<Item, NList> extract_nlists(const PPCTree& tree, const ItemOrder& order);

/// N-list intersection per the ancestor rule: for X in `u` nested inside
/// Y in `v`, emit <Y.pre, Y.post, X.freq>; afterwards adjacent codes with
/// equal (pre, post) are merged by summing frequencies. `u` must belong to
/// the itemset whose distinguishing item lies deeper in the PPC-tree.
NLOutcome nl_intersect(const NList& u, const NList& v);

/// Intersection that accumulates the frequency of skipped `v` codes into
/// `skip` and returns an empty N-list as soon as the support upper bound
/// (rho_v - skip) + matched-frequency-so-far falls below minSup. rho_v is
/// the support of v's owner itemset.
NLOutcome nl_intersect_es(const NList& u, const NList& v, std::uint64_t rho_v,
                          std::uint64_t min_sup);

/// Sum of the code frequencies = support of the represented itemset.
std::uint64_t nl_support(const NList& nl);

}  // namespace fim
