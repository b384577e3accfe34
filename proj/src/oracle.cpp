#include "fim/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fim {

namespace {
constexpr std::uint64_t kFrequentItemGuard = 24;
}

std::uint64_t support_of(const TransactionDB& db, std::span<const Item> itemset) {
  std::uint64_t count = 0;
  for (const auto& tx : db.transactions) {
    bool contains_all = true;
    for (Item item : itemset) {
      // Linear scan: reordered transactions are not id-sorted.
      if (std::find(tx.begin(), tx.end(), item) == tx.end()) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) ++count;
  }
  return count;
}

OracleResult brute_force_mine(const TransactionDB& db, std::uint64_t min_sup,
                              std::optional<std::uint64_t> max_k, bool force) {
  if (min_sup < 1) throw std::invalid_argument("minSup must be >= 1");
  OracleResult out;

  auto freq = item_frequencies(db);
  std::vector<Item> frequent_items;
  for (const auto& [item, count] : freq)
    if (count >= min_sup) frequent_items.push_back(item);
  std::sort(frequent_items.begin(), frequent_items.end());

  if (!force && frequent_items.size() > kFrequentItemGuard) {
    std::ostringstream msg;
    msg << "brute-force oracle refuses " << frequent_items.size()
        << " frequent items (limit " << kFrequentItemGuard << "); pass force to override";
    throw std::invalid_argument(msg.str());
  }

  std::vector<Itemset> level;
  for (Item item : frequent_items) {
    out.entries.emplace(Itemset{item}, freq[item]);
    level.push_back({item});
  }

  std::uint64_t k = 1;
  std::set<Itemset> current(level.begin(), level.end());
  while (!level.empty() && (!max_k || k < *max_k)) {
    std::vector<Itemset> next;
    std::set<Itemset> next_set;
    for (const Itemset& base : level) {
      for (Item ext : frequent_items) {
        if (ext <= base.back()) continue;
        Itemset candidate = base;
        candidate.push_back(ext);
        // Downward closure: all k-subsets must be frequent.
        bool prunable = false;
        for (std::size_t drop = 0; drop + 1 < candidate.size(); ++drop) {
          Itemset subset;
          for (std::size_t p = 0; p < candidate.size(); ++p)
            if (p != drop) subset.push_back(candidate[p]);
          if (!current.count(subset)) {
            prunable = true;
            break;
          }
        }
        if (prunable) continue;
        std::uint64_t support = support_of(db, candidate);
        if (support >= min_sup) {
          out.entries.emplace(candidate, support);
          next.push_back(candidate);
          next_set.insert(candidate);
        }
      }
    }
    level = std::move(next);
    current = std::move(next_set);
    ++k;
  }
  return out;
}

}  // namespace fim
