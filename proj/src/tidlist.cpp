#include "fim/tidlist.hpp"

#include <algorithm>

namespace fim {

std::vector<std::pair<Item, TidList>> build_tidlists(const TransactionDB& db,
                                                     std::uint64_t min_sup) {
  ItemOrder order = compute_order(db, min_sup, OrderDirection::AscendingFrequency);
  std::vector<std::pair<Item, TidList>> lists;
  lists.reserve(order.size());
  std::unordered_map<Item, std::size_t> slot;
  for (Item item : order.sequence()) {
    slot.emplace(item, lists.size());
    lists.emplace_back(item, TidList{});
  }
  for (std::size_t pos = 0; pos < db.transactions.size(); ++pos) {
    const Tid tid = static_cast<Tid>(pos) + TransactionDB::kTidBase;
    for (Item item : db.transactions[pos]) {
      auto it = slot.find(item);
      if (it != slot.end()) lists[it->second].second.push_back(tid);
    }
  }
  return lists;
}

IntersectOutcome intersect(const TidList& u, const TidList& v) {
  IntersectOutcome out;
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i] == v[j]) {
      out.result.push_back(u[i]);
      ++i;
      ++j;
    } else if (u[i] < v[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  out.end_i = i + 1;
  out.end_j = j + 1;
  return out;
}

IntersectOutcome intersect_es(const TidList& u, const TidList& v, std::uint64_t min_sup) {
  IntersectOutcome out;
  std::size_t i = 0, j = 0;
  std::uint64_t skipped_u = 0, skipped_v = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i] == v[j]) {
      out.result.push_back(u[i]);
      ++i;
      ++j;
    } else if (u[i] < v[j]) {
      ++i;
      ++skipped_u;
      if (u.size() - skipped_u < min_sup) {
        out.early_stopped = true;
        break;
      }
    } else {
      ++j;
      ++skipped_v;
      if (v.size() - skipped_v < min_sup) {
        out.early_stopped = true;
        break;
      }
    }
  }
  out.skipped_u = skipped_u;
  out.skipped_v = skipped_v;
  out.end_i = i + 1;
  out.end_j = j + 1;
  return out;
}

}  // namespace fim
