#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/ppc.hpp"
#include "fim/types.hpp"

namespace fim::test {

// Running-example database, items a..e mapped to ids 0..4.
constexpr Item kA = 0, kB = 1, kC = 2, kD = 3, kE = 4;

inline std::string table1_text() {
  return
      "0 3 4\n"
      "1 2 3\n"
      "0 2 4\n"
      "0 2 3 4\n"
      "0 4\n"
      "0 2 3\n"
      "1 2\n"
      "0 2 3 4\n"
      "1 2 4\n"
      "0 3 4\n";
}

inline TransactionDB table1_db() { return parse_fimi(table1_text()); }

// Level-1 TID-lists of the running example, in ascending-frequency order.
inline std::vector<std::pair<Item, std::vector<Tid>>> table1_tidlists() {
  return {{kB, {2, 7, 9}},
          {kD, {1, 2, 4, 6, 8, 10}},
          {kA, {1, 3, 4, 5, 6, 8, 10}},
          {kC, {2, 3, 4, 6, 7, 8, 9}},
          {kE, {1, 3, 4, 5, 8, 9, 10}}};
}

// PP-codes of the running example's tree (descending order a,c,e,d,b).
inline std::map<Item, NList> table1_nlists() {
  return {{kA, {{0, 6, 7}}},
          {kC, {{3, 5, 4}, {7, 12, 3}}},
          {kE, {{1, 1, 3}, {4, 3, 3}, {11, 11, 1}}},
          {kD, {{2, 0, 2}, {5, 2, 2}, {6, 4, 1}, {8, 8, 1}}},
          {kB, {{9, 7, 1}, {10, 9, 1}, {12, 10, 1}}}};
}

// The 15 frequent itemsets at minSup=3 in depth-first discovery order.
inline std::vector<std::pair<Itemset, std::uint64_t>> table1_frequent_dfs() {
  return {{{kB}, 3},          {{kB, kC}, 3},     {{kD}, 6},         {{kA, kD}, 5},
          {{kA, kC, kD}, 3},  {{kA, kD, kE}, 4}, {{kC, kD}, 4},     {{kD, kE}, 4},
          {{kA}, 7},          {{kA, kC}, 4},     {{kA, kC, kE}, 3}, {{kA, kE}, 6},
          {{kC}, 7},          {{kC, kE}, 4},     {{kE}, 7}};
}

// Small deterministic generator for property tests.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  std::uint64_t state_;
};

inline TransactionDB random_db(TestRng& rng, std::uint32_t max_items = 12,
                               std::uint64_t max_trans = 30) {
  const std::uint32_t n_items = 1 + static_cast<std::uint32_t>(rng.below(max_items));
  const std::uint64_t n_trans = 1 + rng.below(max_trans);
  TransactionDB db;
  for (std::uint64_t t = 0; t < n_trans; ++t) {
    Transaction tx;
    for (Item item = 0; item < n_items; ++item)
      if (rng.below(3) == 0) tx.push_back(item);
    db.transactions.push_back(std::move(tx));
  }
  db.rebuild_universe();
  return db;
}

inline std::vector<Tid> random_sorted_tids(TestRng& rng, std::uint64_t max_len = 40,
                                           Tid universe = 60) {
  std::vector<Tid> tids;
  for (Tid t = 1; t <= universe; ++t)
    if (rng.below(universe) < max_len) tids.push_back(t);
  return tids;
}

}  // namespace fim::test
