#include "fim/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fim {

namespace {

std::string itemset_to_string(const Itemset& itemset) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < itemset.size(); ++i) {
    if (i) out << ',';
    out << itemset[i];
  }
  out << '}';
  return out.str();
}

std::map<Itemset, std::uint64_t> as_map(const MiningResult& result) {
  std::map<Itemset, std::uint64_t> entries;
  for (const auto& [itemset, support] : result.frequent) entries.emplace(itemset, support);
  return entries;
}

}  // namespace

std::array<Scheme, 6> all_schemes() {
  return {Scheme{Algo::Eclat, false},       Scheme{Algo::Eclat, true},
          Scheme{Algo::DEclat, false},      Scheme{Algo::DEclat, true},
          Scheme{Algo::PrePostPlus, false}, Scheme{Algo::PrePostPlus, true}};
}

std::string downward_closure_violation(const MiningResult& result) {
  auto entries = as_map(result);
  for (const auto& [itemset, support] : entries) {
    if (itemset.size() < 2) continue;
    for (std::size_t drop = 0; drop < itemset.size(); ++drop) {
      Itemset subset;
      for (std::size_t p = 0; p < itemset.size(); ++p)
        if (p != drop) subset.push_back(itemset[p]);
      auto it = entries.find(subset);
      if (it == entries.end())
        return "frequent itemset " + itemset_to_string(itemset) + " but subset " +
               itemset_to_string(subset) + " missing from the result";
      if (it->second < support)
        return "support of " + itemset_to_string(subset) + " (" +
               std::to_string(it->second) + ") below superset " +
               itemset_to_string(itemset) + " (" + std::to_string(support) + ")";
    }
  }
  return {};
}

VerifyReport check_results(const OracleResult& oracle,
                           const std::array<MiningResult, 6>& results) {
  VerifyReport report;
  const auto schemes = all_schemes();

  for (std::size_t s = 0; s < schemes.size(); ++s) {
    const std::string name = scheme_name(schemes[s]);
    auto mined = as_map(results[s]);
    if (mined.size() != results[s].frequent.size())
      report.fail(name + ": duplicate itemset in result");

    // First divergence against the oracle, reported by itemset.
    for (const auto& [itemset, support] : oracle.entries) {
      auto it = mined.find(itemset);
      if (it == mined.end()) {
        report.fail(name + ": missing frequent itemset " + itemset_to_string(itemset) +
                    " (oracle support " + std::to_string(support) + ")");
        break;
      }
      if (it->second != support) {
        report.fail(name + ": support of " + itemset_to_string(itemset) + " is " +
                    std::to_string(it->second) + ", oracle says " + std::to_string(support));
        break;
      }
    }
    for (const auto& [itemset, support] : mined) {
      if (!oracle.entries.count(itemset)) {
        report.fail(name + ": spurious itemset " + itemset_to_string(itemset) +
                    " (support " + std::to_string(support) + ")");
        break;
      }
    }

    std::string closure = downward_closure_violation(results[s]);
    if (!closure.empty()) report.fail(name + ": " + closure);
  }

  // ES neutrality: identical output sequence and proposal counts per algorithm.
  for (std::size_t s = 0; s + 1 < schemes.size(); s += 2) {
    const std::string name = algo_name(schemes[s].algo);
    const MiningResult& plain = results[s];
    const MiningResult& es = results[s + 1];
    if (plain.frequent != es.frequent)
      report.fail(name + ": ES variant changes the frequent output sequence");
    if (plain.metrics.num_candidates != es.metrics.num_candidates ||
        plain.metrics.num_expanded != es.metrics.num_expanded)
      report.fail(name + ": ES variant changes candidate/expanded counts");
    if (es.metrics.num_comparisons > plain.metrics.num_comparisons)
      report.fail(name + ": ES comparisons (" + std::to_string(es.metrics.num_comparisons) +
                  ") exceed standard (" + std::to_string(plain.metrics.num_comparisons) + ")");
  }

  // Candidate/expanded counts must agree across the three algorithms.
  for (std::size_t s = 2; s < schemes.size(); s += 2) {
    if (results[s].metrics.num_candidates != results[0].metrics.num_candidates ||
        results[s].metrics.num_expanded != results[0].metrics.num_expanded)
      report.fail(scheme_name(schemes[s]) + ": candidate/expanded counts (" +
                  std::to_string(results[s].metrics.num_candidates) + "/" +
                  std::to_string(results[s].metrics.num_expanded) +
                  ") differ from Eclat's (" +
                  std::to_string(results[0].metrics.num_candidates) + "/" +
                  std::to_string(results[0].metrics.num_expanded) + ")");
  }

  return report;
}

VerifyReport verify_instance(const TransactionDB& db, std::uint64_t min_sup, bool force) {
  OracleResult oracle = brute_force_mine(db, min_sup, std::nullopt, force);
  std::array<MiningResult, 6> results;
  const auto schemes = all_schemes();
  for (std::size_t s = 0; s < schemes.size(); ++s) results[s] = mine(db, min_sup, schemes[s]);
  return check_results(oracle, results);
}

VerifyReport verify_fuzz(std::uint64_t count, std::uint64_t seed) {
  // splitmix64, same construction as the synthetic generator.
  std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };

  for (std::uint64_t round = 0; round < count; ++round) {
    const std::uint32_t n_items = 1 + static_cast<std::uint32_t>(next() % 12);
    const std::uint64_t n_trans = 1 + next() % 30;
    TransactionDB db;
    for (std::uint64_t t = 0; t < n_trans; ++t) {
      Transaction tx;
      for (Item item = 0; item < n_items; ++item)
        if (next() % 3 == 0) tx.push_back(item);
      db.transactions.push_back(std::move(tx));
    }
    db.rebuild_universe();
    const std::uint64_t min_sup = 1 + next() % n_trans;

    VerifyReport report = verify_instance(db, min_sup);
    if (!report.ok) {
      VerifyReport out;
      std::ostringstream where;
      where << "fuzz round " << round << " (items=" << n_items << ", trans=" << n_trans
            << ", minSup=" << min_sup << ")";
      out.fail(where.str());
      for (auto& issue : report.issues) out.fail(std::move(issue));
      return out;
    }
  }
  return {};
}

}  // namespace fim
