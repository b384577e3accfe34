#include <doctest.h>

#include <map>

#include "fim/oracle.hpp"
#include "fim/search.hpp"
#include "fim/verify.hpp"
#include "fixtures.hpp"

using namespace fim;
using namespace fim::test;

TEST_CASE("every variant finds the 15 itemsets of the running example") {
  TransactionDB db = table1_db();
  auto expected = table1_frequent_dfs();
  for (const Scheme& scheme : all_schemes()) {
    CAPTURE(scheme_name(scheme));
    MiningResult result = mine(db, 3, scheme);
    CHECK(result.frequent == expected);  // same sets, same discovery order
  }
}

TEST_CASE("running-example supports match the paper") {
  MiningResult result = mine(table1_db(), 3, {Algo::Eclat, false});
  std::map<Itemset, std::uint64_t> entries(result.frequent.begin(), result.frequent.end());
  CHECK(entries.at({kA, kC}) == 4);
  CHECK(entries.at({kA, kC, kD}) == 3);
  CHECK(entries.at({kA, kD}) == 5);
  CHECK(entries.at({kC, kE}) == 4);
  CHECK(entries.count({kB, kD}) == 0);  // rho(bd) = 1, excluded
}

TEST_CASE("mine validates minSup and handles the empty database") {
  CHECK_THROWS_AS(mine(table1_db(), 0, {Algo::Eclat, false}), std::invalid_argument);
  MiningResult empty = mine(TransactionDB{}, 1, {Algo::PrePostPlus, true});
  CHECK(empty.frequent.empty());
  CHECK(empty.metrics.num_candidates == 0);
  CHECK(empty.metrics.num_expanded == 0);
  CHECK(empty.metrics.num_frequent == 0);
  CHECK(empty.metrics.num_comparisons == 0);
}

TEST_CASE("running-example metrics: 15 candidates, 10 expanded") {
  for (const Scheme& scheme : all_schemes()) {
    CAPTURE(scheme_name(scheme));
    MiningResult result = mine(table1_db(), 3, scheme);
    CHECK(result.metrics.num_candidates == 15);
    CHECK(result.metrics.num_expanded == 10);
    CHECK(result.metrics.num_frequent == 15);  // 5 singletons + 10 composites
  }
}

TEST_CASE("metrics counter helpers") {
  RunMetrics metrics;
  metrics.count_candidate();
  CHECK(metrics.num_candidates == 1);
  CHECK(metrics.num_expanded == 0);
  metrics.count_expansion();
  metrics.add_comparisons(7);
  metrics.add_comparisons(3);
  CHECK(metrics.num_expanded == 1);
  CHECK(metrics.num_comparisons == 10);
}

TEST_CASE("ES variants strictly save comparisons on the running example") {
  TransactionDB db = table1_db();
  for (Algo algo : {Algo::Eclat, Algo::DEclat, Algo::PrePostPlus}) {
    MiningResult standard = mine(db, 3, {algo, false});
    MiningResult es = mine(db, 3, {algo, true});
    CAPTURE(algo_name(algo));
    CHECK(es.metrics.num_comparisons < standard.metrics.num_comparisons);
    CHECK(es.frequent == standard.frequent);
    CHECK(es.metrics.num_candidates == standard.metrics.num_candidates);
    CHECK(es.metrics.num_expanded == standard.metrics.num_expanded);
  }
}

TEST_CASE("scheme names") {
  CHECK(scheme_name({Algo::Eclat, true}) == "Eclat-ES");
  CHECK(scheme_name({Algo::DEclat, true}) == "dEclat-ES");
  CHECK(scheme_name({Algo::PrePostPlus, true}) == "PrePost+ES");
  CHECK(scheme_name({Algo::PrePostPlus, false}) == "PrePost+");
  CHECK(algo_name(Algo::DEclat) == "declat");
}

TEST_CASE("all variants agree with the oracle on random instances") {
  // Full six-way + oracle cross-check, including ES neutrality, comparison
  // monotonicity, downward closure and cross-scheme counter equality.
  VerifyReport report = verify_fuzz(60, 2024);
  if (!report.ok)
    for (const auto& issue : report.issues) FAIL_CHECK(issue);
  CHECK(report.ok);
}

TEST_CASE("downward closure audit accepts real results and flags tampering") {
  MiningResult result = mine(table1_db(), 3, {Algo::Eclat, false});
  CHECK(downward_closure_violation(result).empty());

  MiningResult tampered = result;
  for (auto& [itemset, support] : tampered.frequent)
    if (itemset.size() == 1 && itemset[0] == kA) support = 2;  // below {a,c}'s 4
  CHECK_FALSE(downward_closure_violation(tampered).empty());
}

TEST_CASE("verify report names a corrupted itemset") {
  TransactionDB db = table1_db();
  OracleResult oracle = brute_force_mine(db, 3);
  std::array<MiningResult, 6> results;
  auto schemes = all_schemes();
  for (std::size_t s = 0; s < schemes.size(); ++s) results[s] = mine(db, 3, schemes[s]);
  CHECK(check_results(oracle, results).ok);

  // Negative control: corrupt one support in one variant.
  for (auto& [itemset, support] : results[3].frequent)
    if (itemset == Itemset{kA, kD}) support = 2;
  VerifyReport broken = check_results(oracle, results);
  CHECK_FALSE(broken.ok);
  REQUIRE(!broken.issues.empty());
  bool names_itemset = false;
  for (const auto& issue : broken.issues)
    if (issue.find("{0,3}") != std::string::npos) names_itemset = true;
  CHECK(names_itemset);
}
