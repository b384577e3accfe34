#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/oracle.hpp"
#include "fim/search.hpp"

namespace fim {

/// All six scheme variants in the deterministic verification order.
std::array<Scheme, 6> all_schemes();

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string issue) {
    ok = false;
    issues.push_back(std::move(issue));
  }
};

/// Cross-checks the six variant results against the oracle and each other:
/// (itemset, support) sets equal to the oracle's, ES/non-ES outputs and
/// candidate/expanded counts identical per algorithm, comparisons(ES) <=
/// comparisons(standard), candidate/expanded counts identical across
/// algorithms, and the downward-closure audit on each result. `results`
/// must be ordered as all_schemes().
VerifyReport check_results(const OracleResult& oracle,
                           const std::array<MiningResult, 6>& results);

/// Runs all six variants plus the oracle on one instance and checks them.
/// The oracle guard (> 24 frequent items) propagates unless `force` is set.
VerifyReport verify_instance(const TransactionDB& db, std::uint64_t min_sup,
                             bool force = false);

/// Verifies `count` random small instances (<= 12 items, <= 30 transactions,
/// minSup uniform in [1, n]). Deterministic in `seed`.
VerifyReport verify_fuzz(std::uint64_t count, std::uint64_t seed);

/// Subset-support monotonicity audit of a mining result: every reported
/// itemset's immediate sub-itemsets must be reported with support >= it.
/// Returns an empty string on success, else a description of the violation.
std::string downward_closure_violation(const MiningResult& result);

}  // namespace fim
