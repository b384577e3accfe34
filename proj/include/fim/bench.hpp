#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fim/dataset.hpp"
#include "fim/search.hpp"

namespace fim {

/// One benchmark grid cell: a (scheme, es, minSup) measurement. Counters are
/// deterministic and asserted identical across repetitions; only the runtime
/// fields vary.
struct MetricsRecord {
  std::string dataset;
  std::string algorithm;  // stable machine name: eclat | declat | prepost
  bool early_stopping = false;
  std::uint64_t minsup_abs = 0;
  double minsup_rel = 0.0;
  std::uint64_t num_candidates = 0;
  std::uint64_t num_expanded = 0;
  std::uint64_t num_frequent = 0;
  std::uint64_t num_comparisons = 0;
  double runtime_ms_mean = 0.0;
  std::vector<double> runtime_ms_per_run;
};

struct BenchConfig {
  std::string dataset_name;
  std::vector<Algo> algos = {Algo::Eclat, Algo::DEclat, Algo::PrePostPlus};
  std::vector<bool> es_variants = {false, true};
  std::vector<SupportThreshold> minsups;
  std::uint64_t repetitions = 10;
};

/// Runs the full grid in deterministic order (minSup-major, then algorithm,
/// then ES variant). Throws std::runtime_error naming the cell if counters
/// differ between repetitions of the same cell.
std::vector<MetricsRecord> run_bench(const TransactionDB& db, const BenchConfig& config);

/// Builds the record for a single already-mined run.
MetricsRecord make_record(const std::string& dataset, const Scheme& scheme,
                          std::uint64_t minsup_abs, double minsup_rel,
                          const MiningResult& result);

/// Ratio column value: num_candidates / num_expanded rounded half-up to two
/// decimals using integer arithmetic; empty when num_expanded is zero.
std::string format_ratio(std::uint64_t num_candidates, std::uint64_t num_expanded);

/// CSV with the fixed header
/// dataset,algorithm,early_stopping,minsup_abs,minsup_rel,num_candidates,
/// num_expanded,num_frequent,num_comparisons,ratio,runtime_ms_mean
void write_csv(const std::vector<MetricsRecord>& records, std::ostream& out);

/// JSON report: array of record objects including per-run runtimes.
void write_report_json(const std::vector<MetricsRecord>& records, std::ostream& out);

/// Single record as a JSON object (the cmd_mine --metrics payload).
void write_record_json(const MetricsRecord& record, std::ostream& out);

}  // namespace fim
