#include "fim/bench.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fim {

MetricsRecord make_record(const std::string& dataset, const Scheme& scheme,
                          std::uint64_t minsup_abs, double minsup_rel,
                          const MiningResult& result) {
  MetricsRecord record;
  record.dataset = dataset;
  record.algorithm = algo_name(scheme.algo);
  record.early_stopping = scheme.early_stopping;
  record.minsup_abs = minsup_abs;
  record.minsup_rel = minsup_rel;
  record.num_candidates = result.metrics.num_candidates;
  record.num_expanded = result.metrics.num_expanded;
  record.num_frequent = result.metrics.num_frequent;
  record.num_comparisons = result.metrics.num_comparisons;
  record.runtime_ms_per_run = {result.metrics.runtime_ms()};
  record.runtime_ms_mean = result.metrics.runtime_ms();
  return record;
}

std::vector<MetricsRecord> run_bench(const TransactionDB& db, const BenchConfig& config) {
  if (config.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (config.minsups.empty()) throw std::invalid_argument("at least one minSup required");
  if (config.algos.empty()) throw std::invalid_argument("at least one algorithm required");

  std::vector<MetricsRecord> records;
  for (const SupportThreshold& threshold : config.minsups) {
    const std::uint64_t minsup_abs = resolve_minsup(threshold, db.size());
    const double minsup_rel = threshold.is_relative()
                                  ? threshold.relative_value()
                                  : (db.size() ? static_cast<double>(minsup_abs) /
                                                     static_cast<double>(db.size())
                                               : 0.0);
    for (Algo algo : config.algos) {
      for (bool es : config.es_variants) {
        const Scheme scheme{algo, es};
        MetricsRecord record;
        std::vector<double> runtimes;
        runtimes.reserve(config.repetitions);
        for (std::uint64_t rep = 0; rep < config.repetitions; ++rep) {
          MiningResult result = mine(db, minsup_abs, scheme);
          if (rep == 0) {
            record = make_record(config.dataset_name, scheme, minsup_abs, minsup_rel, result);
          } else if (record.num_candidates != result.metrics.num_candidates ||
                     record.num_expanded != result.metrics.num_expanded ||
                     record.num_frequent != result.metrics.num_frequent ||
                     record.num_comparisons != result.metrics.num_comparisons) {
            std::ostringstream msg;
            msg << "non-deterministic counters in cell (" << scheme_name(scheme)
                << ", minSup=" << minsup_abs << ") at repetition " << rep;
            throw std::runtime_error(msg.str());
          }
          runtimes.push_back(result.metrics.runtime_ms());
        }
        record.runtime_ms_per_run = runtimes;
        record.runtime_ms_mean =
            std::accumulate(runtimes.begin(), runtimes.end(), 0.0) /
            static_cast<double>(runtimes.size());
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

std::string format_ratio(std::uint64_t num_candidates, std::uint64_t num_expanded) {
  if (num_expanded == 0) return {};
  // Round half-up at two decimals without going through floating point.
  const std::uint64_t scaled = (num_candidates * 200 + num_expanded) / (2 * num_expanded);
  std::ostringstream out;
  out << scaled / 100 << '.' << (scaled % 100 < 10 ? "0" : "") << scaled % 100;
  return out.str();
}

namespace {

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

nlohmann::json record_to_json(const MetricsRecord& r) {
  return nlohmann::json{{"metrics_version", 1},
                        {"dataset", r.dataset},
                        {"algorithm", r.algorithm},
                        {"early_stopping", r.early_stopping},
                        {"minsup_abs", r.minsup_abs},
                        {"minsup_rel", r.minsup_rel},
                        {"num_candidates", r.num_candidates},
                        {"num_expanded", r.num_expanded},
                        {"num_frequent", r.num_frequent},
                        {"num_comparisons", r.num_comparisons},
                        {"runtime_ms_mean", r.runtime_ms_mean},
                        {"runtime_ms_per_run", r.runtime_ms_per_run}};
}

}  // namespace

void write_csv(const std::vector<MetricsRecord>& records, std::ostream& out) {
  out << "dataset,algorithm,early_stopping,minsup_abs,minsup_rel,num_candidates,"
         "num_expanded,num_frequent,num_comparisons,ratio,runtime_ms_mean\n";
  for (const MetricsRecord& r : records) {
    out << r.dataset << ',' << r.algorithm << ',' << (r.early_stopping ? "true" : "false")
        << ',' << r.minsup_abs << ',' << format_double(r.minsup_rel) << ','
        << r.num_candidates << ',' << r.num_expanded << ',' << r.num_frequent << ','
        << r.num_comparisons << ',' << format_ratio(r.num_candidates, r.num_expanded) << ','
        << format_double(r.runtime_ms_mean) << '\n';
  }
}

void write_report_json(const std::vector<MetricsRecord>& records, std::ostream& out) {
  nlohmann::json array = nlohmann::json::array();
  for (const MetricsRecord& r : records) array.push_back(record_to_json(r));
  out << array.dump(2) << '\n';
}

void write_record_json(const MetricsRecord& record, std::ostream& out) {
  out << record_to_json(record).dump(2) << '\n';
}

}  // namespace fim
