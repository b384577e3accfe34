#include "fim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fim/bench.hpp"
#include "fim/dataset.hpp"
#include "fim/search.hpp"
#include "fim/verify.hpp"

namespace fim::cli {

namespace {

Algo algo_from_name(const std::string& name) {
  if (name == "eclat") return Algo::Eclat;
  if (name == "declat") return Algo::DEclat;
  if (name == "prepost") return Algo::PrePostPlus;
  throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
}

std::string dataset_label(const std::string& input_path) {
  return std::filesystem::path(input_path).filename().string();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

void write_itemsets(const MiningResult& result, std::ostream& out) {
  for (const auto& [itemset, support] : result.frequent) {
    for (std::size_t i = 0; i < itemset.size(); ++i) {
      if (i) out << ' ';
      out << itemset[i];
    }
    out << " (" << support << ")\n";
  }
}

struct MinsupFlags {
  std::uint64_t abs = 0;
  double rel = 0.0;
  bool has_abs = false;
  bool has_rel = false;

  SupportThreshold threshold() const {
    return has_abs ? SupportThreshold::absolute(abs) : SupportThreshold::relative(rel);
  }
};

void add_minsup_flags(CLI::App* cmd, MinsupFlags& flags) {
  auto* abs = cmd->add_option("--minsup-abs", flags.abs, "absolute minimum support count");
  auto* rel =
      cmd->add_option("--minsup-rel", flags.rel, "relative minimum support fraction (0,1]");
  abs->excludes(rel);
  rel->excludes(abs);
  cmd->callback([&flags, abs, rel]() {
    flags.has_abs = abs->count() > 0;
    flags.has_rel = rel->count() > 0;
  });
}

int run_mine(const std::string& input, const std::string& output,
             const std::string& metrics_path, const std::string& algo, bool es,
             const MinsupFlags& minsup, std::ostream& err) {
  const SupportThreshold threshold = minsup.threshold();  // validates before any I/O
  TransactionDB db = load_fimi(input);
  const std::uint64_t minsup_abs = resolve_minsup(threshold, db.size());
  const Scheme scheme{algo_from_name(algo), es};
  MiningResult result = mine(db, minsup_abs, scheme);

  auto out_file = open_output(output);
  write_itemsets(result, out_file);
  if (!out_file.flush()) throw IoError("failed writing " + output);

  if (!metrics_path.empty()) {
    const double rel = minsup.has_rel
                           ? minsup.rel
                           : (db.size() ? static_cast<double>(minsup_abs) /
                                              static_cast<double>(db.size())
                                        : 0.0);
    MetricsRecord record =
        make_record(dataset_label(input), scheme, minsup_abs, rel, result);
    auto metrics_file = open_output(metrics_path);
    write_record_json(record, metrics_file);
    if (!metrics_file.flush()) throw IoError("failed writing " + metrics_path);
  }
  (void)err;
  return kExitOk;
}

int run_bench_cmd(const std::string& input, const std::string& csv_path,
                  const std::string& report_path, const std::string& dataset_name,
                  const std::vector<std::string>& algos, const std::string& es_mode,
                  const std::vector<std::uint64_t>& minsup_abs,
                  const std::vector<double>& minsup_rel, std::uint64_t reps,
                  std::ostream& out) {
  TransactionDB db = load_fimi(input);

  BenchConfig config;
  config.dataset_name = dataset_name.empty() ? dataset_label(input) : dataset_name;
  config.repetitions = reps;
  config.algos.clear();
  for (const std::string& name : algos) config.algos.push_back(algo_from_name(name));
  if (es_mode == "std")
    config.es_variants = {false};
  else if (es_mode == "es")
    config.es_variants = {true};
  else if (es_mode == "both")
    config.es_variants = {false, true};
  else
    throw CLI::ValidationError("--es-mode", "expected std, es or both");
  for (std::uint64_t value : minsup_abs)
    config.minsups.push_back(SupportThreshold::absolute(value));
  for (double value : minsup_rel) config.minsups.push_back(SupportThreshold::relative(value));
  if (config.minsups.empty())
    throw CLI::ValidationError("--minsup-abs/--minsup-rel", "at least one minSup required");

  std::vector<MetricsRecord> records = run_bench(db, config);

  auto csv_file = open_output(csv_path);
  write_csv(records, csv_file);
  if (!csv_file.flush()) throw IoError("failed writing " + csv_path);
  if (!report_path.empty()) {
    auto report_file = open_output(report_path);
    write_report_json(records, report_file);
    if (!report_file.flush()) throw IoError("failed writing " + report_path);
  }
  out << records.size() << " grid cells written to " << csv_path << "\n";
  return kExitOk;
}

int run_gen(std::uint64_t trans, std::uint32_t items, double mean_len, std::uint64_t seed,
            const std::string& output) {
  TransactionDB db = generate_synthetic(trans, items, mean_len, seed);
  auto out_file = open_output(output);
  write_fimi(db, out_file);
  if (!out_file.flush()) throw IoError("failed writing " + output);
  return kExitOk;
}

int run_verify(const std::string& input, const MinsupFlags& minsup, std::uint64_t fuzz,
               std::uint64_t seed, bool force, std::ostream& out, std::ostream& err) {
  if (!input.empty()) {
    const SupportThreshold threshold = minsup.threshold();
    TransactionDB db = load_fimi(input);
    const std::uint64_t minsup_abs = resolve_minsup(threshold, db.size());
    VerifyReport report = verify_instance(db, minsup_abs, force);
    if (!report.ok) {
      for (const std::string& issue : report.issues) err << "DIVERGENCE: " << issue << "\n";
      return kExitVerification;
    }
    out << "input verified: all 6 variants agree with the oracle (minSup=" << minsup_abs
        << ")\n";
  }
  if (fuzz > 0) {
    VerifyReport report = verify_fuzz(fuzz, seed);
    if (!report.ok) {
      for (const std::string& issue : report.issues) err << "DIVERGENCE: " << issue << "\n";
      return kExitVerification;
    }
    out << fuzz << " fuzz instances verified\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"frequent itemset mining with early-stopping intersection kernels"};
  app.require_subcommand(1);

  // mine
  auto* mine_cmd = app.add_subcommand("mine", "mine frequent itemsets from a FIMI file");
  std::string mine_input, mine_output, mine_metrics, mine_algo;
  bool mine_es = false;
  MinsupFlags mine_minsup;
  mine_cmd->add_option("--algo", mine_algo, "eclat | declat | prepost")->required();
  mine_cmd->add_flag("--es,!--no-es", mine_es, "use the early-stopping kernel");
  mine_cmd->add_option("--input", mine_input, "FIMI input file")->required();
  mine_cmd->add_option("--output", mine_output, "result file")->required();
  mine_cmd->add_option("--metrics", mine_metrics, "metrics JSON file");
  add_minsup_flags(mine_cmd, mine_minsup);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a scheme x minSup benchmark grid");
  std::string bench_input, bench_csv, bench_report, bench_name;
  std::vector<std::string> bench_algos = {"eclat", "declat", "prepost"};
  std::string bench_es_mode = "both";
  std::vector<std::uint64_t> bench_minsup_abs;
  std::vector<double> bench_minsup_rel;
  std::uint64_t bench_reps = 10;
  bench_cmd->add_option("--input", bench_input, "FIMI input file")->required();
  bench_cmd->add_option("--csv", bench_csv, "CSV output file")->required();
  bench_cmd->add_option("--report", bench_report, "JSON report file");
  bench_cmd->add_option("--dataset-name", bench_name, "dataset label (default: file name)");
  bench_cmd->add_option("--algos", bench_algos, "algorithms to run")->delimiter(',');
  bench_cmd->add_option("--es-mode", bench_es_mode, "std | es | both");
  bench_cmd->add_option("--minsup-abs", bench_minsup_abs, "absolute minSup values")
      ->delimiter(',');
  bench_cmd->add_option("--minsup-rel", bench_minsup_rel, "relative minSup values")
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench_reps, "repetitions per cell (default 10)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic FIMI file");
  std::uint64_t gen_trans = 0, gen_seed = 0;
  std::uint32_t gen_items = 0;
  double gen_mean_len = 0.0;
  std::string gen_output;
  gen_cmd->add_option("--trans", gen_trans, "number of transactions")->required();
  gen_cmd->add_option("--items", gen_items, "number of items")->required();
  gen_cmd->add_option("--mean-len", gen_mean_len, "mean transaction length")->required();
  gen_cmd->add_option("--seed", gen_seed, "random seed")->required();
  gen_cmd->add_option("--output", gen_output, "FIMI output file")->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "check all 6 variants against the brute-force oracle");
  std::string verify_input;
  MinsupFlags verify_minsup;
  std::uint64_t verify_fuzz_count = 0, verify_seed = 20240101;
  bool verify_force = false;
  verify_cmd->add_option("--input", verify_input, "FIMI input file");
  add_minsup_flags(verify_cmd, verify_minsup);
  verify_cmd->add_option("--fuzz", verify_fuzz_count, "also verify K random instances");
  verify_cmd->add_option("--seed", verify_seed, "fuzz seed");
  verify_cmd->add_flag("--force", verify_force, "override the 24-frequent-item guard");

  try {
    std::vector<const char*> argv;
    argv.push_back("fim");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (mine_cmd->parsed()) {
      if (!mine_minsup.has_abs && !mine_minsup.has_rel)
        throw CLI::RequiredError("--minsup-abs or --minsup-rel");
      return run_mine(mine_input, mine_output, mine_metrics, mine_algo, mine_es, mine_minsup,
                      err);
    }
    if (bench_cmd->parsed())
      return run_bench_cmd(bench_input, bench_csv, bench_report, bench_name, bench_algos,
                           bench_es_mode, bench_minsup_abs, bench_minsup_rel, bench_reps, out);
    if (gen_cmd->parsed()) return run_gen(gen_trans, gen_items, gen_mean_len, gen_seed,
                                          gen_output);
    if (verify_cmd->parsed()) {
      if (verify_input.empty() && verify_fuzz_count == 0)
        throw CLI::RequiredError("--input or --fuzz");
      if (!verify_input.empty() && !verify_minsup.has_abs && !verify_minsup.has_rel)
        throw CLI::RequiredError("--minsup-abs or --minsup-rel");
      return run_verify(verify_input, verify_minsup, verify_fuzz_count, verify_seed,
                        verify_force, out, err);
    }
    err << "no subcommand given\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fim::cli
