// qxcorr: time-difference estimation from quantized integer cross-correlation.
//
//   qxcorr estimate --ref A.wav --query B.wav [--quantizer sign|uniform:K:STEP] [--method ks|bf]
//   qxcorr bench --min-log2 6 --max-log2 14 --k 1,16 --out bench.csv
//   qxcorr simulate --snr-list -10,-5,0,5,10 --trials 200 --seed 1 --quantizer sign --out acc.csv
//   qxcorr selftest

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qxcorr/error.hpp"
#include "qxcorr/estimator.hpp"
#include "qxcorr/harness.hpp"
#include "qxcorr/selftest.hpp"
#include "qxcorr/wav.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_degenerate = 3;

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream field(item);
    T value{};
    if (!(field >> value) || !(field >> std::ws).eof()) {
      throw qxcorr::ConfigError(std::string("bad ") + what + " entry '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw qxcorr::ConfigError(std::string("empty ") + what + " list");
  return out;
}

void check_output_path(const fs::path& out, bool force) {
  if (fs::exists(out) && !force) {
    throw qxcorr::ConfigError(out.string() + " already exists; pass --force to overwrite");
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw qxcorr::ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw qxcorr::ConfigError("short write to " + path.string());
}

unsigned threads_from_env() {
  const char* env = std::getenv("QXCORR_THREADS");
  if (!env || !*env) return 0;
  try {
    const long v = std::stol(env);
    if (v > 0) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring QXCORR_THREADS='" << env << "'\n";
  return 0;
}

void log_line(const std::string& line) { std::cerr << line << '\n'; }

struct EstimateArgs {
  std::string ref;
  std::string query;
  std::string quantizer = "sign";
  std::string method = "ks";
  bool until_line_4 = false;
  std::optional<double> sample_rate;
};

int cmd_estimate(const EstimateArgs& args) {
  const auto quantizer = qxcorr::Quantizer::parse(args.quantizer);
  qxcorr::EstimateOptions options;
  options.method = qxcorr::parse_method(args.method);
  if (options.method != qxcorr::Method::ks && options.method != qxcorr::Method::bf) {
    throw qxcorr::ConfigError("--method must be ks or bf");
  }
  options.until_line_4 = args.until_line_4;
  const auto x = qxcorr::load_signal(args.ref);
  const auto y = qxcorr::load_signal(args.query);

  const auto t0 = std::chrono::steady_clock::now();
  const auto result = qxcorr::estimate(x, y, quantizer, quantizer, options);
  const auto t1 = std::chrono::steady_clock::now();

  json out;
  out["lags"] = result.lags;
  out["peak_value_int"] = result.peak_value_int;
  out["tie_broken"] = result.tie_broken;
  out["method"] = std::string(qxcorr::to_string(result.method));
  out["elapsed_seconds"] = std::chrono::duration<double>(t1 - t0).count();
  if (args.sample_rate) {
    json seconds = json::array();
    for (auto lag : result.lags) seconds.push_back(static_cast<double>(lag) / *args.sample_rate);
    out["lags_seconds"] = seconds;
  }
  std::cout << out.dump() << '\n';
  return exit_ok;
}

struct BenchArgs {
  int min_log2 = 6;
  int max_log2 = 14;
  std::string k_list = "1,16";
  std::string out;
  std::uint64_t seed = 1;
  std::string backend = "ssa";
  bool no_real = false;
  bool force = false;
};

int cmd_bench(const BenchArgs& args) {
  qxcorr::BenchConfig config;
  config.min_log2 = args.min_log2;
  config.max_log2 = args.max_log2;
  config.k_values = parse_list<std::int32_t>(args.k_list, "--k");
  config.seed = args.seed;
  config.include_real = !args.no_real;
  try {
    config.backend = qxcorr::parse_mul_backend(args.backend);
  } catch (const std::invalid_argument& e) {
    throw qxcorr::ConfigError(e.what());
  }
  const fs::path out(args.out);
  check_output_path(out, args.force);

  const auto rows = qxcorr::run_bench(config, log_line);
  write_text(out, qxcorr::bench_csv(rows));

  json meta;
  meta["big_mul"] = std::string(qxcorr::to_string(config.backend));
  meta["real_precision"] = "float32";
  meta["real_fft"] = "complex radix-2 Cooley-Tukey, both real inputs packed into one complex transform";
  meta["seed"] = config.seed;
  write_text(fs::path(args.out + ".meta.json"), meta.dump(2) + "\n");

  std::cerr << qxcorr::bench_summary(rows);
  std::cerr << "wrote " << rows.size() << " rows to " << out.string() << '\n';
  return exit_ok;
}

struct SimulateArgs {
  std::string snr_list = "-10,-5,0,5,10";
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::string quantizer = "sign";
  std::string out;
  std::string wav_dir;
  std::string method = "ks";
  bool small = false;
  bool force = false;
};

int cmd_simulate(const SimulateArgs& args) {
  qxcorr::AccuracyConfig config;
  config.snr_db = parse_list<double>(args.snr_list, "--snr-list");
  config.trials = args.trials;
  config.seed = args.seed;
  config.quantizer = qxcorr::Quantizer::parse(args.quantizer);
  config.int_method = qxcorr::parse_method(args.method);
  if (args.small) {
    config.target_len = 2048;
    config.scene_len = 8192;
  } else {
    config.target_len = 16000;
    config.scene_len = 80000;
  }
  if (!args.wav_dir.empty()) config.wav_dir = fs::path(args.wav_dir);
  config.threads = threads_from_env();
  const fs::path out(args.out);
  check_output_path(out, args.force);

  const auto report = qxcorr::run_accuracy(config, log_line);
  write_text(out, qxcorr::accuracy_csv(report.rows));

  for (const auto& row : report.rows) {
    std::cerr << "snr " << row.snr_db << " dB  " << qxcorr::to_string(row.mode) << ": " << row.correct << "/"
              << row.trials << '\n';
  }
  for (const auto& t : report.tie_breaks) {
    std::cerr << "snr " << t.snr_db << " dB  tie-break ran " << t.tie_break_ran << ", changed " << t.tie_break_changed
              << ", errors " << t.errors << '\n';
  }
  std::cerr << "wrote " << report.rows.size() << " rows to " << out.string() << '\n';
  return exit_ok;
}

int cmd_selftest(std::uint64_t seed) {
  qxcorr::SelftestConfig config;
  config.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = qxcorr::run_selftest(config);
  const auto t1 = std::chrono::steady_clock::now();
  std::cout << qxcorr::format_selftest(results);
  std::cerr << "selftest took " << std::chrono::duration<double>(t1 - t0).count() << " s\n";
  for (const auto& r : results) {
    if (!r.ok()) return exit_failure;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-difference estimation from quantized integer cross-correlation"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Estimate the lag between two signals (JSON on stdout)");
  estimate->add_option("--ref", est.ref, "Reference signal x (.wav PCM16 mono, otherwise raw float32 LE)")->required();
  estimate->add_option("--query", est.query, "Query signal y")->required();
  estimate->add_option("--quantizer", est.quantizer, "sign | uniform:K:STEP")->capture_default_str();
  estimate->add_option("--method", est.method, "ks | bf")->capture_default_str();
  estimate->add_flag("--until-line-4", est.until_line_4, "Skip the unquantized tie-break");
  estimate->add_option("--sample-rate", est.sample_rate, "Adds lags_seconds to the output");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the four correlation kernels (CSV)");
  bench_cmd->add_option("--min-log2", bench.min_log2)->capture_default_str();
  bench_cmd->add_option("--max-log2", bench.max_log2)->capture_default_str();
  bench_cmd->add_option("--k", bench.k_list, "Comma-separated K values")->capture_default_str();
  bench_cmd->add_option("--out", bench.out)->required();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--backend", bench.backend, "ssa | karatsuba | schoolbook")->capture_default_str();
  bench_cmd->add_flag("--no-real", bench.no_real, "Skip real_fft and real_bf");
  bench_cmd->add_flag("--force", bench.force, "Overwrite --out");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Accuracy versus SNR (CSV)");
  simulate->add_option("--snr-list", sim.snr_list, "Comma-separated SNRs in dB")->capture_default_str();
  simulate->add_option("--trials", sim.trials)->capture_default_str();
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--quantizer", sim.quantizer)->capture_default_str();
  simulate->add_option("--out", sim.out)->required();
  simulate->add_option("--wav-dir", sim.wav_dir, "Directory with target/*.wav and background/*.wav");
  simulate->add_option("--method", sim.method, "ks | bf")->capture_default_str();
  simulate->add_flag("--small", sim.small, "2048-sample target in an 8192-sample scene");
  simulate->add_flag("--force", sim.force, "Overwrite --out");

  std::uint64_t selftest_seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run the fast invariant suites");
  selftest->add_option("--seed", selftest_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*estimate) return cmd_estimate(est);
    if (*bench_cmd) return cmd_bench(bench);
    if (*simulate) return cmd_simulate(sim);
    if (*selftest) return cmd_selftest(selftest_seed);
  } catch (const qxcorr::DegenerateQuantization& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_degenerate;
  } catch (const qxcorr::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const qxcorr::UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const qxcorr::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}
