#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qxcorr/bignat.hpp"
#include "qxcorr/estimator.hpp"
#include "qxcorr/quantize.hpp"
#include "qxcorr/signalgen.hpp"

namespace qxcorr {

using LogFn = std::function<void(const std::string&)>;

// ---- timing comparison ----------------------------------------------------

enum class BenchMethod { integer_ks, integer_bf, real_fft, real_bf };

std::string_view to_string(BenchMethod method);

struct BenchConfig {
  int min_log2 = 6;
  int max_log2 = 14;
  std::vector<std::int32_t> k_values{1, 16};
  std::uint64_t seed = 1;
  bool include_real = true;
  MulBackend backend = MulBackend::ssa;
};

struct BenchRow {
  BenchMethod method = BenchMethod::integer_ks;
  std::size_t n = 0;
  std::optional<std::int32_t> k;  // empty for the real methods
  std::size_t trials = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
};

// max(16, 2^16 / n) timed trials, plus one discarded warm-up run.
std::size_t bench_trials(std::size_t n);

// Times only the correlation kernels on fresh random inputs per trial:
// integers uniform on {-K..K}, reals uniform on [-1, 1) in single precision.
// Rows per N: integer_ks and integer_bf for each K, then real_fft, real_bf.
// Throws ConfigError for an empty or non-positive range.
std::vector<BenchRow> run_bench(const BenchConfig& config, const LogFn& log = {});

inline constexpr std::string_view bench_csv_header = "method,N,K,trials,mean_seconds,stddev_seconds";
std::string bench_csv(const std::vector<BenchRow>& rows);

// Measured crossovers per K: the first N where integer_ks beats integer_bf and
// the N values where integer_ks beats real_fft / real_bf. One line per K.
std::string bench_summary(const std::vector<BenchRow>& rows);

// ---- accuracy versus SNR --------------------------------------------------

enum class AccuracyMode { proposed, proposed_until_line4, ccf_wo_quant };

std::string_view to_string(AccuracyMode mode);

struct AccuracyConfig {
  std::vector<double> snr_db{-10.0, -5.0, 0.0, 5.0, 10.0};
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  Quantizer quantizer = Quantizer::sign();
  std::size_t target_len = 2048;
  std::size_t scene_len = 8192;
  double sample_rate = 16000.0;
  TargetKind target_kind = TargetKind::am_bursts(0.01, 0.3);
  TargetKind background_kind = TargetKind::bandlimited(0.005, 0.3);
  Method int_method = Method::ks;
  Method real_method = Method::real_fft;
  // Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
  // Directory with target/*.wav and background/*.wav replacing the synthetic
  // signals. Scene length is then the background file length.
  std::optional<std::filesystem::path> wav_dir;
};

struct AccuracyRow {
  double snr_db = 0.0;
  std::string quantizer;
  AccuracyMode mode = AccuracyMode::proposed;
  std::size_t trials = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

// Per-SNR diagnostics of the quantized estimator, not part of the CSV.
struct TieBreakStats {
  double snr_db = 0.0;
  std::size_t trials = 0;
  std::size_t tie_break_ran = 0;
  std::size_t tie_break_changed = 0;  // refined lag set differs from the raw one
  std::size_t errors = 0;             // trials that threw, scored incorrect
};

struct AccuracyReport {
  std::vector<AccuracyRow> rows;
  std::vector<TieBreakStats> tie_breaks;
};

// Correct iff every estimated lag satisfies |lag - nu_true| < 1.
bool lags_correct(const std::vector<std::int64_t>& lags, double nu_true);

// Trial i uses seed derive_seed(config.seed, i) for its delay, target and
// background, shared across the SNR grid. Rows per SNR in mode order
// proposed, proposed_until_line4, ccf_wo_quant. Throws ConfigError.
AccuracyReport run_accuracy(const AccuracyConfig& config, const LogFn& log = {});

inline constexpr std::string_view accuracy_csv_header = "snr_db,quantizer,mode,trials,correct,accuracy";
std::string accuracy_csv(const std::vector<AccuracyRow>& rows);

}  // namespace qxcorr
