#include "qxcorr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "qxcorr/error.hpp"
#include "qxcorr/fixtures.hpp"
#include "qxcorr/intxcorr.hpp"
#include "qxcorr/realxcorr.hpp"
#include "qxcorr/rng.hpp"
#include "qxcorr/wav.hpp"

namespace qxcorr {

namespace {

// Keeps a kernel result observable so the timed call cannot be elided.
template <class T>
void keep(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

struct Timing {
  double mean = 0.0;
  double stddev = 0.0;
};

// Runs trials + 1 times, discards the first, returns mean and sample stddev.
// `prepare` builds fresh inputs outside the clock, `kernel` is timed.
template <class Prepare, class Kernel>
Timing time_trials(std::size_t trials, Prepare&& prepare, Kernel&& kernel) {
  std::vector<double> seconds;
  seconds.reserve(trials);
  for (std::size_t t = 0; t <= trials; ++t) {
    prepare();
    const auto t0 = std::chrono::steady_clock::now();
    kernel();
    const auto t1 = std::chrono::steady_clock::now();
    if (t > 0) seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  Timing out;
  for (double s : seconds) out.mean += s;
  out.mean /= static_cast<double>(seconds.size());
  if (seconds.size() > 1) {
    double var = 0.0;
    for (double s : seconds) var += (s - out.mean) * (s - out.mean);
    out.stddev = std::sqrt(var / static_cast<double>(seconds.size() - 1));
  }
  return out;
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::string_view to_string(BenchMethod method) {
  switch (method) {
    case BenchMethod::integer_ks:
      return "integer_ks";
    case BenchMethod::integer_bf:
      return "integer_bf";
    case BenchMethod::real_fft:
      return "real_fft";
    case BenchMethod::real_bf:
      return "real_bf";
  }
  return "unknown";
}

std::size_t bench_trials(std::size_t n) { return std::max<std::size_t>(16, 65536 / n); }

std::vector<BenchRow> run_bench(const BenchConfig& config, const LogFn& log) {
  if (config.min_log2 < 1 || config.max_log2 < config.min_log2 || config.max_log2 > 24) {
    throw ConfigError("bench range must satisfy 1 <= min_log2 <= max_log2 <= 24");
  }
  if (config.k_values.empty()) throw ConfigError("bench needs at least one K");
  for (auto k : config.k_values) {
    if (k < 1) throw ConfigError("bench K values must be >= 1");
  }

  Rng rng(config.seed);
  std::vector<BenchRow> rows;
  auto record = [&](BenchMethod method, std::size_t n, std::optional<std::int32_t> k, std::size_t trials, Timing t) {
    rows.push_back({method, n, k, trials, t.mean, t.stddev});
    if (log) {
      log(std::string(to_string(method)) + " N=" + std::to_string(n) + (k ? " K=" + std::to_string(*k) : "") +
          " mean=" + format_double("%.3e", t.mean) + "s");
    }
  };

  for (int e = config.min_log2; e <= config.max_log2; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const std::size_t trials = bench_trials(n);

    for (BenchMethod method : {BenchMethod::integer_ks, BenchMethod::integer_bf}) {
      for (auto k : config.k_values) {
        IntSignal u, v;
        auto prepare = [&] {
          do {
            u = random_int_signal(rng, n, k, IntPattern::uniform);
            v = random_int_signal(rng, n, k, IntPattern::uniform);
          } while (u.is_zero() || v.is_zero());
        };
        Timing t;
        if (method == BenchMethod::integer_ks) {
          t = time_trials(trials, prepare, [&] { keep(xcorr_int_ks(u, v, config.backend)); });
        } else {
          t = time_trials(trials, prepare, [&] { keep(xcorr_int_bf(u, v)); });
        }
        record(method, n, k, trials, t);
      }
    }

    if (!config.include_real) continue;
    std::vector<float> x(n), y(n), out(2 * n - 1);
    auto prepare = [&] {
      for (auto& s : x) s = static_cast<float>(rng.uniform(-1.0, 1.0));
      for (auto& s : y) s = static_cast<float>(rng.uniform(-1.0, 1.0));
    };
    FftCorrelator<float> correlator(n, n);  // planning stays outside the clock
    record(BenchMethod::real_fft, n, std::nullopt, trials, time_trials(trials, prepare, [&] {
             correlator.run(x, y, out);
             keep(out.front());
           }));
    record(BenchMethod::real_bf, n, std::nullopt, trials, time_trials(trials, prepare, [&] {
             xcorr_bf_kernel<float>(x, y, out);
             keep(out.front());
           }));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out(bench_csv_header);
  out += '\n';
  for (const auto& r : rows) {
    out += std::string(to_string(r.method)) + ',' + std::to_string(r.n) + ',' + (r.k ? std::to_string(*r.k) : "") + ',' +
           std::to_string(r.trials) + ',' + format_double("%.9e", r.mean_seconds) + ',' +
           format_double("%.9e", r.stddev_seconds) + '\n';
  }
  return out;
}

std::string bench_summary(const std::vector<BenchRow>& rows) {
  auto mean_of = [&](BenchMethod m, std::size_t n, std::optional<std::int32_t> k) -> std::optional<double> {
    for (const auto& r : rows) {
      if (r.method == m && r.n == n && r.k == k) return r.mean_seconds;
    }
    return std::nullopt;
  };
  std::vector<std::int32_t> ks;
  std::vector<std::size_t> ns;
  for (const auto& r : rows) {
    if (r.k && std::find(ks.begin(), ks.end(), *r.k) == ks.end()) ks.push_back(*r.k);
    if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) ns.push_back(r.n);
  }
  std::string out;
  for (auto k : ks) {
    std::string beats_bf = "none", beats_fft, beats_real_bf;
    for (auto n : ns) {
      auto ks_t = mean_of(BenchMethod::integer_ks, n, k);
      if (!ks_t) continue;
      auto bf_t = mean_of(BenchMethod::integer_bf, n, k);
      if (bf_t && *ks_t < *bf_t && beats_bf == "none") beats_bf = std::to_string(n);
      auto fft_t = mean_of(BenchMethod::real_fft, n, std::nullopt);
      if (fft_t && *ks_t < *fft_t) beats_fft += (beats_fft.empty() ? "" : " ") + std::to_string(n);
      auto rbf_t = mean_of(BenchMethod::real_bf, n, std::nullopt);
      if (rbf_t && *ks_t < *rbf_t) beats_real_bf += (beats_real_bf.empty() ? "" : " ") + std::to_string(n);
    }
    out += "K=" + std::to_string(k) + ": integer_ks first beats integer_bf at N=" + beats_bf +
           "; beats real_fft at N={" + beats_fft + "}; beats real_bf at N={" + beats_real_bf + "}\n";
  }
  return out;
}

std::string_view to_string(AccuracyMode mode) {
  switch (mode) {
    case AccuracyMode::proposed:
      return "proposed";
    case AccuracyMode::proposed_until_line4:
      return "proposed_until_line4";
    case AccuracyMode::ccf_wo_quant:
      return "ccf_wo_quant";
  }
  return "unknown";
}

bool lags_correct(const std::vector<std::int64_t>& lags, double nu_true) {
  if (lags.empty()) return false;
  return std::all_of(lags.begin(), lags.end(),
                     [&](std::int64_t lag) { return std::abs(static_cast<double>(lag) - nu_true) < 1.0; });
}

namespace {

constexpr std::size_t mode_count = 3;

struct Outcome {
  bool correct[mode_count] = {false, false, false};
  bool tie_ran = false;
  bool tie_changed = false;
  bool error = false;
};

std::vector<Signal> load_wav_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("missing directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (entry.is_regular_file() && ext == ".wav") files.push_back(entry.path());
  }
  if (files.empty()) throw ConfigError("no .wav files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<Signal> out;
  for (const auto& f : files) out.push_back(load_wav(f));
  return out;
}

}  // namespace

AccuracyReport run_accuracy(const AccuracyConfig& config, const LogFn& log) {
  if (config.trials == 0) throw ConfigError("accuracy run needs at least one trial");
  if (config.snr_db.empty()) throw ConfigError("accuracy run needs at least one SNR");
  if (config.int_method != Method::ks && config.int_method != Method::bf) {
    throw ConfigError("quantized estimator method must be ks or bf");
  }
  if (config.real_method != Method::real_bf && config.real_method != Method::real_fft) {
    throw ConfigError("baseline method must be real_bf or real_fft");
  }
  std::vector<Signal> wav_targets, wav_backgrounds;
  if (config.wav_dir) {
    wav_targets = load_wav_dir(*config.wav_dir / "target");
    wav_backgrounds = load_wav_dir(*config.wav_dir / "background");
  } else if (config.target_len == 0 || config.scene_len < config.target_len) {
    throw ConfigError("accuracy run needs 1 <= target_len <= scene_len");
  }

  const std::size_t snrs = config.snr_db.size();
  std::vector<Outcome> outcomes(config.trials * snrs);
  std::vector<std::string> messages(config.trials);

  auto run_trial = [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(config.seed, i);
    Rng rng(trial_seed);
    try {
      Signal target, background;
      if (config.wav_dir) {
        target = wav_targets[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(wav_targets.size()) - 1))];
        background = wav_backgrounds[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(wav_backgrounds.size()) - 1))];
      } else {
        target = gen_target(derive_seed(trial_seed, 1), config.target_len, config.target_kind);
        background = gen_target(derive_seed(trial_seed, 2), config.scene_len, config.background_kind);
      }
      TrialSpec spec;
      spec.seed = trial_seed;
      spec.target_len = target.len();
      spec.scene_len = background.len();
      spec.sample_rate = config.sample_rate;
      if (spec.scene_len < spec.target_len) throw ConfigError("background shorter than target");
      spec.true_delay = rng.uniform(0.0, static_cast<double>(spec.scene_len - spec.target_len));

      for (std::size_t s = 0; s < snrs; ++s) {
        Outcome& o = outcomes[i * snrs + s];
        try {
          spec.snr_db = config.snr_db[s];
          const Trial trial = make_trial(spec, target, background);
          EstimateOptions options;
          options.method = config.int_method;
          const EstimationResult est = estimate(trial.x, trial.y, config.quantizer, config.quantizer, options);
          o.correct[0] = lags_correct(est.lags, trial.nu_true);
          o.correct[1] = lags_correct(est.candidates, trial.nu_true);
          o.tie_ran = est.tie_broken;
          o.tie_changed = est.lags != est.candidates;
          o.correct[2] = lags_correct(estimate_real(trial.x, trial.y, config.real_method).lags, trial.nu_true);
        } catch (const std::exception& e) {
          o.error = true;
          messages[i] += "trial " + std::to_string(i) + " snr " + format_double("%g", config.snr_db[s]) + ": " + e.what() + "\n";
        }
      }
    } catch (const std::exception& e) {
      for (std::size_t s = 0; s < snrs; ++s) outcomes[i * snrs + s].error = true;
      messages[i] = "trial " + std::to_string(i) + ": " + e.what() + "\n";
    }
  };

  unsigned workers = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.trials));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < config.trials;) run_trial(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (log) {
    for (const auto& m : messages) {
      if (!m.empty()) log(m.substr(0, m.size() - 1));
    }
  }

  AccuracyReport report;
  const std::string qname = config.quantizer.to_string();
  for (std::size_t s = 0; s < snrs; ++s) {
    std::size_t correct[mode_count] = {0, 0, 0};
    TieBreakStats stats;
    stats.snr_db = config.snr_db[s];
    stats.trials = config.trials;
    for (std::size_t i = 0; i < config.trials; ++i) {
      const Outcome& o = outcomes[i * snrs + s];
      for (std::size_t m = 0; m < mode_count; ++m) correct[m] += o.correct[m];
      stats.tie_break_ran += o.tie_ran;
      stats.tie_break_changed += o.tie_changed;
      stats.errors += o.error;
    }
    for (std::size_t m = 0; m < mode_count; ++m) {
      report.rows.push_back({config.snr_db[s], qname, static_cast<AccuracyMode>(m), config.trials, correct[m],
                             static_cast<double>(correct[m]) / static_cast<double>(config.trials)});
    }
    report.tie_breaks.push_back(stats);
  }
  return report;
}

std::string accuracy_csv(const std::vector<AccuracyRow>& rows) {
  std::string out(accuracy_csv_header);
  out += '\n';
  for (const auto& r : rows) {
    out += format_double("%g", r.snr_db) + ',' + r.quantizer + ',' + std::string(to_string(r.mode)) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(r.correct) + ',' + format_double("%.6f", r.accuracy) + '\n';
  }
  return out;
}

}  // namespace qxcorr
