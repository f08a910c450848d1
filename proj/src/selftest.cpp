#include "qxcorr/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qxcorr/estimator.hpp"
#include "qxcorr/fixtures.hpp"
#include "qxcorr/intxcorr.hpp"
#include "qxcorr/realxcorr.hpp"
#include "qxcorr/rng.hpp"

namespace qxcorr {

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  std::vector<SuiteResult> results;

  SuiteResult peak{"peak_invariance", config.peak_invariance_cases, 0};
  for (std::size_t i = 0; i < peak.cases; ++i) {
    const ShiftedPair p = random_shifted_pair(derive_seed(config.seed, i));
    const auto lags = argmax_set(xcorr_int_ks(apply(p.phi, p.x), apply(p.psi, p.y)));
    peak.passed += std::find(lags.begin(), lags.end(), p.nu) != lags.end();
  }
  results.push_back(peak);

  SuiteResult ks{"ks_vs_bf", config.ks_vs_bf_cases, 0};
  Rng ks_rng(derive_seed(config.seed, 0x6b73));
  for (std::size_t i = 0; i < ks.cases; ++i) {
    const auto bound = static_cast<std::int32_t>(ks_rng.uniform_int(1, 16));
    const auto pattern = static_cast<IntPattern>(i % 3);
    IntSignal u, v;
    do {
      u = random_int_signal(ks_rng, static_cast<std::size_t>(ks_rng.uniform_int(1, 512)), bound, pattern);
      v = random_int_signal(ks_rng, static_cast<std::size_t>(ks_rng.uniform_int(1, 512)), bound, pattern);
    } while (u.is_zero() || v.is_zero());
    ks.passed += xcorr_int_ks(u, v) == xcorr_int_bf(u, v);
  }
  results.push_back(ks);

  SuiteResult fft{"fft_vs_bf", config.fft_vs_bf_cases, 0};
  Rng fft_rng(derive_seed(config.seed, 0x666674));
  for (std::size_t i = 0; i < fft.cases; ++i) {
    auto random_signal = [&] {
      std::vector<double> s(static_cast<std::size_t>(fft_rng.uniform_int(1, 4096)));
      for (auto& v : s) v = fft_rng.uniform(-1.0, 1.0);
      return Signal(fft_rng.uniform_int(-100, 100), std::move(s));
    };
    const Signal x = random_signal();
    const Signal y = random_signal();
    const auto a = xcorr_real_fft(x, y);
    const auto b = xcorr_real_bf(x, y);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
    fft.passed += a.first_lag == b.first_lag && worst <= 1e-9 * l2_norm(x) * l2_norm(y);
  }
  results.push_back(fft);
  return results;
}

std::string format_selftest(const std::vector<SuiteResult>& results) {
  std::string out = "suite            passed/cases  status\n";
  char line[128];
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-16s %6zu/%-6zu  %s\n", r.name.c_str(), r.passed, r.cases, r.ok() ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

}  // namespace qxcorr
