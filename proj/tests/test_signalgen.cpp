#include <doctest.h>

#include <qxcorr/error.hpp>
#include <qxcorr/estimator.hpp>
#include <qxcorr/fft.hpp>
#include <qxcorr/signalgen.hpp>

#include <cmath>
#include <complex>
#include <numbers>

using namespace qxcorr;

namespace {

double band_fraction(const Signal& s, double low, double high) {
  std::vector<std::complex<double>> c(next_pow2(s.len()));
  for (std::size_t i = 0; i < s.len(); ++i) c[i] = s.samples()[i];
  fft(c, false);
  double in = 0.0, total = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double f = std::min(k, c.size() - k) / static_cast<double>(c.size());
    total += std::norm(c[k]);
    if (f >= low && f <= high) in += std::norm(c[k]);
  }
  return in / total;
}

double energy(const Signal& s) {
  double e = 0.0;
  for (double v : s.samples()) e += v * v;
  return e;
}

}  // namespace

TEST_CASE("white target statistics") {
  const auto s = gen_target(3, 4096, TargetKind::white());
  CHECK(s.len() == 4096);
  double mean = 0.0;
  for (double v : s.samples()) mean += v;
  mean /= 4096.0;
  CHECK(std::abs(mean) < 5.0 / std::sqrt(4096.0));
  CHECK(energy(s) / 4096.0 == doctest::Approx(1.0).epsilon(0.1));
  CHECK(gen_target(3, 4096, TargetKind::white()) == s);
  CHECK_FALSE(gen_target(4, 4096, TargetKind::white()) == s);
}

TEST_CASE("band-limited targets keep their energy in band") {
  for (auto kind : {TargetKind::bandlimited(0.02, 0.2), TargetKind::bandlimited(0.005, 0.3)}) {
    const auto s = gen_target(8, 4096, kind);
    CHECK(band_fraction(s, kind.low, kind.high) >= 0.95);
    CHECK(energy(s) / 4096.0 == doctest::Approx(1.0).epsilon(1e-9));
  }
  const auto am = gen_target(8, 4096, TargetKind::am_bursts(0.01, 0.3));
  CHECK(band_fraction(am, 0.0, 0.32) >= 0.95);
}

TEST_CASE("sinc shift of a sinusoid") {
  const double f = 0.1;
  std::vector<double> v(1024);
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = std::sin(2 * std::numbers::pi * f * static_cast<double>(n));
  const Signal s(0, v);
  const double d = 0.25;
  const auto t = sinc_shift(s, d);
  CHECK(t.start() == -64);
  for (std::int64_t n = 200; n < 800; ++n) {
    CHECK(std::abs(t[n] - std::sin(2 * std::numbers::pi * f * (static_cast<double>(n) + d))) < 1e-3);
  }
}

TEST_CASE("sinc shift round trip on a band-limited signal") {
  auto s = gen_target(5, 2048, TargetKind::bandlimited(0.01, 0.3));
  std::vector<double> v(s.samples().begin(), s.samples().end());
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double edge = std::min<double>(static_cast<double>(n), static_cast<double>(v.size() - 1 - n));
    if (edge < 256) v[n] *= 0.5 - 0.5 * std::cos(std::numbers::pi * edge / 256.0);
  }
  s = Signal(0, v);
  const auto back = sinc_shift(sinc_shift(s, 0.37), -0.37);
  double worst = 0.0;
  for (std::int64_t n = 0; n < 2048; ++n) worst = std::max(worst, std::abs(back[n] - s[n]));
  CHECK(worst <= 1e-3);
}

TEST_CASE("integer sinc shift is exact") {
  const auto s = gen_target(1, 300, TargetKind::white());
  CHECK(sinc_shift(s, 5.0) == shift(s, 5));
  CHECK(sinc_shift(s, -17.0) == shift(s, -17));
}

TEST_CASE("mixing hits the requested SNR") {
  const auto t = gen_target(1, 2048, TargetKind::white());
  const auto b = gen_target(2, 8192, TargetKind::bandlimited(0.005, 0.3));
  for (double snr : {-10.0, 0.0, 7.5}) {
    const double g = snr_gain(t, b, snr);
    const double pt = energy(t) / 2048.0;
    const double pb = g * g * energy(b) / 8192.0;
    CHECK(std::abs(10.0 * std::log10(pt / pb) - snr) < 1e-9);
  }
  CHECK_THROWS_AS(snr_gain(Signal(0, {0.0}), b, 0.0), DegenerateInput);
}

TEST_CASE("trials place the target at the true delay") {
  const auto bg = gen_target(2, 8192, TargetKind::bandlimited(0.005, 0.3));
  TrialSpec spec;
  spec.seed = 10;
  spec.true_delay = 1234.0;
  spec.snr_db = 40.0;
  const auto trial = make_trial(spec, bg);
  CHECK(trial.x.start() == 0);
  CHECK(trial.x.len() == 8192);
  CHECK(trial.y.len() == 2048);
  CHECK(trial.nu_true == -1234.0);
  // At high SNR the scene around the delay is close to the target.
  double err = 0.0;
  for (std::int64_t n = 0; n < 2048; ++n) err = std::max(err, std::abs(trial.x[n + 1234] - trial.y[n]));
  CHECK(err < 0.1);
  CHECK(make_trial(spec, bg).x == trial.x);
}

TEST_CASE("half-sample round trip in relative l2") {
  const auto s = gen_target(6, 4096, TargetKind::bandlimited(0.02, 0.2));
  const auto back = sinc_shift(sinc_shift(s, 0.5), -0.5);
  double err = 0.0, ref = 0.0;
  // Zero extension corrupts the first and last W samples; compare the interior.
  for (std::int64_t n = 128; n < 4096 - 128; ++n) {
    err += (back[n] - s[n]) * (back[n] - s[n]);
    ref += s[n] * s[n];
  }
  CHECK(std::sqrt(err / ref) <= 1e-3);
}

TEST_CASE("gain worked examples") {
  const auto t = gen_target(1, 1000, TargetKind::white());
  const auto b = gen_target(2, 1000, TargetKind::white());
  CHECK(snr_gain(t, b, 0.0) == doctest::Approx(l2_norm(t) / l2_norm(b)).epsilon(1e-12));
  CHECK(snr_gain(scale(t, 2.0), b, 3.0) == doctest::Approx(2.0 * snr_gain(t, b, 3.0)).epsilon(1e-12));
  CHECK(snr_gain(t, b, 120.0) * l2_norm(b) <= 1e-6 * l2_norm(t) * (1 + 1e-12));  // equality up to rounding
  const auto mixed = mix_at_snr(t, b, 120.0);
  for (std::int64_t n = 0; n < 1000; ++n) CHECK(std::abs(mixed[n] - t[n]) < 1e-5);
}

TEST_CASE("near noise-free trials recover the delay") {
  const auto bg = gen_target(3, 8192, TargetKind::bandlimited(0.005, 0.3));
  for (double delay : {0.0, 17.0, 6000.0}) {
    TrialSpec spec;
    spec.seed = 4;
    spec.true_delay = delay;
    spec.snr_db = 120.0;
    const auto trial = make_trial(spec, bg);
    const auto sign = Quantizer::sign();
    CHECK(estimate(trial.x, trial.y, sign, sign).lags == std::vector<std::int64_t>{static_cast<std::int64_t>(-delay)});
    if (delay == 0.0) CHECK(std::abs(trial.x[0] - trial.y[0]) < 1e-5);
  }
}
