#include "qxcorr/signalgen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qxcorr/error.hpp"
#include "qxcorr/fft.hpp"
#include "qxcorr/rng.hpp"

namespace qxcorr {

std::string TargetKind::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::white:
      return "white";
    case Family::bandlimited:
      out << "bandlimited(" << low << "," << high << ")";
      break;
    case Family::am_bursts:
      out << "am_bursts(" << low << "," << high << ")";
      break;
  }
  return out.str();
}

namespace {

void normalize_rms(std::vector<double>& v) {
  double energy = 0.0;
  for (double s : v) energy += s * s;
  if (energy == 0.0) return;
  const double scale = std::sqrt(static_cast<double>(v.size()) / energy);
  for (double& s : v) s *= scale;
}

// White noise filtered to |f| in [low, high] with an ideal mask on a
// power-of-two circular grid, then truncated to len.
std::vector<double> bandlimited_noise(Rng& rng, std::size_t len, double low, double high) {
  if (!(low >= 0.0 && low < high && high <= 0.5)) {
    throw std::invalid_argument("band must satisfy 0 <= low < high <= 0.5");
  }
  const std::size_t m = next_pow2(len);
  std::vector<std::complex<double>> bins(m);
  for (auto& c : bins) c = {rng.normal(), 0.0};
  FftPlan<double> plan(m);
  plan.forward(bins);
  std::size_t kept = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double f = static_cast<double>(std::min(k, m - k)) / static_cast<double>(m);
    if (f < low || f > high) {
      bins[k] = 0.0;
    } else {
      ++kept;
    }
  }
  if (kept == 0) throw std::invalid_argument("band contains no DFT bins at this length");
  plan.inverse(bins);
  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = bins[i].real();
  normalize_rms(out);
  return out;
}

std::vector<double> burst_envelope(Rng& rng, std::size_t len) {
  std::vector<double> env(len, 0.02);
  const std::size_t bursts = std::max<std::size_t>(2, len / 1024);
  const double n = static_cast<double>(len);
  for (std::size_t b = 0; b < bursts; ++b) {
    const double center = rng.uniform(0.0, n);
    const double half = rng.uniform(n / 32.0, n / 8.0) + 1.0;
    const double amp = rng.uniform(0.2, 1.0);
    const auto lo = static_cast<std::size_t>(std::max(0.0, std::ceil(center - half)));
    const auto hi = static_cast<std::size_t>(std::min(n - 1.0, std::floor(center + half)));
    for (std::size_t i = lo; i <= hi && i < len; ++i) {
      const double t = (static_cast<double>(i) - center) / half;
      env[i] += amp * 0.5 * (1.0 + std::cos(std::numbers::pi * t));
    }
  }
  return env;
}

double hann_sinc(double t, int half_width) {
  const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * t / half_width));
  if (t == 0.0) return w;
  const double pt = std::numbers::pi * t;
  return w * std::sin(pt) / pt;
}

}  // namespace

Signal gen_target(std::uint64_t seed, std::size_t len, const TargetKind& kind) {
  if (len == 0) throw std::invalid_argument("gen_target needs len >= 1");
  Rng rng(seed);
  std::vector<double> out;
  switch (kind.family) {
    case TargetKind::Family::white:
      out.resize(len);
      for (double& v : out) v = rng.normal();
      break;
    case TargetKind::Family::bandlimited:
      out = bandlimited_noise(rng, len, kind.low, kind.high);
      break;
    case TargetKind::Family::am_bursts: {
      out = bandlimited_noise(rng, len, kind.low, kind.high);
      const auto env = burst_envelope(rng, len);
      for (std::size_t i = 0; i < len; ++i) out[i] *= env[i];
      normalize_rms(out);
      break;
    }
  }
  return Signal(0, std::move(out));
}

Signal sinc_shift(const Signal& s, double d, int half_width) {
  if (half_width < 1) throw std::invalid_argument("sinc half-width must be >= 1");
  const double whole = std::floor(d);
  const auto k = static_cast<std::int64_t>(whole);
  const double frac = d - whole;
  if (frac == 0.0) return shift(s, k);

  // s'[n] = sum_q h[q] s[n + k - q], tap q at kernel position q + frac.
  const int w = half_width;
  std::vector<double> taps(static_cast<std::size_t>(2 * w));
  double tap_sum = 0.0;
  for (int q = -w; q < w; ++q) {
    taps[static_cast<std::size_t>(q + w)] = hann_sinc(q + frac, w);
    tap_sum += taps[static_cast<std::size_t>(q + w)];
  }
  // Unit DC gain.
  for (double& t : taps) t /= tap_sum;

  const std::int64_t out_start = s.start() - k - w;
  const std::size_t out_len = s.len() + static_cast<std::size_t>(2 * w) - 1;
  std::vector<double> out(out_len, 0.0);
  const auto src = s.samples();
  for (std::size_t i = 0; i < out_len; ++i) {
    const std::int64_t n = out_start + static_cast<std::int64_t>(i);
    double acc = 0.0;
    for (int q = -w; q < w; ++q) {
      const std::int64_t j = n + k - q - s.start();
      if (j < 0 || j >= static_cast<std::int64_t>(src.size())) continue;
      acc += taps[static_cast<std::size_t>(q + w)] * src[static_cast<std::size_t>(j)];
    }
    out[i] = acc;
  }
  return Signal(out_start, std::move(out));
}

double snr_gain(const Signal& target, const Signal& background, double snr_db) {
  const double et = l2_norm(target);
  const double eb = l2_norm(background);
  if (et == 0.0 || eb == 0.0) throw DegenerateInput("SNR mixing needs a nonzero target and background");
  const double power_t = et * et / static_cast<double>(target.len());
  const double power_b = eb * eb / static_cast<double>(background.len());
  return std::sqrt(power_t / (power_b * std::pow(10.0, snr_db / 10.0)));
}

Signal add_scaled(const Signal& a, const Signal& b, double gain) {
  const std::int64_t start = std::min(a.start(), b.start());
  const std::int64_t last = std::max(a.last(), b.last());
  std::vector<double> out(static_cast<std::size_t>(last - start + 1), 0.0);
  for (std::size_t i = 0; i < a.len(); ++i) out[static_cast<std::size_t>(a.start() - start) + i] = a.samples()[i];
  for (std::size_t i = 0; i < b.len(); ++i) out[static_cast<std::size_t>(b.start() - start) + i] += gain * b.samples()[i];
  return Signal(start, std::move(out));
}

Signal mix_at_snr(const Signal& target, const Signal& background, double snr_db) {
  return add_scaled(target, background, snr_gain(target, background, snr_db));
}

Trial make_trial(const TrialSpec& spec, const Signal& background) {
  return make_trial(spec, gen_target(spec.seed, spec.target_len, spec.target_kind), background);
}

Trial make_trial(const TrialSpec& spec, const Signal& target, const Signal& background) {
  if (spec.target_len == 0 || spec.scene_len < spec.target_len) {
    throw std::invalid_argument("trial needs 1 <= target_len <= scene_len");
  }
  if (target.len() != spec.target_len) throw std::invalid_argument("target length differs from the trial spec");
  const double max_delay = static_cast<double>(spec.scene_len - spec.target_len);
  if (!(spec.true_delay >= 0.0 && spec.true_delay <= max_delay)) {
    throw std::invalid_argument("true_delay must lie in [0, scene_len - target_len]");
  }
  if (background.len() < spec.scene_len) throw std::invalid_argument("background shorter than the scene");

  const Signal y(0, {target.samples().begin(), target.samples().end()});
  const Signal placed = sinc_shift(y, -spec.true_delay);
  const Signal bg(0, {background.samples().begin(), background.samples().begin() + static_cast<std::ptrdiff_t>(spec.scene_len)});
  const double gain = snr_gain(y, bg, spec.snr_db);

  std::vector<double> scene(spec.scene_len);
  for (std::size_t n = 0; n < spec.scene_len; ++n) {
    scene[n] = placed[static_cast<std::int64_t>(n)] + gain * bg.samples()[n];
  }
  return Trial{Signal(0, std::move(scene)), y, -spec.true_delay};
}

}  // namespace qxcorr
