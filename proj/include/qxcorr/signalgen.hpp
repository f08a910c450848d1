#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qxcorr/signal.hpp"

namespace qxcorr {

// Synthetic signal families. Frequencies are in cycles per sample.
struct TargetKind {
  enum class Family { white, bandlimited, am_bursts };
  Family family = Family::white;
  double low = 0.0;
  double high = 0.5;

  static TargetKind white() { return {Family::white, 0.0, 0.5}; }
  static TargetKind bandlimited(double low, double high) { return {Family::bandlimited, low, high}; }
  // Band-limited noise under a random burst envelope, a speech-like stand-in.
  static TargetKind am_bursts(double low, double high) { return {Family::am_bursts, low, high}; }

  std::string to_string() const;
};

// Deterministic pseudo-random signal at start 0. White is standard normal;
// the other families are scaled to unit RMS. Throws std::invalid_argument for
// len == 0 or a band with no DFT bins.
Signal gen_target(std::uint64_t seed, std::size_t len, const TargetKind& kind);

inline constexpr int default_sinc_half_width = 64;

// s'[n] ~= s[n + d] by Hann-windowed sinc interpolation with 2 * half_width
// taps; the support grows by half_width on each side. Integer d is exactly
// shift(s, d).
Signal sinc_shift(const Signal& s, double d, int half_width = default_sinc_half_width);

// Gain g with (|t|^2 / len_t) / (g^2 |b|^2 / len_b) = 10^(snr_db / 10).
// Throws DegenerateInput if either signal is all zero.
double snr_gain(const Signal& target, const Signal& background, double snr_db);

// target + snr_gain(target, background, snr_db) * background.
Signal mix_at_snr(const Signal& target, const Signal& background, double snr_db);

// a + gain * b over the union of supports.
Signal add_scaled(const Signal& a, const Signal& b, double gain);

struct TrialSpec {
  std::uint64_t seed = 0;
  std::size_t target_len = 2048;
  std::size_t scene_len = 8192;
  double true_delay = 0.0;  // samples, in [0, scene_len - target_len]
  double snr_db = 0.0;
  double sample_rate = 16000.0;  // metadata only
  TargetKind target_kind = TargetKind::am_bursts(0.01, 0.3);
};

// y is the clean target, x the scene of length scene_len starting at 0 that
// holds the target delayed by true_delay plus scaled background. nu_true is
// the lag at which x * y peaks: x[n] ~= y[n + nu_true], so nu_true = -delay.
struct Trial {
  Signal x;
  Signal y;
  double nu_true = 0.0;
};

// Target from gen_target(spec.seed, spec.target_len, spec.target_kind).
Trial make_trial(const TrialSpec& spec, const Signal& background);

// Same with an explicit target; spec.target_len must equal target.len().
// The background contributes its first scene_len stored samples.
Trial make_trial(const TrialSpec& spec, const Signal& target, const Signal& background);

}  // namespace qxcorr
