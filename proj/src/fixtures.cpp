#include "qxcorr/fixtures.hpp"

#include <cmath>
#include <vector>

namespace qxcorr {

IntSignal random_int_signal(Rng& rng, std::size_t len, std::int32_t bound, IntPattern pattern) {
  std::vector<std::int32_t> s(len);
  for (std::size_t i = 0; i < len; ++i) {
    switch (pattern) {
      case IntPattern::uniform:
        s[i] = static_cast<std::int32_t>(rng.uniform_int(-bound, bound));
        break;
      case IntPattern::all_negative:
        s[i] = static_cast<std::int32_t>(rng.uniform_int(-bound, -1));
        break;
      case IntPattern::alternating:
        s[i] = (i % 2 == 0 ? 1 : -1) * static_cast<std::int32_t>(rng.uniform_int(1, bound));
        break;
      case IntPattern::sparse:
        s[i] = rng.uniform01() < 0.05 ? static_cast<std::int32_t>(rng.uniform_int(-bound, bound)) : 0;
        break;
    }
  }
  return IntSignal(rng.uniform_int(-1000, 1000), std::move(s), bound);
}

ShiftedPair random_shifted_pair(std::uint64_t seed, std::size_t max_len, std::int64_t max_shift,
                                std::int32_t max_levels) {
  Rng rng(seed);
  const auto len = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_len)));
  std::vector<double> samples(len);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& v : samples) {
      v = rng.uniform01() < 0.1 ? 0.0 : rng.normal();
      nonzero = nonzero || std::abs(v) >= 0.05;
    }
  }

  ShiftedPair pair;
  pair.y = Signal(rng.uniform_int(-1000, 1000), std::move(samples));
  pair.a = 10.0 * (1.0 - rng.uniform01());
  pair.nu = rng.uniform_int(-max_shift, max_shift);
  pair.x = scale(shift(pair.y, pair.nu), pair.a);

  // Redraw quantizers until neither side collapses to all zeros. Some
  // |y| >= 0.05 sits above the smallest possible threshold, so this ends.
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t qseed = derive_seed(seed, attempt);
    Rng qrng(qseed);
    const auto levels_phi = static_cast<std::int32_t>(qrng.uniform_int(1, max_levels));
    const auto levels_psi = static_cast<std::int32_t>(qrng.uniform_int(1, max_levels));
    const auto bp_phi = static_cast<int>(qrng.uniform_int(1, 8));
    const auto bp_psi = static_cast<int>(qrng.uniform_int(1, 8));
    pair.phi = random_monotone(derive_seed(qseed, 1), levels_phi, bp_phi, pair.a);
    pair.psi = random_monotone(derive_seed(qseed, 2), levels_psi, bp_psi, 1.0);
    if (!apply(pair.phi, pair.x).is_zero() && !apply(pair.psi, pair.y).is_zero()) break;
  }
  return pair;
}

}  // namespace qxcorr
