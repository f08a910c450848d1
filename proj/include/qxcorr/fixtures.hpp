#pragma once

#include <cstddef>
#include <cstdint>

#include "qxcorr/quantize.hpp"
#include "qxcorr/rng.hpp"
#include "qxcorr/signal.hpp"

namespace qxcorr {

// Sample layouts for random integer signals.
enum class IntPattern { uniform, all_negative, alternating, sparse };

// len samples in [-bound, bound] shaped by pattern, random start in
// [-1000, 1000]. The bound field is `bound` even if no sample reaches it.
IntSignal random_int_signal(Rng& rng, std::size_t len, std::int32_t bound, IntPattern pattern);

// x[n] = a * y[n + nu] with random monotone quantizers for each side.
// Both quantized signals are guaranteed nonzero.
struct ShiftedPair {
  Signal x;
  Signal y;
  std::int64_t nu = 0;
  double a = 1.0;
  Quantizer phi = Quantizer::sign();
  Quantizer psi = Quantizer::sign();
};

// y of length in [1, max_len] (standard normal with ~10% exact zeros),
// a in (0, 10], nu in [-max_shift, max_shift], quantizer levels in
// [1, max_levels].
ShiftedPair random_shifted_pair(std::uint64_t seed, std::size_t max_len = 512, std::int64_t max_shift = 256,
                                std::int32_t max_levels = 16);

}  // namespace qxcorr
