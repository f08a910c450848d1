#pragma once

#include <cstdint>
#include <span>

#include "qxcorr/bignat.hpp"
#include "qxcorr/signal.hpp"

namespace qxcorr {

// Exact integer cross-correlation (u * v)[n] = sum_m u[m] v[m + n] over the
// full overlap range, by direct summation.
IntCorrelogram xcorr_int_bf(const IntSignal& u, const IntSignal& v);

// Slot layout for the Kronecker-substitution path. Coefficients are shifted
// by their bound into [0, 2K] before packing, so every slot of the product
// holds a nonnegative value at most 4 * n_min * bound_u * bound_v.
struct KSPlan {
  unsigned slot_bits = 0;     // L
  std::int64_t n_min = 0;     // min(len_u, len_v), the longest overlap
  std::int32_t bound_u = 0;
  std::int32_t bound_v = 0;
  std::int64_t bias_u = 0;
  std::int64_t bias_v = 0;
};

// L = floor(log2(n_min * K_u * K_v)) + 3, the smallest width with
// 2^L > 4 * n_min * K_u * K_v. Throws DegenerateInput if either signal is all
// zero, std::invalid_argument if slots would not fit in 62 bits.
KSPlan plan_ks(const IntSignal& u, const IntSignal& v);

// sum_n (coeffs[n] + bias) * 2^(slot_bits * n). Each biased coefficient must
// lie in [0, 2^slot_bits).
BigNat pack(std::span<const std::int32_t> coeffs, std::int64_t bias, unsigned slot_bits);

// Raw slot values of p, low slot first.
std::vector<std::uint64_t> extract_slots(const BigNat& p, unsigned slot_bits, std::size_t count);

// Recovers u * v from p = pack(reverse(u)) * pack(v): reads the biased
// convolution slots and removes the three bias cross-terms with running window
// sums. Throws InternalOverflow if a coefficient leaves +-n_min K_u K_v.
IntCorrelogram unpack_and_correct(const BigNat& p, const KSPlan& plan, const IntSignal& u, const IntSignal& v);

// plan_ks -> pack -> big_mul -> unpack_and_correct. Bit-identical to xcorr_int_bf.
IntCorrelogram xcorr_int_ks(const IntSignal& u, const IntSignal& v, MulBackend backend = MulBackend::ssa);

}  // namespace qxcorr
