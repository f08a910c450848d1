#include "qxcorr/intxcorr.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>
#include <stdexcept>
#include <string>

#include "qxcorr/error.hpp"

namespace qxcorr {

namespace {

// Lag slot k = j - i + nu - 1 for the product u[i] v[j]. Rows ascend in i,
// so each lag accumulates in ascending m.
template <class Acc>
void accumulate_rows(std::span<const std::int32_t> us, std::span<const std::int32_t> vs, Acc* out) {
  const std::size_t nu = us.size();
  const std::size_t nv = vs.size();
  for (std::size_t i = 0; i < nu; ++i) {
    const Acc ui = us[i];
    if (ui == 0) continue;
    Acc* row = out + (nu - 1 - i);
    for (std::size_t j = 0; j < nv; ++j) row[j] += ui * static_cast<Acc>(vs[j]);
  }
}

}  // namespace

IntCorrelogram xcorr_int_bf(const IntSignal& u, const IntSignal& v) {
  const auto us = u.samples();
  const auto vs = v.samples();
  const std::size_t nu = us.size();
  const std::size_t nv = vs.size();

  IntCorrelogram out;
  out.first_lag = ccf_first_lag(u.start(), nu, v.start());
  out.values.assign(nu + nv - 1, 0);
  // Every partial sum is bounded by n_min * K_u * K_v; use 32-bit lanes when that fits.
  const auto n_min = static_cast<std::uint64_t>(std::min(nu, nv));
  const std::uint64_t peak = n_min * static_cast<std::uint64_t>(u.bound()) * static_cast<std::uint64_t>(v.bound());
  if (peak <= static_cast<std::uint64_t>(INT32_MAX)) {
    std::vector<std::int32_t> narrow(out.values.size(), 0);
    accumulate_rows(us, vs, narrow.data());
    std::copy(narrow.begin(), narrow.end(), out.values.begin());
  } else {
    accumulate_rows(us, vs, out.values.data());
  }
  return out;
}

KSPlan plan_ks(const IntSignal& u, const IntSignal& v) {
  if (u.is_zero() || v.is_zero()) throw DegenerateInput("Kronecker path needs two nonzero integer signals");
  KSPlan plan;
  plan.n_min = static_cast<std::int64_t>(std::min(u.len(), v.len()));
  plan.bound_u = u.bound();
  plan.bound_v = v.bound();
  plan.bias_u = u.bound();
  plan.bias_v = v.bound();

  const unsigned __int128 peak =
      static_cast<unsigned __int128>(plan.n_min) * static_cast<std::uint64_t>(plan.bound_u) * static_cast<std::uint64_t>(plan.bound_v);
  if (peak >> 59) throw std::invalid_argument("coefficient range too large for 62-bit Kronecker slots");
  const auto p64 = static_cast<std::uint64_t>(peak);
  plan.slot_bits = static_cast<unsigned>(std::bit_width(p64) - 1) + 3;
  return plan;
}

BigNat pack(std::span<const std::int32_t> coeffs, std::int64_t bias, unsigned slot_bits) {
  if (slot_bits == 0 || slot_bits > 64) throw std::invalid_argument("slot width must be in [1, 64]");
  const std::size_t total_bits = coeffs.size() * slot_bits;
  std::vector<BigNat::Limb> limbs(total_bits / 64 + 1, 0);
  std::size_t pos = 0;
  for (auto c : coeffs) {
    const std::int64_t biased = c + bias;
    if (biased < 0 || (slot_bits < 64 && static_cast<std::uint64_t>(biased) >> slot_bits)) {
      throw std::invalid_argument("coefficient " + std::to_string(c) + " does not fit a " +
                                  std::to_string(slot_bits) + "-bit slot with bias " + std::to_string(bias));
    }
    const auto value = static_cast<std::uint64_t>(biased);
    const std::size_t idx = pos / 64;
    const unsigned off = static_cast<unsigned>(pos % 64);
    limbs[idx] |= value << off;
    if (off != 0 && off + slot_bits > 64) limbs[idx + 1] |= value >> (64 - off);
    pos += slot_bits;
  }
  return BigNat::from_limbs(std::move(limbs));
}

std::vector<std::uint64_t> extract_slots(const BigNat& p, unsigned slot_bits, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = p.bits(n * slot_bits, slot_bits);
  return out;
}

IntCorrelogram unpack_and_correct(const BigNat& p, const KSPlan& plan, const IntSignal& u, const IntSignal& v) {
  const std::size_t nu = u.len();
  const std::size_t nv = v.len();
  const std::size_t count = nu + nv - 1;
  if (p.bit_length() > count * plan.slot_bits) {
    throw InternalOverflow("Kronecker product has more bits than its slot layout allows");
  }

  // a = reverse(u) as a zero-based sequence, b = v.
  const auto us = u.samples();
  const auto bs = v.samples();
  std::vector<std::int64_t> prefix_a(nu + 1, 0), prefix_b(nv + 1, 0);
  for (std::size_t k = 0; k < nu; ++k) prefix_a[k + 1] = prefix_a[k] + us[nu - 1 - k];
  for (std::size_t k = 0; k < nv; ++k) prefix_b[k + 1] = prefix_b[k] + bs[k];

  const std::int64_t limit = plan.n_min * plan.bound_u * plan.bound_v;
  IntCorrelogram out;
  out.first_lag = ccf_first_lag(u.start(), nu, v.start());
  out.values.resize(count);

  std::size_t pos = 0;
  for (std::size_t n = 0; n < count; ++n, pos += plan.slot_bits) {
    // Slot n pairs a[m] with b[n - m] for m in [lo, hi].
    const std::size_t lo = n >= nv ? n - nv + 1 : 0;
    const std::size_t hi = std::min(n, nu - 1);
    const auto overlap = static_cast<std::int64_t>(hi - lo + 1);
    const std::int64_t sum_a = prefix_a[hi + 1] - prefix_a[lo];
    const std::int64_t sum_b = prefix_b[n - lo + 1] - prefix_b[n - hi];

    const auto slot = static_cast<std::int64_t>(p.bits(pos, plan.slot_bits));
    const std::int64_t value = slot - plan.bias_v * sum_a - plan.bias_u * sum_b - plan.bias_u * plan.bias_v * overlap;
    if (value > limit || value < -limit) {
      throw InternalOverflow("unpacked coefficient " + std::to_string(value) + " exceeds bound " + std::to_string(limit));
    }
    out.values[n] = value;
  }
  return out;
}

IntCorrelogram xcorr_int_ks(const IntSignal& u, const IntSignal& v, MulBackend backend) {
  const KSPlan plan = plan_ks(u, v);
  const IntSignal ur = reverse(u);
  const BigNat pu = pack(ur.samples(), plan.bias_u, plan.slot_bits);
  const BigNat pv = pack(v.samples(), plan.bias_v, plan.slot_bits);
  return unpack_and_correct(big_mul(pu, pv, backend), plan, u, v);
}

}  // namespace qxcorr
