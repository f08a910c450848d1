// Schoenhage-Strassen multiplication: split both operands into D = 2^k
// pieces, take a length-D cyclic convolution over Z/(2^n + 1) where 2 is a
// 2n-th root of unity (so every twiddle is a shift), then recombine.

#include <cmath>
#include <vector>

#include "limb_ops.hpp"

namespace qxcorr::limb {

namespace {

// Residues modulo F = 2^n + 1, n = 64 m, held in m + 1 limbs as values in [0, 2^n].
class FermatRing {
 public:
  explicit FermatRing(std::size_t m) : m_(m), scratch_(2 * m + 2), product_(2 * m) {}

  std::size_t width() const { return m_ + 1; }
  std::size_t bits() const { return 64 * m_; }

  // r = a + b. r may alias a or b.
  void add(Limb* r, const Limb* a, const Limb* b) const {
    Limb carry = 0;
    for (std::size_t i = 0; i <= m_; ++i) {
      Wide t = static_cast<Wide>(a[i]) + b[i] + carry;
      r[i] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    fold(r);
  }

  // r = a - b. r may alias a or b.
  void sub(Limb* r, const Limb* a, const Limb* b) const {
    Limb borrow = 0;
    for (std::size_t i = 0; i <= m_; ++i) {
      const Limb ai = a[i];
      const Limb bi = b[i];
      r[i] = ai - bi - borrow;
      borrow = (ai < bi) || (ai - bi < borrow);
    }
    if (borrow) {
      // Wrapped mod 2^(64(m+1)); adding F lands on the true value a - b + F.
      const Limb one = 1;
      add_into(r, m_ + 1, &one, 1);
      add_into(r + m_, 1, &one, 1);
    }
  }

  // r = a * 2^s with 0 <= s < 2n. r must not alias a.
  void mul_pow2(Limb* r, const Limb* a, std::size_t s) {
    const bool negate = s >= bits();
    if (negate) s -= bits();
    const std::size_t q = s / 64;
    const unsigned sh = static_cast<unsigned>(s % 64);
    Limb* t = scratch_.data();
    std::fill(t, t + 2 * m_ + 2, Limb{0});
    if (sh == 0) {
      std::copy(a, a + m_ + 1, t + q);
    } else {
      Limb carry = 0;
      for (std::size_t i = 0; i <= m_; ++i) {
        t[q + i] = (a[i] << sh) | carry;
        carry = a[i] >> (64 - sh);
      }
      t[q + m_ + 1] = carry;
    }
    // a 2^s = L + H 2^n == L - H, with H < 2^n.
    std::copy(t, t + m_, r);
    r[m_] = 0;
    subtract_high(r, t + m_, m_);
    if (negate) negate_in_place(r);
  }

  // r = a * b. r may alias a or b.
  void mul(Limb* r, const Limb* a, const Limb* b) {
    if (a[m_]) {  // a = 2^n == -1
      std::copy(b, b + m_ + 1, r);
      negate_in_place(r);
      return;
    }
    if (b[m_]) {
      std::copy(a, a + m_ + 1, r);
      negate_in_place(r);
      return;
    }
    mul_ssa(product_.data(), a, m_, b, m_);
    std::copy(product_.begin(), product_.begin() + static_cast<std::ptrdiff_t>(m_), r);
    r[m_] = 0;
    subtract_high(r, product_.data() + m_, m_);
  }

 private:
  // r (m + 1 limbs, top limb <= 2): r = low - top mod F.
  void fold(Limb* r) const {
    const Limb hi = r[m_];
    r[m_] = 0;
    subtract_high(r, &hi, 1);
  }

  // r = r[0, m) - h[0, nh) mod F, given h < F and r[m] == 0.
  void subtract_high(Limb* r, const Limb* h, std::size_t nh) const {
    if (sub_into(r, m_, h, nh)) {
      // r holds low - h + 2^n; one more gives + F, possibly exactly 2^n.
      const Limb one = 1;
      r[m_] = add_into(r, m_, &one, 1);
    }
  }

  void negate_in_place(Limb* r) const {
    if (normalized_size(r, m_ + 1) == 0) return;
    // r = (2^n + 1) - r, limb by limb.
    Limb borrow = 0;
    for (std::size_t i = 0; i <= m_; ++i) {
      const Limb fi = (i == 0 ? 1 : 0) + (i == m_ ? 1 : 0);
      const Limb ri = r[i];
      r[i] = fi - ri - borrow;
      borrow = (fi < ri) || (fi - ri < borrow);
    }
  }

  std::size_t m_;
  std::vector<Limb> scratch_;
  std::vector<Limb> product_;
};

double karatsuba_cost(double limbs) {
  return limbs < 32 ? limbs * limbs : 3.0 * karatsuba_cost(limbs / 2.0) + 8.0 * limbs;
}

struct SsaShape {
  unsigned k = 0;          // D = 2^k pieces
  std::size_t piece = 0;   // limbs per piece
  std::size_t m = 0;       // ring width n = 64 m bits
  double cost = 0.0;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

SsaShape choose_shape(std::size_t nx, std::size_t ny) {
  const std::size_t total = nx + ny;
  SsaShape best;
  for (unsigned k = 2; k <= 20; ++k) {
    const std::size_t d = std::size_t{1} << k;
    std::size_t piece = std::max<std::size_t>(1, ceil_div(total, d));
    while (ceil_div(nx, piece) + ceil_div(ny, piece) - 1 > d) ++piece;
    // Coefficients are below d * 2^(2 * 64 * piece); 2 must be a 2n-th root with D | 2n.
    const std::size_t min_bits = 2 * 64 * piece + k + 1;
    const std::size_t grain = std::max<std::size_t>(64, d / 2);
    const std::size_t n = ceil_div(min_bits, grain) * grain;
    const std::size_t m = n / 64;
    const double cost = static_cast<double>(d) * karatsuba_cost(static_cast<double>(m)) +
                        3.0 * static_cast<double>(d) * k * 4.0 * static_cast<double>(m + 1);
    if (best.k == 0 || cost < best.cost) best = {k, piece, m, cost};
    if (piece == 1) break;
  }
  return best;
}

// Cyclic transform of `count` elements of ring width w laid out contiguously.
// Forward: decimation in frequency, natural order in, bit-reversed out.
void forward_transform(FermatRing& ring, std::vector<Limb>& data, std::size_t count, std::vector<Limb>& tmp) {
  const std::size_t w = ring.width();
  const std::size_t two_n = 2 * ring.bits();
  for (std::size_t len = count; len >= 2; len /= 2) {
    const std::size_t half = len / 2;
    const std::size_t stride = two_n / len;  // omega_len = 2^(2n/len)
    for (std::size_t base = 0; base < count; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Limb* a = data.data() + (base + j) * w;
        Limb* b = data.data() + (base + j + half) * w;
        ring.sub(tmp.data(), a, b);
        ring.add(a, a, b);
        ring.mul_pow2(b, tmp.data(), j * stride);
      }
    }
  }
}

// Inverse: decimation in time, bit-reversed in, natural out, without 1/D.
void inverse_transform(FermatRing& ring, std::vector<Limb>& data, std::size_t count, std::vector<Limb>& tmp) {
  const std::size_t w = ring.width();
  const std::size_t two_n = 2 * ring.bits();
  for (std::size_t len = 2; len <= count; len *= 2) {
    const std::size_t half = len / 2;
    const std::size_t stride = two_n / len;
    for (std::size_t base = 0; base < count; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Limb* a = data.data() + (base + j) * w;
        Limb* b = data.data() + (base + j + half) * w;
        const std::size_t e = j * stride;
        ring.mul_pow2(tmp.data(), b, e == 0 ? 0 : two_n - e);
        ring.sub(b, a, tmp.data());
        ring.add(a, a, tmp.data());
      }
    }
  }
}

}  // namespace

void mul_ssa(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny) {
  if (nx < ny) {
    std::swap(x, y);
    std::swap(nx, ny);
  }
  // Small or lopsided operands are better served by Karatsuba's block split.
  if (ny < 1536 || nx > 8 * ny) {
    mul_karatsuba(z, x, nx, y, ny);
    return;
  }
  const SsaShape shape = choose_shape(nx, ny);
  if (shape.cost >= karatsuba_cost(static_cast<double>(ny)) * static_cast<double>(nx) / static_cast<double>(ny)) {
    mul_karatsuba(z, x, nx, y, ny);
    return;
  }

  const std::size_t d = std::size_t{1} << shape.k;
  FermatRing ring(shape.m);
  const std::size_t w = ring.width();
  std::vector<Limb> fx(d * w, 0), fy(d * w, 0), tmp(w);
  auto split = [&](std::vector<Limb>& out, const Limb* src, std::size_t n) {
    for (std::size_t i = 0; i * shape.piece < n; ++i) {
      const std::size_t off = i * shape.piece;
      const std::size_t len = std::min(shape.piece, n - off);
      std::copy(src + off, src + off + len, out.data() + i * w);
    }
  };
  split(fx, x, nx);
  split(fy, y, ny);

  forward_transform(ring, fx, d, tmp);
  forward_transform(ring, fy, d, tmp);
  for (std::size_t i = 0; i < d; ++i) ring.mul(fx.data() + i * w, fx.data() + i * w, fy.data() + i * w);
  inverse_transform(ring, fx, d, tmp);

  // Scale by 1/D = 2^(2n - k) and add each coefficient at its piece offset.
  const std::size_t total = nx + ny;
  std::fill(z, z + total, Limb{0});
  const std::size_t inv_d = 2 * ring.bits() - shape.k;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t off = i * shape.piece;
    if (off >= total) break;
    ring.mul_pow2(tmp.data(), fx.data() + i * w, inv_d);
    const std::size_t len = normalized_size(tmp.data(), w);
    add_into(z + off, total - off, tmp.data(), std::min(len, total - off));
  }
}

}  // namespace qxcorr::limb
