#include "qxcorr/bignat.hpp"

#include <algorithm>
#include <stdexcept>

#include "limb_ops.hpp"

namespace qxcorr {

namespace limb {

namespace {

// Below this many limbs in the shorter operand the quadratic loop wins.
constexpr std::size_t karatsuba_threshold = 32;

// x much longer than y: multiply y by consecutive |y|-limb blocks of x.
void mul_unbalanced(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny) {
  std::fill(z, z + nx + ny, Limb{0});
  std::vector<Limb> partial(2 * ny);
  for (std::size_t off = 0; off < nx; off += ny) {
    const std::size_t chunk = std::min(ny, nx - off);
    mul_karatsuba(partial.data(), x + off, chunk, y, ny);
    add_into(z + off, nx + ny - off, partial.data(), chunk + ny);
  }
}

}  // namespace

void mul_karatsuba(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny) {
  if (nx < ny) {
    std::swap(x, y);
    std::swap(nx, ny);
  }
  if (ny < karatsuba_threshold) {
    mul_basecase(z, x, nx, y, ny);
    return;
  }
  const std::size_t h = (nx + 1) / 2;
  if (ny <= h) {
    mul_unbalanced(z, x, nx, y, ny);
    return;
  }

  // x = x0 + x1 B^h, y = y0 + y1 B^h with |x0| = |y0| = h.
  const Limb* x0 = x;
  const Limb* x1 = x + h;
  const Limb* y0 = y;
  const Limb* y1 = y + h;
  const std::size_t nx1 = nx - h;
  const std::size_t ny1 = ny - h;

  mul_karatsuba(z, x0, h, y0, h);                   // z0 -> z[0, 2h)
  mul_karatsuba(z + 2 * h, x1, nx1, y1, ny1);       // z2 -> z[2h, nx + ny)

  std::vector<Limb> sx(h + 1, 0), sy(h + 1, 0);
  std::copy(x0, x0 + h, sx.begin());
  std::copy(y0, y0 + h, sy.begin());
  sx[h] = add_into(sx.data(), h, x1, nx1);
  sy[h] = add_into(sy.data(), h, y1, ny1);
  const std::size_t nsx = normalized_size(sx.data(), h + 1);
  const std::size_t nsy = normalized_size(sy.data(), h + 1);

  std::vector<Limb> mid(2 * h + 2, 0);
  if (nsx && nsy) mul_karatsuba(mid.data(), sx.data(), nsx, sy.data(), nsy);
  // mid = x0 y1 + x1 y0 >= 0 after removing z0 and z2.
  sub_into(mid.data(), mid.size(), z, 2 * h);
  sub_into(mid.data(), mid.size(), z + 2 * h, nx1 + ny1);
  const std::size_t nmid = normalized_size(mid.data(), mid.size());
  add_into(z + h, nx + ny - h, mid.data(), nmid);
}

}  // namespace limb

namespace {

using limb::Limb;
using limb::Wide;

void strip(std::vector<Limb>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

BigNat::BigNat(std::uint64_t value) {
  if (value) limbs_.push_back(value);
}

BigNat BigNat::from_limbs(std::vector<Limb> limbs) {
  BigNat out;
  out.limbs_ = std::move(limbs);
  strip(out.limbs_);
  return out;
}

BigNat BigNat::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty decimal string");
  std::vector<Limb> limbs;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit in decimal string");
    Limb carry = static_cast<Limb>(c - '0');
    for (auto& l : limbs) {
      Wide t = static_cast<Wide>(l) * 10 + carry;
      l = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    if (carry) limbs.push_back(carry);
  }
  return from_limbs(std::move(limbs));
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * limb_bits + (limb_bits - static_cast<std::size_t>(__builtin_clzll(limbs_.back())));
}

std::uint64_t BigNat::bits(std::size_t pos, unsigned count) const {
  if (count == 0) return 0;
  const std::size_t idx = pos / limb_bits;
  const unsigned off = static_cast<unsigned>(pos % limb_bits);
  if (idx >= limbs_.size()) return 0;
  std::uint64_t v = limbs_[idx] >> off;
  if (off != 0 && off + count > limb_bits && idx + 1 < limbs_.size()) v |= limbs_[idx + 1] << (limb_bits - off);
  return count == limb_bits ? v : v & ((std::uint64_t{1} << count) - 1);
}

std::optional<std::uint64_t> BigNat::to_u64() const {
  if (limbs_.size() > 1) return std::nullopt;
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigNat::to_decimal() const {
  if (limbs_.empty()) return "0";
  constexpr Limb chunk = 10000000000000000000ULL;  // 10^19
  std::vector<Limb> work = limbs_;
  std::vector<Limb> groups;
  while (!work.empty()) {
    Wide rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      Wide cur = (rem << 64) | work[i];
      work[i] = static_cast<Limb>(cur / chunk);
      rem = cur % chunk;
    }
    groups.push_back(static_cast<Limb>(rem));
    strip(work);
  }
  std::string out = std::to_string(groups.back());
  for (std::size_t i = groups.size() - 1; i-- > 0;) {
    std::string g = std::to_string(groups[i]);
    out += std::string(19 - g.size(), '0') + g;
  }
  return out;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(MulBackend backend) {
  switch (backend) {
    case MulBackend::ssa:
      return "ssa";
    case MulBackend::karatsuba:
      return "karatsuba";
    case MulBackend::schoolbook:
      return "schoolbook";
  }
  return "unknown";
}

MulBackend parse_mul_backend(std::string_view name) {
  if (name == "ssa") return MulBackend::ssa;
  if (name == "karatsuba") return MulBackend::karatsuba;
  if (name == "schoolbook") return MulBackend::schoolbook;
  throw std::invalid_argument("unknown multiplication backend '" + std::string(name) + "'");
}

BigNat big_mul(const BigNat& a, const BigNat& b, MulBackend backend) {
  if (a.is_zero() || b.is_zero()) return BigNat();
  auto x = a.limbs();
  auto y = b.limbs();
  std::vector<Limb> z(x.size() + y.size());
  switch (backend) {
    case MulBackend::schoolbook:
      limb::mul_basecase(z.data(), x.data(), x.size(), y.data(), y.size());
      break;
    case MulBackend::karatsuba:
      limb::mul_karatsuba(z.data(), x.data(), x.size(), y.data(), y.size());
      break;
    case MulBackend::ssa:
      limb::mul_ssa(z.data(), x.data(), x.size(), y.data(), y.size());
      break;
  }
  return BigNat::from_limbs(std::move(z));
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  const BigNat& big = a.limbs().size() >= b.limbs().size() ? a : b;
  const BigNat& small = &big == &a ? b : a;
  std::vector<Limb> z(big.limbs().begin(), big.limbs().end());
  z.push_back(0);
  limb::add_into(z.data(), z.size(), small.limbs().data(), small.limbs().size());
  return BigNat::from_limbs(std::move(z));
}

}  // namespace qxcorr
