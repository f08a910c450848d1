#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qxcorr {

// Arbitrary-precision natural number, little-endian 64-bit limbs with no
// leading zero limbs (zero is the empty limb vector).
class BigNat {
 public:
  using Limb = std::uint64_t;
  static constexpr unsigned limb_bits = 64;

  BigNat() = default;
  explicit BigNat(std::uint64_t value);
  // Takes ownership of raw limbs and strips leading zeros.
  static BigNat from_limbs(std::vector<Limb> limbs);
  // Decimal digits only. Throws std::invalid_argument.
  static BigNat from_decimal(std::string_view digits);

  std::span<const Limb> limbs() const { return limbs_; }
  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;

  // `count` (<= 64) bits starting at bit `pos`; bits past the top read as zero.
  std::uint64_t bits(std::size_t pos, unsigned count) const;

  std::optional<std::uint64_t> to_u64() const;
  std::string to_decimal() const;

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

 private:
  std::vector<Limb> limbs_;
};

// Multiplication backends. ssa (Schoenhage-Strassen, Karatsuba below a size
// cutoff) is the default; the others are kept for benchmarking and checks.
enum class MulBackend { ssa, karatsuba, schoolbook };

std::string_view to_string(MulBackend backend);
// "ssa" | "karatsuba" | "schoolbook". Throws std::invalid_argument.
MulBackend parse_mul_backend(std::string_view name);

// Exact product a * b.
BigNat big_mul(const BigNat& a, const BigNat& b, MulBackend backend = MulBackend::ssa);

BigNat operator+(const BigNat& a, const BigNat& b);

}  // namespace qxcorr
