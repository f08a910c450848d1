#include <doctest.h>

#include <qxcorr/bignat.hpp>
#include <qxcorr/rng.hpp>

#include "oracles.hpp"

using namespace qxcorr;

namespace {

BigNat random_nat(Rng& rng, std::size_t limbs, bool saturated = false) {
  std::vector<std::uint64_t> v(limbs);
  for (auto& l : v) l = saturated ? ~std::uint64_t{0} : rng.next_u64();
  return BigNat::from_limbs(std::move(v));
}

std::vector<std::uint64_t> limbs_of(const BigNat& a) { return {a.limbs().begin(), a.limbs().end()}; }

constexpr MulBackend all_backends[] = {MulBackend::ssa, MulBackend::karatsuba, MulBackend::schoolbook};

}  // namespace

TEST_CASE("small products") {
  for (auto b : all_backends) {
    CHECK(big_mul(BigNat(257), BigNat(515), b) == BigNat(132355));
    CHECK(big_mul(BigNat(0), BigNat(99), b).is_zero());
    CHECK(big_mul(BigNat(1), BigNat(99), b) == BigNat(99));
  }
}

TEST_CASE("decimal round trip") {
  const std::string d = "340282366920938463463374607431768211457";  // 2^128 + 1
  const auto a = BigNat::from_decimal(d);
  CHECK(a.to_decimal() == d);
  CHECK(a.bit_length() == 129);
  CHECK(a.bits(0, 8) == 1);
  CHECK(a.bits(128, 1) == 1);
  CHECK(BigNat(0).to_decimal() == "0");
}

TEST_CASE("products match an independent 32-bit schoolbook") {
  Rng rng(2024);
  const std::size_t sizes[] = {1, 2, 31, 32, 33, 64, 100, 257};
  for (auto nx : sizes) {
    for (auto ny : sizes) {
      const auto x = random_nat(rng, nx);
      const auto y = random_nat(rng, ny);
      const auto expect = oracle::mul(oracle::from_u64_limbs(limbs_of(x)), oracle::from_u64_limbs(limbs_of(y)));
      for (auto b : all_backends) {
        CHECK(oracle::from_u64_limbs(limbs_of(big_mul(x, y, b))) == expect);
      }
    }
  }
}

TEST_CASE("large products agree across backends") {
  Rng rng(99);
  const std::size_t sizes[] = {1536, 2048, 3000, 4096, 6000};
  for (auto n : sizes) {
    for (bool saturated : {false, true}) {
      const auto x = random_nat(rng, n, saturated);
      const auto y = random_nat(rng, n - n / 3, saturated);
      const auto k = big_mul(x, y, MulBackend::karatsuba);
      CHECK(big_mul(x, y, MulBackend::ssa) == k);
      CHECK(big_mul(y, x, MulBackend::ssa) == k);
    }
  }
}

TEST_CASE("4096-bit products against the oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_nat(rng, 64);
    const auto y = random_nat(rng, 64);
    const auto expect = oracle::mul(oracle::from_u64_limbs(limbs_of(x)), oracle::from_u64_limbs(limbs_of(y)));
    CHECK(oracle::from_u64_limbs(limbs_of(big_mul(x, y))) == expect);
  }
}

TEST_CASE("ring identities") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_nat(rng, 1 + trial * 7);
    const auto b = random_nat(rng, 3 + trial * 5);
    const auto c = random_nat(rng, 2 + trial);
    CHECK(big_mul(a, b) == big_mul(b, a));
    CHECK(big_mul(a, b + c) == big_mul(a, b) + big_mul(a, c));
    CHECK(big_mul(big_mul(a, b), c) == big_mul(a, big_mul(b, c)));
  }
}

TEST_CASE("backend names") {
  for (auto b : all_backends) CHECK(parse_mul_backend(to_string(b)) == b);
  CHECK_THROWS(parse_mul_backend("toom"));
}
