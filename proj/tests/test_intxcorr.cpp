#include <doctest.h>

#include <qxcorr/error.hpp>
#include <qxcorr/fixtures.hpp>
#include <qxcorr/intxcorr.hpp>
#include <qxcorr/rng.hpp>

#include <cmath>

#include "oracles.hpp"

using namespace qxcorr;

namespace {

void check_against_oracle(const IntSignal& u, const IntSignal& v) {
  const auto [lo, expect] = oracle::ccf(u, v);
  const auto bf = xcorr_int_bf(u, v);
  const auto ks = xcorr_int_ks(u, v);
  REQUIRE(bf.first_lag == lo);
  REQUIRE(bf.values == expect);
  REQUIRE(ks == bf);
}

}  // namespace

TEST_CASE("hand-evaluated correlations") {
  const IntSignal a(0, {1, 2});
  auto c = xcorr_int_bf(a, a);
  CHECK(c.first_lag == -1);
  CHECK(c.values == std::vector<std::int64_t>{2, 5, 2});
  CHECK(xcorr_int_ks(a, a) == c);

  const IntSignal b(0, {1, -1});
  CHECK(xcorr_int_ks(b, b).values == std::vector<std::int64_t>{-1, 2, -1});

  const IntSignal ones(0, {1, 1, 1});
  CHECK(xcorr_int_ks(ones, ones).values == std::vector<std::int64_t>{1, 2, 3, 2, 1});

  const auto d = xcorr_int_ks(IntSignal(0, {1}), IntSignal(2, {1}));
  CHECK(d.first_lag == 2);
  CHECK(d.values == std::vector<std::int64_t>{1});

  const auto k = xcorr_int_ks(IntSignal(0, {7}), IntSignal(0, {7}));
  CHECK(k.first_lag == 0);
  CHECK(k.values == std::vector<std::int64_t>{49});
}

TEST_CASE("slot width") {
  CHECK(plan_ks(IntSignal(0, {4, 0}), IntSignal(0, {0, -4})).slot_bits == 8);
  CHECK(plan_ks(IntSignal(0, {1, 1, 1, 1}), IntSignal(0, {1, 0, 0, 1})).slot_bits == 5);
  CHECK(plan_ks(IntSignal(0, {1}), IntSignal(0, {-1})).slot_bits == 3);
  // Uses the shorter length.
  CHECK(plan_ks(IntSignal(0, {1}), IntSignal(0, std::vector<std::int32_t>(100, 1))).slot_bits == 3);
  CHECK_THROWS_AS(plan_ks(IntSignal(0, {0, 0}), IntSignal(0, {1})), DegenerateInput);
  CHECK_THROWS_AS(xcorr_int_ks(IntSignal(0, {1}), IntSignal(0, {0})), DegenerateInput);

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 600));
    const auto u = random_int_signal(rng, n, static_cast<std::int32_t>(rng.uniform_int(1, 40)), IntPattern::uniform);
    const auto v = random_int_signal(rng, n + 3, static_cast<std::int32_t>(rng.uniform_int(1, 40)), IntPattern::uniform);
    const auto plan = plan_ks(u, v);
    const double bound = 4.0 * static_cast<double>(plan.n_min) * plan.bound_u * plan.bound_v;
    CHECK(std::ldexp(1.0, static_cast<int>(plan.slot_bits)) > bound);
    CHECK(std::ldexp(1.0, static_cast<int>(plan.slot_bits)) <= 2.0 * bound);
  }
}

TEST_CASE("packing") {
  const std::int32_t w1[] = {1, 2};
  CHECK(pack(w1, 4, 8) == BigNat(1541));
  const std::int32_t w2[] = {0, 0, 1};
  CHECK(pack(w2, 1, 3) == BigNat(137));
  const std::int32_t w3[] = {-5};
  CHECK(pack(w3, 5, 9).is_zero());

  const std::int32_t u[] = {1, 2};
  const std::int32_t v[] = {3, 4};
  const auto p = big_mul(pack(u, 0, 7), pack(v, 0, 7));
  CHECK(p == BigNat(132355));
  CHECK(extract_slots(p, 7, 3) == std::vector<std::uint64_t>{3, 10, 8});
}

TEST_CASE("fast path equals the definition") {
  Rng rng(1234);
  const IntPattern patterns[] = {IntPattern::uniform, IntPattern::all_negative, IntPattern::alternating,
                                 IntPattern::sparse};
  for (int trial = 0; trial < 300; ++trial) {
    const auto pattern = patterns[trial % 4];
    const auto k = static_cast<std::int32_t>(trial % 5 == 0 ? 1 : rng.uniform_int(1, 16));
    IntSignal u = random_int_signal(rng, static_cast<std::size_t>(rng.uniform_int(1, 200)), k, pattern);
    IntSignal v = random_int_signal(rng, static_cast<std::size_t>(rng.uniform_int(1, 200)), k, pattern);
    if (u.is_zero() || v.is_zero()) continue;
    check_against_oracle(u, v);
  }
}

TEST_CASE("long inputs through the large multiply") {
  Rng rng(77);
  for (std::size_t n : {4096, 16384}) {
    const auto u = random_int_signal(rng, n, 16, IntPattern::uniform);
    const auto v = random_int_signal(rng, n - 5, 16, IntPattern::all_negative);
    const auto bf = xcorr_int_bf(u, v);
    CHECK(xcorr_int_ks(u, v, MulBackend::ssa) == bf);
    CHECK(xcorr_int_ks(u, v, MulBackend::karatsuba) == bf);
  }
}

TEST_CASE("antisymmetry, coefficient bound and Cauchy-Schwarz") {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_int_signal(rng, static_cast<std::size_t>(rng.uniform_int(1, 300)), 9, IntPattern::uniform);
    const auto v = random_int_signal(rng, static_cast<std::size_t>(rng.uniform_int(1, 300)), 4, IntPattern::alternating);
    if (u.is_zero() || v.is_zero()) continue;
    const auto uv = xcorr_int_ks(u, v);
    const auto vu = xcorr_int_ks(v, u);
    CHECK(uv.first_lag == -vu.last_lag());
    for (std::int64_t n = uv.first_lag; n <= uv.last_lag(); ++n) REQUIRE(uv.at(n) == vu.at(-n));

    const auto n_min = static_cast<std::int64_t>(std::min(u.len(), v.len()));
    std::int64_t peak = uv.values.front();
    for (auto e : uv.values) {
      REQUIRE(std::llabs(e) <= n_min * u.bound() * v.bound());
      peak = std::max(peak, e);
    }
    CHECK(static_cast<double>(peak) <= l2_norm(u) * l2_norm(v) * (1 + 1e-12));
  }
}
