#include <doctest.h>

#include <qxcorr/error.hpp>
#include <qxcorr/quantize.hpp>
#include <qxcorr/rng.hpp>

#include <algorithm>
#include <cstdlib>

using namespace qxcorr;

TEST_CASE("sign quantizer") {
  const auto q = Quantizer::sign();
  CHECK(q(-3.0) == -1);
  CHECK(q(0.0) == 0);
  CHECK(q(1e-300) == 1);
  CHECK(q.bound() == 1);
}

TEST_CASE("uniform quantizer rounds and clamps") {
  const auto q = Quantizer::uniform(2, 1.0);
  const auto out = apply(q, Signal(0, {2.7, -0.4, 0.0}));
  CHECK(out == IntSignal(0, {2, 0, 0}, 2));
  CHECK(q(-9.0) == -2);
  CHECK(q.bound() == 2);
  CHECK_THROWS(Quantizer::uniform(0, 1.0));
  CHECK_THROWS(Quantizer::uniform(3, 0.0));
}

TEST_CASE("custom quantizer validation") {
  const auto q = Quantizer::custom({-1.0, 0.5}, {-3, 0, 2});
  CHECK(q(-2.0) == -3);
  CHECK(q(-1.0) == 0);
  CHECK(q(0.5) == 2);
  CHECK(q.bound() == 3);
  CHECK_THROWS(Quantizer::custom({1.0, 0.5}, {0, 1, 2}));
  CHECK_THROWS(Quantizer::custom({-1.0, 0.5}, {0, -1, 2}));
  CHECK_THROWS(Quantizer::custom({0.5}, {1, 2}));  // q(0) != 0
  CHECK_THROWS(Quantizer::custom({0.5}, {0}));
}

TEST_CASE("quantizer parsing") {
  CHECK(Quantizer::parse("sign").kind() == Quantizer::Kind::sign);
  const auto q = Quantizer::parse("uniform:4:0.25");
  CHECK(q.bound() == 4);
  CHECK(q.step() == 0.25);
  CHECK(q.to_string() == Quantizer::parse(q.to_string()).to_string());
  CHECK_THROWS_AS(Quantizer::parse("uniform:4"), ParseError);
  CHECK_THROWS_AS(Quantizer::parse("cubic"), ParseError);
}

TEST_CASE("random monotone quantizers are monotone and fix zero") {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto q = random_monotone(seed, static_cast<std::int32_t>(1 + seed % 16), 1 + static_cast<int>(seed % 7));
    CHECK(q(0.0) == 0);
    CHECK(q.bound() <= static_cast<std::int32_t>(1 + seed % 16));
    double prev = -5.0;
    for (int i = 0; i < 100; ++i) {
      const double r = prev + rng.uniform(0.0, 0.1);
      CHECK(q(prev) <= q(r));
      prev = r;
    }
  }
}

TEST_CASE("quantizer worked examples") {
  CHECK(apply(Quantizer::sign(), Signal(0, {0.5, -0.3, 0.0})) == IntSignal(0, {1, -1, 0}, 1));
  CHECK(Quantizer::sign()(-0.0) == 0);
  CHECK(Quantizer::uniform(3, 0.5)(-0.25) == -1);  // half away from zero
  for (const auto& q : {Quantizer::sign(), Quantizer::uniform(5, 0.1), random_monotone(9, 7, 4)}) {
    CHECK(apply(q, Signal(3, {0.0, 0.0})).is_zero());
  }
}

TEST_CASE("random monotone quantizers are reproducible and pass dense sampling") {
  const auto a = random_monotone(77, 12, 6);
  const auto b = random_monotone(77, 12, 6);
  CHECK(a.thresholds() == b.thresholds());
  CHECK(a.outputs() == b.outputs());
  Rng rng(1);
  std::vector<double> r(10000);
  for (double& e : r) e = rng.uniform(-3.0, 3.0);
  std::sort(r.begin(), r.end());
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(a(r[i - 1]) <= a(r[i]));
  for (double e : r) CHECK(std::abs(a(e)) <= a.bound());
}
