#include "qxcorr/quantize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qxcorr/error.hpp"
#include "qxcorr/rng.hpp"

namespace qxcorr {

Quantizer Quantizer::sign() {
  Quantizer q;
  q.kind_ = Kind::sign;
  q.bound_ = 1;
  return q;
}

Quantizer Quantizer::uniform(std::int32_t levels, double step) {
  if (levels < 1) throw std::invalid_argument("uniform quantizer needs K >= 1");
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("uniform quantizer needs step > 0");
  Quantizer q;
  q.kind_ = Kind::uniform;
  q.bound_ = levels;
  q.step_ = step;
  return q;
}

Quantizer Quantizer::custom(std::vector<double> thresholds, std::vector<std::int32_t> outputs) {
  if (outputs.size() != thresholds.size() + 1) {
    throw std::invalid_argument("custom quantizer needs one more output than thresholds");
  }
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i - 1] < thresholds[i])) {
      throw std::invalid_argument("custom quantizer thresholds must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (outputs[i - 1] > outputs[i]) throw std::invalid_argument("custom quantizer outputs must be non-decreasing");
  }
  Quantizer q;
  q.kind_ = Kind::custom;
  q.thresholds_ = std::move(thresholds);
  q.outputs_ = std::move(outputs);
  if (q(0.0) != 0) throw std::invalid_argument("custom quantizer must map 0 to 0");
  q.bound_ = std::max(std::abs(q.outputs_.front()), std::abs(q.outputs_.back()));
  return q;
}

namespace {

template <class T>
T parse_number(std::string_view field, std::string_view whole) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad number '" + std::string(field) + "' in quantizer '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Quantizer Quantizer::parse(std::string_view text) {
  if (text == "sign") return sign();
  constexpr std::string_view prefix = "uniform:";
  if (text.starts_with(prefix)) {
    auto rest = text.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected uniform:K:STEP, got '" + std::string(text) + "'");
    }
    auto levels = parse_number<std::int32_t>(rest.substr(0, colon), text);
    auto step = parse_number<double>(rest.substr(colon + 1), text);
    try {
      return uniform(levels, step);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
  }
  throw ParseError("unknown quantizer '" + std::string(text) + "' (expected sign or uniform:K:STEP)");
}

std::int32_t Quantizer::operator()(double r) const {
  switch (kind_) {
    case Kind::sign:
      return (r > 0.0) - (r < 0.0);
    case Kind::uniform: {
      const double level = std::round(r / step_);
      return static_cast<std::int32_t>(std::clamp(level, -static_cast<double>(bound_), static_cast<double>(bound_)));
    }
    case Kind::custom: {
      auto idx = std::upper_bound(thresholds_.begin(), thresholds_.end(), r) - thresholds_.begin();
      return outputs_[static_cast<std::size_t>(idx)];
    }
  }
  return 0;
}

std::string Quantizer::to_string() const {
  switch (kind_) {
    case Kind::sign:
      return "sign";
    case Kind::uniform: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), step_);
      return "uniform:" + std::to_string(bound_) + ":" + std::string(buf, ptr);
    }
    case Kind::custom:
      return "custom:" + std::to_string(thresholds_.size());
  }
  return {};
}

IntSignal apply(const Quantizer& q, const Signal& s) {
  std::vector<std::int32_t> out;
  out.reserve(s.len());
  for (double v : s.samples()) out.push_back(q(v));
  return IntSignal(s.start(), std::move(out), q.bound());
}

Quantizer random_monotone(std::uint64_t seed, std::int32_t levels, int breakpoints, double scale) {
  if (levels < 1) throw std::invalid_argument("random_monotone needs K >= 1");
  if (breakpoints < 1) throw std::invalid_argument("random_monotone needs at least one breakpoint");
  Rng rng(seed);
  const auto negatives = static_cast<int>(rng.uniform_int(0, breakpoints));
  const int positives = breakpoints - negatives;

  auto magnitudes = [&](int count) {
    std::vector<double> m;
    while (static_cast<int>(m.size()) < count) {
      double v = scale * std::exp(rng.uniform(std::log(0.01), std::log(2.0)));
      if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
    }
    std::sort(m.begin(), m.end());
    return m;
  };
  // Output magnitudes per side, outermost pinned at the bound.
  auto side_outputs = [&](int count) {
    std::vector<std::int32_t> o;
    for (int i = 0; i < count; ++i) o.push_back(static_cast<std::int32_t>(rng.uniform_int(0, levels)));
    std::sort(o.begin(), o.end());
    if (!o.empty()) o.back() = levels;
    return o;
  };

  auto neg_mag = magnitudes(negatives);
  auto pos_mag = magnitudes(positives);
  auto neg_out = side_outputs(negatives);
  auto pos_out = side_outputs(positives);

  std::vector<double> thresholds;
  std::vector<std::int32_t> outputs;
  // Intervals below the most negative threshold first.
  for (int i = negatives - 1; i >= 0; --i) {
    thresholds.push_back(-neg_mag[static_cast<std::size_t>(i)]);
    outputs.push_back(-neg_out[static_cast<std::size_t>(i)]);
  }
  outputs.push_back(0);
  for (int i = 0; i < positives; ++i) {
    thresholds.push_back(pos_mag[static_cast<std::size_t>(i)]);
    outputs.push_back(pos_out[static_cast<std::size_t>(i)]);
  }
  return Quantizer::custom(std::move(thresholds), std::move(outputs));
}

}  // namespace qxcorr
