#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qxcorr/signal.hpp"

namespace qxcorr {

// Monotone non-decreasing map from reals to integers with q(0) = 0 and
// |q(r)| <= bound() everywhere.
class Quantizer {
 public:
  enum class Kind { sign, uniform, custom };

  // sign(r) with sign(0) = 0 (negative zero included).
  static Quantizer sign();

  // clamp(round_half_away_from_zero(r / step), -levels, levels).
  static Quantizer uniform(std::int32_t levels, double step);

  // Piecewise-constant map: r falls in interval i = #{t in thresholds : t <= r}
  // and maps to outputs[i]. Thresholds must be strictly increasing, outputs
  // non-decreasing with one more entry than thresholds, and the interval
  // holding 0 must map to 0. Throws std::invalid_argument otherwise.
  static Quantizer custom(std::vector<double> thresholds, std::vector<std::int32_t> outputs);

  // "sign" or "uniform:K:STEP". Throws ParseError.
  static Quantizer parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::int32_t bound() const { return bound_; }
  double step() const { return step_; }
  const std::vector<double>& thresholds() const { return thresholds_; }
  const std::vector<std::int32_t>& outputs() const { return outputs_; }

  std::int32_t operator()(double r) const;

  // Inverse of parse() for sign/uniform; custom maps print as "custom:<n>".
  std::string to_string() const;

 private:
  Quantizer() = default;

  Kind kind_ = Kind::sign;
  std::int32_t bound_ = 1;
  double step_ = 0.0;
  std::vector<double> thresholds_;
  std::vector<std::int32_t> outputs_;
};

// u = q o s, same support, bound = q.bound().
IntSignal apply(const Quantizer& q, const Signal& s);

// Deterministic random custom quantizer with `breakpoints` thresholds placed
// log-uniformly in scale * [0.01, 2] on both sides of zero and outputs in
// [-levels, levels]. Outermost outputs reach +-levels on every populated side.
Quantizer random_monotone(std::uint64_t seed, std::int32_t levels, int breakpoints, double scale = 1.0);

}  // namespace qxcorr
