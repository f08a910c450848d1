#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qxcorr {

// Finite-support real signal: samples[i] sits at index start + i, everything
// outside [start, start + len - 1] is zero. Always holds at least one sample.
class Signal {
 public:
  // Canonical all-zero signal: [0] at index 0.
  Signal();
  Signal(std::int64_t start, std::vector<double> samples);

  std::int64_t start() const { return start_; }
  std::int64_t last() const { return start_ + static_cast<std::int64_t>(samples_.size()) - 1; }
  std::size_t len() const { return samples_.size(); }
  std::span<const double> samples() const { return samples_; }

  // Value at absolute index n, zero outside the stored window.
  double operator[](std::int64_t n) const;

  bool is_zero() const;

  bool operator==(const Signal&) const = default;

 private:
  std::int64_t start_ = 0;
  std::vector<double> samples_;
};

// Integer signal with a magnitude bound K, max|samples| <= K.
class IntSignal {
 public:
  IntSignal();
  // Bound is the tight max|samples|.
  IntSignal(std::int64_t start, std::vector<std::int32_t> samples);
  // Throws std::invalid_argument if some |sample| exceeds bound.
  IntSignal(std::int64_t start, std::vector<std::int32_t> samples, std::int32_t bound);

  std::int64_t start() const { return start_; }
  std::int64_t last() const { return start_ + static_cast<std::int64_t>(samples_.size()) - 1; }
  std::size_t len() const { return samples_.size(); }
  std::span<const std::int32_t> samples() const { return samples_; }
  std::int32_t bound() const { return bound_; }

  std::int32_t operator[](std::int64_t n) const;

  bool is_zero() const;

  bool operator==(const IntSignal&) const = default;

 private:
  std::int64_t start_ = 0;
  std::vector<std::int32_t> samples_;
  std::int32_t bound_ = 0;
};

// s~[m] = s[-m].
Signal reverse(const Signal& s);
IntSignal reverse(const IntSignal& s);

// s'[n] = s[n + d]; a pure relabeling of the start index.
Signal shift(const Signal& s, std::int64_t d);
IntSignal shift(const IntSignal& s, std::int64_t d);

Signal scale(const Signal& s, double a);

// Drops leading/trailing zeros. An all-zero signal becomes the canonical [0]@0.
Signal trim(const Signal& s);
IntSignal trim(const IntSignal& s);

double l2_norm(const Signal& s);
double l2_norm(const IntSignal& s);

// Lag of the first stored value of the cross-correlation x * y (x leading).
constexpr std::int64_t ccf_first_lag(std::int64_t start_x, std::size_t len_x, std::int64_t start_y) {
  return start_y - (start_x + static_cast<std::int64_t>(len_x) - 1);
}

// Lag-indexed cross-correlation values; values[i] belongs to lag first_lag + i.
template <class T>
struct Correlogram {
  std::int64_t first_lag = 0;
  std::vector<T> values;
  // Optional norms of the two inputs, for the normalized view.
  std::optional<double> norm_x;
  std::optional<double> norm_y;

  std::size_t size() const { return values.size(); }
  std::int64_t last_lag() const { return first_lag + static_cast<std::int64_t>(values.size()) - 1; }
  std::int64_t lag_at(std::size_t i) const { return first_lag + static_cast<std::int64_t>(i); }
  bool contains(std::int64_t lag) const { return lag >= first_lag && lag <= last_lag(); }

  T at(std::int64_t lag) const {
    return contains(lag) ? values[static_cast<std::size_t>(lag - first_lag)] : T{};
  }

  // values / (norm_x * norm_y). Throws std::logic_error without both norms.
  std::vector<double> normalized() const;

  bool operator==(const Correlogram&) const = default;
};

using IntCorrelogram = Correlogram<std::int64_t>;
using RealCorrelogram = Correlogram<double>;

extern template struct Correlogram<std::int64_t>;
extern template struct Correlogram<double>;

}  // namespace qxcorr
