#include "qxcorr/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qxcorr {

namespace {

template <class T>
std::vector<T> reversed(std::span<const T> v) {
  return std::vector<T>(v.rbegin(), v.rend());
}

// [first, last) range of nonzero samples; first == last when all zero.
template <class T>
std::pair<std::size_t, std::size_t> nonzero_range(std::span<const T> v) {
  std::size_t first = 0;
  while (first < v.size() && v[first] == T{}) ++first;
  std::size_t last = v.size();
  while (last > first && v[last - 1] == T{}) --last;
  return {first, last};
}

}  // namespace

Signal::Signal() : start_(0), samples_{0.0} {}

Signal::Signal(std::int64_t start, std::vector<double> samples)
    : start_(start), samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("Signal needs at least one sample");
}

double Signal::operator[](std::int64_t n) const {
  if (n < start_ || n > last()) return 0.0;
  return samples_[static_cast<std::size_t>(n - start_)];
}

bool Signal::is_zero() const {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
}

IntSignal::IntSignal() : start_(0), samples_{0}, bound_(0) {}

IntSignal::IntSignal(std::int64_t start, std::vector<std::int32_t> samples)
    : start_(start), samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("IntSignal needs at least one sample");
  for (auto v : samples_) bound_ = std::max(bound_, static_cast<std::int32_t>(std::abs(v)));
}

IntSignal::IntSignal(std::int64_t start, std::vector<std::int32_t> samples, std::int32_t bound)
    : start_(start), samples_(std::move(samples)), bound_(bound) {
  if (samples_.empty()) throw std::invalid_argument("IntSignal needs at least one sample");
  if (bound_ < 0) throw std::invalid_argument("IntSignal bound must be nonnegative");
  for (auto v : samples_) {
    if (std::abs(static_cast<std::int64_t>(v)) > bound_) {
      throw std::invalid_argument("IntSignal sample " + std::to_string(v) + " exceeds bound " +
                                  std::to_string(bound_));
    }
  }
}

std::int32_t IntSignal::operator[](std::int64_t n) const {
  if (n < start_ || n > last()) return 0;
  return samples_[static_cast<std::size_t>(n - start_)];
}

bool IntSignal::is_zero() const {
  return std::all_of(samples_.begin(), samples_.end(), [](std::int32_t v) { return v == 0; });
}

Signal reverse(const Signal& s) { return Signal(-s.last(), reversed(s.samples())); }

IntSignal reverse(const IntSignal& s) {
  return IntSignal(-s.last(), reversed(s.samples()), s.bound());
}

Signal shift(const Signal& s, std::int64_t d) {
  return Signal(s.start() - d, {s.samples().begin(), s.samples().end()});
}

IntSignal shift(const IntSignal& s, std::int64_t d) {
  return IntSignal(s.start() - d, {s.samples().begin(), s.samples().end()}, s.bound());
}

Signal scale(const Signal& s, double a) {
  std::vector<double> out(s.samples().begin(), s.samples().end());
  for (auto& v : out) v *= a;
  return Signal(s.start(), std::move(out));
}

Signal trim(const Signal& s) {
  auto [first, last] = nonzero_range(s.samples());
  if (first == last) return Signal();
  return Signal(s.start() + static_cast<std::int64_t>(first),
                {s.samples().begin() + first, s.samples().begin() + last});
}

IntSignal trim(const IntSignal& s) {
  auto [first, last] = nonzero_range(s.samples());
  if (first == last) return IntSignal(0, {0}, s.bound());
  return IntSignal(s.start() + static_cast<std::int64_t>(first),
                   {s.samples().begin() + first, s.samples().begin() + last}, s.bound());
}

double l2_norm(const Signal& s) {
  // Mirrored pairs are summed first so the result is invariant under reverse().
  auto v = s.samples();
  const std::size_t n = v.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) acc += v[i] * v[i] + v[n - 1 - i] * v[n - 1 - i];
  if (n % 2 == 1) acc += v[n / 2] * v[n / 2];
  return std::sqrt(acc);
}

double l2_norm(const IntSignal& s) {
  // Exact integer sum of squares before the single rounding.
  std::int64_t acc = 0;
  for (auto v : s.samples()) acc += static_cast<std::int64_t>(v) * v;
  return std::sqrt(static_cast<double>(acc));
}

template <class T>
std::vector<double> Correlogram<T>::normalized() const {
  if (!norm_x || !norm_y) throw std::logic_error("correlogram has no norms attached");
  const double denom = *norm_x * *norm_y;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = static_cast<double>(values[i]) / denom;
  return out;
}

template struct Correlogram<std::int64_t>;
template struct Correlogram<double>;

}  // namespace qxcorr
