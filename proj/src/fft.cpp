#include "qxcorr/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qxcorr/error.hpp"

namespace qxcorr {

template <class T>
FftPlan<T>::FftPlan(std::size_t n) : n_(n) {
  if (!is_pow2(n)) throw BadLength("FFT length " + std::to_string(n) + " is not a power of two");
  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = {static_cast<T>(std::cos(angle)), static_cast<T>(std::sin(angle))};
  }
  bitrev_.resize(n);
  unsigned log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (unsigned b = 0; b < log2n; ++b) r |= ((i >> b) & 1U) << (log2n - 1 - b);
    bitrev_[i] = r;
  }
}

template <class T>
void FftPlan<T>::forward(std::span<std::complex<T>> c) const {
  transform(c, false);
}

template <class T>
void FftPlan<T>::inverse(std::span<std::complex<T>> c) const {
  transform(c, true);
  const T scale = T(1) / static_cast<T>(n_);
  for (auto& v : c) v *= scale;
}

template <class T>
void FftPlan<T>::transform(std::span<std::complex<T>> c, bool inverse) const {
  if (c.size() != n_) {
    throw BadLength("FFT plan of size " + std::to_string(n_) + " given " + std::to_string(c.size()) + " values");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (i < bitrev_[i]) std::swap(c[i], c[bitrev_[i]]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t base = 0; base < n_; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        std::complex<T> w = twiddles_[j * stride];
        if (inverse) w = std::conj(w);
        // Plain complex product; std::complex operator* adds NaN/inf recovery.
        const std::complex<T> b = c[base + j + half];
        const std::complex<T> t{w.real() * b.real() - w.imag() * b.imag(), w.real() * b.imag() + w.imag() * b.real()};
        const std::complex<T> a = c[base + j];
        c[base + j] = a + t;
        c[base + j + half] = a - t;
      }
    }
  }
}

template class FftPlan<float>;
template class FftPlan<double>;

void fft(std::span<std::complex<double>> c, bool inverse) {
  FftPlan<double> plan(c.size());
  if (inverse) {
    plan.inverse(c);
  } else {
    plan.forward(c);
  }
}

}  // namespace qxcorr
