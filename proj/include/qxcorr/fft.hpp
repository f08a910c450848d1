#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qxcorr {

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Precomputed radix-2 Cooley-Tukey transform of one power-of-two size.
template <class T>
class FftPlan {
 public:
  // Throws BadLength unless n is a power of two.
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  // Unnormalized forward DFT, in place: C[k] = sum c[j] e^{-2 pi i jk/n}.
  void forward(std::span<std::complex<T>> c) const;
  // Inverse DFT including the 1/n factor, in place.
  void inverse(std::span<std::complex<T>> c) const;

 private:
  void transform(std::span<std::complex<T>> c, bool inverse) const;

  std::size_t n_;
  std::vector<std::complex<T>> twiddles_;  // e^{-2 pi i k/n}, k < n/2
  std::vector<std::size_t> bitrev_;
};

extern template class FftPlan<float>;
extern template class FftPlan<double>;

// One-shot transform; builds a plan per call.
void fft(std::span<std::complex<double>> c, bool inverse);

}  // namespace qxcorr
