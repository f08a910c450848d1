#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qxcorr/fft.hpp"
#include "qxcorr/signal.hpp"

namespace qxcorr {

// Direct-sum cross-correlation over the full overlap range, ascending m per
// lag. Norms of x and y are attached.
RealCorrelogram xcorr_real_bf(const Signal& x, const Signal& y);

// Zero-padded FFT cross-correlation, conj(X) Y in the frequency domain.
RealCorrelogram xcorr_real_fft(const Signal& x, const Signal& y);

// (x * y)[lag] alone, by direct summation in ascending m.
double xcorr_real_at(const Signal& x, const Signal& y, std::int64_t lag);

// Raw kernel behind xcorr_real_bf on zero-based arrays; out has
// x.size() + y.size() - 1 entries, out[k] holding relative lag k - (|x| - 1).
template <class T>
void xcorr_bf_kernel(std::span<const T> x, std::span<const T> y, std::span<T> out);

// Reusable FFT correlator for fixed input lengths. Both real inputs share one
// complex forward transform (x in the real part, y in the imaginary part).
template <class T>
class FftCorrelator {
 public:
  FftCorrelator(std::size_t len_x, std::size_t len_y);

  std::size_t transform_size() const { return plan_.size(); }

  // Same output layout as xcorr_bf_kernel.
  void run(std::span<const T> x, std::span<const T> y, std::span<T> out);

 private:
  std::size_t len_x_;
  std::size_t len_y_;
  FftPlan<T> plan_;
  std::vector<std::complex<T>> packed_;
  std::vector<std::complex<T>> product_;
};

extern template void xcorr_bf_kernel<float>(std::span<const float>, std::span<const float>, std::span<float>);
extern template void xcorr_bf_kernel<double>(std::span<const double>, std::span<const double>, std::span<double>);
extern template class FftCorrelator<float>;
extern template class FftCorrelator<double>;

}  // namespace qxcorr
