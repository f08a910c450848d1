#include "qxcorr/realxcorr.hpp"

#include <algorithm>
#include <stdexcept>

namespace qxcorr {

template <class T>
void xcorr_bf_kernel(std::span<const T> x, std::span<const T> y, std::span<T> out) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  if (out.size() != nx + ny - 1) throw std::invalid_argument("xcorr_bf_kernel: output size mismatch");
  std::fill(out.begin(), out.end(), T{0});
  for (std::size_t i = 0; i < nx; ++i) {
    const T xi = x[i];
    T* row = out.data() + (nx - 1 - i);
    for (std::size_t j = 0; j < ny; ++j) row[j] += xi * y[j];
  }
}

template <class T>
FftCorrelator<T>::FftCorrelator(std::size_t len_x, std::size_t len_y)
    : len_x_(len_x), len_y_(len_y), plan_(next_pow2(len_x + len_y - 1)) {
  packed_.resize(plan_.size());
  product_.resize(plan_.size());
}

template <class T>
void FftCorrelator<T>::run(std::span<const T> x, std::span<const T> y, std::span<T> out) {
  if (x.size() != len_x_ || y.size() != len_y_ || out.size() != len_x_ + len_y_ - 1) {
    throw std::invalid_argument("FftCorrelator: input sizes differ from the planned ones");
  }
  const std::size_t m = plan_.size();
  std::fill(packed_.begin(), packed_.end(), std::complex<T>{});
  for (std::size_t k = 0; k < len_x_; ++k) packed_[k].real(x[k]);
  for (std::size_t k = 0; k < len_y_; ++k) packed_[k].imag(y[k]);
  plan_.forward(packed_);

  // Z = X + iY with X, Y Hermitian: X = (Z[k] + conj Z[-k]) / 2, Y = (Z[k] - conj Z[-k]) / 2i.
  for (std::size_t k = 0; k < m; ++k) {
    const std::complex<T> zk = packed_[k];
    const std::complex<T> zc = std::conj(packed_[(m - k) & (m - 1)]);
    const std::complex<T> xk = (zk + zc) * T(0.5);
    const std::complex<T> d = (zk - zc) * T(0.5);
    const std::complex<T> yk{d.imag(), -d.real()};
    // conj(xk) * yk
    product_[k] = {xk.real() * yk.real() + xk.imag() * yk.imag(), xk.real() * yk.imag() - xk.imag() * yk.real()};
  }
  plan_.inverse(product_);

  // Relative lag r in [-(nx-1), ny-1] lives at circular index r mod m.
  const auto nx = static_cast<std::int64_t>(len_x_);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t r = static_cast<std::int64_t>(i) - (nx - 1);
    out[i] = product_[static_cast<std::size_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r)].real();
  }
}

template void xcorr_bf_kernel<float>(std::span<const float>, std::span<const float>, std::span<float>);
template void xcorr_bf_kernel<double>(std::span<const double>, std::span<const double>, std::span<double>);
template class FftCorrelator<float>;
template class FftCorrelator<double>;

namespace {

RealCorrelogram empty_for(const Signal& x, const Signal& y) {
  RealCorrelogram c;
  c.first_lag = ccf_first_lag(x.start(), x.len(), y.start());
  c.values.resize(x.len() + y.len() - 1);
  c.norm_x = l2_norm(x);
  c.norm_y = l2_norm(y);
  return c;
}

}  // namespace

RealCorrelogram xcorr_real_bf(const Signal& x, const Signal& y) {
  RealCorrelogram c = empty_for(x, y);
  xcorr_bf_kernel<double>(x.samples(), y.samples(), c.values);
  return c;
}

RealCorrelogram xcorr_real_fft(const Signal& x, const Signal& y) {
  RealCorrelogram c = empty_for(x, y);
  FftCorrelator<double> correlator(x.len(), y.len());
  correlator.run(x.samples(), y.samples(), c.values);
  return c;
}

double xcorr_real_at(const Signal& x, const Signal& y, std::int64_t lag) {
  // m ranges over x's support intersected with y's support shifted by -lag.
  const std::int64_t lo = std::max(x.start(), y.start() - lag);
  const std::int64_t hi = std::min(x.last(), y.last() - lag);
  double acc = 0.0;
  for (std::int64_t m = lo; m <= hi; ++m) acc += x[m] * y[m + lag];
  return acc;
}

}  // namespace qxcorr
