#include "qxcorr/estimator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qxcorr/error.hpp"
#include "qxcorr/intxcorr.hpp"
#include "qxcorr/realxcorr.hpp"

namespace qxcorr {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::ks:
      return "ks";
    case Method::bf:
      return "bf";
    case Method::real_bf:
      return "real_bf";
    case Method::real_fft:
      return "real_fft";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "ks") return Method::ks;
  if (name == "bf") return Method::bf;
  if (name == "real_bf") return Method::real_bf;
  if (name == "real_fft") return Method::real_fft;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

template <class T>
std::vector<std::int64_t> argmax_set(const Correlogram<T>& c) {
  if (c.values.empty()) throw std::invalid_argument("argmax_set of an empty correlogram");
  const T best = *std::max_element(c.values.begin(), c.values.end());
  std::vector<std::int64_t> lags;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == best) lags.push_back(c.lag_at(i));
  }
  return lags;
}

template std::vector<std::int64_t> argmax_set(const Correlogram<std::int64_t>&);
template std::vector<std::int64_t> argmax_set(const Correlogram<double>&);

EstimationResult estimate(const Signal& x, const Signal& y, const Quantizer& phi, const Quantizer& psi,
                          const EstimateOptions& options) {
  if (options.method != Method::ks && options.method != Method::bf) {
    throw std::invalid_argument("estimate() takes an integer method; use estimate_real() for " +
                                std::string(to_string(options.method)));
  }
  const IntSignal u = apply(phi, x);
  const IntSignal v = apply(psi, y);
  if (u.is_zero() || v.is_zero()) {
    throw DegenerateQuantization(std::string(u.is_zero() ? "reference" : "query") +
                                 " signal quantizes to all zeros; use a finer step or more levels");
  }

  const IntCorrelogram w = options.method == Method::ks ? xcorr_int_ks(u, v, options.backend) : xcorr_int_bf(u, v);

  EstimationResult result;
  result.method = options.method;
  result.candidates = argmax_set(w);
  result.peak_value_int = w.at(result.candidates.front());
  result.lags = result.candidates;
  if (options.until_line_4 || result.candidates.size() < 2) return result;

  result.tie_broken = true;
  result.tie_break_values.reserve(result.candidates.size());
  for (auto lag : result.candidates) result.tie_break_values.push_back(xcorr_real_at(x, y, lag));
  const double best = *std::max_element(result.tie_break_values.begin(), result.tie_break_values.end());
  result.lags.clear();
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    if (result.tie_break_values[i] == best) result.lags.push_back(result.candidates[i]);
  }
  return result;
}

EstimationResult estimate_real(const Signal& x, const Signal& y, Method method) {
  if (x.is_zero() || y.is_zero()) throw DegenerateInput("real estimate needs two nonzero signals");
  RealCorrelogram c;
  switch (method) {
    case Method::real_bf:
      c = xcorr_real_bf(x, y);
      break;
    case Method::real_fft:
      c = xcorr_real_fft(x, y);
      break;
    default:
      throw std::invalid_argument("estimate_real() takes real_bf or real_fft");
  }
  EstimationResult result;
  result.method = method;
  result.candidates = argmax_set(c);
  result.lags = result.candidates;
  result.peak_value = c.at(result.lags.front());
  return result;
}

}  // namespace qxcorr
