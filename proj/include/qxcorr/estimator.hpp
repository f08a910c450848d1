#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qxcorr/bignat.hpp"
#include "qxcorr/quantize.hpp"
#include "qxcorr/signal.hpp"

namespace qxcorr {

// Which correlation kernel produced the peak search input.
enum class Method { ks, bf, real_bf, real_fft };

std::string_view to_string(Method method);
// "ks" | "bf" | "real_bf" | "real_fft". Throws std::invalid_argument.
Method parse_method(std::string_view name);

struct EstimationResult {
  std::vector<std::int64_t> lags;        // surviving peak lags, ascending
  std::vector<std::int64_t> candidates;  // argmax set before tie-breaking
  std::int64_t peak_value_int = 0;       // integer CCF maximum (quantized paths)
  double peak_value = 0.0;               // real CCF maximum (real paths)
  bool tie_broken = false;               // candidates had >= 2 lags and were refined
  std::vector<double> tie_break_values;  // real CCF at each candidate when refined
  Method method = Method::ks;
};

struct EstimateOptions {
  Method method = Method::ks;
  // Return the raw integer argmax set without consulting the real CCF.
  bool until_line_4 = false;
  MulBackend backend = MulBackend::ssa;
};

// All lags attaining the exact maximum, ascending. Throws std::invalid_argument
// on an empty correlogram.
template <class T>
std::vector<std::int64_t> argmax_set(const Correlogram<T>& c);

// Quantize both signals, correlate the integer sequences, take the argmax set
// and, when it holds several lags, keep those maximizing the unquantized CCF
// (evaluated only at the tied lags). Throws DegenerateQuantization if either
// quantized signal is all zero; std::invalid_argument for a real method.
EstimationResult estimate(const Signal& x, const Signal& y, const Quantizer& phi, const Quantizer& psi,
                          const EstimateOptions& options = {});

// Argmax set of the unquantized CCF via Method::real_bf or Method::real_fft.
// Throws DegenerateInput for an all-zero input.
EstimationResult estimate_real(const Signal& x, const Signal& y, Method method = Method::real_fft);

}  // namespace qxcorr
