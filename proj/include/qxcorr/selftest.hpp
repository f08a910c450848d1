#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qxcorr {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  bool ok() const { return passed == cases; }
};

struct SelftestConfig {
  std::uint64_t seed = 1;
  std::size_t peak_invariance_cases = 100;
  std::size_t ks_vs_bf_cases = 100;
  std::size_t fft_vs_bf_cases = 20;
};

// Fast randomized invariant checks:
//  peak_invariance: the shift lag is in the quantized-CCF argmax set;
//  ks_vs_bf: Kronecker and brute-force integer CCFs agree exactly;
//  fft_vs_bf: FFT and brute-force real CCFs agree within 1e-9 |x||y|.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config = {});

// Human-readable pass/fail table, one line per suite.
std::string format_selftest(const std::vector<SuiteResult>& results);

}  // namespace qxcorr
