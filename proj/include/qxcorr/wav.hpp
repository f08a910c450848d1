#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qxcorr/signal.hpp"

namespace qxcorr {

struct WavPcm16 {
  std::uint32_t sample_rate = 0;
  std::vector<std::int16_t> samples;
};

// Mono 16-bit PCM RIFF/WAVE. Throws ParseError on malformed or truncated
// files and UnsupportedFormat for other encodings or channel counts.
WavPcm16 read_wav(const std::filesystem::path& path);

// Samples divided by 32768, starting at index 0.
Signal load_wav(const std::filesystem::path& path);

// Contiguous little-endian float32 samples. Throws ParseError on a size that
// is not a multiple of four, an empty file, or a non-finite sample.
Signal load_raw(const std::filesystem::path& path);

// load_wav for ".wav" (any case), load_raw otherwise.
Signal load_signal(const std::filesystem::path& path);

void write_wav(const std::filesystem::path& path, std::span<const std::int16_t> samples, std::uint32_t sample_rate);

// Scales by 32768, rounds half away from zero, clamps to the PCM16 range.
void write_wav(const std::filesystem::path& path, const Signal& s, std::uint32_t sample_rate);

void write_raw(const std::filesystem::path& path, const Signal& s);

}  // namespace qxcorr
