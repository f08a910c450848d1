#include "qxcorr/wav.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "qxcorr/error.hpp"

namespace qxcorr {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint16_t le16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

std::uint32_t le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) { out.insert(out.end(), tag, tag + 4); }

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

constexpr std::uint16_t format_pcm = 0x0001;
constexpr std::uint16_t format_extensible = 0xFFFE;

}  // namespace

WavPcm16 read_wav(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  const std::string name = path.string();
  if (bytes.size() < 12) throw ParseError(name + ": truncated RIFF header");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0 || std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw ParseError(name + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  WavPcm16 wav;
  std::size_t pos = 12;
  while (true) {
    if (pos + 8 > bytes.size()) throw ParseError(name + ": no data chunk");
    const std::uint8_t* head = bytes.data() + pos;
    const std::uint32_t size = le32(head + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) throw ParseError(name + ": chunk runs past end of file");

    if (std::memcmp(head, "fmt ", 4) == 0) {
      if (size < 16) throw ParseError(name + ": fmt chunk too short");
      const std::uint8_t* fmt = bytes.data() + body;
      std::uint16_t tag = le16(fmt);
      const std::uint16_t channels = le16(fmt + 2);
      wav.sample_rate = le32(fmt + 4);
      const std::uint16_t bits = le16(fmt + 14);
      if (tag == format_extensible && size >= 40) tag = le16(fmt + 24);  // SubFormat GUID leads with the tag
      if (tag != format_pcm) throw UnsupportedFormat(name + ": only integer PCM is supported");
      if (bits != 16) throw UnsupportedFormat(name + ": only 16-bit samples are supported, got " + std::to_string(bits));
      if (channels != 1) throw UnsupportedFormat(name + ": only mono is supported, got " + std::to_string(channels) + " channels");
      have_fmt = true;
    } else if (std::memcmp(head, "data", 4) == 0) {
      if (!have_fmt) throw ParseError(name + ": data chunk before fmt chunk");
      if (size % 2 != 0) throw ParseError(name + ": odd PCM16 data size");
      if (size == 0) throw ParseError(name + ": no samples");
      wav.samples.resize(size / 2);
      for (std::size_t i = 0; i < wav.samples.size(); ++i) {
        wav.samples[i] = static_cast<std::int16_t>(le16(bytes.data() + body + 2 * i));
      }
      return wav;
    }
    pos = body + size + (size & 1U);
  }
}

Signal load_wav(const std::filesystem::path& path) {
  const auto wav = read_wav(path);
  std::vector<double> out(wav.samples.size());
  std::transform(wav.samples.begin(), wav.samples.end(), out.begin(), [](std::int16_t v) { return v / 32768.0; });
  return Signal(0, std::move(out));
}

Signal load_raw(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  const std::string name = path.string();
  if (bytes.empty()) throw ParseError(name + ": empty raw file");
  if (bytes.size() % 4 != 0) throw ParseError(name + ": raw float32 file size is not a multiple of 4");
  std::vector<double> out(bytes.size() / 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const float f = std::bit_cast<float>(le32(bytes.data() + 4 * i));
    if (!std::isfinite(f)) throw ParseError(name + ": non-finite sample at index " + std::to_string(i));
    out[i] = f;
  }
  return Signal(0, std::move(out));
}

Signal load_signal(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".wav" ? load_wav(path) : load_raw(path);
}

void write_wav(const std::filesystem::path& path, std::span<const std::int16_t> samples, std::uint32_t sample_rate) {
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, format_pcm);
  put16(out, 1);
  put32(out, sample_rate);
  put32(out, sample_rate * 2);
  put16(out, 2);
  put16(out, 16);
  put_tag(out, "data");
  put32(out, data_bytes);
  for (auto s : samples) put16(out, static_cast<std::uint16_t>(s));
  write_file(path, out);
}

void write_wav(const std::filesystem::path& path, const Signal& s, std::uint32_t sample_rate) {
  std::vector<std::int16_t> pcm(s.len());
  for (std::size_t i = 0; i < pcm.size(); ++i) {
    const double v = std::round(s.samples()[i] * 32768.0);
    pcm[i] = static_cast<std::int16_t>(std::clamp(v, -32768.0, 32767.0));
  }
  write_wav(path, pcm, sample_rate);
}

void write_raw(const std::filesystem::path& path, const Signal& s) {
  std::vector<std::uint8_t> out;
  out.reserve(4 * s.len());
  for (double v : s.samples()) put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  write_file(path, out);
}

}  // namespace qxcorr
