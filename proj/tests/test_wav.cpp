#include <doctest.h>

#include <qxcorr/error.hpp>
#include <qxcorr/wav.hpp>

#include <cstring>
#include <filesystem>
#include <fstream>

using namespace qxcorr;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qxcorr_wav_tests";
  fs::create_directories(dir);
  return dir / name;
}

void put16(std::string& b, std::uint16_t v) {
  b.push_back(static_cast<char>(v & 0xff));
  b.push_back(static_cast<char>(v >> 8));
}
void put32(std::string& b, std::uint32_t v) {
  put16(b, static_cast<std::uint16_t>(v & 0xffff));
  put16(b, static_cast<std::uint16_t>(v >> 16));
}

// Hand-assembled RIFF file, independent of write_wav.
std::string make_wav(std::uint16_t channels, std::uint16_t bits, const std::vector<std::int16_t>& samples) {
  std::string data;
  for (auto s : samples) put16(data, static_cast<std::uint16_t>(s));
  std::string b = "RIFF";
  put32(b, static_cast<std::uint32_t>(4 + 8 + 16 + 8 + 8 + data.size()));
  b += "WAVE";
  b += "LIST";
  put32(b, 0);
  b += "fmt ";
  put32(b, 16);
  put16(b, 1);
  put16(b, channels);
  put32(b, 8000);
  put32(b, 8000u * channels * bits / 8);
  put16(b, static_cast<std::uint16_t>(channels * bits / 8));
  put16(b, bits);
  b += "data";
  put32(b, static_cast<std::uint32_t>(data.size()));
  return b + data;
}

void write_file(const fs::path& p, const std::string& bytes) {
  std::ofstream(p, std::ios::binary) << bytes;
}

}  // namespace

TEST_CASE("pcm16 samples are scaled to [-1, 1)") {
  const auto p = temp_path("basic.wav");
  write_file(p, make_wav(1, 16, {0, 16384, -32768}));
  const auto w = read_wav(p);
  CHECK(w.sample_rate == 8000);
  CHECK(w.samples == std::vector<std::int16_t>{0, 16384, -32768});
  CHECK(load_wav(p) == Signal(0, {0.0, 0.5, -1.0}));
  CHECK(load_signal(p) == Signal(0, {0.0, 0.5, -1.0}));
}

TEST_CASE("malformed wav files") {
  const auto bytes = make_wav(1, 16, {1, 2, 3, 4});
  const auto truncated = temp_path("truncated.wav");
  write_file(truncated, bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(read_wav(truncated), ParseError);

  const auto stereo = temp_path("stereo.wav");
  write_file(stereo, make_wav(2, 16, {1, 2, 3, 4}));
  CHECK_THROWS_AS(read_wav(stereo), UnsupportedFormat);

  const auto wide = temp_path("wide.wav");
  write_file(wide, make_wav(1, 24, {1, 2, 3}));
  CHECK_THROWS_AS(read_wav(wide), UnsupportedFormat);

  const auto junk = temp_path("junk.wav");
  write_file(junk, "not a wave file at all");
  CHECK_THROWS_AS(read_wav(junk), ParseError);
  CHECK_THROWS(read_wav(temp_path("missing.wav")));
}

TEST_CASE("write and read back") {
  const auto p = temp_path("roundtrip.wav");
  const std::vector<std::int16_t> s{-32768, -1, 0, 1, 32767};
  write_wav(p, s, 44100);
  const auto w = read_wav(p);
  CHECK(w.sample_rate == 44100);
  CHECK(w.samples == s);

  write_wav(p, Signal(0, {0.5, -2.0, 0.25}), 16000);
  CHECK(read_wav(p).samples == std::vector<std::int16_t>{16384, -32768, 8192});
}

TEST_CASE("raw float32 files") {
  const auto p = temp_path("x.f32");
  const Signal s(0, {0.5, -0.25, 3.0});
  write_raw(p, s);
  CHECK(load_raw(p) == s);
  CHECK(load_signal(p) == s);

  const auto odd = temp_path("odd.f32");
  write_file(odd, "abcde");
  CHECK_THROWS_AS(load_raw(odd), ParseError);
  const auto empty = temp_path("empty.f32");
  write_file(empty, "");
  CHECK_THROWS_AS(load_raw(empty), ParseError);
  const auto nan = temp_path("nan.f32");
  const float bad = std::numeric_limits<float>::quiet_NaN();
  std::string b(4, '\0');
  std::memcpy(b.data(), &bad, 4);
  write_file(nan, b);
  CHECK_THROWS_AS(load_raw(nan), ParseError);
}
