// End-to-end checks of the qxcorr executable. QXCORR_CLI is its path.

#include <doctest.h>

#include <qxcorr/rng.hpp>
#include <qxcorr/wav.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QXCORR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path workdir() {
  const auto dir = fs::temp_directory_path() / "qxcorr_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::int16_t> noise(std::size_t n, std::uint64_t seed) {
  qxcorr::Rng rng(seed);
  std::vector<std::int16_t> v(n);
  for (auto& s : v) s = static_cast<std::int16_t>(rng.uniform_int(-20000, 20000));
  return v;
}

}  // namespace

TEST_CASE("estimate on wav files") {
  const auto dir = workdir();
  const auto ref = noise(4000, 1);
  qxcorr::write_wav(dir / "ref.wav", ref, 16000);

  auto r = run("estimate --ref " + (dir / "ref.wav").string() + " --query " + (dir / "ref.wav").string());
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lags"] == nlohmann::json::array({0}));
  CHECK(j["method"] == "ks");
  CHECK(j.contains("elapsed_seconds"));

  std::vector<std::int16_t> delayed(100, 0);
  delayed.insert(delayed.end(), ref.begin(), ref.end());
  qxcorr::write_wav(dir / "delayed.wav", delayed, 16000);
  r = run("estimate --ref " + (dir / "ref.wav").string() + " --query " + (dir / "delayed.wav").string() +
          " --method bf --sample-rate 16000");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["lags"] == nlohmann::json::array({100}));
  CHECK(j["lags_seconds"][0].get<double>() == doctest::Approx(100.0 / 16000.0));
}

TEST_CASE("estimate error paths") {
  const auto dir = workdir();
  auto r = run("estimate --ref " + (dir / "nope.wav").string() + " --query " + (dir / "nope.wav").string());
  CHECK(r.code == 2);
  CHECK(r.out.empty());

  qxcorr::write_wav(dir / "quiet.wav", std::vector<std::int16_t>{1, -1, 2}, 8000);
  r = run("estimate --ref " + (dir / "quiet.wav").string() + " --query " + (dir / "quiet.wav").string() +
          " --quantizer uniform:4:0.5");
  CHECK(r.code == 3);
  CHECK(r.out.empty());

  r = run("estimate --ref " + (dir / "quiet.wav").string() + " --query " + (dir / "quiet.wav").string() +
          " --quantizer bogus");
  CHECK(r.code == 2);
}

TEST_CASE("bench writes one row per method, size and K") {
  const auto out = workdir() / "bench.csv";
  fs::remove(out);
  auto r = run("bench --min-log2 6 --max-log2 8 --k 1,16 --out " + out.string());
  REQUIRE(r.code == 0);
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "method,N,K,trials,mean_seconds,stddev_seconds");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 3 * (2 * 2 + 2));
  CHECK(fs::exists(out.string() + ".meta.json"));

  r = run("bench --min-log2 6 --max-log2 8 --out " + out.string());
  CHECK(r.code == 2);
  r = run("bench --min-log2 9 --max-log2 8 --force --out " + out.string());
  CHECK(r.code == 2);
}

TEST_CASE("simulate is reproducible") {
  const auto a = workdir() / "sim_a.csv";
  const auto b = workdir() / "sim_b.csv";
  const std::string args = "simulate --small --snr-list -5,5 --trials 8 --seed 3 --quantizer sign --force --out ";
  REQUIRE(run(args + a.string()).code == 0);
  REQUIRE(run(args + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("snr_db,quantizer,mode,trials,correct,accuracy\n", 0) == 0);
  CHECK(run("simulate --small --trials 2 --out " + a.string()).code == 2);
  CHECK(run("simulate --small --snr-list 1,x --trials 2 --force --out " + a.string()).code == 2);
}

TEST_CASE("selftest") {
  const auto r = run("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("ks_vs_bf") != std::string::npos);
}
