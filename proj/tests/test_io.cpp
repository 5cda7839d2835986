#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "wavedict/io.hpp"
#include "wavedict/signal_model.hpp"

using wavedict::BitOrder;
using wavedict::RawRecord;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("wavedict_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

fs::path write_bytes(const fs::path& dir, const char* name,
                     std::initializer_list<unsigned char> bytes) {
  const fs::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  for (unsigned char b : bytes) out.put(static_cast<char>(b));
  return p;
}

fs::path write_text(const fs::path& dir, const char* name,
                    const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

}  // namespace

TEST_CASE("packed samples decode least-significant bit first") {
  TempDir tmp;

  // eleven 1-bits -> 2047, remaining five bits dropped
  RawRecord rec =
      wavedict::read_ubit11(write_bytes(tmp.path, "a.dat", {0xFF, 0x07}));
  REQUIRE(rec.samples.size() == 1);
  CHECK(rec.samples[0] == 2047);

  // first stream bit is the sample's least significant bit
  rec = wavedict::read_ubit11(write_bytes(tmp.path, "b.dat", {0x01, 0x00}));
  REQUIRE(rec.samples.size() == 1);
  CHECK(rec.samples[0] == 1);

  // stream bit 10 (bit 2 of the second byte) is the sample's MSB
  rec = wavedict::read_ubit11(write_bytes(tmp.path, "c.dat", {0x00, 0x04}));
  REQUIRE(rec.samples.size() == 1);
  CHECK(rec.samples[0] == 1024);

  // stream bit 11 (bit 3 of the second byte) belongs to the dropped tail
  rec = wavedict::read_ubit11(write_bytes(tmp.path, "d.dat", {0x00, 0x08}));
  REQUIRE(rec.samples.size() == 1);
  CHECK(rec.samples[0] == 0);

  // empty file: zero samples, not an error
  rec = wavedict::read_ubit11(write_bytes(tmp.path, "e.dat", {}));
  CHECK(rec.samples.empty());

  CHECK_THROWS_AS(wavedict::read_ubit11(tmp.path / "missing.dat"),
                  std::runtime_error);
}

TEST_CASE("pack and unpack round-trip") {
  TempDir tmp;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> value(0, 2047);
  std::uniform_int_distribution<int> count(0, 64);

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint16_t> samples(count(rng));
    for (auto& s : samples) s = static_cast<std::uint16_t>(value(rng));

    const auto bytes = wavedict::pack_ubit11(samples);
    const fs::path p = tmp.path / "roundtrip.dat";
    {
      std::ofstream out(p, std::ios::binary);
      out.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
    }
    const RawRecord rec = wavedict::read_ubit11(p);
    const std::size_t expected = bytes.size() * 8 / 11;
    REQUIRE(rec.samples.size() == expected);
    for (std::size_t i = 0; i < std::min(expected, samples.size()); ++i) {
      CHECK(rec.samples[i] == samples[i]);
    }
  }
}

TEST_CASE("msb-first order is the within-byte mirror") {
  TempDir tmp;
  const std::vector<std::uint16_t> samples = {1, 1024, 700};
  const auto bytes = wavedict::pack_ubit11(samples, BitOrder::msb_first);
  const fs::path p = tmp.path / "msb.dat";
  {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  const RawRecord rec = wavedict::read_ubit11(p, BitOrder::msb_first);
  REQUIRE(rec.samples.size() == 3);
  CHECK(rec.samples[0] == 1);
  CHECK(rec.samples[1] == 1024);
  CHECK(rec.samples[2] == 700);

  // the two orders disagree on non-palindromic bytes
  const RawRecord crossed = wavedict::read_ubit11(p, BitOrder::lsb_first);
  CHECK(crossed.samples[0] != 1);
}

TEST_CASE("csv reader accepts rows and comma lists") {
  TempDir tmp;
  const Eigen::VectorXd rows =
      wavedict::read_csv(write_text(tmp.path, "rows.csv", "1\n2\n3\n"));
  REQUIRE(rows.size() == 3);
  CHECK(rows(1) == 2.0);

  const Eigen::VectorXd inline_list =
      wavedict::read_csv(write_text(tmp.path, "list.csv", "1,2.5,3e2\n"));
  REQUIRE(inline_list.size() == 3);
  CHECK(inline_list(2) == 300.0);

  CHECK_THROWS_WITH_AS(
      wavedict::read_csv(write_text(tmp.path, "bad.csv", "1\nx\n3\n")),
      doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("write_outputs on an empty result emits only headers") {
  TempDir tmp;
  wavedict::SignalModelResult empty;
  empty.family = "Short3";
  const fs::path dir = tmp.path / "empty";
  wavedict::write_outputs(empty, dir);
  std::ifstream model(dir / "model.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(model, line)) ++lines;
  CHECK(lines == 1);
  std::ifstream rec(dir / "reconstruction.csv");
  lines = 0;
  while (std::getline(rec, line)) ++lines;
  CHECK(lines == 0);
}

TEST_CASE("write_outputs emits the four artifacts") {
  TempDir tmp;
  Eigen::VectorXd f(100);
  for (int i = 0; i < 100; ++i) {
    f(i) = 10.0 + std::sin(i / 7.0) + (i % 31 == 0 ? 4.0 : 0.0);
  }
  const auto result =
      wavedict::signal_model(f, 50, 1.0, "Short2", {2, 3}, 0.5, 5);
  const fs::path dir = tmp.path / "out";
  wavedict::write_outputs(result, dir);

  std::ifstream model(dir / "model.jsonl");
  REQUIRE(model.good());
  std::string line;
  int lines = 0;
  while (std::getline(model, line)) ++lines;
  CHECK(lines == 3);  // header + one record per segment

  std::ifstream rec(dir / "reconstruction.csv");
  lines = 0;
  while (std::getline(rec, line)) ++lines;
  CHECK(lines == 100);  // Q * N_b rows

  std::ifstream overlay(dir / "overlay.csv");
  lines = 0;
  while (std::getline(overlay, line)) ++lines;
  CHECK(lines == 101);  // header + min(2000, N)

  std::ifstream sparsity(dir / "sparsity.csv");
  lines = 0;
  while (std::getline(sparsity, line)) ++lines;
  CHECK(lines == 3);  // header + Q
}
