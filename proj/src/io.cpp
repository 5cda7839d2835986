#include "wavedict/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wavedict {

namespace {

int stream_bit(std::span<const std::uint8_t> bytes, std::size_t index,
               BitOrder order) {
  const std::uint8_t byte = bytes[index / 8];
  const int within = static_cast<int>(index % 8);
  const int shift = order == BitOrder::lsb_first ? within : 7 - within;
  return (byte >> shift) & 1;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  return out;
}

}  // namespace

std::vector<std::uint16_t> unpack_ubit11(std::span<const std::uint8_t> bytes,
                                         BitOrder order) {
  const std::size_t sample_count = bytes.size() * 8 / 11;
  std::vector<std::uint16_t> samples;
  samples.reserve(sample_count);
  for (std::size_t s = 0; s < sample_count; ++s) {
    std::uint16_t value = 0;
    for (int t = 0; t < 11; ++t) {
      value = static_cast<std::uint16_t>(
          value | (stream_bit(bytes, s * 11 + t, order) << t));
    }
    samples.push_back(value);
  }
  return samples;
}

RawRecord read_ubit11(const std::filesystem::path& path, BitOrder order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open record: " + path.string());
  }
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                        std::istreambuf_iterator<char>()};
  RawRecord record;
  record.source = path.string();
  record.samples = unpack_ubit11(bytes, order);
  return record;
}

std::vector<std::uint8_t> pack_ubit11(std::span<const std::uint16_t> samples,
                                      BitOrder order) {
  std::vector<std::uint8_t> bytes((samples.size() * 11 + 7) / 8, 0);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (int t = 0; t < 11; ++t) {
      if ((samples[s] >> t) & 1) {
        const std::size_t index = s * 11 + t;
        const int within = static_cast<int>(index % 8);
        const int shift = order == BitOrder::lsb_first ? within : 7 - within;
        bytes[index / 8] |= static_cast<std::uint8_t>(1u << shift);
      }
    }
  }
  return bytes;
}

Eigen::VectorXd to_signal(const RawRecord& record) {
  Eigen::VectorXd f(static_cast<Eigen::Index>(record.samples.size()));
  for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = record.samples[i];
  return f;
}

Eigen::VectorXd read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open signal file: " + path.string());
  }
  std::vector<double> values;
  std::string line;
  for (long line_no = 1; std::getline(in, line); ++line_no) {
    std::stringstream fields(line);
    std::string token;
    while (std::getline(fields, token, ',')) {
      // trim surrounding whitespace
      const auto begin = token.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      const auto end = token.find_last_not_of(" \t\r");
      token = token.substr(begin, end - begin + 1);

      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw std::runtime_error("parse error at line " +
                                 std::to_string(line_no) + ": '" + token +
                                 "'");
      }
      values.push_back(value);
    }
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(
                                               values.size()));
}

void write_outputs(const SignalModelResult& result,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  {
    std::ofstream out = open_for_write(dir / "model.jsonl");
    nlohmann::json header{{"family", result.family},
                          {"N_b", result.segment_len},
                          {"j", result.levels},
                          {"b", result.b},
                          {"M_c", result.n_cosine},
                          {"prd0", result.prd0},
                          {"Q", result.segments.size()},
                          {"PRD", result.prd_global},
                          {"SR", result.sr_global}};
    out << header.dump() << '\n';
    for (std::size_t q = 0; q < result.segments.size(); ++q) {
      const SegmentModel& seg = result.segments[q];
      nlohmann::json row{{"q", q + 1},
                         {"k", seg.atom_indices.size()},
                         {"indices", seg.atom_indices},
                         {"prd", seg.prd}};
      auto& coeffs = row["coeffs"] = nlohmann::json::array();
      for (Eigen::Index i = 0; i < seg.coeffs.size(); ++i) {
        coeffs.push_back(seg.coeffs(i));
      }
      // sr is infinite for an empty segment; JSON has no inf, so emit null.
      if (std::isfinite(seg.sr)) {
        row["sr"] = seg.sr;
      } else {
        row["sr"] = nullptr;
      }
      out << row.dump() << '\n';
    }
  }

  {
    std::ofstream out = open_for_write(dir / "reconstruction.csv");
    for (Eigen::Index i = 0; i < result.reconstruction.size(); ++i) {
      out << format_double(result.reconstruction(i)) << '\n';
    }
  }

  {
    std::ofstream out = open_for_write(dir / "overlay.csv");
    out << "sample,f,reconstruction,error\n";
    const Eigen::Index limit =
        std::min<Eigen::Index>(2000, result.truncated_signal.size());
    for (Eigen::Index i = 0; i < limit; ++i) {
      const double original = result.truncated_signal(i);
      const double approx = result.reconstruction(i);
      out << (i + 1) << ',' << format_double(original) << ','
          << format_double(approx) << ',' << format_double(original - approx)
          << '\n';
    }
  }

  {
    std::ofstream out = open_for_write(dir / "sparsity.csv");
    out << "q,inv_sr\n";
    for (std::size_t q = 0; q < result.segments.size(); ++q) {
      const double sr = result.segments[q].sr;
      const double inv = std::isfinite(sr) ? 1.0 / sr : 0.0;
      out << (q + 1) << ',' << format_double(inv) << '\n';
    }
  }
}

}  // namespace wavedict
