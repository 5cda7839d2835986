#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wavedict/signal_model.hpp"

namespace wavedict {

/// Within-byte bit consumption order for the packed 11-bit reader. The
/// default matches the reference ubit11 reader (least significant bit of
/// each byte first); msb_first is provided in case a record was packed
/// with the opposite convention.
enum class BitOrder { lsb_first, msb_first };

struct RawRecord {
  std::vector<std::uint16_t> samples;  // each < 2^11
  std::string source;
};

/// Decodes consecutive 11-bit unsigned samples from a packed byte stream;
/// the first bit consumed for a sample is its least significant bit.
/// Trailing bits that do not fill a sample are discarded, so n bytes
/// yield floor(8n/11) samples.
std::vector<std::uint16_t> unpack_ubit11(std::span<const std::uint8_t> bytes,
                                         BitOrder order = BitOrder::lsb_first);

/// File front end for unpack_ubit11.
RawRecord read_ubit11(const std::filesystem::path& path,
                      BitOrder order = BitOrder::lsb_first);

/// Inverse of the reader, used to build fixtures and round-trip tests.
std::vector<std::uint8_t> pack_ubit11(std::span<const std::uint16_t> samples,
                                      BitOrder order = BitOrder::lsb_first);

Eigen::VectorXd to_signal(const RawRecord& record);

/// One numeric value per line or comma-separated values. Throws with the
/// offending line on malformed input.
Eigen::VectorXd read_csv(const std::filesystem::path& path);

/// Writes the model artifacts into `dir`:
///   model.jsonl         header record + one record per segment
///   reconstruction.csv  the approximated signal, one sample per line
///   overlay.csv         first 2000 samples: index, f, reconstruction, error
///   sparsity.csv        q, 1/sr(q)
/// Numeric CSV fields carry 17 significant digits.
void write_outputs(const SignalModelResult& result,
                   const std::filesystem::path& dir);

}  // namespace wavedict
