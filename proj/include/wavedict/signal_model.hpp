#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavedict/dictionary.hpp"
#include "wavedict/pursuit.hpp"

namespace wavedict {

/// Contiguous non-overlapping split into segments of segment_len samples;
/// the trailing remainder is discarded.
struct Partition {
  std::vector<Eigen::VectorXd> segments;
  Eigen::VectorXd truncated_signal;  // first Q*segment_len samples
};

Partition partition(const Eigen::VectorXd& f, int segment_len);

/// Per-segment distortion (prd, percent) and sparsity (sr = N_b/k) plus
/// their global counterparts PRD = 100 ||f - f_r|| / ||f|| and
/// SR = N / sum k(q).
struct Metrics {
  Eigen::VectorXd prd;
  Eigen::VectorXd sr;
  double prd_global = 0.0;
  double sr_global = 0.0;
};

Metrics metrics(const Eigen::VectorXd& f, const Eigen::VectorXd& reconstruction,
                std::span<const int> atoms_per_segment, int segment_len);

struct SegmentModel {
  Eigen::VectorXd approx;
  std::vector<int> atom_indices;  // 1-based columns of the full dictionary
  Eigen::VectorXd coeffs;
  double prd = 0.0;
  double sr = 0.0;  // +inf marks an empty (all-zero) segment
  StopReason stop = StopReason::tolerance;
};

struct SignalModelResult {
  // configuration echo
  std::string family;
  int segment_len = 0;
  std::vector<int> levels;
  double b = 1.0;
  int n_cosine = 0;
  double prd0 = 0.0;

  Eigen::VectorXd truncated_signal;
  Eigen::VectorXd reconstruction;
  std::vector<SegmentModel> segments;
  long long total_atoms = 0;  // K = sum of k(q)
  double prd_global = 0.0;
  double sr_global = 0.0;
};

/// Partitions f, builds D = [cosine | wavelet] once, approximates every
/// segment with oomp(segment, D, prd0*||segment||/100, 1) and aggregates
/// the metrics. Segments may be processed on `threads` workers; results
/// are identical to the single-threaded run.
SignalModelResult signal_model(const Eigen::VectorXd& f, int segment_len,
                               double prd0, std::string_view family,
                               std::vector<int> levels, double b, int n_cosine,
                               int threads = 1);

}  // namespace wavedict
