#include "wavedict/signal_model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace wavedict {

Partition partition(const Eigen::VectorXd& f, int segment_len) {
  if (segment_len < 1) {
    throw std::invalid_argument("segment length must be positive");
  }
  if (f.size() < segment_len) {
    throw std::invalid_argument("signal shorter than one segment");
  }
  const Eigen::Index count = f.size() / segment_len;

  Partition part;
  part.truncated_signal = f.head(count * segment_len);
  part.segments.reserve(count);
  for (Eigen::Index q = 0; q < count; ++q) {
    part.segments.push_back(f.segment(q * segment_len, segment_len));
  }
  return part;
}

Metrics metrics(const Eigen::VectorXd& f, const Eigen::VectorXd& reconstruction,
                std::span<const int> atoms_per_segment, int segment_len) {
  const Eigen::Index count = static_cast<Eigen::Index>(atoms_per_segment.size());
  if (f.size() != reconstruction.size() ||
      f.size() != count * segment_len) {
    throw std::invalid_argument("metrics inputs have inconsistent lengths");
  }
  const double fnorm = f.norm();
  if (fnorm == 0.0) {
    throw std::invalid_argument("PRD is undefined for an all-zero signal");
  }

  Metrics out;
  out.prd.resize(count);
  out.sr.resize(count);
  long long total = 0;
  for (Eigen::Index q = 0; q < count; ++q) {
    const auto seg = f.segment(q * segment_len, segment_len);
    const auto rec = reconstruction.segment(q * segment_len, segment_len);
    const double norm_q = seg.norm();
    out.prd(q) = norm_q == 0.0 ? 0.0 : 100.0 * (seg - rec).norm() / norm_q;
    const int k = atoms_per_segment[q];
    out.sr(q) = k == 0 ? std::numeric_limits<double>::infinity()
                       : static_cast<double>(segment_len) / k;
    total += k;
  }
  out.prd_global = 100.0 * (f - reconstruction).norm() / fnorm;
  out.sr_global = total == 0
                      ? std::numeric_limits<double>::infinity()
                      : static_cast<double>(f.size()) / static_cast<double>(total);
  return out;
}

SignalModelResult signal_model(const Eigen::VectorXd& f, int segment_len,
                               double prd0, std::string_view family,
                               std::vector<int> levels, double b, int n_cosine,
                               int threads) {
  if (!(prd0 > 0.0)) throw std::invalid_argument("prd0 must be positive");

  Partition part = partition(f, segment_len);
  const int count = static_cast<int>(part.segments.size());

  const FullDictionary dict = full_dictionary(
      family, DictionaryParams{segment_len, levels, b}, n_cosine);

  SignalModelResult result;
  result.family = std::string(family);
  result.segment_len = segment_len;
  result.levels = std::move(levels);
  result.b = b;
  result.n_cosine = n_cosine;
  result.prd0 = prd0;
  result.truncated_signal = std::move(part.truncated_signal);
  result.segments.resize(count);

  const auto approximate = [&](int q) {
    const Eigen::VectorXd& seg = part.segments[q];
    SegmentModel& model = result.segments[q];
    if (seg.norm() == 0.0) {
      // Nothing to model; prd is undefined here, reported as 0 with an
      // infinite sparsity ratio.
      model.approx = Eigen::VectorXd::Zero(segment_len);
      model.prd = 0.0;
      model.sr = std::numeric_limits<double>::infinity();
      return;
    }
    const double tol = prd0 * seg.norm() / 100.0;
    PursuitResult run = oomp(seg, dict.matrix, tol, 1);
    model.approx = std::move(run.approx);
    model.atom_indices = std::move(run.indices);
    model.coeffs = std::move(run.coeffs);
    model.stop = run.stop;
    model.prd = 100.0 * (seg - model.approx).norm() / seg.norm();
    model.sr = static_cast<double>(segment_len) /
               static_cast<double>(model.atom_indices.size());
  };

  const int workers = std::clamp(threads, 1, count);
  if (workers <= 1) {
    for (int q = 0; q < count; ++q) approximate(q);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int q = next.fetch_add(1); q < count; q = next.fetch_add(1)) {
          approximate(q);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  result.reconstruction.resize(result.truncated_signal.size());
  std::vector<int> atoms(count);
  for (int q = 0; q < count; ++q) {
    result.reconstruction.segment(
        static_cast<Eigen::Index>(q) * segment_len, segment_len) =
        result.segments[q].approx;
    atoms[q] = static_cast<int>(result.segments[q].atom_indices.size());
    result.total_atoms += atoms[q];
  }

  const Metrics global =
      metrics(result.truncated_signal, result.reconstruction, atoms,
              segment_len);
  result.prd_global = global.prd_global;
  result.sr_global = global.sr_global;
  return result;
}

}  // namespace wavedict
