#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "wavedict/filters.hpp"

namespace wavedict {

enum class AtomKind { scaling, wavelet, cosine };
enum class AtomLocality { inner, boundary };

/// Identifies the function behind one dictionary column. For scaling and
/// wavelet atoms (level, shift) describe phi(2^level x - b*shift) or
/// psi(2^level x - b*shift); an atom is inner when its whole support lies
/// in the segment interval, boundary otherwise. For cosine atoms `shift`
/// stores the frequency index n-1 and `level` is unused.
struct AtomDescriptor {
  int level = 0;
  int shift = 0;
  AtomLocality locality = AtomLocality::inner;
  AtomKind kind = AtomKind::scaling;
};

/// Parameters of a wavelet dictionary on a segment of n_points samples:
/// decomposition levels (ascending) and the dyadic translation factor
/// b = 2^-r_b. b = 1 gives the basis grid, b < 1 a redundant dictionary.
struct DictionaryParams {
  int n_points = 0;
  std::vector<int> levels;
  double b = 1.0;
};

struct WaveletDictionary {
  Eigen::MatrixXd matrix;  // n_points x M_w
  // counts[0] = number of scaling atoms at levels[0];
  // counts[1+l] = number of wavelet atoms at levels[l].
  std::vector<int> counts;
  std::vector<AtomDescriptor> columns;  // one per matrix column
  int removed_columns = 0;  // near-zero columns dropped at normalization
};

/// Cosine block first, wavelet block second; OOMP atom indices refer to
/// this combined column order.
struct FullDictionary {
  Eigen::MatrixXd matrix;
  std::vector<AtomDescriptor> columns;
  std::vector<int> counts;  // wavelet-block per-level counts
  int n_cosine = 0;
  int removed_columns = 0;
};

/// Builds the un-normalized wavelet dictionary: scaling atoms at
/// levels[0] followed by wavelet atoms per level, each level's shifts in
/// ascending order. Levels with no inner function are pruned; pruning
/// everything or having too few points for the finest level is an error.
WaveletDictionary wavelet_dict(Family family, int n_points,
                               std::vector<int> levels, double b);

/// Discrete cosine block: entry (k,n) = cos(pi(2k-1)(n-1)/(2 n_points))
/// with unit-normalized columns. Requires 0 <= n_cosine <= n_points.
Eigen::MatrixXd dcos(int n_points, int n_cosine);

/// Rescales each column to Euclidean norm 1/sqrt(delta); columns whose
/// scaled norm is <= 1e-5 are removed. When kept_columns is non-null it
/// receives the original indices of the surviving columns.
Eigen::MatrixXd norm_dict(const Eigen::MatrixXd& dict, double delta = 1.0,
                          std::vector<Eigen::Index>* kept_columns = nullptr);

/// Validates parameters, builds the wavelet dictionary and normalizes its
/// columns (delta = 1). Descriptors of removed columns are dropped in
/// lockstep and counted in removed_columns.
WaveletDictionary gen_dict(std::string_view name, DictionaryParams pars);
WaveletDictionary gen_dict(Family family, DictionaryParams pars);

/// [cosine block | wavelet block], both unit-normalized.
FullDictionary full_dictionary(std::string_view name,
                               const DictionaryParams& pars, int n_cosine);
FullDictionary full_dictionary(Family family, const DictionaryParams& pars,
                               int n_cosine);

const char* to_string(AtomKind kind);
const char* to_string(AtomLocality locality);

}  // namespace wavedict
