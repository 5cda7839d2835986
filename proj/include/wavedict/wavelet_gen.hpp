#pragma once

#include <Eigen/Dense>

namespace wavedict {

/// Scaling-function and wavelet values sampled on the dyadic grid l/2^u:
///   phi(m) = phi_fn((m-1)/2^u), m = 1..K*2^u+1   (0-based: phi[m-1])
///   psi(m) = psi_fn((m-1)/2^u), m = 1..(K+M)*2^(u-1)+1
/// where K and M are the filter support lengths.
struct SampledGenerators {
  Eigen::VectorXd phi;
  Eigen::VectorXd psi;
  int u = 0;
  int scaling_support = 0;  // K
  int wavelet_support = 0;  // s = (K+M)/2
};

/// K x K matrix A(i,j) = h(2i-j) with h zero-extended outside 1..K+1
/// (1-based indices). phi at the integers is the eigenvector of A at
/// eigenvalue 1.
Eigen::MatrixXd refinement_matrix(const Eigen::VectorXd& h_normalized);

/// Values of the scaling function at 0..K-1, rescaled so they sum to 1.
/// Requires h normalized to sum 2. Throws std::runtime_error when
/// eigenvalue 1 of the refinement matrix does not have multiplicity 1
/// (within 1e-7), or when the eigenvector sum vanishes.
Eigen::VectorXd integer_values(const Eigen::VectorXd& h_normalized);

/// Cascade evaluation of phi and psi on the grid l/2^u. The input h is
/// normalized internally; u must be >= 1.
SampledGenerators wavelet_gen(const Eigen::VectorXd& h,
                              const Eigen::VectorXd& g, int u);

}  // namespace wavedict
