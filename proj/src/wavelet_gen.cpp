#include "wavedict/wavelet_gen.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "wavedict/filters.hpp"

namespace wavedict {

Eigen::MatrixXd refinement_matrix(const Eigen::VectorXd& h_normalized) {
  const Eigen::Index K = h_normalized.size() - 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(K, K);
  for (Eigen::Index i = 1; i <= K; ++i) {
    for (Eigen::Index j = 1; j <= K; ++j) {
      const Eigen::Index k = 2 * i - j;
      if (k >= 1 && k <= K + 1) A(i - 1, j - 1) = h_normalized(k - 1);
    }
  }
  return A;
}

Eigen::VectorXd integer_values(const Eigen::VectorXd& h_normalized) {
  const Eigen::Index K = h_normalized.size() - 1;
  if (K < 1) throw std::invalid_argument("scaling filter needs >= 2 taps");

  const Eigen::MatrixXd A = refinement_matrix(h_normalized);
  Eigen::EigenSolver<Eigen::MatrixXd> eig(A);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigen decomposition of refinement matrix failed");
  }

  // Eigenvalue-1 selection exactly as the cascade setup prescribes:
  // |lambda - 1| < 1e-7 and multiplicity 1.
  Eigen::Index column = -1;
  int multiplicity = 0;
  for (Eigen::Index i = 0; i < K; ++i) {
    if (std::abs(eig.eigenvalues()(i) - std::complex<double>(1.0, 0.0)) <
        1e-7) {
      column = i;
      ++multiplicity;
    }
  }
  if (multiplicity != 1) {
    throw std::runtime_error(
        "Impossible to construct scaling function: eigenvalue 1 must have "
        "multiplicity 1");
  }

  Eigen::VectorXd values = eig.eigenvectors().col(column).real();
  // Fix the scale: sum(values) = 1 makes phi reproducible and gives the
  // partition-of-unity normalization. Dividing by the (signed) sum also
  // flips a negative-sum eigenvector.
  const double sum = values.sum();
  if (std::abs(sum) <= 1e-12 * values.cwiseAbs().sum()) {
    throw std::runtime_error(
        "scaling-function eigenvector has zero sum; cannot normalize");
  }
  return values / sum;
}

SampledGenerators wavelet_gen(const Eigen::VectorXd& h,
                              const Eigen::VectorXd& g, int u) {
  if (u < 1) throw std::invalid_argument("refinement level u must be >= 1");
  if (h.size() < 2 || g.size() < 2) {
    throw std::invalid_argument("filters need at least 2 taps");
  }

  const Eigen::VectorXd hn = normalize_scaling_filter(h);
  const long K = static_cast<long>(hn.size()) - 1;
  const long M = static_cast<long>(g.size()) - 1;
  const long pow_u = 1L << u;

  Eigen::VectorXd phi = Eigen::VectorXd::Zero(K * pow_u + 1);
  const Eigen::VectorXd at_integers = integer_values(hn);
  for (long l = 0; l < K; ++l) phi(l * pow_u) = at_integers(l);

  // Fill the odd multiples of 1/2^i from the coarser grid, i = 1..u.
  // All index arithmetic stays integral: x*2^u for x = (2l-1)/2^i is
  // (2l-1)*2^(u-i).
  for (int i = 1; i <= u; ++i) {
    const long step = 1L << (u - i);  // x*2^u increment of the new points
    for (long l = 1; l <= K * (1L << (i - 1)); ++l) {
      const long x2u = (2 * l - 1) * step;
      double value = 0.0;
      for (long k = 1; k <= K + 1; ++k) {
        const long arg2u = 2 * x2u + (1 - k) * pow_u;  // (2x+1-k)*2^u
        if (arg2u >= 0 && arg2u <= K * pow_u) value += hn(k - 1) * phi(arg2u);
      }
      phi(x2u) = value;
    }
  }

  // psi on the half-resolution grid via the shifted-block accumulation.
  const long pow_u1 = 1L << (u - 1);
  Eigen::VectorXd psi = Eigen::VectorXd::Zero((K + M) * pow_u1 + 1);
  for (long k = 1; k <= M + 1; ++k) {
    const long offset = (k - 1) * pow_u1;
    for (long i = 0; i <= K * pow_u1; ++i) {
      psi(offset + i) += g(k - 1) * phi(2 * i);
    }
  }

  SampledGenerators out;
  out.phi = std::move(phi);
  out.psi = std::move(psi);
  out.u = u;
  out.scaling_support = static_cast<int>(K);
  out.wavelet_support = static_cast<int>((K + M) / 2);
  return out;
}

}  // namespace wavedict
