#pragma once

#include <Eigen/Dense>

#include <vector>

namespace wavedict {

enum class StopReason {
  tolerance,      // residual norm reached tol
  exhausted,      // no admissible atom left, residual still above tol
  dimension_cap,  // selected as many atoms as the segment has samples
};

struct PursuitResult {
  Eigen::VectorXd approx;              // orthogonal projection onto the atoms
  std::vector<int> indices;            // 1-based dictionary columns, in
                                       // selection order
  Eigen::VectorXd coeffs;              // least-squares coefficients
  std::vector<double> residual_norms;  // ||r|| after each selection
  double residual_norm = 0.0;
  StopReason stop = StopReason::tolerance;
};

/// Optimized orthogonal matching pursuit. The atom `first_atom` (1-based)
/// is selected unconditionally as iteration one; every further step picks
/// the column whose out-of-span direction is most correlated with the
/// residual, which minimizes the next residual norm. Selected atoms are
/// kept orthonormal with two-pass Gram-Schmidt; the coefficients come from
/// back-substitution on the accumulated triangular factor.
///
/// Atoms whose out-of-span component drops below 1e-7 are permanently
/// excluded. Near-ties (relative difference <= 1e-12) resolve to the
/// lowest column index.
PursuitResult oomp(const Eigen::VectorXd& f, const Eigen::MatrixXd& dict,
                   double tol, int first_atom);

}  // namespace wavedict
