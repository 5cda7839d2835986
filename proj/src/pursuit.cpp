#include "wavedict/pursuit.hpp"

#include <cmath>
#include <stdexcept>

namespace wavedict {

namespace {
constexpr double kSpanTol = 1e-7;   // out-of-span norm below this: excluded
constexpr double kTieRel = 1e-12;   // relative tie window for selection
}  // namespace

PursuitResult oomp(const Eigen::VectorXd& f, const Eigen::MatrixXd& dict,
                   double tol, int first_atom) {
  const Eigen::Index n = dict.rows();
  const Eigen::Index m = dict.cols();
  if (f.size() != n) {
    throw std::invalid_argument("signal length does not match dictionary rows");
  }
  if (tol < 0.0) throw std::invalid_argument("tol must be nonnegative");
  if (first_atom < 1 || first_atom > m) {
    throw std::invalid_argument("initial atom index out of range");
  }

  const Eigen::Index cap = std::min(n, m);
  Eigen::MatrixXd ortho(n, cap);    // orthonormal basis of the selected span
  Eigen::MatrixXd tri =
      Eigen::MatrixXd::Zero(cap, cap);  // tri(t,k) = <q_t, d_sel(k)>
  Eigen::VectorXd qtf(cap);             // <q_k, f>

  Eigen::VectorXd corr = dict.transpose() * f;  // <d_i, r>
  Eigen::VectorXd out2 =
      dict.colwise().squaredNorm();  // ||d_i - P d_i||^2 over selected span
  std::vector<char> excluded(m, 0);

  Eigen::VectorXd residual = f;
  double rnorm = residual.norm();

  PursuitResult result;
  result.indices.reserve(16);
  result.residual_norms.reserve(16);

  while (true) {
    const Eigen::Index k = static_cast<Eigen::Index>(result.indices.size());
    if (k > 0 && rnorm <= tol) {
      result.stop = StopReason::tolerance;
      break;
    }
    if (k == cap) {
      result.stop =
          rnorm <= tol ? StopReason::tolerance : StopReason::dimension_cap;
      break;
    }

    Eigen::Index selected = -1;
    if (k == 0) {
      selected = first_atom - 1;
    } else {
      double best = -1.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (excluded[i]) continue;
        if (out2(i) <= kSpanTol * kSpanTol) {
          excluded[i] = 1;
          continue;
        }
        const double value = std::abs(corr(i)) / std::sqrt(out2(i));
        if (selected < 0 || value - best > kTieRel * value) {
          best = value;
          selected = i;
        }
      }
    }
    if (selected < 0) {
      result.stop =
          rnorm <= tol ? StopReason::tolerance : StopReason::exhausted;
      break;
    }

    // Two-pass Gram-Schmidt of the new atom against the current basis.
    Eigen::VectorXd v = dict.col(selected);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index t = 0; t < k; ++t) {
        const double c = ortho.col(t).dot(v);
        v -= c * ortho.col(t);
        tri(t, k) += c;
      }
    }
    const double vnorm = v.norm();
    if (vnorm <= kSpanTol) {
      // Incremental bookkeeping said admissible, exact orthogonalization
      // says in-span: drop the atom and pick again.
      if (k == 0) {
        throw std::invalid_argument("initial atom is numerically zero");
      }
      excluded[selected] = 1;
      out2(selected) = 0.0;
      tri.col(k).setZero();
      continue;
    }
    tri(k, k) = vnorm;
    ortho.col(k) = v / vnorm;

    const double beta = ortho.col(k).dot(residual);
    qtf(k) = beta;
    residual -= beta * ortho.col(k);
    rnorm = residual.norm();

    result.indices.push_back(static_cast<int>(selected) + 1);
    result.residual_norms.push_back(rnorm);
    excluded[selected] = 1;

    const Eigen::VectorXd dq = dict.transpose() * ortho.col(k);
    out2 = (out2 - dq.cwiseProduct(dq)).cwiseMax(0.0);
    corr -= beta * dq;
  }

  const Eigen::Index k = static_cast<Eigen::Index>(result.indices.size());
  result.coeffs = tri.topLeftCorner(k, k)
                      .triangularView<Eigen::Upper>()
                      .solve(qtf.head(k));
  result.approx = f - residual;
  result.residual_norm = rnorm;
  return result;
}

}  // namespace wavedict
