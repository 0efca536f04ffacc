#include "adaptsym/fci.hpp"

#include <cmath>
#include <stdexcept>

namespace adaptsym {

namespace {

Spectrum dense_eigenpairs(const Eigen::SparseMatrix<double>& H, int k) {
  Eigen::MatrixXd D(H);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D);
  Spectrum s;
  s.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
  s.vectors = es.eigenvectors().leftCols(k);
  return s;
}

void orthogonalize_against(Eigen::VectorXd& w, const Eigen::MatrixXd& V,
                           Eigen::Index cols) {
  if (cols == 0) return;
  w -= V.leftCols(cols) * (V.leftCols(cols).transpose() * w);
  w -= V.leftCols(cols) * (V.leftCols(cols).transpose() * w);
}

}  // namespace

Spectrum lowest_eigenpairs(const Eigen::SparseMatrix<double>& H, int k,
                           const EigenOptions& opts) {
  const Eigen::Index n = H.rows();
  if (k <= 0 || k > n)
    throw std::invalid_argument("lowest_eigenpairs: bad eigenpair count");
  if (n <= opts.dense_threshold) return dense_eigenpairs(H, k);

  const Eigen::Index m_max = std::min<Eigen::Index>(n, std::max(80, 10 * k));
  Eigen::MatrixXd V(n, m_max);

  // deterministic start: ones biased toward the smallest diagonal entry
  Eigen::VectorXd diag = H.diagonal();
  Eigen::Index imin;
  diag.minCoeff(&imin);
  Eigen::VectorXd v0 = Eigen::VectorXd::Ones(n);
  v0[imin] += 10.0;
  V.col(0) = v0 / v0.norm();
  Eigen::Index cols = 1;

  for (int restart = 0; restart < opts.max_restarts; ++restart) {
    while (cols < m_max) {
      Eigen::VectorXd w = H * V.col(cols - 1);
      orthogonalize_against(w, V, cols);
      double nw = w.norm();
      if (nw < 1e-12) {
        // Krylov space exhausted; inject the next coordinate direction
        bool found = false;
        for (Eigen::Index j = 0; j < n && !found; ++j) {
          w = Eigen::VectorXd::Unit(n, j);
          orthogonalize_against(w, V, cols);
          nw = w.norm();
          if (nw > 1e-6) found = true;
        }
        if (!found) break;
      }
      V.col(cols++) = w / nw;
    }
    Eigen::MatrixXd HV = H * V.leftCols(cols);
    Eigen::MatrixXd A = V.leftCols(cols).transpose() * HV;
    A = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    Eigen::MatrixXd X = V.leftCols(cols) * es.eigenvectors().leftCols(k);
    Eigen::VectorXd lam = es.eigenvalues().head(k);

    double worst = 0.0;
    for (int i = 0; i < k; ++i)
      worst = std::max(worst, (H * X.col(i) - lam[i] * X.col(i)).norm());
    if (worst < opts.residual_tol) {
      Spectrum s;
      s.energies.assign(lam.data(), lam.data() + k);
      s.vectors = X;
      return s;
    }

    // thick restart: keep 2k Ritz vectors, reorthonormalized
    Eigen::Index keep = std::min<Eigen::Index>(2 * k, cols);
    Eigen::MatrixXd Y = V.leftCols(cols) * es.eigenvectors().leftCols(keep);
    cols = 0;
    for (Eigen::Index j = 0; j < keep; ++j) {
      Eigen::VectorXd w = Y.col(j);
      orthogonalize_against(w, V, cols);
      double nw = w.norm();
      if (nw > 1e-10) V.col(cols++) = w / nw;
    }
    // continue the Krylov sequence from the best unconverged Ritz vector
    Eigen::VectorXd w = H * X.col(0);
    orthogonalize_against(w, V, cols);
    double nw = w.norm();
    if (nw > 1e-12) V.col(cols++) = w / nw;
  }
  throw std::runtime_error("lowest_eigenpairs: Lanczos failed to converge");
}

std::vector<double> overlap_analysis(const StateVector& state,
                                     const Spectrum& spectrum) {
  if (state.amplitudes.size() != spectrum.vectors.rows())
    throw std::invalid_argument("overlap_analysis: basis mismatch");
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(spectrum.vectors.cols()));
  for (Eigen::Index i = 0; i < spectrum.vectors.cols(); ++i) {
    double o = spectrum.vectors.col(i).dot(state.amplitudes);
    w.push_back(o * o);
  }
  return w;
}

}  // namespace adaptsym
