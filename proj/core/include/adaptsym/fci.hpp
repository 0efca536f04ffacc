#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "adaptsym/fock.hpp"

namespace adaptsym {

struct Spectrum {
  std::vector<double> energies;  // ascending
  Eigen::MatrixXd vectors;       // matching columns
};

struct EigenOptions {
  int dense_threshold = 2000;
  double residual_tol = 1e-9;
  int max_restarts = 400;
};

// k lowest eigenpairs of a sparse real symmetric matrix; dense solver below
// dense_threshold, Rayleigh-Ritz restarted Lanczos with full
// reorthogonalization above. Throws on non-convergence.
Spectrum lowest_eigenpairs(const Eigen::SparseMatrix<double>& H, int k,
                           const EigenOptions& opts = {});

// |<v_i|state>|^2 per spectrum column; the residual weight is 1 - sum.
std::vector<double> overlap_analysis(const StateVector& state,
                                     const Spectrum& spectrum);

}  // namespace adaptsym
