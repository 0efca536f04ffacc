#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "adaptsym/fock.hpp"

namespace adaptsym {

struct SymmetryReport {
  double n_expect = 0.0;
  double sz_expect = 0.0;
  double s2_expect = 0.0;
  double s2_std = 0.0;
  std::map<int, double> irrep_weights;
};

struct CsfBasis {
  Eigen::MatrixXd columns;  // orthonormal, over the parent SectorBasis
  double total_s = 0.0;
  const SectorBasis* basis = nullptr;
};

// S^2 = S_z^2 + S_z + S_- S_+ assembled from fermionic strings.
FermionPolynomial s2_polynomial(int n_spatial);
Eigen::SparseMatrix<double> s2_matrix(const SectorBasis& basis);

// Diagonal +-1 matrix of the electron-number parity within one irrep block.
Eigen::SparseMatrix<double> parity_matrix(IrrepLabel irrep,
                                          const SectorBasis& basis,
                                          const std::vector<IrrepLabel>& orbital_irreps);

SymmetryReport symmetry_report(const StateVector& v,
                               const std::vector<IrrepLabel>& orbital_irreps);

CsfBasis csf_basis(const SectorBasis& basis, double total_s);

struct NamedCsfResult {
  StateVector state;
  bool annihilated = false;
};

// Applies the generator sequence left to right to the reference determinant
// and normalizes. Annihilation (exactly zero result) is flagged.
NamedCsfResult named_csf(const std::vector<FermionPolynomial>& ops,
                         Determinant reference, const SectorBasis& basis);

}  // namespace adaptsym
