#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "adaptsym/fcidump.hpp"
#include "adaptsym/fermion.hpp"

namespace adaptsym {

// Occupation word over spin-orbitals; bit 2P = (P, up), bit 2P+1 = (P, down).
using Determinant = std::uint64_t;

int det_electrons(Determinant d);
int det_sz2(Determinant d, int n_spatial);
IrrepLabel det_irrep(Determinant d, const std::vector<IrrepLabel>& orbital_irreps);

struct SectorConstraints {
  int n_spatial = 0;
  int n_elec = 0;
  std::optional<int> sz2;
  std::optional<IrrepLabel> irrep;
};

class SectorBasis {
 public:
  SectorBasis() = default;
  SectorBasis(std::vector<Determinant> dets, SectorConstraints cons);

  std::size_t size() const { return dets_.size(); }
  Determinant det(std::size_t i) const { return dets_[i]; }
  const std::vector<Determinant>& determinants() const { return dets_; }
  const SectorConstraints& constraints() const { return cons_; }

  // Index of a determinant, or -1 when outside the basis.
  std::int64_t find(Determinant d) const;

 private:
  std::vector<Determinant> dets_;
  std::unordered_map<Determinant, std::size_t> index_;
  SectorConstraints cons_;
};

SectorBasis enumerate_sector(int n_spatial, int n_elec, std::optional<int> sz2,
                             std::optional<IrrepLabel> irrep,
                             const std::vector<IrrepLabel>& orbital_irreps);

struct StateVector {
  Eigen::VectorXd amplitudes;
  const SectorBasis* basis = nullptr;
};

// Exact second-quantized action of one normal-ordered string on a
// determinant: returns (sign, new determinant) or nullopt when annihilated.
std::optional<std::pair<int, Determinant>> apply_ops(const OpString& ops,
                                                     Determinant d);

// Applies a polynomial to a state; amplitudes leaving the basis are dropped.
StateVector apply_polynomial(const FermionPolynomial& p, const StateVector& v);

Eigen::SparseMatrix<double> matrix_rep(const FermionPolynomial& p,
                                       const SectorBasis& basis);

Eigen::SparseMatrix<double> build_hamiltonian(const MolecularIntegrals& m,
                                              const SectorBasis& basis);

}  // namespace adaptsym
