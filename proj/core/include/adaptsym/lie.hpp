#pragma once

#include <vector>

#include <Eigen/Dense>

#include "adaptsym/fock.hpp"
#include "adaptsym/pools.hpp"
#include "adaptsym/symmetry.hpp"

namespace adaptsym {

FermionPolynomial commutator(const FermionPolynomial& a, const FermionPolynomial& b);
FermionPolynomial nested_commutator(const std::vector<FermionPolynomial>& ops);

struct IdentityCheck {
  bool holds = false;
  double residual = 0.0;
};

// Compares matrix representations on the full Fock space of n_spatial
// orbitals (all particle-number sectors at once).
IdentityCheck verify_identity(const FermionPolynomial& lhs,
                              const FermionPolynomial& rhs, int n_spatial,
                              double tol = 1e-12);

SectorBasis full_fock_space(int n_spatial);

// Orthonormal basis of an antisymmetric-matrix Lie algebra, stored in
// packed strict-upper-triangle coordinates (Frobenius-orthonormal rows).
class AlgebraBasis {
 public:
  AlgebraBasis() = default;
  explicit AlgebraBasis(int rep_dim) : rep_dim_(rep_dim) {}

  int rep_dim() const { return rep_dim_; }
  Eigen::Index size() const { return coords_.rows(); }
  const Eigen::MatrixXd& coords() const { return coords_; }
  const std::vector<int>& depths() const { return depths_; }

  Eigen::MatrixXd element(Eigen::Index i) const;  // unpacked antisymmetric

  static Eigen::VectorXd pack(const Eigen::MatrixXd& antisym);
  static Eigen::MatrixXd unpack(const Eigen::VectorXd& coords, int rep_dim);

  // Appends the rows of block that carry a residual above tol after
  // projection on the current span; returns how many were accepted.
  Eigen::Index extend(const Eigen::MatrixXd& block, double tol, int depth);

  // Re-orthonormalizes the accumulated rows (rank must be preserved).
  void recondition();

 private:
  int rep_dim_ = 0;
  Eigen::MatrixXd coords_;  // size x rep_dim*(rep_dim-1)/2
  std::vector<int> depths_;
};

struct ClosureOptions {
  double tol = 1e-7;      // relative residual for accepting a new direction
  Eigen::Index cap = 20000;
};

// Iterated commutator closure of the generator matrices (antisymmetric,
// given dense over some representation space).
AlgebraBasis dla_closure(const std::vector<Eigen::MatrixXd>& generators,
                         const ClosureOptions& opts = {});

// Convenience: pool generators represented on a determinant sector.
AlgebraBasis dla_closure(const std::vector<PoolElement>& pool,
                         const SectorBasis& basis,
                         const ClosureOptions& opts = {});

// Closure run in the coordinates of a generator-invariant orthogonal split.
// The generators are rotated into the [invariant | complement] frame, the
// off-diagonal blocks (pure round-off once the split really is invariant)
// are verified small and zeroed, and the sweeps run on the cleaned matrices.
// Exact zeros survive every product, so drift cannot couple the blocks; the
// plain closure is unstable in both directions here (noise inflates the
// dimension, cancellation hides genuine directions). Coordinates of the
// result are in the rotated frame.
AlgebraBasis dla_closure_split(const std::vector<Eigen::MatrixXd>& generators,
                               const Eigen::MatrixXd& invariant_vectors,
                               const Eigen::MatrixXd& complement_vectors,
                               const ClosureOptions& opts = {});

struct ReachabilityResult {
  int invariant_dim = 0;
  int complement_dim = 0;
  Eigen::MatrixXd invariant_vectors;   // columns, CSF coordinates
  Eigen::MatrixXd complement_vectors;  // columns, CSF coordinates
};

// Smallest algebra-invariant subspace containing the reference, computed in
// the coordinates of the CSF basis (the generators must preserve its span).
ReachabilityResult reachable_subspace(const AlgebraBasis& algebra,
                                      const StateVector& reference,
                                      const CsfBasis& csfs, double tol = 1e-9);

// Projects pool generators onto the CSF basis columns.
std::vector<Eigen::MatrixXd> project_generators(
    const std::vector<PoolElement>& pool, const CsfBasis& csfs);

}  // namespace adaptsym
