#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "adaptsym/fcidump.hpp"
#include "adaptsym/fock.hpp"
#include "adaptsym/pools.hpp"
#include "adaptsym/symmetry.hpp"

namespace adaptsym {

struct ReferenceSpec {
  std::vector<int> doubly_occupied;
  std::vector<int> singly_occupied_up;
  std::vector<int> singly_occupied_down;

  int n_electrons() const {
    return 2 * static_cast<int>(doubly_occupied.size()) +
           static_cast<int>(singly_occupied_up.size()) +
           static_cast<int>(singly_occupied_down.size());
  }
  int sz2() const {
    return static_cast<int>(singly_occupied_up.size()) -
           static_cast<int>(singly_occupied_down.size());
  }
  Determinant determinant() const;
};

struct AnsatzStep {
  std::size_t element = 0;  // index into the pool
  std::vector<double> thetas;
};

enum class TerminationReason { param_budget, stagnation, grad_vanished, max_iters };
const char* termination_name(TerminationReason r);

struct IterationRecord {
  std::string selected_id;  // empty for the reference record
  double selection_score = 0.0;
  int n_params = 0;
  double energy = 0.0;
  SymmetryReport symmetry;
};

struct AdaptTrace {
  std::vector<IterationRecord> iterations;
  TerminationReason termination_reason = TerminationReason::param_budget;
};

struct AdaptConfig {
  PoolSpec pool;
  double vqe_grad_tol = 1e-6;
  int vqe_max_micro = 2000;
  int stagnation_repeats = 3;
  std::optional<int> param_budget;  // default: symmetry-adapted dimension - 1
  int scan_points = 32;
  int restarts = 1;
  double selection_floor = 1e-8;
};

StateVector build_reference(const ReferenceSpec& spec, const SectorBasis& basis);

// exp(theta * G) v for antisymmetric sparse G, by scaled truncated series.
Eigen::VectorXd apply_unitary(const Eigen::SparseMatrix<double>& G, double theta,
                              const Eigen::VectorXd& v);

// <state|[H, G]|state> = 2 <state|H G|state>.
double pool_gradient(const Eigen::SparseMatrix<double>& H,
                     const Eigen::VectorXd& state,
                     const Eigen::SparseMatrix<double>& G);

// Deterministic digital low-discrepancy points in [0,1)^dim, dim <= 3.
Eigen::MatrixXd sobol_points(int n, int dim);

struct ScanCandidate {
  std::size_t element = 0;
  std::vector<const Eigen::SparseMatrix<double>*> generators;
};

struct ScanResult {
  std::size_t element = 0;
  std::vector<double> theta_init;
  double score = 0.0;  // current energy minus best sampled energy
};

ScanResult scan_select(const Eigen::SparseMatrix<double>& H,
                       const Eigen::VectorXd& state,
                       const std::vector<ScanCandidate>& candidates,
                       int scan_points,
                       const std::vector<std::string>& ids);

struct VqeProblem {
  const Eigen::SparseMatrix<double>* H = nullptr;
  std::vector<const Eigen::SparseMatrix<double>*> generators;  // flattened
  Eigen::VectorXd reference;
};

struct VqeResult {
  std::vector<double> thetas;
  double energy = 0.0;
  int iterations = 0;
};

VqeResult vqe_optimize(const VqeProblem& problem, std::vector<double> theta0,
                       const AdaptConfig& cfg);

struct AdaptResult {
  AdaptTrace trace;
  std::vector<PoolElement> pool;
  std::vector<AnsatzStep> ansatz;
  SectorBasis sector;               // working sector of the run
  StateVector final_state;          // basis pointer left null; use sector
  double final_energy = 0.0;
  int param_budget = 0;
};

AdaptResult adapt_run(const MolecularIntegrals& m, const AdaptConfig& cfg,
                      const ReferenceSpec& ref);

// Working sector for a pool: keeps N and S_z always, the spatial constraint
// only when every pool element conserves it.
SectorBasis working_sector(const MolecularIntegrals& m, const AdaptConfig& cfg,
                           const ReferenceSpec& ref,
                           const std::vector<PoolElement>& pool);

}  // namespace adaptsym
