#include "adaptsym/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <ceres/ceres.h>

#include "adaptsym/threads.hpp"

namespace adaptsym {

Determinant ReferenceSpec::determinant() const {
  Determinant d = 0;
  for (int p : doubly_occupied)
    d |= (Determinant(1) << so_up(p)) | (Determinant(1) << so_dn(p));
  for (int p : singly_occupied_up) d |= Determinant(1) << so_up(p);
  for (int p : singly_occupied_down) d |= Determinant(1) << so_dn(p);
  if (det_electrons(d) != n_electrons())
    throw std::invalid_argument("ReferenceSpec: occupation lists overlap");
  return d;
}

const char* termination_name(TerminationReason r) {
  switch (r) {
    case TerminationReason::param_budget: return "param_budget";
    case TerminationReason::stagnation: return "stagnation";
    case TerminationReason::grad_vanished: return "grad_vanished";
    case TerminationReason::max_iters: return "max_iters";
  }
  return "?";
}

StateVector build_reference(const ReferenceSpec& spec, const SectorBasis& basis) {
  Determinant d = spec.determinant();
  auto idx = basis.find(d);
  if (idx < 0)
    throw std::invalid_argument("build_reference: determinant not in basis");
  StateVector v;
  v.basis = &basis;
  v.amplitudes = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  v.amplitudes[idx] = 1.0;
  return v;
}

Eigen::VectorXd apply_unitary(const Eigen::SparseMatrix<double>& G, double theta,
                              const Eigen::VectorXd& v) {
  if (theta == 0.0 || G.nonZeros() == 0) return v;
  const double gnorm =
      Eigen::Map<const Eigen::VectorXd>(G.valuePtr(), G.nonZeros()).norm();
  int s = std::max(1, static_cast<int>(std::ceil(std::abs(theta) * gnorm / 2.0)));
  const double h = theta / s;
  Eigen::VectorXd w = v;
  for (int step = 0; step < s; ++step) {
    Eigen::VectorXd term = w;
    Eigen::VectorXd acc = w;
    for (int k = 1; k <= 60; ++k) {
      term = (G * term) * (h / k);
      acc += term;
      if (term.norm() <= 1e-16 * acc.norm()) break;
    }
    w = acc;
  }
  return w;
}

double pool_gradient(const Eigen::SparseMatrix<double>& H,
                     const Eigen::VectorXd& state,
                     const Eigen::SparseMatrix<double>& G) {
  return 2.0 * (H * state).dot(G * state);
}

// Digital (Sobol-style) sequence, direction numbers for up to 3 dimensions,
// Gray-code construction.
Eigen::MatrixXd sobol_points(int n, int dim) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("sobol_points: dim must be 1..3");
  constexpr int BITS = 32;
  std::uint32_t V[3][BITS + 1];
  // dim 1: van der Corput (m_k = 1)
  for (int k = 1; k <= BITS; ++k) V[0][k] = 1u << (BITS - k);
  // dim 2: x + 1, m_1 = 1, m_k = (2 m_{k-1}) ^ m_{k-1}
  {
    std::uint32_t m[BITS + 1];
    m[1] = 1;
    for (int k = 2; k <= BITS; ++k) m[k] = (m[k - 1] << 1) ^ m[k - 1];
    for (int k = 1; k <= BITS; ++k) V[1][k] = m[k] << (BITS - k);
  }
  // dim 3: x^2 + x + 1, m = (1, 3), m_k = (2 m_{k-1}) ^ (4 m_{k-2}) ^ m_{k-2}
  {
    std::uint32_t m[BITS + 1];
    m[1] = 1;
    m[2] = 3;
    for (int k = 3; k <= BITS; ++k)
      m[k] = (m[k - 1] << 1) ^ (m[k - 2] << 2) ^ m[k - 2];
    for (int k = 1; k <= BITS; ++k) V[2][k] = m[k] << (BITS - k);
  }
  Eigen::MatrixXd pts(n, dim);
  std::uint32_t x[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d)
      pts(i, d) = static_cast<double>(x[d]) / 4294967296.0;
    std::uint32_t g = static_cast<std::uint32_t>(i) + 1;
    int c = 1;
    while ((g & 1u) == 0) {
      g >>= 1;
      ++c;
    }
    for (int d = 0; d < dim; ++d) x[d] ^= V[d][c];
  }
  return pts;
}

ScanResult scan_select(const Eigen::SparseMatrix<double>& H,
                       const Eigen::VectorXd& state,
                       const std::vector<ScanCandidate>& candidates,
                       int scan_points, const std::vector<std::string>& ids) {
  if (candidates.empty())
    throw std::invalid_argument("scan_select: no candidates");
  const double e0 = state.dot(H * state);
  std::vector<ScanResult> results(candidates.size());
#ifdef ADAPTSYM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(candidates.size());
       ++ci) {
    const auto& cand = candidates[ci];
    const int k = static_cast<int>(cand.generators.size());
    Eigen::MatrixXd pts = sobol_points(scan_points, k);
    double best_e = e0;
    std::vector<double> best_theta(k, 0.0);
    for (int i = 0; i < scan_points; ++i) {
      Eigen::VectorXd v = state;
      for (int d = 0; d < k; ++d) {
        double theta = -M_PI + 2.0 * M_PI * pts(i, d);
        v = apply_unitary(*cand.generators[d], theta, v);
      }
      double e = v.dot(H * v);
      if (e < best_e) {
        best_e = e;
        for (int d = 0; d < k; ++d) best_theta[d] = -M_PI + 2.0 * M_PI * pts(i, d);
      }
    }
    results[ci] = ScanResult{cand.element, best_theta, e0 - best_e};
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].score > results[best].score ||
        (results[i].score == results[best].score &&
         ids[results[i].element] < ids[results[best].element]))
      best = i;
  }
  return results[best];
}

namespace {

class EnergyFunction : public ceres::FirstOrderFunction {
 public:
  EnergyFunction(const VqeProblem& p) : p_(p) {}

  bool Evaluate(const double* parameters, double* cost,
                double* gradient) const override {
    const int K = static_cast<int>(p_.generators.size());
    std::vector<Eigen::VectorXd> f(K + 1);
    f[0] = p_.reference;
    for (int k = 1; k <= K; ++k)
      f[k] = apply_unitary(*p_.generators[k - 1], parameters[k - 1], f[k - 1]);
    Eigen::VectorXd hf = (*p_.H) * f[K];
    *cost = f[K].dot(hf);
    if (!std::isfinite(*cost)) return false;
    if (gradient) {
      Eigen::VectorXd b = hf;
      for (int k = K; k >= 1; --k) {
        gradient[k - 1] = 2.0 * b.dot((*p_.generators[k - 1]) * f[k]);
        if (k > 1) b = apply_unitary(*p_.generators[k - 1], -parameters[k - 1], b);
      }
    }
    if (*cost < best_cost_) {
      best_cost_ = *cost;
      best_params_.assign(parameters, parameters + K);
    }
    return true;
  }

  int NumParameters() const override {
    return static_cast<int>(p_.generators.size());
  }

  double best_cost() const { return best_cost_; }
  const std::vector<double>& best_params() const { return best_params_; }

 private:
  const VqeProblem& p_;
  mutable double best_cost_ = std::numeric_limits<double>::infinity();
  mutable std::vector<double> best_params_;
};

}  // namespace

VqeResult vqe_optimize(const VqeProblem& problem, std::vector<double> theta0,
                       const AdaptConfig& cfg) {
  if (problem.generators.empty())
    throw std::invalid_argument("vqe_optimize: empty ansatz");
  const int K = static_cast<int>(problem.generators.size());
  if (static_cast<int>(theta0.size()) != K)
    throw std::invalid_argument("vqe_optimize: parameter count mismatch");

  VqeResult best;
  best.energy = std::numeric_limits<double>::infinity();
  int total_iters = 0;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    std::vector<double> theta = theta0;
    if (r > 0) {
      // deterministic perturbation of the best point seen so far
      if (!best.thetas.empty()) theta = best.thetas;
      for (int k = 0; k < K; ++k)
        theta[k] += 0.1 * std::sin(1.0 + 13.7 * r * (k + 1));
    }
    auto* fn = new EnergyFunction(problem);
    ceres::GradientProblem gp(fn);  // takes ownership
    ceres::GradientProblemSolver::Options o;
    o.line_search_direction_type = ceres::BFGS;
    o.max_num_iterations = cfg.vqe_max_micro;
    o.gradient_tolerance = cfg.vqe_grad_tol;
    o.function_tolerance = 0.0;
    o.parameter_tolerance = 0.0;
    o.logging_type = ceres::SILENT;
    o.minimizer_progress_to_stdout = false;
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(o, gp, theta.data(), &summary);
    if (summary.termination_type == ceres::FAILURE &&
        !std::isfinite(fn->best_cost()))
      throw std::runtime_error("vqe_optimize: non-finite energy");
    total_iters += static_cast<int>(summary.iterations.size());
    double cost = fn->best_cost();
    std::vector<double> params =
        fn->best_params().empty() ? theta : fn->best_params();
    if (cost < best.energy) {
      best.energy = cost;
      best.thetas = params;
    }
  }
  best.iterations = total_iters;
  return best;
}

SectorBasis working_sector(const MolecularIntegrals& m, const AdaptConfig& cfg,
                           const ReferenceSpec& ref,
                           const std::vector<PoolElement>& pool) {
  bool keep_gamma = !pool.empty();
  for (const auto& e : pool)
    if (!e.conserved.gamma) keep_gamma = false;
  std::optional<IrrepLabel> irrep;
  if (keep_gamma) irrep = det_irrep(ref.determinant(), m.orbital_irreps);
  return enumerate_sector(m.n_spatial, ref.n_electrons(), ref.sz2(), irrep,
                          m.orbital_irreps);
}

AdaptResult adapt_run(const MolecularIntegrals& m, const AdaptConfig& cfg,
                      const ReferenceSpec& ref) {
  init_threads();
  PoolSpec spec = cfg.pool;
  if (spec.orbital_irreps.empty()) spec.orbital_irreps = m.orbital_irreps;

  AdaptResult result;
  result.pool = build_pool(spec);
  SectorBasis basis = working_sector(m, cfg, ref, result.pool);
  Eigen::SparseMatrix<double> H = build_hamiltonian(m, basis);
  StateVector phi = build_reference(ref, basis);

  // generator matrices, pruning elements that act as zero on the sector
  struct Candidate {
    std::size_t element;
    std::vector<Eigen::SparseMatrix<double>> mats;
  };
  std::vector<Candidate> cands;
  bool have_tuples = false;
  for (std::size_t i = 0; i < result.pool.size(); ++i) {
    Candidate c;
    c.element = i;
    bool nonzero = false;
    for (const auto& g : result.pool[i].generators) {
      c.mats.push_back(matrix_rep(g, basis));
      if (c.mats.back().nonZeros() > 0) nonzero = true;
    }
    if (!nonzero) continue;
    if (result.pool[i].kind == ElementKind::tuple) have_tuples = true;
    cands.push_back(std::move(c));
  }

  bool conserves_s2 = true;
  for (const auto& e : result.pool)
    if (!e.conserved.s2) conserves_s2 = false;

  int budget;
  if (cfg.param_budget) {
    budget = *cfg.param_budget;
  } else if (conserves_s2) {
    double S = std::abs(ref.sz2()) / 2.0;
    budget = static_cast<int>(csf_basis(basis, S).columns.cols()) - 1;
  } else {
    budget = static_cast<int>(basis.size()) - 1;
  }
  result.param_budget = budget;

  Eigen::VectorXd psi = phi.amplitudes;
  double energy = psi.dot(H * psi);
  auto record = [&](const std::string& id, double score, int n_params) {
    StateVector sv;
    sv.basis = &basis;
    sv.amplitudes = psi;
    result.trace.iterations.push_back(
        IterationRecord{id, score, n_params, energy,
                        symmetry_report(sv, m.orbital_irreps)});
  };
  record("", 0.0, 0);

  VqeProblem vp;
  vp.H = &H;
  vp.reference = phi.amplitudes;
  std::vector<double> thetas;
  std::vector<std::string> ids;
  for (const auto& e : result.pool) ids.push_back(e.id);

  int n_params = 0;
  std::string last_id;
  int repeat_count = 0;
  TerminationReason reason = TerminationReason::max_iters;
  const int max_macro = 10 * std::max(budget, 1) + 50;

  for (int macro = 0; macro < max_macro; ++macro) {
    if (n_params >= budget) {
      reason = TerminationReason::param_budget;
      break;
    }
    // selection
    std::size_t sel_elem = 0;
    std::vector<double> init;
    double score = -std::numeric_limits<double>::infinity();
    if (have_tuples) {
      std::vector<ScanCandidate> sc;
      for (const auto& c : cands) {
        ScanCandidate s;
        s.element = c.element;
        for (const auto& M : c.mats) s.generators.push_back(&M);
        sc.push_back(std::move(s));
      }
      ScanResult sr = scan_select(H, psi, sc, cfg.scan_points, ids);
      sel_elem = sr.element;
      init = sr.theta_init;
      score = sr.score;
    } else {
      std::vector<double> grads(cands.size());
#ifdef ADAPTSYM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(cands.size()); ++i)
        grads[i] = std::abs(pool_gradient(H, psi, cands[i].mats[0]));
      std::size_t best = 0;
      for (std::size_t i = 1; i < cands.size(); ++i)
        if (grads[i] > grads[best] ||
            (grads[i] == grads[best] &&
             ids[cands[i].element] < ids[cands[best].element]))
          best = i;
      sel_elem = cands[best].element;
      init = {0.0};
      score = grads[best];
    }
    if (score < cfg.selection_floor) {
      reason = TerminationReason::grad_vanished;
      break;
    }

    const double prev_energy = energy;
    // append and reoptimize everything
    const Candidate* cand = nullptr;
    for (const auto& c : cands)
      if (c.element == sel_elem) cand = &c;
    AnsatzStep step;
    step.element = sel_elem;
    step.thetas = init;
    result.ansatz.push_back(step);
    for (const auto& M : cand->mats) {
      // keep matrices alive: stored inside cands, safe to point into
      vp.generators.push_back(&M);
    }
    thetas.insert(thetas.end(), init.begin(), init.end());

    VqeResult vr = vqe_optimize(vp, thetas, cfg);
    thetas = vr.thetas;
    energy = vr.energy;
    n_params = static_cast<int>(thetas.size());
    {
      std::size_t at = 0;
      for (auto& st : result.ansatz) {
        for (double& t : st.thetas) t = thetas[at++];
      }
    }
    psi = phi.amplitudes;
    for (std::size_t k = 0; k < vp.generators.size(); ++k)
      psi = apply_unitary(*vp.generators[k], thetas[k], psi);

    record(ids[sel_elem], score, n_params);

    if (ids[sel_elem] == last_id && std::abs(energy - prev_energy) < 1e-9) {
      if (++repeat_count >= cfg.stagnation_repeats) {
        reason = TerminationReason::stagnation;
        break;
      }
    } else {
      repeat_count = 1;
      last_id = ids[sel_elem];
    }
    if (n_params >= budget) {
      reason = TerminationReason::param_budget;
      break;
    }
  }

  result.trace.termination_reason = reason;
  result.final_energy = energy;
  result.sector = std::move(basis);
  result.final_state.basis = nullptr;
  result.final_state.amplitudes = std::move(psi);
  return result;
}

}  // namespace adaptsym
