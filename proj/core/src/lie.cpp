#include "adaptsym/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace adaptsym {

FermionPolynomial commutator(const FermionPolynomial& a, const FermionPolynomial& b) {
  return a * b - b * a;
}

FermionPolynomial nested_commutator(const std::vector<FermionPolynomial>& ops) {
  if (ops.size() < 2)
    throw std::invalid_argument("nested_commutator: need at least two operators");
  FermionPolynomial acc = commutator(ops[0], ops[1]);
  for (std::size_t i = 2; i < ops.size(); ++i) acc = commutator(acc, ops[i]);
  return acc;
}

SectorBasis full_fock_space(int n_spatial) {
  const int nso = 2 * n_spatial;
  std::vector<Determinant> dets(std::size_t(1) << nso);
  for (std::size_t w = 0; w < dets.size(); ++w) dets[w] = w;
  SectorConstraints cons;
  cons.n_spatial = n_spatial;
  cons.n_elec = -1;  // mixed sectors
  return SectorBasis(std::move(dets), cons);
}

IdentityCheck verify_identity(const FermionPolynomial& lhs,
                              const FermionPolynomial& rhs, int n_spatial,
                              double tol) {
  SectorBasis fock = full_fock_space(n_spatial);
  Eigen::SparseMatrix<double> D = matrix_rep(lhs - rhs, fock);
  double residual = 0.0;
  for (int k = 0; k < D.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(D, k); it; ++it)
      residual = std::max(residual, std::abs(it.value()));
  return IdentityCheck{residual < tol, residual};
}

Eigen::VectorXd AlgebraBasis::pack(const Eigen::MatrixXd& antisym) {
  const Eigen::Index n = antisym.rows();
  Eigen::VectorXd v(n * (n - 1) / 2);
  Eigen::Index k = 0;
  const double s2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) v[k++] = antisym(i, j) * s2;
  return v;
}

Eigen::MatrixXd AlgebraBasis::unpack(const Eigen::VectorXd& coords, int rep_dim) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rep_dim, rep_dim);
  Eigen::Index k = 0;
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < rep_dim; ++i)
    for (Eigen::Index j = i + 1; j < rep_dim; ++j) {
      M(i, j) = coords[k] * inv_s2;
      M(j, i) = -M(i, j);
      ++k;
    }
  return M;
}

Eigen::MatrixXd AlgebraBasis::element(Eigen::Index i) const {
  return unpack(coords_.row(i).transpose(), rep_dim_);
}

Eigen::Index AlgebraBasis::extend(const Eigen::MatrixXd& block, double tol,
                                  int depth) {
  const Eigen::Index ncol = Eigen::Index(rep_dim_) * (rep_dim_ - 1) / 2;
  if (block.rows() == 0) return 0;

  // Normalize each candidate so acceptance is relative to its own size,
  // then project against the accumulated span (twice is enough).
  Eigen::MatrixXd R(block.rows(), ncol);
  Eigen::Index nr = 0;
  for (Eigen::Index r = 0; r < block.rows(); ++r) {
    const double n = block.row(r).norm();
    if (n > 1e-14) R.row(nr++) = block.row(r) / n;
  }
  if (nr == 0) return 0;
  R.conservativeResize(nr, ncol);
  if (coords_.rows() > 0) {
    R -= (R * coords_.transpose()) * coords_;
    R -= (R * coords_.transpose()) * coords_;
  }

  // Pooled rank extraction: right singular vectors with sigma > tol. A new
  // direction spread thinly over many candidates pools into one singular
  // value here, where a row-by-row Gram-Schmidt sweep would drop it.
  Eigen::MatrixXd acc;
  if (tol > 1e-7) {
    // Gram route: two GEMMs and a small eigensolve. Eigenvalue noise is
    // ~eps relative to the largest residual, safely below tol^2 here.
    Eigen::MatrixXd gram = R * R.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < nr; ++i)
      if (es.eigenvalues()[i] > tol * tol) keep.push_back(i);
    if (keep.empty()) return 0;
    acc.resize(static_cast<Eigen::Index>(keep.size()), ncol);
    for (std::size_t k = 0; k < keep.size(); ++k)
      acc.row(static_cast<Eigen::Index>(k)) =
          (es.eigenvectors().col(keep[k]).transpose() * R) /
          std::sqrt(es.eigenvalues()[keep[k]]);
  } else {
    // Tight tolerances need singular values computed directly.
    Eigen::BDCSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeThinV);
    Eigen::Index na = 0;
    while (na < svd.singularValues().size() && svd.singularValues()[na] > tol)
      ++na;
    if (na == 0) return 0;
    acc = svd.matrixV().leftCols(na).transpose();
  }

  const Eigen::Index old = coords_.rows();
  coords_.conservativeResize(old + acc.rows(), ncol);
  coords_.bottomRows(acc.rows()) = acc;
  depths_.insert(depths_.end(), static_cast<std::size_t>(acc.rows()), depth);
  return acc.rows();
}

void AlgebraBasis::recondition() {
  if (coords_.rows() == 0) return;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(coords_.transpose());
  Eigen::MatrixXd Q = qr.householderQ() *
                      Eigen::MatrixXd::Identity(coords_.cols(), coords_.rows());
  Eigen::MatrixXd Rd = qr.matrixQR()
                           .topLeftCorner(coords_.rows(), coords_.rows())
                           .triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < coords_.rows(); ++i) {
    if (std::abs(Rd(i, i)) < 1e-8)
      throw std::runtime_error("AlgebraBasis: rank collapse in recondition");
    if (Rd(i, i) < 0) Q.col(i) = -Q.col(i);
  }
  coords_ = Q.transpose();
}

AlgebraBasis dla_closure(const std::vector<Eigen::MatrixXd>& generators,
                         const ClosureOptions& opts) {
  if (generators.empty()) return AlgebraBasis();
  const int n = static_cast<int>(generators[0].rows());
  AlgebraBasis basis(n);

  Eigen::MatrixXd seed(static_cast<Eigen::Index>(generators.size()),
                       Eigen::Index(n) * (n - 1) / 2);
  for (std::size_t i = 0; i < generators.size(); ++i)
    seed.row(static_cast<Eigen::Index>(i)) =
        AlgebraBasis::pack(generators[i]).transpose();
  Eigen::Index first = basis.size();
  basis.extend(seed, opts.tol, 0);
  Eigen::MatrixXd frontier = basis.coords().bottomRows(basis.size() - first);

  int depth = 1;
  const Eigen::Index batch = 32;
  while (frontier.rows() > 0) {
    if (basis.size() > opts.cap)
      throw std::runtime_error("dla_closure: dimension cap exceeded");
    std::vector<Eigen::MatrixXd> accepted_blocks;
    for (Eigen::Index f0 = 0; f0 < frontier.rows(); f0 += batch) {
      const Eigen::Index nf = std::min(batch, frontier.rows() - f0);
      Eigen::MatrixXd cand(nf * static_cast<Eigen::Index>(generators.size()),
                           frontier.cols());
      Eigen::Index row = 0;
      for (Eigen::Index f = 0; f < nf; ++f) {
        Eigen::MatrixXd F =
            AlgebraBasis::unpack(frontier.row(f0 + f).transpose(), n);
        for (const auto& G : generators)
          cand.row(row++) = AlgebraBasis::pack(G * F - F * G).transpose();
      }
      Eigen::Index before = basis.size();
      Eigen::Index got = basis.extend(cand, opts.tol, depth);
      if (got > 0)
        accepted_blocks.push_back(basis.coords().bottomRows(basis.size() - before));
      if (basis.size() > opts.cap)
        throw std::runtime_error("dla_closure: dimension cap exceeded");
    }
    Eigen::Index total = 0;
    for (const auto& b : accepted_blocks) total += b.rows();
    frontier.resize(total, frontier.cols());
    Eigen::Index at = 0;
    for (const auto& b : accepted_blocks) {
      frontier.middleRows(at, b.rows()) = b;
      at += b.rows();
    }
    ++depth;
  }
  return basis;
}

AlgebraBasis dla_closure_split(const std::vector<Eigen::MatrixXd>& generators,
                               const Eigen::MatrixXd& invariant_vectors,
                               const Eigen::MatrixXd& complement_vectors,
                               const ClosureOptions& opts) {
  if (generators.empty()) return AlgebraBasis();
  const Eigen::Index n = generators[0].rows();
  const Eigen::Index nv = invariant_vectors.cols();
  if (invariant_vectors.rows() != n || complement_vectors.rows() != n ||
      nv + complement_vectors.cols() != n)
    throw std::invalid_argument("dla_closure_split: frame does not span");
  Eigen::MatrixXd frame(n, n);
  frame.leftCols(nv) = invariant_vectors;
  frame.rightCols(n - nv) = complement_vectors;

  std::vector<Eigen::MatrixXd> rotated;
  rotated.reserve(generators.size());
  for (const auto& G : generators) {
    Eigen::MatrixXd Gp = frame.transpose() * G * frame;
    double leak = std::max(Gp.topRightCorner(nv, n - nv).norm(),
                           Gp.bottomLeftCorner(n - nv, nv).norm());
    if (leak > 1e-9 * std::max(1.0, G.norm()))
      throw std::invalid_argument("dla_closure_split: split not invariant");
    Gp.topRightCorner(nv, n - nv).setZero();
    Gp.bottomLeftCorner(n - nv, nv).setZero();
    rotated.push_back(std::move(Gp));
  }
  return dla_closure(rotated, opts);
}

AlgebraBasis dla_closure(const std::vector<PoolElement>& pool,
                         const SectorBasis& basis, const ClosureOptions& opts) {
  std::vector<Eigen::MatrixXd> gens;
  gens.reserve(pool.size());
  for (const auto& e : pool)
    for (const auto& g : e.generators) {
      Eigen::MatrixXd M = Eigen::MatrixXd(matrix_rep(g, basis));
      if (M.norm() > 1e-12) gens.push_back(std::move(M));
    }
  return dla_closure(gens, opts);
}

std::vector<Eigen::MatrixXd> project_generators(
    const std::vector<PoolElement>& pool, const CsfBasis& csfs) {
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& e : pool)
    for (const auto& g : e.generators) {
      Eigen::MatrixXd full = Eigen::MatrixXd(matrix_rep(g, *csfs.basis));
      Eigen::MatrixXd proj = csfs.columns.transpose() * full * csfs.columns;
      // restriction must be faithful: the generator has to preserve the span
      double leak = (full * csfs.columns - csfs.columns * proj).norm();
      if (leak > 1e-9 * std::max(1.0, full.norm()))
        throw std::runtime_error("project_generators: span not invariant");
      if (proj.norm() > 1e-12) gens.push_back(std::move(proj));
    }
  return gens;
}

ReachabilityResult reachable_subspace(const AlgebraBasis& algebra,
                                      const StateVector& reference,
                                      const CsfBasis& csfs, double tol) {
  const Eigen::Index dim = csfs.columns.cols();
  Eigen::VectorXd c = csfs.columns.transpose() * reference.amplitudes;
  double inside = c.norm();
  if (std::abs(inside - reference.amplitudes.norm()) > 1e-9)
    throw std::invalid_argument("reachable_subspace: reference outside CSF span");
  c /= inside;

  Eigen::MatrixXd V(dim, 1);
  V.col(0) = c;
  std::vector<Eigen::MatrixXd> mats;
  mats.reserve(static_cast<std::size_t>(algebra.size()));
  for (Eigen::Index i = 0; i < algebra.size(); ++i) mats.push_back(algebra.element(i));

  bool grew = true;
  while (grew && V.cols() < dim) {
    grew = false;
    for (const auto& M : mats) {
      Eigen::MatrixXd W = M * V;
      for (Eigen::Index j = 0; j < W.cols(); ++j) {
        Eigen::VectorXd w = W.col(j);
        w -= V * (V.transpose() * w);
        w -= V * (V.transpose() * w);
        double nw = w.norm();
        if (nw > tol * std::max(1.0, W.col(j).norm())) {
          V.conservativeResize(Eigen::NoChange, V.cols() + 1);
          V.col(V.cols() - 1) = w / nw;
          grew = true;
        }
      }
      if (V.cols() == dim) break;
    }
  }

  ReachabilityResult r;
  r.invariant_dim = static_cast<int>(V.cols());
  r.complement_dim = static_cast<int>(dim - V.cols());
  r.invariant_vectors = V;
  // complement: orthogonalize coordinate vectors against V
  Eigen::MatrixXd C(dim, r.complement_dim);
  Eigen::Index got = 0;
  for (Eigen::Index j = 0; j < dim && got < C.cols(); ++j) {
    Eigen::VectorXd w = Eigen::VectorXd::Unit(dim, j);
    w -= V * (V.transpose() * w);
    w -= C.leftCols(got) * (C.leftCols(got).transpose() * w);
    w -= C.leftCols(got) * (C.leftCols(got).transpose() * w);
    double nw = w.norm();
    if (nw > 1e-6) C.col(got++) = w / nw;
  }
  if (got != C.cols())
    throw std::runtime_error("reachable_subspace: complement construction failed");
  r.complement_vectors = C;
  return r;
}

}  // namespace adaptsym
