#include "adaptsym/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace adaptsym {

FermionPolynomial s2_polynomial(int n_spatial) {
  FermionPolynomial sz;
  const Coeff half(Frac(1, 2));
  for (int P = 0; P < n_spatial; ++P) {
    sz = sz + number_op(so_up(P)).scaled(half) - number_op(so_dn(P)).scaled(half);
  }
  FermionPolynomial s2 = sz * sz + sz;
  for (int P = 0; P < n_spatial; ++P)
    for (int Q = 0; Q < n_spatial; ++Q) {
      // a+_{P dn} a_{P up} a+_{Q up} a_{Q dn}  (S_- S_+ term)
      s2.add_term(Coeff(1), {{static_cast<std::uint8_t>(so_dn(P)), true},
                             {static_cast<std::uint8_t>(so_up(P)), false},
                             {static_cast<std::uint8_t>(so_up(Q)), true},
                             {static_cast<std::uint8_t>(so_dn(Q)), false}});
    }
  return s2;
}

Eigen::SparseMatrix<double> s2_matrix(const SectorBasis& basis) {
  return matrix_rep(s2_polynomial(basis.constraints().n_spatial), basis);
}

Eigen::SparseMatrix<double> parity_matrix(
    IrrepLabel irrep, const SectorBasis& basis,
    const std::vector<IrrepLabel>& orbital_irreps) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Eigen::SparseMatrix<double> M(n, n);
  M.reserve(Eigen::VectorXi::Constant(n, 1));
  for (Eigen::Index j = 0; j < n; ++j) {
    Determinant w = basis.det(j);
    int count = 0;
    for (std::size_t P = 0; P < orbital_irreps.size(); ++P) {
      if (orbital_irreps[P] != irrep) continue;
      count += (w >> (2 * P)) & 1;
      count += (w >> (2 * P + 1)) & 1;
    }
    M.insert(j, j) = (count % 2 == 0) ? 1.0 : -1.0;
  }
  M.makeCompressed();
  return M;
}

SymmetryReport symmetry_report(const StateVector& v,
                               const std::vector<IrrepLabel>& orbital_irreps) {
  const double norm = v.amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("symmetry_report: state not normalized");
  const SectorBasis& basis = *v.basis;
  const int n_spatial = basis.constraints().n_spatial;

  SymmetryReport r;
  Eigen::SparseMatrix<double> S2 = s2_matrix(basis);
  Eigen::VectorXd s2v = S2 * v.amplitudes;
  r.s2_expect = v.amplitudes.dot(s2v);
  double s4 = s2v.squaredNorm();  // <S^4> since S^2 is symmetric
  double var = s4 - r.s2_expect * r.s2_expect;
  r.s2_std = std::sqrt(std::max(0.0, var));

  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double w2 = v.amplitudes[static_cast<Eigen::Index>(j)] *
                      v.amplitudes[static_cast<Eigen::Index>(j)];
    if (w2 == 0.0) continue;
    Determinant d = basis.det(j);
    r.n_expect += w2 * det_electrons(d);
    r.sz_expect += w2 * 0.5 * det_sz2(d, n_spatial);
    r.irrep_weights[det_irrep(d, orbital_irreps)] += w2;
  }
  return r;
}

CsfBasis csf_basis(const SectorBasis& basis, double total_s) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  CsfBasis out;
  out.total_s = total_s;
  out.basis = &basis;
  if (n == 0) {
    out.columns = Eigen::MatrixXd(0, 0);
    return out;
  }
  Eigen::MatrixXd S2 = Eigen::MatrixXd(s2_matrix(basis));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S2);
  const double target = total_s * (total_s + 1.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(es.eigenvalues()[i] - target) < 1e-8) keep.push_back(i);
  Eigen::MatrixXd U(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) U.col(k) = es.eigenvectors().col(keep[k]);

  // Deterministic orthonormal basis of span(U): Gram-Schmidt over the
  // projected coordinate vectors, in determinant order.
  const Eigen::Index dim = U.cols();
  Eigen::MatrixXd B(n, dim);
  Eigen::Index got = 0;
  for (Eigen::Index j = 0; j < n && got < dim; ++j) {
    Eigen::VectorXd v = U * U.row(j).transpose();  // P e_j
    v -= B.leftCols(got) * (B.leftCols(got).transpose() * v);
    v -= B.leftCols(got) * (B.leftCols(got).transpose() * v);
    double nv = v.norm();
    if (nv > 1e-6) B.col(got++) = v / nv;
  }
  if (got != dim)
    throw std::runtime_error("csf_basis: failed to span the eigenspace");
  // fix signs: largest-magnitude entry positive
  for (Eigen::Index c = 0; c < dim; ++c) {
    Eigen::Index imax;
    B.col(c).cwiseAbs().maxCoeff(&imax);
    if (B(imax, c) < 0) B.col(c) = -B.col(c);
  }
  out.columns = B;
  return out;
}

NamedCsfResult named_csf(const std::vector<FermionPolynomial>& ops,
                         Determinant reference, const SectorBasis& basis) {
  NamedCsfResult r;
  auto idx = basis.find(reference);
  if (idx < 0) throw std::invalid_argument("named_csf: reference not in basis");
  StateVector v;
  v.basis = &basis;
  v.amplitudes = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  v.amplitudes[idx] = 1.0;
  for (const auto& op : ops) v = apply_polynomial(op, v);
  const double norm = v.amplitudes.norm();
  if (norm == 0.0) {
    r.annihilated = true;
    r.state = std::move(v);
    return r;
  }
  v.amplitudes /= norm;
  r.state = std::move(v);
  return r;
}

}  // namespace adaptsym
