#include "adaptsym/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace adaptsym {

int det_electrons(Determinant d) { return std::popcount(d); }

int det_sz2(Determinant d, int n_spatial) {
  int na = 0, nb = 0;
  for (int p = 0; p < n_spatial; ++p) {
    na += (d >> (2 * p)) & 1;
    nb += (d >> (2 * p + 1)) & 1;
  }
  return na - nb;
}

IrrepLabel det_irrep(Determinant d, const std::vector<IrrepLabel>& orbital_irreps) {
  IrrepLabel g = 0;
  for (std::size_t p = 0; p < orbital_irreps.size(); ++p) {
    if ((d >> (2 * p)) & 1) g ^= orbital_irreps[p];
    if ((d >> (2 * p + 1)) & 1) g ^= orbital_irreps[p];
  }
  return g;
}

SectorBasis::SectorBasis(std::vector<Determinant> dets, SectorConstraints cons)
    : dets_(std::move(dets)), cons_(cons) {
  std::sort(dets_.begin(), dets_.end());
  index_.reserve(dets_.size());
  for (std::size_t i = 0; i < dets_.size(); ++i) index_.emplace(dets_[i], i);
  if (index_.size() != dets_.size())
    throw std::invalid_argument("SectorBasis: duplicate determinants");
}

std::int64_t SectorBasis::find(Determinant d) const {
  auto it = index_.find(d);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

SectorBasis enumerate_sector(int n_spatial, int n_elec, std::optional<int> sz2,
                             std::optional<IrrepLabel> irrep,
                             const std::vector<IrrepLabel>& orbital_irreps) {
  if (sz2 && ((*sz2 - n_elec) % 2) != 0)
    throw std::invalid_argument("enumerate_sector: sz2 and n_elec parity differ");
  // other infeasible constraints simply select nothing
  if (n_elec < 0 || n_elec > 2 * n_spatial || (sz2 && std::abs(*sz2) > n_elec))
    return SectorBasis({}, SectorConstraints{n_spatial, n_elec, sz2, irrep});
  std::vector<Determinant> dets;
  const int nso = 2 * n_spatial;
  // Gosper's hack over all popcount-n_elec words.
  Determinant limit = (n_elec == nso) ? 0 : (Determinant(1) << nso);
  Determinant w = (n_elec == 0) ? 0 : (Determinant(1) << n_elec) - 1;
  while (true) {
    bool ok = true;
    if (sz2 && det_sz2(w, n_spatial) != *sz2) ok = false;
    if (ok && irrep && det_irrep(w, orbital_irreps) != *irrep) ok = false;
    if (ok) dets.push_back(w);
    if (n_elec == 0) break;
    Determinant c = w & (~w + 1);
    Determinant r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
    if (limit != 0 && w >= limit) break;
    if (limit == 0) break;  // full word: single determinant
  }
  return SectorBasis(std::move(dets),
                     SectorConstraints{n_spatial, n_elec, sz2, irrep});
}

namespace {

inline int parity_below(Determinant w, int i) {
  Determinant mask = (Determinant(1) << i) - 1;
  return std::popcount(w & mask) & 1;
}

}  // namespace

std::optional<std::pair<int, Determinant>> apply_ops(const OpString& ops,
                                                     Determinant d) {
  int sign = 1;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    Determinant bit = Determinant(1) << it->index;
    if (it->create == bool(d & bit)) return std::nullopt;
    if (parity_below(d, it->index)) sign = -sign;
    d ^= bit;
  }
  return std::make_pair(sign, d);
}

StateVector apply_polynomial(const FermionPolynomial& p, const StateVector& v) {
  const SectorBasis& basis = *v.basis;
  StateVector out;
  out.basis = v.basis;
  out.amplitudes = Eigen::VectorXd::Zero(v.amplitudes.size());
  for (const auto& [ops, coeff] : p.terms()) {
    const double c = coeff.value();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      double a = v.amplitudes[static_cast<Eigen::Index>(j)];
      if (a == 0.0) continue;
      auto res = apply_ops(ops, basis.det(j));
      if (!res) continue;
      auto idx = basis.find(res->second);
      if (idx < 0) continue;
      out.amplitudes[idx] += res->first * c * a;
    }
  }
  return out;
}

Eigen::SparseMatrix<double> matrix_rep(const FermionPolynomial& p,
                                       const SectorBasis& basis) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<double>> trips;
  for (const auto& [ops, coeff] : p.terms()) {
    const double c = coeff.value();
    for (Eigen::Index j = 0; j < n; ++j) {
      auto res = apply_ops(ops, basis.det(j));
      if (!res) continue;
      auto idx = basis.find(res->second);
      if (idx < 0) continue;
      trips.emplace_back(static_cast<Eigen::Index>(idx), j, res->first * c);
    }
  }
  Eigen::SparseMatrix<double> M(n, n);
  M.setFromTriplets(trips.begin(), trips.end());
  M.prune([](Eigen::Index, Eigen::Index, double v) { return v != 0.0; });
  return M;
}

// Slater-Condon assembly column by column: diagonal, same-spin singles,
// spin-pattern-matched doubles.
Eigen::SparseMatrix<double> build_hamiltonian(const MolecularIntegrals& m,
                                              const SectorBasis& basis) {
  if (basis.constraints().n_elec != m.n_electrons)
    throw std::invalid_argument("build_hamiltonian: electron count mismatch");
  const int nso = 2 * m.n_spatial;
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<double>> trips;

  auto so_int = [&m](int p, int q, int r, int s) {
    // (pq|rs) over spin-orbitals; vanishes unless spins match per pair
    if ((p & 1) == (q & 1) && (r & 1) == (s & 1))
      return m.two_body(p >> 1, q >> 1, r >> 1, s >> 1);
    return 0.0;
  };

  std::vector<int> occ, virt;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Determinant w = basis.det(j);
    occ.clear();
    virt.clear();
    for (int i = 0; i < nso; ++i)
      ((w >> i) & 1 ? occ : virt).push_back(i);

    double e = m.e_core;
    for (int a : occ) e += m.h1(a >> 1, a >> 1);
    for (std::size_t x = 0; x < occ.size(); ++x)
      for (std::size_t y = x + 1; y < occ.size(); ++y) {
        int a = occ[x], b = occ[y];
        e += m.two_body(a >> 1, a >> 1, b >> 1, b >> 1);
        if ((a & 1) == (b & 1)) e -= m.two_body(a >> 1, b >> 1, b >> 1, a >> 1);
      }
    trips.emplace_back(j, j, e);

    for (int i : occ)
      for (int a : virt) {
        if ((i & 1) != (a & 1)) continue;
        auto res = apply_ops({{static_cast<std::uint8_t>(a), true},
                              {static_cast<std::uint8_t>(i), false}},
                             w);
        auto idx = basis.find(res->second);
        if (idx < 0) continue;
        const int P = a >> 1, Q = i >> 1;
        double val = m.h1(P, Q);
        for (int k : occ) {
          if (k == i) continue;
          val += m.two_body(P, Q, k >> 1, k >> 1);
          if ((k & 1) == (a & 1)) val -= m.two_body(P, k >> 1, k >> 1, Q);
        }
        trips.emplace_back(static_cast<Eigen::Index>(idx), j, res->first * val);
      }

    for (std::size_t x = 0; x < occ.size(); ++x)
      for (std::size_t y = 0; y < x; ++y) {
        int i1 = occ[x], i2 = occ[y];
        for (std::size_t u = 0; u < virt.size(); ++u)
          for (std::size_t t = 0; t < u; ++t) {
            int a1 = virt[u], a2 = virt[t];
            if ((i1 & 1) + (i2 & 1) != (a1 & 1) + (a2 & 1)) continue;
            auto res = apply_ops({{static_cast<std::uint8_t>(a1), true},
                                  {static_cast<std::uint8_t>(a2), true},
                                  {static_cast<std::uint8_t>(i2), false},
                                  {static_cast<std::uint8_t>(i1), false}},
                                 w);
            if (!res) continue;
            auto idx = basis.find(res->second);
            if (idx < 0) continue;
            double val = so_int(a1, i1, a2, i2) - so_int(a1, i2, a2, i1);
            if (val == 0.0) continue;
            trips.emplace_back(static_cast<Eigen::Index>(idx), j,
                               res->first * val);
          }
      }
  }
  Eigen::SparseMatrix<double> H(n, n);
  H.setFromTriplets(trips.begin(), trips.end());
  return H;
}

}  // namespace adaptsym
