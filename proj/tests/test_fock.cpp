#include <adaptsym/fock.hpp>
#include <adaptsym/pools.hpp>
#include <adaptsym/symmetry.hpp>

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace adaptsym;

namespace {

Determinant closed_shell(int n_occ) {
  Determinant d = 0;
  for (int p = 0; p < n_occ; ++p) d |= (3ull << (2 * p));
  return d;
}

double reference_energy(const std::string& fixture_name) {
  MolecularIntegrals m = parse_fcidump_file(testutil::fixture(fixture_name));
  SectorBasis basis = enumerate_sector(m.n_spatial, m.n_electrons, m.ms2,
                                       std::nullopt, m.orbital_irreps);
  auto H = build_hamiltonian(m, basis);
  // aufbau reference: doubly occupied core, excess spins up
  const int n_docc = (m.n_electrons - m.ms2) / 2;
  Determinant d = closed_shell(n_docc);
  for (int p = n_docc; p < n_docc + m.ms2; ++p) d |= (Determinant(1) << (2 * p));
  auto i = basis.find(d);
  REQUIRE(i >= 0);
  return H.coeff(i, i);
}

double commutator_norm(const Eigen::SparseMatrix<double>& A,
                       const Eigen::SparseMatrix<double>& B) {
  Eigen::SparseMatrix<double> C = A * B - B * A;
  return Eigen::Map<const Eigen::VectorXd>(C.valuePtr(), C.nonZeros()).norm();
}

}  // namespace

TEST_SUITE_BEGIN("fock");

TEST_CASE("determinant bookkeeping") {
  // |0up 0dn 2up> over 3 spatial orbitals
  Determinant d = 0b010011;
  CHECK(det_electrons(d) == 3);
  CHECK(det_sz2(d, 3) == 1);
  std::vector<IrrepLabel> irreps = {0, 1, 3};
  CHECK(det_irrep(d, irreps) == 3);  // 0 ^ 0 ^ 3
  CHECK(det_irrep(0, irreps) == 0);
}

TEST_CASE("sector enumeration matches brute force") {
  std::vector<IrrepLabel> irreps = {0, 1, 0, 1};
  for (int n_elec : {2, 3, 4}) {
    for (int sz2 : {0, 1, 2}) {
      if ((n_elec + sz2) % 2 != 0) continue;
      for (IrrepLabel g : {IrrepLabel{0}, IrrepLabel{1}}) {
        SectorBasis basis = enumerate_sector(4, n_elec, sz2, g, irreps);
        std::set<Determinant> brute;
        for (Determinant d = 0; d < (1ull << 8); ++d)
          if (det_electrons(d) == n_elec && det_sz2(d, 4) == sz2 &&
              det_irrep(d, irreps) == g)
            brute.insert(d);
        CHECK(basis.size() == brute.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
          CHECK(brute.count(basis.det(i)) == 1);
        // determinants are listed in ascending order
        CHECK(std::is_sorted(basis.determinants().begin(),
                             basis.determinants().end()));
      }
    }
  }
}

TEST_CASE("infeasible constraints give an empty basis") {
  std::vector<IrrepLabel> irreps = {0, 0};
  CHECK(enumerate_sector(2, 5, std::nullopt, std::nullopt, irreps).size() == 0);
  CHECK(enumerate_sector(2, 2, 4, std::nullopt, irreps).size() == 0);
  CHECK(enumerate_sector(2, 2, 0, IrrepLabel{1}, irreps).size() == 0);
  // parity mismatch between n_elec and sz2 is a caller error
  CHECK_THROWS(enumerate_sector(2, 2, 1, std::nullopt, irreps));
}

TEST_CASE("sector dimensions match the frozen counts") {
  MolecularIntegrals h6 = parse_fcidump_file(testutil::fixture("h6_2.0.fcidump"));
  CHECK(enumerate_sector(6, 6, 0, std::nullopt, h6.orbital_irreps).size() == 400);
  CHECK(enumerate_sector(6, 6, 0, IrrepLabel{0}, h6.orbital_irreps).size() == 200);

  MolecularIntegrals ch2 = parse_fcidump_file(testutil::fixture("ch2_60.fcidump"));
  CHECK(enumerate_sector(ch2.n_spatial, ch2.n_electrons, 0, IrrepLabel{0},
                         ch2.orbital_irreps)
            .size() == 321);
  CHECK(enumerate_sector(ch2.n_spatial, ch2.n_electrons, 0, IrrepLabel{1},
                         ch2.orbital_irreps)
            .size() == 304);

  MolecularIntegrals bo = parse_fcidump_file(testutil::fixture("bo_1.2.fcidump"));
  CHECK(enumerate_sector(bo.n_spatial, bo.n_electrons, 1, IrrepLabel{0},
                         bo.orbital_irreps)
            .size() == 6240);
  CHECK(enumerate_sector(bo.n_spatial, bo.n_electrons, 1, IrrepLabel{1},
                         bo.orbital_irreps)
            .size() == 6304);
}

TEST_CASE("apply_ops signs") {
  // a^3 a^2 a^1 a^0 |vac> builds 0b1111 with sign +1 when applied right to left
  auto r = apply_ops({{3, true}, {2, true}, {1, true}, {0, true}}, 0);
  REQUIRE(r.has_value());
  CHECK(r->first == 1);
  CHECK(r->second == 0b1111);

  // swapping two creations flips the sign
  auto r2 = apply_ops({{2, true}, {3, true}, {1, true}, {0, true}}, 0);
  REQUIRE(r2.has_value());
  CHECK(r2->first == -1);
  CHECK(r2->second == 0b1111);

  // annihilating an empty mode kills the state
  CHECK(!apply_ops({{4, false}}, 0b1111).has_value());
  // double creation kills the state
  CHECK(!apply_ops({{0, true}}, 0b0001).has_value());

  // phase counts occupied modes below the index: a_2 on 0b1101 sees mode 0
  auto r3 = apply_ops({{2, false}}, 0b1101);
  REQUIRE(r3.has_value());
  CHECK(r3->first == -1);
  CHECK(r3->second == 0b1001);
}

TEST_CASE("matrix_rep is the transpose-antisymmetric image of generators") {
  MolecularIntegrals m = parse_fcidump_file(testutil::fixture("h4_1.0.fcidump"));
  SectorBasis basis = enumerate_sector(4, 4, 0, std::nullopt, m.orbital_irreps);
  for (const FermionPolynomial& g :
       {sa_single(0, 2), perfect_pairing(1, 3), sa_double_int1(0, 1, 2, 3)}) {
    Eigen::SparseMatrix<double> G = matrix_rep(g, basis);
    Eigen::SparseMatrix<double> S = Eigen::SparseMatrix<double>(G.transpose()) + G;
    double norm = S.nonZeros() == 0
                      ? 0.0
                      : Eigen::Map<const Eigen::VectorXd>(S.valuePtr(), S.nonZeros())
                            .norm();
    CHECK(norm < 1e-14);
  }
}

TEST_CASE("apply_polynomial agrees with matrix_rep") {
  MolecularIntegrals m = parse_fcidump_file(testutil::fixture("h4_1.0.fcidump"));
  SectorBasis basis = enumerate_sector(4, 4, 0, std::nullopt, m.orbital_irreps);
  FermionPolynomial g = sa_double_int0(0, 1, 2, 3);
  Eigen::SparseMatrix<double> G = matrix_rep(g, basis);

  StateVector v;
  v.basis = &basis;
  v.amplitudes = Eigen::VectorXd::LinSpaced(basis.size(), -1.0, 1.0).normalized();
  StateVector w = apply_polynomial(g, v);
  CHECK((w.amplitudes - G * v.amplitudes).norm() < 1e-14);
}

TEST_CASE("reference determinant energy reproduces SCF") {
  CHECK(reference_energy("h2.fcidump") ==
        doctest::Approx(testutil::oracle::h2_scf).epsilon(1e-12));
  CHECK(reference_energy("h4_1.0.fcidump") ==
        doctest::Approx(testutil::oracle::h4_scf).epsilon(1e-12));
  CHECK(reference_energy("h6_1.0.fcidump") ==
        doctest::Approx(testutil::oracle::h6_1_scf).epsilon(1e-12));
  CHECK(reference_energy("h6_2.0.fcidump") ==
        doctest::Approx(testutil::oracle::h6_2_scf).epsilon(1e-12));
  CHECK(reference_energy("h6_3.0.fcidump") ==
        doctest::Approx(testutil::oracle::h6_3_scf).epsilon(1e-12));
  CHECK(reference_energy("ch2_60.fcidump") ==
        doctest::Approx(testutil::oracle::ch2_60_scf).epsilon(1e-12));
  CHECK(reference_energy("ch2_180.fcidump") ==
        doctest::Approx(testutil::oracle::ch2_180_scf).epsilon(1e-12));
  CHECK(reference_energy("beh2_50.fcidump") ==
        doctest::Approx(testutil::oracle::beh2_scf).epsilon(1e-12));
  CHECK(reference_energy("bo_1.2.fcidump") ==
        doctest::Approx(testutil::oracle::bo_12_scf).epsilon(1e-12));
  CHECK(reference_energy("bo_2.1.fcidump") ==
        doctest::Approx(testutil::oracle::bo_21_scf).epsilon(1e-12));
}

TEST_CASE("hamiltonian is symmetric and commutes with the symmetries") {
  for (const char* name : {"h6_2.0.fcidump", "ch2_60.fcidump"}) {
    MolecularIntegrals m = parse_fcidump_file(testutil::fixture(name));
    SectorBasis basis = enumerate_sector(m.n_spatial, m.n_electrons, m.ms2,
                                         std::nullopt, m.orbital_irreps);
    auto H = build_hamiltonian(m, basis);
    Eigen::SparseMatrix<double> D =
        Eigen::SparseMatrix<double>(H.transpose()) - H;
    CHECK(Eigen::Map<const Eigen::VectorXd>(D.valuePtr(), D.nonZeros())
              .lpNorm<Eigen::Infinity>() < 1e-11);

    CHECK(commutator_norm(H, s2_matrix(basis)) < 1e-9);
    for (IrrepLabel g = 0; g < 8; ++g)
      CHECK(commutator_norm(H, parity_matrix(g, basis, m.orbital_irreps)) <
            1e-9);
  }
}

TEST_CASE("find reports membership") {
  std::vector<IrrepLabel> irreps = {0, 0};
  SectorBasis basis = enumerate_sector(2, 2, 0, std::nullopt, irreps);
  CHECK(basis.size() == 4);
  CHECK(basis.find(0b0011) >= 0);
  CHECK(basis.find(0b0101) == -1);  // sz2 = 2, outside
}

TEST_SUITE_END();
