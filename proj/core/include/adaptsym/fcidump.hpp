#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace adaptsym {

// Irreducible representation label of an Abelian group: k-bit word,
// product = XOR, totally symmetric = 0. ORBSYM value v maps to v - 1.
using IrrepLabel = std::uint8_t;

struct FcidumpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integrals in chemists' notation: h2(p,q,r,s) = (pq|rs), 8-fold
// permutational symmetry. All energies in hartree.
struct MolecularIntegrals {
  int n_spatial = 0;
  int n_electrons = 0;
  int ms2 = 0;
  int isym = 1;
  std::vector<IrrepLabel> orbital_irreps;
  Eigen::MatrixXd h1;
  std::vector<double> h2;  // flat, ((p*n + q)*n + r)*n + s
  double e_core = 0.0;

  double two_body(int p, int q, int r, int s) const {
    const int n = n_spatial;
    return h2[static_cast<std::size_t>(((p * n + q) * n + r)) * n + s];
  }
  void set_two_body(int p, int q, int r, int s, double v);

  // Checks hermiticity, permutational symmetry, and that every nonzero
  // integral is totally symmetric under the orbital irreps. Throws on
  // violation.
  void validate(double tol = 1e-10) const;
};

MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_file(const std::string& path);
void serialize_fcidump(const MolecularIntegrals& m, std::ostream& out);

// Removes the listed doubly occupied spatial orbitals, folding their mean
// field into e_core and the one-body integrals of the remaining space.
MolecularIntegrals freeze_core(const MolecularIntegrals& m,
                               const std::vector<int>& frozen);

}  // namespace adaptsym
