#pragma once

#include <string>
#include <vector>

#include "adaptsym/fcidump.hpp"
#include "adaptsym/fermion.hpp"

namespace adaptsym {

enum class PoolFamily { GSD, saGSD, saGSpD, saGSpD_full, pDint0 };

enum class ElementKind {
  spin_resolved_single,
  spin_resolved_double,
  sa_single,
  sa_double_int0,
  sa_double_int1,
  perfect_pairing,
  tuple,
};

struct ConservedFlags {
  bool n = false;
  bool gamma = false;
  bool sz = false;
  bool s2 = false;
};

struct PoolElement {
  std::string id;
  ElementKind kind;
  std::vector<FermionPolynomial> generators;  // length 1, or 2-3 for tuples
  IrrepLabel irrep = 0;  // overall excitation irrep (0 for tuples)
  ConservedFlags conserved;
};

struct PoolSpec {
  PoolFamily family = PoolFamily::saGSpD;
  bool enforce_spatial = false;
  std::vector<IrrepLabel> orbital_irreps;
};

// Elementary generators. Spatial indices throughout; all anti-Hermitian.
FermionPolynomial spin_single(int p, int q);             // spin-orbital A_p^q
FermionPolynomial spin_double(int p, int q, int r, int s);
FermionPolynomial sa_single(int P, int Q);
FermionPolynomial sa_double_int0(int P, int Q, int R, int S);
FermionPolynomial sa_double_int1(int P, int Q, int R, int S);
FermionPolynomial perfect_pairing(int P, int Q);

std::vector<PoolElement> build_gsd(int n_spatial,
                                   const std::vector<IrrepLabel>& orbital_irreps,
                                   bool enforce_spatial);
std::vector<PoolElement> build_sagsd(int n_spatial,
                                     const std::vector<IrrepLabel>& orbital_irreps,
                                     bool enforce_spatial);
std::vector<PoolElement> build_sagspd(int n_spatial,
                                      const std::vector<IrrepLabel>& orbital_irreps,
                                      bool enforce_spatial);
std::vector<PoolElement> build_sagspd_full(
    int n_spatial, const std::vector<IrrepLabel>& orbital_irreps);
std::vector<PoolElement> build_pdint0(int n_spatial,
                                      const std::vector<IrrepLabel>& orbital_irreps,
                                      bool enforce_spatial);

std::vector<PoolElement> build_pool(const PoolSpec& spec);

bool is_totally_symmetric(const PoolElement& e,
                          const std::vector<IrrepLabel>& orbital_irreps);

const char* family_name(PoolFamily f);
const char* kind_name(ElementKind k);
PoolFamily parse_family(const std::string& name);  // throws on unknown name

}  // namespace adaptsym
