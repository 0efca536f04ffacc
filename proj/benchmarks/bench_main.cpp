#include <adaptsym/adapt.hpp>
#include <adaptsym/fcidump.hpp>
#include <adaptsym/fock.hpp>
#include <adaptsym/lie.hpp>
#include <adaptsym/pools.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace adaptsym;

namespace {

MolecularIntegrals& h6() {
  static MolecularIntegrals m = parse_fcidump_file(
      std::string(ADAPTSYM_FIXTURE_DIR) + "/h6_2.0.fcidump");
  return m;
}

SectorBasis& h6_sector() {
  static SectorBasis basis = enumerate_sector(
      h6().n_spatial, h6().n_electrons, 0, std::nullopt, h6().orbital_irreps);
  return basis;
}

void bm_build_hamiltonian(benchmark::State& state) {
  for (auto _ : state) {
    auto H = build_hamiltonian(h6(), h6_sector());
    benchmark::DoNotOptimize(H);
  }
}
BENCHMARK(bm_build_hamiltonian);

void bm_matrix_rep(benchmark::State& state) {
  FermionPolynomial g = sa_double_int0(0, 1, 4, 5);
  for (auto _ : state) {
    auto G = matrix_rep(g, h6_sector());
    benchmark::DoNotOptimize(G);
  }
}
BENCHMARK(bm_matrix_rep);

void bm_commutator(benchmark::State& state) {
  FermionPolynomial a = sa_double_int0(0, 1, 4, 5);
  FermionPolynomial b = sa_double_int1(0, 2, 3, 5);
  for (auto _ : state) {
    auto c = commutator(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_commutator);

void bm_apply_unitary(benchmark::State& state) {
  auto G = matrix_rep(perfect_pairing(2, 3), h6_sector());
  Eigen::VectorXd v =
      Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(h6_sector().size()),
                                 -1.0, 1.0)
          .normalized();
  for (auto _ : state) {
    Eigen::VectorXd w = apply_unitary(G, 0.37, v);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(bm_apply_unitary);

void bm_pool_gradient(benchmark::State& state) {
  auto H = build_hamiltonian(h6(), h6_sector());
  auto G = matrix_rep(perfect_pairing(2, 3), h6_sector());
  Eigen::VectorXd v =
      Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(h6_sector().size()),
                                 -1.0, 1.0)
          .normalized();
  for (auto _ : state) {
    double g = pool_gradient(H, v, G);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_pool_gradient);

}  // namespace

BENCHMARK_MAIN();
