#include <adaptsym/fermion.hpp>
#include <adaptsym/lie.hpp>
#include <adaptsym/pools.hpp>

#include "doctest.h"

using namespace adaptsym;

namespace {
FermionPolynomial ident() { return monomial(Coeff(1), {}); }
}  // namespace

TEST_SUITE_BEGIN("fermion");

TEST_CASE("canonical anticommutation relations") {
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      FermionPolynomial anti =
          annihilation(p) * creation(q) + creation(q) * annihilation(p);
      if (p == q)
        CHECK(anti == ident());
      else
        CHECK(anti.empty());
      // {a_p, a_q} = 0 and {a^p, a^q} = 0
      CHECK((annihilation(p) * annihilation(q) +
             annihilation(q) * annihilation(p))
                .empty());
      CHECK((creation(p) * creation(q) + creation(q) * creation(p)).empty());
    }
}

TEST_CASE("repeated operators vanish") {
  CHECK((creation(2) * creation(2)).empty());
  CHECK((annihilation(5) * annihilation(5)).empty());
}

TEST_CASE("number operator is idempotent") {
  FermionPolynomial n = number_op(3);
  CHECK(n * n == n);
}

TEST_CASE("normal ordering predicate") {
  CHECK(is_normal_ordered({{3, true}, {1, true}, {4, false}, {0, false}}));
  CHECK(!is_normal_ordered({{1, true}, {3, true}}));   // ascending creations
  CHECK(!is_normal_ordered({{0, false}, {1, true}}));  // annihilation first
}

TEST_CASE("adjoint and anti-hermiticity") {
  FermionPolynomial a = sa_single(0, 2);
  CHECK(a.is_anti_hermitian());
  CHECK((a + a.adjoint()).empty());
  CHECK(sa_double_int0(0, 1, 2, 3).is_anti_hermitian());
  CHECK(sa_double_int1(0, 1, 2, 3).is_anti_hermitian());
  CHECK(perfect_pairing(1, 3).is_anti_hermitian());
  CHECK(spin_double(0, 3, 4, 7).is_anti_hermitian());

  FermionPolynomial n = number_op(2);  // Hermitian, not anti
  CHECK(n.adjoint() == n);
  CHECK(!n.is_anti_hermitian());
}

TEST_CASE("adjoint reverses products") {
  FermionPolynomial x = creation(4) * annihilation(1) * number_op(2);
  FermionPolynomial y = number_op(2) * creation(1) * annihilation(4);
  CHECK(x.adjoint() == y);
}

TEST_CASE("exact coefficients survive cancellation") {
  FermionPolynomial a = sa_single(0, 1);
  FermionPolynomial twice = a + a;
  CHECK(twice == a.scaled(Coeff(2)));
  CHECK((twice - a.scaled(Coeff(2))).empty());
  CHECK((a.scaled(Coeff::sqrt2()) * a.scaled(Coeff::inv_sqrt2())) == a * a);
}

TEST_CASE("jacobi identity on generator triples") {
  const FermionPolynomial ops[3] = {sa_single(0, 1), perfect_pairing(0, 2),
                                    sa_double_int0(0, 1, 2, 3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        FermionPolynomial jac =
            commutator(ops[i], commutator(ops[j], ops[k])) +
            commutator(ops[j], commutator(ops[k], ops[i])) +
            commutator(ops[k], commutator(ops[i], ops[j]));
        CHECK(jac.empty());
      }
}

TEST_CASE("max index") {
  CHECK(FermionPolynomial().max_index() == -1);
  CHECK(sa_single(0, 3).max_index() == 7);
}

TEST_SUITE_END();
