#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adaptsym/coeff.hpp"

namespace adaptsym {

// Spin-orbital convention: index 2P is (P, up), 2P+1 is (P, down).
inline int so_up(int p) { return 2 * p; }
inline int so_dn(int p) { return 2 * p + 1; }

struct FermionOp {
  std::uint8_t index = 0;
  bool create = false;

  auto operator<=>(const FermionOp&) const = default;
};

// A product of elementary operators in canonical normal order: all
// creations to the left of all annihilations, indices strictly
// decreasing within each block. Products with a repeated creation or
// annihilation vanish and are never stored.
using OpString = std::vector<FermionOp>;

bool is_normal_ordered(const OpString& s);

// Linear combination of normal-ordered strings with exact coefficients.
class FermionPolynomial {
 public:
  using TermMap = std::map<OpString, Coeff>;

  FermionPolynomial() = default;

  // Adds coeff * ops, reordering into canonical form via the
  // anticommutation relations. ops need not be normal ordered.
  void add_term(const Coeff& coeff, const OpString& ops);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FermionPolynomial operator+(const FermionPolynomial& o) const;
  FermionPolynomial operator-(const FermionPolynomial& o) const;
  FermionPolynomial operator-() const;
  FermionPolynomial operator*(const FermionPolynomial& o) const;
  FermionPolynomial scaled(const Coeff& k) const;

  // Hermitian adjoint: reverses each string and swaps create/annihilate.
  FermionPolynomial adjoint() const;

  bool is_anti_hermitian() const;
  bool operator==(const FermionPolynomial& o) const { return terms_ == o.terms_; }

  // Largest spin-orbital index appearing, or -1 when empty.
  int max_index() const;

  std::string str() const;

 private:
  void insert_canonical(const Coeff& coeff, const OpString& ops);

  TermMap terms_;
};

// Convenience constructors for elementary pieces.
FermionPolynomial creation(int so);
FermionPolynomial annihilation(int so);
FermionPolynomial number_op(int so);
FermionPolynomial monomial(const Coeff& coeff, const OpString& ops);

}  // namespace adaptsym
