#include "adaptsym/fermion.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace adaptsym {

bool is_normal_ordered(const OpString& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!s[i].create && s[i + 1].create) return false;
    if (s[i].create == s[i + 1].create && s[i].index <= s[i + 1].index) return false;
  }
  return true;
}

// Rewrite one string into canonical form. Work items are processed with a
// stack; each anticommutation a_p a+_q = delta_pq - a+_q a_p splits a term
// in two, everything else is a signed swap or an exact zero.
void FermionPolynomial::add_term(const Coeff& coeff, const OpString& ops) {
  if (coeff.is_zero()) return;
  std::vector<std::pair<Coeff, OpString>> work;
  work.emplace_back(coeff, ops);
  while (!work.empty()) {
    auto [c, s] = std::move(work.back());
    work.pop_back();
    bool dirty = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      const FermionOp &x = s[i], &y = s[i + 1];
      if (!x.create && y.create) {
        if (x.index == y.index) {
          // a_p a+_p = 1 - a+_p a_p
          OpString contracted(s);
          contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
          work.emplace_back(c, std::move(contracted));
        }
        OpString swapped(s);
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(-c, std::move(swapped));
        dirty = true;
        break;
      }
      if (x.create == y.create) {
        if (x.index == y.index) {
          dirty = true;  // nilpotent: term vanishes
          break;
        }
        if (x.index < y.index) {
          OpString swapped(s);
          std::swap(swapped[i], swapped[i + 1]);
          work.emplace_back(-c, std::move(swapped));
          dirty = true;
          break;
        }
      }
    }
    if (!dirty) insert_canonical(c, s);
  }
}

void FermionPolynomial::insert_canonical(const Coeff& coeff, const OpString& ops) {
  auto it = terms_.find(ops);
  if (it == terms_.end()) {
    terms_.emplace(ops, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

FermionPolynomial FermionPolynomial::operator+(const FermionPolynomial& o) const {
  FermionPolynomial r(*this);
  for (const auto& [s, c] : o.terms_) r.insert_canonical(c, s);
  return r;
}

FermionPolynomial FermionPolynomial::operator-(const FermionPolynomial& o) const {
  FermionPolynomial r(*this);
  for (const auto& [s, c] : o.terms_) r.insert_canonical(-c, s);
  return r;
}

FermionPolynomial FermionPolynomial::operator-() const {
  FermionPolynomial r;
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

FermionPolynomial FermionPolynomial::operator*(const FermionPolynomial& o) const {
  FermionPolynomial r;
  for (const auto& [s1, c1] : terms_) {
    for (const auto& [s2, c2] : o.terms_) {
      OpString concat(s1);
      concat.insert(concat.end(), s2.begin(), s2.end());
      r.add_term(c1 * c2, concat);
    }
  }
  return r;
}

FermionPolynomial FermionPolynomial::scaled(const Coeff& k) const {
  FermionPolynomial r;
  if (k.is_zero()) return r;
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, c * k);
  return r;
}

FermionPolynomial FermionPolynomial::adjoint() const {
  FermionPolynomial r;
  for (const auto& [s, c] : terms_) {
    OpString rev(s.rbegin(), s.rend());
    for (auto& op : rev) op.create = !op.create;
    r.add_term(c, rev);
  }
  return r;
}

bool FermionPolynomial::is_anti_hermitian() const {
  return (*this + adjoint()).empty();
}

int FermionPolynomial::max_index() const {
  int m = -1;
  for (const auto& [s, c] : terms_)
    for (const auto& op : s) m = std::max(m, static_cast<int>(op.index));
  return m;
}

std::string FermionPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (const auto& op : s) os << " a" << (op.create ? "+" : "-") << int(op.index);
  }
  if (first) os << "0";
  return os.str();
}

FermionPolynomial creation(int so) {
  FermionPolynomial p;
  p.add_term(Coeff(1), {FermionOp{static_cast<std::uint8_t>(so), true}});
  return p;
}

FermionPolynomial annihilation(int so) {
  FermionPolynomial p;
  p.add_term(Coeff(1), {FermionOp{static_cast<std::uint8_t>(so), false}});
  return p;
}

FermionPolynomial number_op(int so) {
  FermionPolynomial p;
  p.add_term(Coeff(1), {FermionOp{static_cast<std::uint8_t>(so), true},
                        FermionOp{static_cast<std::uint8_t>(so), false}});
  return p;
}

FermionPolynomial monomial(const Coeff& coeff, const OpString& ops) {
  FermionPolynomial p;
  p.add_term(coeff, ops);
  return p;
}

}  // namespace adaptsym
