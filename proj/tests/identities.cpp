#include "identities.hpp"

#include <adaptsym/lie.hpp>
#include <adaptsym/pools.hpp>

namespace testutil {

using namespace adaptsym;

namespace {

using P_ = FermionPolynomial;

P_ cm(const P_& a, const P_& b) { return commutator(a, b); }
P_ N(int so) { return number_op(so); }
P_ id() { return monomial(Coeff(1), {}); }

std::uint8_t u8(int x) { return static_cast<std::uint8_t>(x); }

// Hermitian spin-summed single, (1/sqrt2) sum_sigma (a^S a_Q + a^Q a_S)
P_ Hs(int Q, int S) {
  P_ t;
  for (int sp = 0; sp < 2; ++sp) {
    int q = 2 * Q + sp, s = 2 * S + sp;
    t.add_term(Coeff(1), {{u8(s), true}, {u8(q), false}});
    t.add_term(Coeff(1), {{u8(q), true}, {u8(s), false}});
  }
  return t.scaled(Coeff::inv_sqrt2());
}

// Hermitian pair hop, a^S_u a^S_d a_Q_d a_Q_u + h.c.
P_ Hpp(int Q, int S) {
  P_ t;
  t.add_term(Coeff(1), {{u8(so_up(S)), true},
                        {u8(so_dn(S)), true},
                        {u8(so_dn(Q)), false},
                        {u8(so_up(Q)), false}});
  t.add_term(Coeff(1), {{u8(so_up(Q)), true},
                        {u8(so_dn(Q)), true},
                        {u8(so_dn(S)), false},
                        {u8(so_up(S)), false}});
  return t;
}

// Anti-Hermitian triple: paired hop P->S combined with a spin-summed
// single hop Q->R, prefactor 1/sqrt2.
P_ triple(int Pl, int Su, int Ql, int Ru) {
  P_ t;
  for (int sp = 0; sp < 2; ++sp) {
    t.add_term(Coeff(1), {{u8(so_up(Su)), true},
                          {u8(so_dn(Su)), true},
                          {u8(2 * Ru + sp), true},
                          {u8(2 * Ql + sp), false},
                          {u8(so_dn(Pl)), false},
                          {u8(so_up(Pl)), false}});
    t.add_term(Coeff(-1), {{u8(so_up(Pl)), true},
                           {u8(so_dn(Pl)), true},
                           {u8(2 * Ql + sp), true},
                           {u8(2 * Ru + sp), false},
                           {u8(so_dn(Su)), false},
                           {u8(so_up(Su)), false}});
  }
  return t.scaled(Coeff::inv_sqrt2());
}

}  // namespace

std::vector<Identity> identity_catalogue() {
  const int P = 0, Q = 1, R = 2, S = 3;
  const int Pu = so_up(P), Pd = so_dn(P), Qu = so_up(Q), Qd = so_dn(Q);
  const int Ru = so_up(R), Rd = so_dn(R), Su = so_up(S), Sd = so_dn(S);
  const Coeff half(Frac(1, 2));
  const Coeff is2 = Coeff::inv_sqrt2();
  const Coeff s2 = Coeff::sqrt2();
  const P_ I = id();
  const P_ zero;

  auto ss = [](int p, int q) { return spin_single(p, q); };
  auto sd = [](int p, int q, int r, int s) { return spin_double(p, q, r, s); };
  auto sas = [](int p, int q) { return sa_single(p, q); };
  auto d0 = [](int p, int q, int r, int s) { return sa_double_int0(p, q, r, s); };
  auto ppd = [](int p, int q) { return perfect_pairing(p, q); };

  const P_ nQtot = N(Qu) + N(Qd);
  const P_ nPtot = N(Pu) + N(Pd);
  const P_ nRtot = N(Ru) + N(Rd);

  std::vector<Identity> ids;
  auto put = [&](std::string name, P_ lhs, P_ rhs) {
    ids.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  };

  // disjoint and chained singles
  put("s1 [A_P^Q,A_R^S] = 0", cm(sas(P, Q), sas(R, S)), zero);
  put("s2 [A_P^Q,A_Q^R] = -1/sqrt2 A_P^R", cm(sas(P, Q), sas(Q, R)),
      sas(P, R).scaled(-is2));

  // perfect pairing with perfect pairing
  put("pp1 [A_PP^QQ,A_RR^SS] = 0", cm(ppd(P, Q), ppd(R, S)), zero);
  put("pp2 [A_PP^QQ,A_QQ^RR] = (n_Q - 1) A_PP^RR", cm(ppd(P, Q), ppd(Q, R)),
      (nQtot - I) * ppd(P, R));

  // perfect pairing with singles
  put("ps1 [A_PP^QQ,A_R^S] = 0", cm(ppd(P, Q), sas(R, S)), zero);
  put("ps2 [A_PP^QQ,A_Q^R] = -A_PP^QR", cm(ppd(P, Q), sas(Q, R)),
      d0(P, P, Q, R).scaled(Coeff(-1)));
  put("ps3a [A_PP^QQ,A_P^Q], spin-resolved form",
      cm(ppd(P, Q), sas(P, Q)),
      ((N(Pd) - N(Qd)) * ss(Pu, Qu) + (N(Pu) - N(Qu)) * ss(Pd, Qd)).scaled(is2));
  put("ps3b [A_PP^QQ,A_P^Q] = A_PP^PQ + A_QQ^PQ", cm(ppd(P, Q), sas(P, Q)),
      d0(P, P, P, Q) + d0(Q, Q, P, Q));

  // doubly nested, innermost [A_PP^QQ, A_QQ^RR]
  const P_ inD = cm(ppd(P, Q), ppd(Q, R));
  put("d1 [[PPQQ,QQRR],A_P^S] = (n_Q - 1) A_RR^PS", cm(inD, sas(P, S)),
      (nQtot - I) * d0(R, R, P, S));
  put("d2 [[PPQQ,QQRR],A_Q^S] = -A_PP^RR H_Q^S", cm(inD, sas(Q, S)),
      (ppd(P, R) * Hs(Q, S)).scaled(Coeff(-1)));
  put("d3 [[PPQQ,QQRR],A_R^S] = (1 - n_Q) A_PP^RS", cm(inD, sas(R, S)),
      (I - nQtot) * d0(P, P, R, S));
  put("d4 [[PPQQ,QQRR],A_P^Q]", cm(inD, sas(P, Q)),
      ((N(Pd) + N(Qu) - I) * sd(Ru, Rd, Pu, Qd) -
       (N(Pu) + N(Qd) - I) * sd(Ru, Rd, Pd, Qu))
          .scaled(is2));
  put("d5 [[PPQQ,QQRR],A_P^R]", cm(inD, sas(P, R)),
      ((I - nQtot) * (ss(Pu, Ru) * (N(Pd) - N(Rd)) + ss(Pd, Rd) * (N(Pu) - N(Ru))))
          .scaled(Coeff(-1) * is2));
  put("d6 [[PPQQ,QQRR],A_Q^R]", cm(inD, sas(Q, R)),
      ((N(Qd) + N(Ru) - I) * sd(Pu, Pd, Qu, Rd) -
       (N(Qu) + N(Rd) - I) * sd(Pu, Pd, Qd, Ru))
          .scaled(is2));
  put("d7 [[PPQQ,QQRR],A_PP^SS] = -(1-n_P)(1-n_Q) A_RR^SS", cm(inD, ppd(P, S)),
      ((I - nPtot) * (I - nQtot) * ppd(R, S)).scaled(Coeff(-1)));
  put("d8 [[PPQQ,QQRR],A_QQ^SS] = -2 A_PP^RR H_QQ^SS", cm(inD, ppd(Q, S)),
      (ppd(P, R) * Hpp(Q, S)).scaled(Coeff(-2)));
  put("d9 [[PPQQ,QQRR],A_RR^SS] = (1-n_Q)(1-n_R) A_PP^SS", cm(inD, ppd(R, S)),
      (I - nQtot) * (I - nRtot) * ppd(P, S));
  put("d10 [[PPQQ,QQRR],A_PP^QQ]", cm(inD, ppd(P, Q)),
      (I - nPtot + (N(Pu) * N(Pd)).scaled(Coeff(2))) * ppd(Q, R));
  put("d11 [[PPQQ,QQRR],A_PP^RR] = 0", cm(inD, ppd(P, R)), zero);
  put("d12 [[PPQQ,QQRR],A_QQ^RR]", cm(inD, ppd(Q, R)),
      ((I - nRtot + (N(Ru) * N(Rd)).scaled(Coeff(2))) * ppd(P, Q))
          .scaled(Coeff(-1)));

  // doubly nested, innermost [A_PP^QQ, A_Q^R]
  const P_ inE = cm(ppd(P, Q), sas(Q, R));
  put("e1 [[PPQQ,Q^R],A_P^S] = A_PS^QR", cm(inE, sas(P, S)), d0(P, S, Q, R));
  put("e2 [[PPQQ,Q^R],A_Q^S] = 1/sqrt2 A_PP^RS", cm(inE, sas(Q, S)),
      d0(P, P, R, S).scaled(is2));
  put("e3 [[PPQQ,Q^R],A_R^S] = 1/sqrt2 A_PP^QS", cm(inE, sas(R, S)),
      d0(P, P, Q, S).scaled(is2));
  put("e4 [[PPQQ,Q^R],A_P^Q]", cm(inE, sas(P, Q)),
      d0(P, P, P, R).scaled(Coeff(-1) * is2) + d0(P, Q, Q, R));
  put("e5 [[PPQQ,Q^R],A_P^R]", cm(inE, sas(P, R)),
      d0(P, P, P, Q).scaled(Coeff(-1) * is2) + d0(P, R, Q, R));
  put("e6 [[PPQQ,Q^R],A_Q^R] = A_PP^RR - A_PP^QQ", cm(inE, sas(Q, R)),
      ppd(P, R) - ppd(P, Q));
  put("e7 [[PPQQ,Q^R],A_PP^SS] = (1-n_P) A_SS^QR", cm(inE, ppd(P, S)),
      (I - nPtot) * d0(S, S, Q, R));
  put("e8 [[PPQQ,Q^R],A_QQ^SS], paired triple", cm(inE, ppd(Q, S)),
      triple(P, S, Q, R).scaled(Coeff(-1)));
  put("e9 [[PPQQ,Q^R],A_RR^SS], paired triple", cm(inE, ppd(R, S)),
      triple(P, S, R, Q).scaled(Coeff(-1)));
  put("e10 [[PPQQ,Q^R],A_PP^QQ]", cm(inE, ppd(P, Q)),
      N(Pu) * N(Pd) * sas(Q, R) +
          ((I - nPtot) * (N(Qd) * ss(Qu, Ru) + N(Qu) * ss(Qd, Rd))).scaled(is2));
  put("e11 [[PPQQ,Q^R],A_PP^RR]", cm(inE, ppd(P, R)),
      (N(Pu) * N(Pd) * sas(Q, R)).scaled(Coeff(-1)) -
          ((I - nPtot) * (N(Rd) * ss(Qu, Ru) + N(Ru) * ss(Qd, Rd))).scaled(is2));
  put("e12 [[PPQQ,Q^R],A_QQ^RR] = 0", cm(inE, ppd(Q, R)), zero);

  // doubly nested, innermost [A_PP^QQ, A_P^Q]
  const P_ inF = cm(ppd(P, Q), sas(P, Q));
  put("f1 [[PPQQ,P^Q],A_P^R]", cm(inF, sas(P, R)),
      ((N(Pd) - N(Qd)) * ss(Qu, Ru) + (N(Pu) - N(Qu)) * ss(Qd, Rd) -
       d0(P, P, Q, R).scaled(s2) - sd(Pu, Qd, Pd, Ru) - sd(Pd, Qu, Pu, Rd))
          .scaled(half));
  put("f2 [[PPQQ,P^Q],A_Q^R]", cm(inF, sas(Q, R)),
      ((N(Qd) - N(Pd)) * ss(Pu, Ru) + (N(Qu) - N(Pu)) * ss(Pd, Rd) -
       d0(Q, Q, P, R).scaled(s2) + sd(Pu, Qd, Qu, Rd) + sd(Pd, Qu, Qd, Ru))
          .scaled(half));
  put("f3 [[PPQQ,P^Q],A_P^Q] = -2 A_PP^QQ", cm(inF, sas(P, Q)),
      ppd(P, Q).scaled(Coeff(-2)));
  put("f4 [[PPQQ,P^Q],A_PP^RR]", cm(inF, ppd(P, R)),
      ((I - N(Pu) - N(Qd)) * sd(Ru, Rd, Pd, Qu) -
       (I - N(Pd) - N(Qu)) * sd(Ru, Rd, Pu, Qd))
          .scaled(is2));
  put("f5 [[PPQQ,P^Q],A_QQ^RR], same as f4", cm(inF, ppd(Q, R)),
      ((I - N(Pu) - N(Qd)) * sd(Ru, Rd, Pd, Qu) -
       (I - N(Pd) - N(Qu)) * sd(Ru, Rd, Pu, Qd))
          .scaled(is2));
  put("f6 [[PPQQ,P^Q],A_PP^QQ]", cm(inF, ppd(P, Q)),
      ((N(Pd) + N(Qd) - (N(Pd) * N(Qd)).scaled(Coeff(2))) * ss(Pu, Qu) +
       (N(Pu) + N(Qu) - (N(Pu) * N(Qu)).scaled(Coeff(2))) * ss(Pd, Qd))
          .scaled(is2));

  // triply nested: spin-polarized doubles
  const P_ t1rhs =
      ((N(Pd) - N(Rd)) *
           (sd(Pu, Qu, Ru, Su).scaled(Coeff(-1)) -
            sd(Pu, Qd, Ru, Sd) + sd(Pu, Su, Qu, Ru) + sd(Pu, Sd, Qd, Ru)) +
       (N(Pu) - N(Ru)) *
           (sd(Pd, Qd, Rd, Sd).scaled(Coeff(-1)) -
            sd(Pd, Qu, Rd, Su) + sd(Pd, Sd, Qd, Rd) + sd(Pd, Su, Qu, Rd)))
          .scaled(half);
  put("t1 [[[PPQQ,QQRR],A_Q^S],A_P^R]",
      cm(cm(inD, sas(Q, S)), sas(P, R)), t1rhs);
  put("t2 [[[PPQQ,QQRR],A_P^R],A_Q^S], same as t1",
      cm(cm(inD, sas(P, R)), sas(Q, S)), t1rhs);

  const P_ base = cm(inE, sas(P, S));
  put("t3 [[[PPQQ,Q^R],A_P^S],A_PP^QQ]", cm(base, ppd(P, Q)),
      (sd(Pu, Ru, Qu, Su) * (N(Qd) - N(Pd)) + sd(Pu, Rd, Qd, Su) * (N(Qu) - N(Pd)) +
       sd(Pd, Rd, Qd, Sd) * (N(Qu) - N(Pu)) + sd(Pd, Ru, Qu, Sd) * (N(Qd) - N(Pu)))
          .scaled(half));
  put("t4 [[[PPQQ,Q^R],A_P^S],A_PP^RR]", cm(base, ppd(P, R)),
      (sd(Pu, Qu, Ru, Su) * (N(Rd) - N(Pd)) + sd(Pu, Qd, Rd, Su) * (N(Ru) - N(Pd)) +
       sd(Pd, Qd, Rd, Sd) * (N(Ru) - N(Pu)) + sd(Pd, Qu, Ru, Sd) * (N(Rd) - N(Pu)))
          .scaled(half));
  put("t5 [[[PPQQ,Q^R],A_P^S],A_QQ^SS]", cm(base, ppd(Q, S)),
      (sd(Pu, Qu, Ru, Su) * (N(Qd) - N(Sd)) + sd(Pu, Qd, Rd, Su) * (N(Qu) - N(Sd)) +
       sd(Pd, Qd, Rd, Sd) * (N(Qu) - N(Su)) + sd(Pd, Qu, Ru, Sd) * (N(Qd) - N(Su)))
          .scaled(half));
  put("t6 [[[PPQQ,Q^R],A_P^S],A_RR^SS]", cm(base, ppd(R, S)),
      (sd(Pu, Ru, Qu, Su) * (N(Rd) - N(Sd)) + sd(Pu, Rd, Qd, Su) * (N(Ru) - N(Sd)) +
       sd(Pd, Rd, Qd, Sd) * (N(Ru) - N(Su)) + sd(Pd, Ru, Qu, Sd) * (N(Rd) - N(Su)))
          .scaled(half));
  put("t7 [[[PPQQ,Q^R],A_QQ^SS],A_P^S]", cm(cm(inE, ppd(Q, S)), sas(P, S)),
      ((N(Pd) - N(Sd)) * (sd(Pu, Qu, Ru, Su) + sd(Pu, Qd, Rd, Su)) +
       (N(Pu) - N(Su)) * (sd(Pd, Qd, Rd, Sd) + sd(Pd, Qu, Ru, Sd)))
          .scaled(half));
  put("t8 [[[PPQQ,Q^R],A_RR^SS],A_P^S]", cm(cm(inE, ppd(R, S)), sas(P, S)),
      ((N(Pd) - N(Sd)) * (sd(Pu, Ru, Qu, Su) + sd(Pu, Rd, Qd, Su)) +
       (N(Pu) - N(Su)) * (sd(Pd, Rd, Qd, Sd) + sd(Pd, Ru, Qu, Sd)))
          .scaled(half));
  put("t9 [[[PPQQ,Q^R],A_PP^QQ],A_P^S]", cm(cm(inE, ppd(P, Q)), sas(P, S)),
      ((N(Pd) - N(Qd)) * (sd(Pu, Qu, Ru, Su) - sd(Pu, Ru, Qu, Su)) +
       (N(Pd) - N(Qu)) * (sd(Pu, Qd, Rd, Su) - sd(Pu, Rd, Qd, Su)) +
       (N(Pu) - N(Qu)) * (sd(Pd, Qd, Rd, Sd) - sd(Pd, Rd, Qd, Sd)) +
       (N(Pu) - N(Qd)) * (sd(Pd, Qu, Ru, Sd) - sd(Pd, Ru, Qu, Sd)))
          .scaled(half));
  put("t10 [[[PPQQ,Q^R],A_PP^RR],A_P^S]", cm(cm(inE, ppd(P, R)), sas(P, S)),
      ((N(Pd) - N(Rd)) * (sd(Pu, Ru, Qu, Su) - sd(Pu, Qu, Ru, Su)) +
       (N(Pd) - N(Ru)) * (sd(Pu, Rd, Qd, Su) - sd(Pu, Qd, Rd, Su)) +
       (N(Pu) - N(Ru)) * (sd(Pd, Rd, Qd, Sd) - sd(Pd, Qd, Rd, Sd)) +
       (N(Pu) - N(Rd)) * (sd(Pd, Ru, Qu, Sd) - sd(Pd, Qu, Ru, Sd)))
          .scaled(half));

  // the quadruple commutator in its closed spin-resolved form
  put("quad [[[PPQQ,Q^R],QQSS],P^S]", quad_commutator(P, Q, R, S),
      ((sd(Pd, Qd, Rd, Sd) + sd(Pd, Qu, Ru, Sd)) * (N(Pu) - N(Su)) +
       (sd(Pu, Qu, Ru, Su) + sd(Pu, Qd, Rd, Su)) * (N(Pd) - N(Sd)))
          .scaled(half));

  return ids;
}

FermionPolynomial quad_commutator(int P, int Q, int R, int S) {
  return commutator(
      commutator(commutator(perfect_pairing(P, Q), sa_single(Q, R)),
                 perfect_pairing(Q, S)),
      sa_single(P, S));
}

FermionPolynomial quad_target(int P, int Q, int R, int S) {
  return sa_double_int1(P, Q, R, S).scaled(Coeff::sqrt3()) -
         sa_double_int0(P, Q, R, S);
}

}  // namespace testutil
