#include "adaptsym/pools.hpp"

#include <cassert>
#include <stdexcept>

namespace adaptsym {

namespace {

std::uint8_t u8(int x) { return static_cast<std::uint8_t>(x); }

std::string so_label(int so) {
  return std::to_string(so / 2) + (so % 2 == 0 ? "u" : "d");
}

ConservedFlags flags_for(ElementKind kind, IrrepLabel irrep) {
  ConservedFlags f;
  f.n = true;
  f.sz = true;
  f.gamma = (kind != ElementKind::tuple) && irrep == 0;
  f.s2 = kind != ElementKind::spin_resolved_single &&
         kind != ElementKind::spin_resolved_double;
  return f;
}

PoolElement make_element(std::string id, ElementKind kind, FermionPolynomial g,
                         IrrepLabel irrep) {
  PoolElement e;
  e.id = std::move(id);
  e.kind = kind;
  e.generators.push_back(std::move(g));
  e.irrep = irrep;
  e.conserved = flags_for(kind, irrep);
  return e;
}

}  // namespace

FermionPolynomial spin_single(int p, int q) {
  FermionPolynomial a;
  a.add_term(Coeff(1), {{u8(q), true}, {u8(p), false}});
  a.add_term(Coeff(-1), {{u8(p), true}, {u8(q), false}});
  return a;
}

FermionPolynomial spin_double(int p, int q, int r, int s) {
  FermionPolynomial a;
  a.add_term(Coeff(1), {{u8(r), true}, {u8(s), true}, {u8(q), false}, {u8(p), false}});
  a.add_term(Coeff(-1), {{u8(p), true}, {u8(q), true}, {u8(s), false}, {u8(r), false}});
  return a;
}

FermionPolynomial sa_single(int P, int Q) {
  return (spin_single(so_up(P), so_up(Q)) + spin_single(so_dn(P), so_dn(Q)))
      .scaled(Coeff::inv_sqrt2());
}

FermionPolynomial sa_double_int0(int P, int Q, int R, int S) {
  // prefactor 1 / (2 sqrt((1 + d_PQ)(1 + d_RS)))
  int deltas = (P == Q ? 1 : 0) + (R == S ? 1 : 0);
  Coeff pref = deltas == 0   ? Coeff(Frac(1, 2))
               : deltas == 2 ? Coeff(Frac(1, 4))
                             : Coeff(Frac(1, 2)) * Coeff::inv_sqrt2();
  FermionPolynomial t = spin_double(so_up(P), so_dn(Q), so_up(R), so_dn(S)) -
                        spin_double(so_up(P), so_dn(Q), so_dn(R), so_up(S)) -
                        spin_double(so_dn(P), so_up(Q), so_up(R), so_dn(S)) +
                        spin_double(so_dn(P), so_up(Q), so_dn(R), so_up(S));
  return t.scaled(pref);
}

FermionPolynomial sa_double_int1(int P, int Q, int R, int S) {
  if (P == Q || R == S) return FermionPolynomial();
  const Coeff half(Frac(1, 2));
  FermionPolynomial t =
      spin_double(so_up(P), so_up(Q), so_up(R), so_up(S)) +
      spin_double(so_dn(P), so_dn(Q), so_dn(R), so_dn(S)) +
      (spin_double(so_up(P), so_dn(Q), so_up(R), so_dn(S)) +
       spin_double(so_up(P), so_dn(Q), so_dn(R), so_up(S)) +
       spin_double(so_dn(P), so_up(Q), so_up(R), so_dn(S)) +
       spin_double(so_dn(P), so_up(Q), so_dn(R), so_up(S)))
          .scaled(half);
  return t.scaled(Coeff::inv_sqrt3());
}

FermionPolynomial perfect_pairing(int P, int Q) { return sa_double_int0(P, P, Q, Q); }

namespace {

IrrepLabel xor_irreps(const std::vector<IrrepLabel>& irr,
                      std::initializer_list<int> spatial) {
  IrrepLabel g = 0;
  for (int p : spatial) g ^= irr[p];
  return g;
}

}  // namespace

std::vector<PoolElement> build_gsd(int n_spatial,
                                   const std::vector<IrrepLabel>& irr,
                                   bool enforce_spatial) {
  std::vector<PoolElement> pool;
  const int nso = 2 * n_spatial;
  for (int p = 0; p < nso; ++p)
    for (int q = p + 2; q < nso; q += 2) {  // same spin channel
      IrrepLabel g = xor_irreps(irr, {p / 2, q / 2});
      if (enforce_spatial && g != 0) continue;
      pool.push_back(make_element("gsd_s_" + so_label(p) + "-" + so_label(q),
                                  ElementKind::spin_resolved_single,
                                  spin_single(p, q), g));
    }
  // doubles: lower pair p<q, upper pair r<s, (p,q) < (r,s) lexicographically,
  // equal up-spin counts in both pairs (S_z conservation)
  for (int p = 0; p < nso; ++p)
    for (int q = p + 1; q < nso; ++q)
      for (int r = 0; r < nso; ++r)
        for (int s = r + 1; s < nso; ++s) {
          if (std::pair(p, q) >= std::pair(r, s)) continue;
          if ((p % 2) + (q % 2) != (r % 2) + (s % 2)) continue;
          IrrepLabel g = xor_irreps(irr, {p / 2, q / 2, r / 2, s / 2});
          if (enforce_spatial && g != 0) continue;
          FermionPolynomial a = spin_double(p, q, r, s);
          if (a.empty()) continue;
          pool.push_back(make_element("gsd_d_" + so_label(p) + "." + so_label(q) +
                                          "-" + so_label(r) + "." + so_label(s),
                                      ElementKind::spin_resolved_double,
                                      std::move(a), g));
        }
  return pool;
}

namespace {

void append_sa_singles(std::vector<PoolElement>& pool, int n_spatial,
                       const std::vector<IrrepLabel>& irr, bool enforce_spatial) {
  for (int P = 0; P < n_spatial; ++P)
    for (int Q = P + 1; Q < n_spatial; ++Q) {
      IrrepLabel g = irr[P] ^ irr[Q];
      if (enforce_spatial && g != 0) continue;
      pool.push_back(
          make_element("sa_s_" + std::to_string(P) + "-" + std::to_string(Q),
                       ElementKind::sa_single, sa_single(P, Q), g));
    }
}

void append_pp(std::vector<PoolElement>& pool, int n_spatial) {
  for (int P = 0; P < n_spatial; ++P)
    for (int Q = P + 1; Q < n_spatial; ++Q)
      pool.push_back(
          make_element("sa_pp_" + std::to_string(P) + "-" + std::to_string(Q),
                       ElementKind::perfect_pairing, perfect_pairing(P, Q), 0));
}

std::string d_id(const char* kind, int P, int Q, int R, int S) {
  return std::string(kind) + "_" + std::to_string(P) + "." + std::to_string(Q) +
         "-" + std::to_string(R) + "." + std::to_string(S);
}

// Unique index tuples for the general spin-adapted doubles:
// P<Q, P<=R, xi<S with xi = Q when R = P else R.
template <typename F>
void for_unique_doubles(int n_spatial, F&& f) {
  for (int P = 0; P < n_spatial; ++P)
    for (int Q = P + 1; Q < n_spatial; ++Q)
      for (int R = P; R < n_spatial; ++R) {
        int xi = (R == P) ? Q : R;
        for (int S = xi + 1; S < n_spatial; ++S) f(P, Q, R, S);
      }
}

}  // namespace

std::vector<PoolElement> build_sagsd(int n_spatial,
                                     const std::vector<IrrepLabel>& irr,
                                     bool enforce_spatial) {
  std::vector<PoolElement> pool;
  append_sa_singles(pool, n_spatial, irr, enforce_spatial);
  append_pp(pool, n_spatial);
  // paired-lower doubles A_PP^QR
  for (int P = 0; P < n_spatial; ++P)
    for (int Q = 0; Q < n_spatial; ++Q)
      for (int R = Q + 1; R < n_spatial; ++R) {
        if (enforce_spatial && irr[Q] != irr[R]) continue;
        FermionPolynomial a = sa_double_int0(P, P, Q, R);
        if (a.empty()) continue;
        pool.push_back(make_element(d_id("sa_d0", P, P, Q, R),
                                    ElementKind::sa_double_int0, std::move(a),
                                    xor_irreps(irr, {Q, R})));
      }
  for_unique_doubles(n_spatial, [&](int P, int Q, int R, int S) {
    IrrepLabel g = xor_irreps(irr, {P, Q, R, S});
    if (enforce_spatial && g != 0) return;
    FermionPolynomial a0 = sa_double_int0(P, Q, R, S);
    if (!a0.empty())
      pool.push_back(make_element(d_id("sa_d0", P, Q, R, S),
                                  ElementKind::sa_double_int0, std::move(a0), g));
    FermionPolynomial a1 = sa_double_int1(P, Q, R, S);
    if (!a1.empty())
      pool.push_back(make_element(d_id("sa_d1", P, Q, R, S),
                                  ElementKind::sa_double_int1, std::move(a1), g));
  });
  return pool;
}

std::vector<PoolElement> build_sagspd(int n_spatial,
                                      const std::vector<IrrepLabel>& irr,
                                      bool enforce_spatial) {
  std::vector<PoolElement> pool;
  append_sa_singles(pool, n_spatial, irr, enforce_spatial);
  append_pp(pool, n_spatial);
  return pool;
}

std::vector<PoolElement> build_sagspd_full(int n_spatial,
                                           const std::vector<IrrepLabel>& irr) {
  std::vector<PoolElement> pool = build_sagspd(n_spatial, irr, false);
  // ordered 2- and 3-tuples of non-totally-symmetric singles whose overall
  // direct product is totally symmetric
  // copy, not pointers: add_tuple grows the pool and would invalidate them
  std::vector<PoolElement> nts;
  for (const auto& e : pool)
    if (e.kind == ElementKind::sa_single && e.irrep != 0) nts.push_back(e);
  auto add_tuple = [&pool](std::vector<const PoolElement*> members) {
    PoolElement t;
    t.kind = ElementKind::tuple;
    t.irrep = 0;
    t.conserved = flags_for(ElementKind::tuple, 0);
    t.id = "tup[";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) t.id += ",";
      t.id += members[i]->id;
      t.generators.push_back(members[i]->generators[0]);
    }
    t.id += "]";
    pool.push_back(std::move(t));
  };
  for (const auto& a : nts)
    for (const auto& b : nts)
      if ((a.irrep ^ b.irrep) == 0) add_tuple({&a, &b});
  for (const auto& a : nts)
    for (const auto& b : nts)
      for (const auto& c : nts)
        if ((a.irrep ^ b.irrep ^ c.irrep) == 0) add_tuple({&a, &b, &c});
  return pool;
}

std::vector<PoolElement> build_pdint0(int n_spatial,
                                      const std::vector<IrrepLabel>& irr,
                                      bool enforce_spatial) {
  std::vector<PoolElement> pool;
  append_pp(pool, n_spatial);
  for_unique_doubles(n_spatial, [&](int P, int Q, int R, int S) {
    if (P == Q || R == S) return;  // only distinct-index intermediate singlets
    IrrepLabel g = xor_irreps(irr, {P, Q, R, S});
    if (enforce_spatial && g != 0) return;
    FermionPolynomial a = sa_double_int0(P, Q, R, S);
    if (a.empty()) return;
    pool.push_back(make_element(d_id("sa_d0", P, Q, R, S),
                                ElementKind::sa_double_int0, std::move(a), g));
  });
  return pool;
}

std::vector<PoolElement> build_pool(const PoolSpec& spec) {
  const int n = static_cast<int>(spec.orbital_irreps.size());
  switch (spec.family) {
    case PoolFamily::GSD:
      return build_gsd(n, spec.orbital_irreps, spec.enforce_spatial);
    case PoolFamily::saGSD:
      return build_sagsd(n, spec.orbital_irreps, spec.enforce_spatial);
    case PoolFamily::saGSpD:
      return build_sagspd(n, spec.orbital_irreps, spec.enforce_spatial);
    case PoolFamily::saGSpD_full:
      return build_sagspd_full(n, spec.orbital_irreps);
    case PoolFamily::pDint0:
      return build_pdint0(n, spec.orbital_irreps, spec.enforce_spatial);
  }
  throw std::logic_error("build_pool: bad family");
}

bool is_totally_symmetric(const PoolElement& e,
                          const std::vector<IrrepLabel>& orbital_irreps) {
  IrrepLabel total = 0;
  for (const auto& gen : e.generators) {
    IrrepLabel g = 0;
    bool first = true;
    for (const auto& [ops, c] : gen.terms()) {
      IrrepLabel tg = 0;
      for (const auto& op : ops) tg ^= orbital_irreps[op.index / 2];
      if (first) {
        g = tg;
        first = false;
      } else {
        assert(g == tg && "generator mixes irreps");
      }
    }
    total ^= g;
  }
  return total == 0;
}

const char* family_name(PoolFamily f) {
  switch (f) {
    case PoolFamily::GSD: return "gsd";
    case PoolFamily::saGSD: return "sagsd";
    case PoolFamily::saGSpD: return "sagspd";
    case PoolFamily::saGSpD_full: return "sagspd-full";
    case PoolFamily::pDint0: return "pdint0";
  }
  return "?";
}

const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::spin_resolved_single: return "spin_resolved_single";
    case ElementKind::spin_resolved_double: return "spin_resolved_double";
    case ElementKind::sa_single: return "sa_single";
    case ElementKind::sa_double_int0: return "sa_double_int0";
    case ElementKind::sa_double_int1: return "sa_double_int1";
    case ElementKind::perfect_pairing: return "perfect_pairing";
    case ElementKind::tuple: return "tuple";
  }
  return "?";
}

PoolFamily parse_family(const std::string& name) {
  if (name == "gsd") return PoolFamily::GSD;
  if (name == "sagsd") return PoolFamily::saGSD;
  if (name == "sagspd") return PoolFamily::saGSpD;
  if (name == "sagspd-full") return PoolFamily::saGSpD_full;
  if (name == "pdint0") return PoolFamily::pDint0;
  throw std::invalid_argument(
      "unknown pool family '" + name +
      "' (valid: gsd, sagsd, sagspd, sagspd-full, pdint0)");
}

}  // namespace adaptsym
