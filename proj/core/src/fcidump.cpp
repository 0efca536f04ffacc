#include "adaptsym/fcidump.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace adaptsym {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw FcidumpError("fcidump line " + std::to_string(line) + ": " + msg);
}

// The 8 chemists'-notation equivalents of (pq|rs).
std::array<std::array<int, 4>, 8> equivalents(int p, int q, int r, int s) {
  return {{{p, q, r, s},
           {q, p, r, s},
           {p, q, s, r},
           {q, p, s, r},
           {r, s, p, q},
           {s, r, p, q},
           {r, s, q, p},
           {s, r, q, p}}};
}

}  // namespace

void MolecularIntegrals::set_two_body(int p, int q, int r, int s, double v) {
  const int n = n_spatial;
  for (const auto& t : equivalents(p, q, r, s))
    h2[static_cast<std::size_t>(((t[0] * n + t[1]) * n + t[2])) * n + t[3]] = v;
}

void MolecularIntegrals::validate(double tol) const {
  const int n = n_spatial;
  if (static_cast<int>(orbital_irreps.size()) != n)
    throw FcidumpError("orbital_irreps length does not match n_spatial");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (std::abs(h1(p, q) - h1(q, p)) > tol)
        throw FcidumpError("h1 not symmetric");
      if (std::abs(h1(p, q)) > tol && orbital_irreps[p] != orbital_irreps[q])
        throw FcidumpError("h1 violates point-group symmetry");
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double v = two_body(p, q, r, s);
          if (std::abs(v) > tol &&
              (orbital_irreps[p] ^ orbital_irreps[q] ^ orbital_irreps[r] ^
               orbital_irreps[s]) != 0)
            throw FcidumpError("h2 violates point-group symmetry");
          for (const auto& t : equivalents(p, q, r, s))
            if (std::abs(v - two_body(t[0], t[1], t[2], t[3])) > tol)
              throw FcidumpError("h2 violates permutational symmetry");
        }
}

MolecularIntegrals parse_fcidump(std::istream& in) {
  MolecularIntegrals m;
  std::string header;
  std::string line;
  int lineno = 0;
  bool header_done = false;

  // Header: everything from &FCI up to &END or a bare /.
  while (!header_done && std::getline(in, line)) {
    ++lineno;
    std::string u = upper(line);
    std::size_t endpos = u.find("&END");
    if (endpos == std::string::npos) {
      std::size_t slash = u.find('/');
      if (slash != std::string::npos) endpos = slash;
    }
    if (endpos != std::string::npos) {
      header += line.substr(0, endpos);
      header_done = true;
    } else {
      header += line;
      header += ' ';
    }
  }
  if (!header_done) throw FcidumpError("missing &END / terminator in header");

  std::string h = upper(header);
  std::size_t fci = h.find("&FCI");
  if (fci == std::string::npos) throw FcidumpError("header does not start with &FCI");
  h = h.substr(fci + 4);
  // normalize separators so key=value tokens split on whitespace
  for (char& c : h)
    if (c == ',' || c == '\t') c = ' ';

  int norb = -1, nelec = -1;
  std::vector<int> orbsym;
  std::istringstream hs(h);
  std::string tok;
  std::string pending_key;
  auto handle = [&](const std::string& key, const std::string& val) {
    if (key == "NORB")
      norb = std::stoi(val);
    else if (key == "NELEC")
      nelec = std::stoi(val);
    else if (key == "MS2")
      m.ms2 = std::stoi(val);
    else if (key == "ISYM")
      m.isym = std::stoi(val);
    else if (key == "ORBSYM")
      orbsym.push_back(std::stoi(val));
    // unknown keys ignored
  };
  while (hs >> tok) {
    std::size_t eq = tok.find('=');
    if (eq != std::string::npos) {
      pending_key = tok.substr(0, eq);
      std::string val = tok.substr(eq + 1);
      if (!val.empty()) handle(pending_key, val);
    } else if (!pending_key.empty()) {
      handle(pending_key, tok);  // ORBSYM values after the '='
    } else {
      throw FcidumpError("malformed header token: " + tok);
    }
  }
  if (norb <= 0) throw FcidumpError("missing or invalid NORB");
  if (nelec < 0) throw FcidumpError("missing NELEC");
  if (static_cast<int>(orbsym.size()) != norb)
    throw FcidumpError("ORBSYM length " + std::to_string(orbsym.size()) +
                       " does not match NORB " + std::to_string(norb));

  m.n_spatial = norb;
  m.n_electrons = nelec;
  m.orbital_irreps.resize(norb);
  for (int p = 0; p < norb; ++p) {
    if (orbsym[p] < 1 || orbsym[p] > 8)
      throw FcidumpError("ORBSYM value out of range [1,8]");
    m.orbital_irreps[p] = static_cast<IrrepLabel>(orbsym[p] - 1);
  }
  m.h1 = Eigen::MatrixXd::Zero(norb, norb);
  m.h2.assign(static_cast<std::size_t>(norb) * norb * norb * norb, 0.0);

  std::vector<bool> seen1(static_cast<std::size_t>(norb) * norb, false);
  std::vector<bool> seen2(m.h2.size(), false);
  bool seen_core = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    double v;
    int i, j, k, l;
    if (!(ls >> v)) {
      // skip blank lines
      std::string rest;
      if (ls.clear(), !(std::istringstream(line) >> rest)) continue;
      fail(lineno, "unparseable entry");
    }
    if (!(ls >> i >> j >> k >> l)) fail(lineno, "entry needs four indices");
    auto chk = [&](int x) {
      if (x < 0 || x > norb) fail(lineno, "index out of range [1, NORB]");
    };
    chk(i), chk(j), chk(k), chk(l);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (seen_core && std::abs(m.e_core - v) > 1e-10)
        fail(lineno, "conflicting duplicate core-energy entries");
      m.e_core = v;
      seen_core = true;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) fail(lineno, "one-body entry with a zero index");
      int p = i - 1, q = j - 1;
      std::size_t key = static_cast<std::size_t>(std::max(p, q)) * norb +
                        std::min(p, q);
      if (seen1[key] && std::abs(m.h1(p, q) - v) > 1e-10)
        fail(lineno, "conflicting duplicate one-body entries");
      m.h1(p, q) = m.h1(q, p) = v;
      seen1[key] = true;
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0)
        fail(lineno, "two-body entry with a zero index");
      int p = i - 1, q = j - 1, r = k - 1, s = l - 1;
      std::size_t key =
          static_cast<std::size_t>(((p * norb + q) * norb + r)) * norb + s;
      if (seen2[key] && std::abs(m.two_body(p, q, r, s) - v) > 1e-10)
        fail(lineno, "conflicting duplicate two-body entries");
      m.set_two_body(p, q, r, s, v);
      for (const auto& t : equivalents(p, q, r, s))
        seen2[static_cast<std::size_t>(
            ((t[0] * norb + t[1]) * norb + t[2])) * norb + t[3]] = true;
    }
  }
  return m;
}

MolecularIntegrals parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open " + path);
  return parse_fcidump(in);
}

void serialize_fcidump(const MolecularIntegrals& m, std::ostream& out) {
  const int n = m.n_spatial;
  out << "&FCI NORB=" << n << ",NELEC=" << m.n_electrons << ",MS2=" << m.ms2
      << ",\n ORBSYM=";
  for (int p = 0; p < n; ++p) out << int(m.orbital_irreps[p]) + 1 << ",";
  out << "\n ISYM=" << m.isym << ",\n&END\n";
  char buf[96];
  auto emit = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%24.16e %3d %3d %3d %3d\n", v, i, j, k, l);
    out << buf;
  };
  // canonical unique (pq|rs): p>=q, r>=s, (p,q) >= (r,s)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (r == p && s > q) continue;
          double v = m.two_body(p, q, r, s);
          if (v != 0.0) emit(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      if (m.h1(p, q) != 0.0) emit(m.h1(p, q), p + 1, q + 1, 0, 0);
  emit(m.e_core, 0, 0, 0, 0);
}

MolecularIntegrals freeze_core(const MolecularIntegrals& m,
                               const std::vector<int>& frozen) {
  std::vector<bool> is_frozen(m.n_spatial, false);
  for (int f : frozen) {
    if (f < 0 || f >= m.n_spatial)
      throw FcidumpError("frozen orbital index out of range");
    if (is_frozen[f]) throw FcidumpError("duplicate frozen orbital index");
    is_frozen[f] = true;
  }
  const int n_active = m.n_spatial - static_cast<int>(frozen.size());
  const int n_elec = m.n_electrons - 2 * static_cast<int>(frozen.size());
  if (n_elec < 0) throw FcidumpError("freezing leaves a negative electron count");

  std::vector<int> active;
  for (int p = 0; p < m.n_spatial; ++p)
    if (!is_frozen[p]) active.push_back(p);

  MolecularIntegrals r;
  r.n_spatial = n_active;
  r.n_electrons = n_elec;
  r.ms2 = m.ms2;
  r.isym = m.isym;
  r.orbital_irreps.resize(n_active);
  r.h1 = Eigen::MatrixXd::Zero(n_active, n_active);
  r.h2.assign(static_cast<std::size_t>(n_active) * n_active * n_active * n_active,
              0.0);

  r.e_core = m.e_core;
  for (int f : frozen) {
    r.e_core += 2.0 * m.h1(f, f);
    for (int g : frozen)
      r.e_core += 2.0 * m.two_body(f, f, g, g) - m.two_body(f, g, g, f);
  }
  for (int a = 0; a < n_active; ++a) {
    r.orbital_irreps[a] = m.orbital_irreps[active[a]];
    for (int b = 0; b < n_active; ++b) {
      double v = m.h1(active[a], active[b]);
      for (int f : frozen)
        v += 2.0 * m.two_body(active[a], active[b], f, f) -
             m.two_body(active[a], f, f, active[b]);
      r.h1(a, b) = v;
    }
  }
  for (int a = 0; a < n_active; ++a)
    for (int b = 0; b < n_active; ++b)
      for (int c = 0; c < n_active; ++c)
        for (int d = 0; d < n_active; ++d)
          r.h2[static_cast<std::size_t>(((a * n_active + b) * n_active + c)) *
                   n_active + d] =
              m.two_body(active[a], active[b], active[c], active[d]);
  return r;
}

}  // namespace adaptsym
