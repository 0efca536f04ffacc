// adaptsym command line frontend.
//
// Subcommands: adapt, spectrum, closure, pool-info, symmetry-report.
// All output is JSON with a fixed key order and floats printed to 12
// significant digits, so identical invocations produce identical bytes.
//
// Exit codes: 0 success, 2 missing/unreadable fixture, 3 configuration
// error, 4 numerical failure, 5 closure dimension cap exceeded.

#include <adaptsym/adapt.hpp>
#include <adaptsym/fci.hpp>
#include <adaptsym/fcidump.hpp>
#include <adaptsym/fock.hpp>
#include <adaptsym/lie.hpp>
#include <adaptsym/pools.hpp>
#include <adaptsym/symmetry.hpp>
#include <adaptsym/threads.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace adaptsym;

namespace {

constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- deterministic JSON emission ----

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string jnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string jint(long long v) { return std::to_string(v); }
std::string jbool(bool b) { return b ? "true" : "false"; }

using JPairs = std::vector<std::pair<std::string, std::string>>;

std::string jobj(const JPairs& kv) {
  std::string out = "{";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) out += ",";
    out += jstr(kv[i].first) + ":" + kv[i].second;
  }
  return out + "}";
}

std::string jarr(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "]";
}

// ---- shared option plumbing ----

struct SectorSpec {
  std::optional<int> n_elec;
  std::optional<int> sz2;
  std::optional<IrrepLabel> irrep;
};

SectorSpec parse_sector(const std::string& text) {
  SectorSpec s;
  if (text.empty()) return s;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("--sector expects N,SZ2[,IRREP], got '" + text + "'");
    }
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw ConfigError("--sector expects N,SZ2[,IRREP], got '" + text + "'");
  s.n_elec = parts[0];
  s.sz2 = parts[1];
  if (parts.size() == 3) {
    if (parts[2] < 0 || parts[2] > 255)
      throw ConfigError("--sector irrep out of range");
    s.irrep = static_cast<IrrepLabel>(parts[2]);
  }
  return s;
}

ReferenceSpec parse_ref(const std::string& text) {
  ReferenceSpec ref;
  std::vector<std::vector<int>> groups;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    groups.emplace_back();
    std::stringstream gs(group);
    std::string tok;
    while (std::getline(gs, tok, ',')) {
      if (tok.empty()) continue;
      try {
        groups.back().push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ConfigError("--ref expects D,..[;U,..][;W,..], got '" + text + "'");
      }
    }
  }
  if (groups.empty() || groups.size() > 3)
    throw ConfigError("--ref expects up to three ';'-separated lists");
  ref.doubly_occupied = groups[0];
  if (groups.size() > 1) ref.singly_occupied_up = groups[1];
  if (groups.size() > 2) ref.singly_occupied_down = groups[2];
  return ref;
}

ReferenceSpec default_reference(const MolecularIntegrals& m) {
  ReferenceSpec ref;
  const int n_docc = (m.n_electrons - m.ms2) / 2;
  for (int p = 0; p < n_docc; ++p) ref.doubly_occupied.push_back(p);
  for (int p = n_docc; p < n_docc + m.ms2; ++p)
    ref.singly_occupied_up.push_back(p);
  return ref;
}

MolecularIntegrals load_fixture(const std::string& path) {
  if (path.empty()) throw ConfigError("--fcidump is required");
  if (!fs::exists(path)) throw FixtureError("fixture not found: " + path);
  try {
    return parse_fcidump_file(path);
  } catch (const FcidumpError& e) {
    throw FixtureError(std::string("fixture unreadable: ") + e.what());
  }
}

std::string fixture_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sector_json(int n_elec, std::optional<int> sz2,
                        std::optional<IrrepLabel> irrep, std::size_t dim) {
  return jobj({{"n_electrons", jint(n_elec)},
               {"sz2", sz2 ? jint(*sz2) : "null"},
               {"irrep", irrep ? jint(*irrep) : "null"},
               {"dim", jint(static_cast<long long>(dim))}});
}

std::string manifest_json(const std::string& fixture,
                          const std::string& pool_family,
                          const std::string& sector, const JPairs& config) {
  return jobj({{"tool_version", jstr(kVersion)},
               {"fixture", jstr(fixture)},
               {"fixture_hash", jstr(fixture_hash(fixture))},
               {"pool", pool_family.empty() ? "null" : jstr(pool_family)},
               {"sector", sector},
               {"config", jobj(config)}});
}

std::string report_json(const SymmetryReport& r) {
  std::vector<std::string> weights;
  for (const auto& [g, w] : r.irrep_weights)
    weights.push_back(jobj({{"irrep", jint(g)}, {"weight", jnum(w)}}));
  return jobj({{"n_expect", jnum(r.n_expect)},
               {"sz_expect", jnum(r.sz_expect)},
               {"s2_expect", jnum(r.s2_expect)},
               {"s2_std", jnum(r.s2_std)},
               {"irrep_weights", jarr(weights)}});
}

std::ofstream open_out(const std::string& path, bool force) {
  if (!force && fs::exists(path))
    throw ConfigError("output path exists (use --force): " + path);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output path: " + path);
  return out;
}

void emit(const std::string& text, const std::string& out_path, bool force) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    auto out = open_out(out_path, force);
    out << text << "\n";
  }
}

// ---- subcommand state ----

struct Options {
  std::string fcidump;
  std::string pool = "sagspd";
  bool enforce_spatial = false;
  std::string sector;
  std::string ref;
  std::string param_budget = "auto";
  int scan_points = 32;
  int k = 4;
  double closure_tol = 1e-6;
  long long closure_cap = 20000;
  std::string state_path;
  std::string config_path;
  std::string out;
  bool force = false;
};

PoolSpec make_pool_spec(const Options& o, const MolecularIntegrals& m) {
  PoolSpec spec;
  spec.family = parse_family(o.pool);  // throws, names the valid families
  spec.enforce_spatial = o.enforce_spatial;
  spec.orbital_irreps = m.orbital_irreps;
  return spec;
}

double state_s2(const Eigen::SparseMatrix<double>& S2,
                const Eigen::VectorXd& v) {
  return v.dot(S2 * v);
}

// ---- adapt ----

int cmd_adapt(const Options& o) {
  MolecularIntegrals m = load_fixture(o.fcidump);

  AdaptConfig cfg;
  cfg.pool = make_pool_spec(o, m);
  cfg.scan_points = o.scan_points;
  if (o.param_budget != "auto") {
    try {
      cfg.param_budget = std::stoi(o.param_budget);
    } catch (const std::exception&) {
      throw ConfigError("--param-budget expects an integer or 'auto'");
    }
    if (*cfg.param_budget < 0) throw ConfigError("--param-budget must be >= 0");
  }
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("cannot read config file: " + o.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config file: ") + e.what());
    }
    for (const auto& [key, val] : j.items()) {
      if (key == "vqe_grad_tol") cfg.vqe_grad_tol = val.get<double>();
      else if (key == "vqe_max_micro") cfg.vqe_max_micro = val.get<int>();
      else if (key == "stagnation_repeats") cfg.stagnation_repeats = val.get<int>();
      else if (key == "scan_points") cfg.scan_points = val.get<int>();
      else if (key == "restarts") cfg.restarts = val.get<int>();
      else if (key == "selection_floor") cfg.selection_floor = val.get<double>();
      else if (key == "param_budget") {
        if (val.is_string() && val == "auto") cfg.param_budget.reset();
        else cfg.param_budget = val.get<int>();
      } else {
        throw ConfigError("config file: unknown key '" + key + "'");
      }
    }
  }

  ReferenceSpec ref = o.ref.empty() ? default_reference(m) : parse_ref(o.ref);
  if (ref.n_electrons() != m.n_electrons)
    throw ConfigError("--ref electron count does not match the fixture");

  AdaptResult result = adapt_run(m, cfg, ref);

  auto H = build_hamiltonian(m, result.sector);
  Spectrum fci = lowest_eigenpairs(H, 1);
  const double e_fci = fci.energies[0];

  const auto& c = result.sector.constraints();
  std::string sector = sector_json(c.n_elec, c.sz2, c.irrep, result.sector.size());
  std::string manifest = manifest_json(
      o.fcidump, family_name(cfg.pool.family), sector,
      {{"enforce_spatial", jbool(cfg.pool.enforce_spatial)},
       {"param_budget",
        cfg.param_budget ? jint(*cfg.param_budget) : jstr("auto")},
       {"scan_points", jint(cfg.scan_points)},
       {"reference",
        jobj({{"doubly_occupied",
               jarr([&] {
                 std::vector<std::string> v;
                 for (int p : ref.doubly_occupied) v.push_back(jint(p));
                 return v;
               }())},
              {"singly_up", jarr([&] {
                 std::vector<std::string> v;
                 for (int p : ref.singly_occupied_up) v.push_back(jint(p));
                 return v;
               }())},
              {"singly_down", jarr([&] {
                 std::vector<std::string> v;
                 for (int p : ref.singly_occupied_down) v.push_back(jint(p));
                 return v;
               }())}})}});

  std::ostringstream trace;
  trace << jobj({{"manifest", manifest}}) << "\n";
  for (std::size_t i = 0; i < result.trace.iterations.size(); ++i) {
    const IterationRecord& r = result.trace.iterations[i];
    trace << jobj({{"iteration", jint(static_cast<long long>(i))},
                   {"selected_id", jstr(r.selected_id)},
                   {"selection_score", jnum(r.selection_score)},
                   {"n_params", jint(r.n_params)},
                   {"energy", jnum(r.energy)},
                   {"symmetry", report_json(r.symmetry)}})
          << "\n";
  }

  int n_params = 0;
  for (const auto& step : result.ansatz)
    n_params += static_cast<int>(step.thetas.size());
  std::string summary =
      jobj({{"manifest", manifest},
            {"final_energy", jnum(result.final_energy)},
            {"fci_energy", jnum(e_fci)},
            {"final_error_vs_fci", jnum(result.final_energy - e_fci)},
            {"n_params", jint(n_params)},
            {"param_budget", jint(result.param_budget)},
            {"n_iterations",
             jint(static_cast<long long>(result.trace.iterations.size()))},
            {"termination_reason",
             jstr(termination_name(result.trace.termination_reason))}});

  std::vector<std::string> amps;
  amps.reserve(result.final_state.amplitudes.size());
  for (Eigen::Index i = 0; i < result.final_state.amplitudes.size(); ++i)
    amps.push_back(jnum(result.final_state.amplitudes[i]));
  std::string state = jobj({{"manifest", manifest},
                            {"sector", sector},
                            {"amplitudes", jarr(amps)}});

  if (o.out.empty()) {
    std::cout << trace.str() << summary << "\n";
  } else {
    open_out(o.out + ".trace.jsonl", o.force) << trace.str();
    open_out(o.out + ".summary.json", o.force) << summary << "\n";
    open_out(o.out + ".state.json", o.force) << state << "\n";
  }
  return 0;
}

// ---- spectrum ----

int cmd_spectrum(const Options& o) {
  MolecularIntegrals m = load_fixture(o.fcidump);
  SectorSpec s = parse_sector(o.sector);
  const int n_elec = s.n_elec.value_or(m.n_electrons);
  const int sz2 = s.sz2.value_or(m.ms2);
  SectorBasis basis =
      enumerate_sector(m.n_spatial, n_elec, sz2, s.irrep, m.orbital_irreps);
  if (basis.size() == 0) throw ConfigError("requested sector is empty");
  if (o.k < 1) throw ConfigError("--k must be positive");
  const int k = std::min<int>(o.k, static_cast<int>(basis.size()));

  auto H = build_hamiltonian(m, basis);
  Spectrum spec = lowest_eigenpairs(H, k);
  auto S2 = s2_matrix(basis);

  std::vector<std::string> energies, s2s, irreps;
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd v = spec.vectors.col(i);
    energies.push_back(jnum(spec.energies[i]));
    s2s.push_back(jnum(state_s2(S2, v)));
    if (s.irrep) {
      irreps.push_back(jint(*s.irrep));
    } else {
      // dominant irrep by determinant weight
      std::map<IrrepLabel, double> w;
      for (std::size_t j = 0; j < basis.size(); ++j)
        w[det_irrep(basis.det(j), m.orbital_irreps)] +=
            v[static_cast<Eigen::Index>(j)] * v[static_cast<Eigen::Index>(j)];
      IrrepLabel best = 0;
      double bw = -1;
      for (const auto& [g, x] : w)
        if (x > bw) { bw = x; best = g; }
      irreps.push_back(jint(best));
    }
  }

  std::string sector = sector_json(n_elec, sz2, s.irrep, basis.size());
  std::string out = jobj({{"manifest", manifest_json(o.fcidump, "", sector,
                                                     {{"k", jint(k)}})},
                          {"sector", sector},
                          {"energies", jarr(energies)},
                          {"s2", jarr(s2s)},
                          {"irrep", jarr(irreps)}});
  emit(out, o.out, o.force);
  return 0;
}

// ---- closure ----

int cmd_closure(const Options& o) {
  MolecularIntegrals m = load_fixture(o.fcidump);
  PoolSpec pspec = make_pool_spec(o, m);
  std::vector<PoolElement> pool = build_pool(pspec);
  if (pool.empty()) throw ConfigError("pool is empty for this fixture");

  SectorSpec s = parse_sector(o.sector);
  const int n_elec = s.n_elec.value_or(m.n_electrons);
  const int sz2 = s.sz2.value_or(m.ms2);
  SectorBasis basis =
      enumerate_sector(m.n_spatial, n_elec, sz2, s.irrep, m.orbital_irreps);
  if (basis.size() == 0) throw ConfigError("requested sector is empty");

  ReferenceSpec rspec = o.ref.empty()
                            ? default_reference(m)
                            : parse_ref(o.ref);
  if (rspec.n_electrons() != n_elec)
    throw ConfigError("--ref electron count does not match the sector");
  StateVector reference = build_reference(rspec, basis);

  bool pool_s2 = true, pool_gamma = true;
  for (const auto& e : pool) {
    pool_s2 = pool_s2 && e.conserved.s2;
    pool_gamma = pool_gamma && e.conserved.gamma;
  }

  // parity theorem check at the pool level: the closure of
  // parity-commuting generators is parity-commuting
  bool parity_conserved = true;
  {
    std::vector<Eigen::SparseMatrix<double>> parities;
    for (IrrepLabel g = 0; g < 8; ++g)
      parities.push_back(parity_matrix(g, basis, m.orbital_irreps));
    for (const auto& e : pool) {
      for (const auto& gen : e.generators) {
        Eigen::SparseMatrix<double> G = matrix_rep(gen, basis);
        for (const auto& P : parities) {
          Eigen::SparseMatrix<double> C = G * P - P * G;
          double norm =
              C.nonZeros() == 0
                  ? 0.0
                  : Eigen::Map<const Eigen::VectorXd>(C.valuePtr(), C.nonZeros())
                        .norm();
          if (norm > 1e-9) parity_conserved = false;
        }
      }
      if (!parity_conserved) break;
    }
  }

  ClosureOptions copts;
  copts.tol = o.closure_tol;
  copts.cap = o.closure_cap;

  std::string rep;
  long long algebra_dim = 0, rep_dim = 0;
  int invariant_dim = 0, complement_dim = 0;
  std::string orthogonal_csf_count = "null";

  CsfBasis coords;
  std::vector<Eigen::MatrixXd> gens;
  if (pool_s2) {
    // spin-conserving pool: work in the CSF representation
    const double total_s = std::abs(sz2) / 2.0;
    coords = csf_basis(basis, total_s);
    if (coords.columns.cols() == 0) throw ConfigError("CSF space is empty");
    rep = "csf";
    gens = project_generators(pool, coords);
  } else {
    rep = "determinant";
    coords.columns = Eigen::MatrixXd::Identity(
        static_cast<Eigen::Index>(basis.size()),
        static_cast<Eigen::Index>(basis.size()));
    coords.basis = &basis;
    for (const auto& e : pool)
      for (const auto& g : e.generators) {
        Eigen::MatrixXd M = Eigen::MatrixXd(matrix_rep(g, basis));
        if (M.norm() > 1e-12) gens.push_back(std::move(M));
      }
  }
  rep_dim = coords.columns.cols();

  // reachability first: the invariant split stabilizes the closure sweeps
  AlgebraBasis seeds(static_cast<int>(rep_dim));
  Eigen::MatrixXd seed(static_cast<Eigen::Index>(gens.size()),
                       rep_dim * (rep_dim - 1) / 2);
  for (std::size_t i = 0; i < gens.size(); ++i)
    seed.row(static_cast<Eigen::Index>(i)) =
        AlgebraBasis::pack(gens[i]).transpose();
  seeds.extend(seed, 1e-12, 0);
  ReachabilityResult reach = reachable_subspace(seeds, reference, coords);
  invariant_dim = reach.invariant_dim;
  complement_dim = reach.complement_dim;

  AlgebraBasis algebra = dla_closure_split(gens, reach.invariant_vectors,
                                           reach.complement_vectors, copts);
  algebra_dim = algebra.size();
  if (pool_s2) {
    int orthogonal = 0;
    for (Eigen::Index i = 0; i < reach.invariant_vectors.rows(); ++i)
      if (reach.invariant_vectors.row(i).squaredNorm() < 1e-8) ++orthogonal;
    orthogonal_csf_count = jint(orthogonal);
  }

  std::string sector = sector_json(n_elec, sz2, s.irrep, basis.size());
  std::string out = jobj(
      {{"manifest",
        manifest_json(o.fcidump, family_name(pspec.family), sector,
                      {{"enforce_spatial", jbool(pspec.enforce_spatial)},
                       {"tol", jnum(copts.tol)},
                       {"cap", jint(copts.cap)}})},
       {"representation", jstr(rep)},
       {"rep_dim", jint(rep_dim)},
       {"pool_size", jint(static_cast<long long>(pool.size()))},
       {"algebra_dim", jint(algebra_dim)},
       {"invariant_dim", jint(invariant_dim)},
       {"complement_dim", jint(complement_dim)},
       {"orthogonal_csf_count", orthogonal_csf_count},
       {"spatial_symmetry_conserved", jbool(pool_gamma)},
       {"parity_conserved", jbool(parity_conserved)}});
  emit(out, o.out, o.force);
  return 0;
}

// ---- pool-info ----

int cmd_pool_info(const Options& o) {
  MolecularIntegrals m = load_fixture(o.fcidump);
  PoolSpec spec = make_pool_spec(o, m);
  std::vector<PoolElement> pool = build_pool(spec);

  std::vector<std::string> elements;
  for (const auto& e : pool)
    elements.push_back(
        jobj({{"id", jstr(e.id)},
              {"kind", jstr(kind_name(e.kind))},
              {"irrep", jint(e.irrep)},
              {"n_generators", jint(static_cast<long long>(e.generators.size()))},
              {"conserved", jobj({{"n", jbool(e.conserved.n)},
                                  {"gamma", jbool(e.conserved.gamma)},
                                  {"sz", jbool(e.conserved.sz)},
                                  {"s2", jbool(e.conserved.s2)}})}}));

  std::string sector = sector_json(m.n_electrons, m.ms2, std::nullopt, 0);
  std::string out = jobj(
      {{"manifest",
        manifest_json(o.fcidump, family_name(spec.family), sector,
                      {{"enforce_spatial", jbool(spec.enforce_spatial)}})},
       {"family", jstr(family_name(spec.family))},
       {"size", jint(static_cast<long long>(pool.size()))},
       {"elements", jarr(elements)}});
  emit(out, o.out, o.force);
  return 0;
}

// ---- symmetry-report ----

int cmd_symmetry_report(const Options& o) {
  MolecularIntegrals m = load_fixture(o.fcidump);
  if (o.state_path.empty() && o.ref.empty())
    throw ConfigError("symmetry-report needs --state or --ref");

  SectorSpec s = parse_sector(o.sector);
  int n_elec = s.n_elec.value_or(m.n_electrons);
  int sz2 = s.sz2.value_or(m.ms2);

  StateVector state;
  SectorBasis basis({}, SectorConstraints{});
  if (!o.state_path.empty()) {
    if (!fs::exists(o.state_path))
      throw FixtureError("state dump not found: " + o.state_path);
    std::ifstream in(o.state_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("state dump: ") + e.what());
    }
    if (j.contains("sector")) {
      const auto& js = j["sector"];
      n_elec = js.value("n_electrons", n_elec);
      if (js.contains("sz2") && !js["sz2"].is_null()) sz2 = js["sz2"].get<int>();
      if (js.contains("irrep") && !js["irrep"].is_null())
        s.irrep = static_cast<IrrepLabel>(js["irrep"].get<int>());
    }
    basis = enumerate_sector(m.n_spatial, n_elec, sz2, s.irrep, m.orbital_irreps);
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
      throw ConfigError("state dump: missing 'amplitudes' array");
    const auto& amps = j["amplitudes"];
    if (amps.size() != basis.size())
      throw ConfigError("state dump: amplitude count does not match the sector");
    state.amplitudes = Eigen::VectorXd(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i)
      state.amplitudes[static_cast<Eigen::Index>(i)] = amps[i].get<double>();
  } else {
    ReferenceSpec rspec = parse_ref(o.ref);
    n_elec = rspec.n_electrons();
    sz2 = rspec.sz2();
    basis = enumerate_sector(m.n_spatial, n_elec, sz2, s.irrep, m.orbital_irreps);
    state = build_reference(rspec, basis);
  }
  state.basis = &basis;

  SymmetryReport rep = symmetry_report(state, m.orbital_irreps);
  std::string sector = sector_json(n_elec, sz2, s.irrep, basis.size());
  std::string out =
      jobj({{"manifest",
             manifest_json(o.fcidump, "", sector,
                           {{"state", o.state_path.empty()
                                          ? jstr("reference")
                                          : jstr(o.state_path)}})},
            {"report", report_json(rep)}});
  emit(out, o.out, o.force);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_threads();

  CLI::App app{"adaptsym: symmetry-aware adaptive ansatz toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--fcidump", o.fcidump, "FCIDUMP fixture path");
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_flag("--force", o.force, "overwrite existing output paths");
  };
  auto add_pool = [&o](CLI::App* sub) {
    sub->add_option("--pool", o.pool,
                    "pool family: gsd, sagsd, sagspd, sagspd-full, pdint0");
    sub->add_flag("--enforce-spatial", o.enforce_spatial,
                  "keep only totally symmetric pool elements");
  };
  auto add_sector = [&o](CLI::App* sub) {
    sub->add_option("--sector", o.sector, "sector as N,SZ2[,IRREP]");
  };
  auto add_ref = [&o](CLI::App* sub) {
    sub->add_option("--ref", o.ref,
                    "reference occupation D,..[;U,..][;W,..] (spatial indices)");
  };

  CLI::App* adapt = app.add_subcommand("adapt", "run ADAPT-VQE");
  add_common(adapt);
  add_pool(adapt);
  add_ref(adapt);
  adapt->add_option("--param-budget", o.param_budget,
                    "max parameters, integer or 'auto'");
  adapt->add_option("--scan-points", o.scan_points,
                    "low-discrepancy scan points per candidate");
  adapt->add_option("--config", o.config_path, "JSON config file");

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact sector spectrum");
  add_common(spectrum);
  add_sector(spectrum);
  spectrum->add_option("--k", o.k, "number of states");

  CLI::App* closure = app.add_subcommand(
      "closure", "Lie-algebra closure and reachability analysis");
  add_common(closure);
  add_pool(closure);
  add_sector(closure);
  add_ref(closure);
  closure->add_option("--tol", o.closure_tol, "closure acceptance tolerance");
  closure->add_option("--cap", o.closure_cap, "algebra dimension cap");

  CLI::App* pool_info = app.add_subcommand("pool-info", "list pool elements");
  add_common(pool_info);
  add_pool(pool_info);

  CLI::App* symrep =
      app.add_subcommand("symmetry-report", "symmetry analysis of a state");
  add_common(symrep);
  add_sector(symrep);
  add_ref(symrep);
  symrep->add_option("--state", o.state_path, "state dump JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*adapt) return cmd_adapt(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*closure) return cmd_closure(o);
    if (*pool_info) return cmd_pool_info(o);
    if (*symrep) return cmd_symmetry_report(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("cap") != std::string::npos ? 5 : 4;
  }
  return 3;
}
