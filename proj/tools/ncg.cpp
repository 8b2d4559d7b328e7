// ncg: catalog inspection, pairing tables, Fredholm indices and cyclic
// cohomology verification for the dihedral / Z x Z group algebra toolkit.
//
// Exit codes: 0 all requested checks passed, 1 usage or input error,
// 2 verification failure, 3 non-stabilized pairing.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ncgdih/cyclic.hpp"
#include "ncgdih/fredholm.hpp"
#include "ncgdih/kclasses.hpp"
#include "ncgdih/ring_io.hpp"

namespace {

using nlohmann::json;
using namespace ncgdih;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitNotStabilized = 3;

struct RunConfig {
  int window = 32;
  int n_max = 2;
  double tol = 1e-12;
  long bound = 12;
  unsigned long long seed = 1;
  std::string format = "text";
};

int default_window() {
  if (const char* env = std::getenv("NCG_DEFAULT_WINDOW")) {
    int n = std::atoi(env);
    if (n >= 8) return n;
  }
  return 32;
}

std::string rep_summary(ModuleName name) {
  switch (name) {
    case ModuleName::z0_CT: return "C^2, phi+0 (phi: U->1), off-diagonal F";
    case ModuleName::z1_CT: return "l^2(Z), U = shift, F = sign";
    case ModuleName::w0_A: return "C^2, phi+0 (phi: S,e->1), off-diagonal F";
    case ModuleName::w1_A: return "l^2(Z)+l^2(Z), pi1 graded, F1 = [[0,iF],[-iF,0]]";
    case ModuleName::w2_A: return "l^2(Z)+l^2(Z), pi2 = pi1 o alpha_{-1}, F2 = F1";
    case ModuleName::w0_B: return "C^2, phi+0 (phi: U,V->1), off-diagonal F";
    case ModuleName::w1_B: return "l^2(Z), U = I, V = shift, F = sign";
    case ModuleName::d1z1_B: return "l^2(Z^2)+l^2(Z^2), pi+pi, diagonal phase F (float)";
  }
  return "?";
}

json pairing_json(const std::string& module, const std::string& label,
                  const PairingResult& r) {
  return {{"module", module},
          {"class", label},
          {"value", r.value},
          {"stabilized", r.stabilized},
          {"window", r.window_used}};
}

int cmd_catalog(const std::string& which, const RunConfig& cfg) {
  auto mods = full_catalog();
  if (!which.empty()) {
    auto name = module_from_string(which);
    if (!name) {
      std::cerr << "unknown module: " << which << "\n";
      return kExitUsage;
    }
    mods = {catalog(*name)};
  }
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& m : mods)
      out.push_back({{"name", to_string(m.name)},
                     {"parity", to_string(m.parity)},
                     {"algebra", to_string(m.algebra)},
                     {"backend", m.backend == Backend::Exact ? "exact" : "float"},
                     {"representation", rep_summary(m.name)}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : mods)
      std::cout << to_string(m.name) << "  parity=" << to_string(m.parity)
                << "  algebra=" << to_string(m.algebra)
                << "  backend=" << (m.backend == Backend::Exact ? "exact" : "float")
                << "  rep: " << rep_summary(m.name) << "\n";
  }
  return kExitOk;
}

AlgebraTag algebra_from_string(const std::string& s) {
  if (s == "A") return AlgebraTag::A;
  if (s == "B") return AlgebraTag::B;
  if (s == "CT" || s == "C(T)") return AlgebraTag::CT;
  throw CLI::ValidationError("algebra must be A, B or CT");
}

int cmd_table(const std::string& algebra, const RunConfig& cfg) {
  AlgebraTag tag = algebra_from_string(algebra);
  PairingTable table = pairing_table(tag, cfg.window, cfg.n_max);

  if (cfg.format == "json") {
    json cells = json::array();
    for (const auto& c : table.cells)
      cells.push_back(pairing_json(c.module, c.label, c.result));
    std::cout << json{{"algebra", to_string(tag)},
                      {"window", table.window},
                      {"degree", table.n_max},
                      {"cells", std::move(cells)}}
                     .dump(2)
              << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "module,class,value,stabilized,window\n";
    for (const auto& c : table.cells)
      std::cout << c.module << "," << c.label << "," << c.result.value << ","
                << (c.result.stabilized ? "true" : "false") << ","
                << c.result.window_used << "\n";
  } else if (tag == AlgebraTag::A) {
    // the paper's layout: rows w0,w1,w2, columns 1, (1+e)/2, (1+Se)/2
    std::cout << "        [1]  [P1]  [P2]\n";
    auto m = table.matrix();
    const char* names[3] = {"w0_A", "w1_A", "w2_A"};
    for (size_t i = 0; i < m.size(); ++i) {
      std::cout << names[i];
      for (long long v : m[i]) std::cout << "     " << v;
      std::cout << "\n";
    }
  } else {
    for (const auto& c : table.cells)
      std::cout << "<ch(" << c.module << "), " << c.label
                << "> = " << c.result.value
                << (c.result.stabilized ? "" : "  (NOT STABILIZED)") << "\n";
  }
  return table.all_stabilized() ? kExitOk : kExitNotStabilized;
}

const KClassRep* find_class(const std::vector<KClassRep>& classes,
                            const std::string& label) {
  for (const auto& c : classes)
    if (c.label == label || c.label == "[" + label + "]") return &c;
  return nullptr;
}

int cmd_pair(const std::string& module, const std::string& label,
             const RunConfig& cfg, bool index_only) {
  FredholmModule m = catalog(module);
  auto classes = standard_classes(m.algebra);
  const KClassRep* cls = find_class(classes, label);
  if (!cls) {
    std::cerr << "unknown class " << label << " for algebra "
              << to_string(m.algebra) << "\n";
    return kExitUsage;
  }
  if (index_only && cls->kind != ClassKind::Unitary) {
    std::cerr << "index: " << cls->label << " is not a unitary class\n";
    return kExitUsage;
  }
  PairingResult r;
  if (m.algebra == AlgebraTag::B) {
    r = cls->kind == ClassKind::Projection
            ? even_pairing(m, cls->semidirect, cfg.n_max, cfg.window)
            : odd_pairing(m, cls->semidirect, cfg.window);
  } else {
    r = cls->kind == ClassKind::Projection
            ? even_pairing(m, cls->dihedral, cfg.n_max, cfg.window)
            : odd_pairing(m, cls->dihedral, cfg.window);
  }
  if (cfg.format == "json")
    std::cout << pairing_json(module, cls->label, r).dump(2) << "\n";
  else if (index_only)
    std::cout << r.value << "\n";
  else
    std::cout << "<ch(" << module << "), " << cls->label << "> = " << r.value
              << (r.stabilized ? "" : "  (NOT STABILIZED)") << "\n";
  return r.stabilized ? kExitOk : kExitNotStabilized;
}

json report_json(const ModuleReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"axiom", c.axiom}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"module", to_string(r.name)},
          {"backend", r.exact_backend ? "exact" : "float"},
          {"window", r.window_used},
          {"pass", r.all_pass()},
          {"checks", std::move(checks)}};
}

int cmd_verify(const std::string& which, const RunConfig& cfg) {
  std::vector<FredholmModule> mods;
  if (which.empty() || which == "all") {
    mods = full_catalog();
  } else {
    mods.push_back(catalog(which));
  }
  bool all_pass = true;
  json out = json::array();
  for (const auto& m : mods) {
    ModuleReport r = verify_module(m, cfg.window, cfg.tol);
    all_pass = all_pass && r.all_pass();
    if (cfg.format == "json") {
      out.push_back(report_json(r));
    } else {
      std::cout << to_string(r.name) << ":\n";
      for (const auto& c : r.checks)
        std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.axiom
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
  }
  if (cfg.format == "json") std::cout << out.dump(2) << "\n";
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_homotopy(const std::vector<std::string>& grid_args,
                 const RunConfig& cfg) {
  std::vector<Rational> grid;
  if (grid_args.empty()) {
    grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
            Rational(1)};
  } else {
    for (const auto& s : grid_args) grid.push_back(rational_from_string(s));
  }
  HomotopyReport r = homotopy_check(cfg.window, grid);
  bool pass = r.pass(cfg.tol, 1e-15);
  if (cfg.format == "json") {
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back({{"t", rational_to_string(p.t)},
                     {"selfadjoint_err", p.selfadjoint_err},
                     {"involution_err", p.involution_err}});
    std::cout << json{{"window", r.window_used},
                      {"points", std::move(pts)},
                      {"y0_match_err", r.y0_match_err},
                      {"y1_degenerate", r.y1_degenerate},
                      {"pass", pass}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& p : r.points)
      std::cout << "t = " << rational_to_string(p.t)
                << "  |F-F*| = " << p.selfadjoint_err
                << "  |F^2-1| = " << p.involution_err << "\n";
    std::cout << "y_0 vs i*(d1(z1)): max entry deviation " << r.y0_match_err
              << "\n";
    std::cout << "y_1 degenerate ([F_1, pi(U)] = 0): "
              << (r.y1_degenerate ? "yes" : "no") << "\n";
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " homotopy checks\n";
  }
  return pass ? kExitOk : kExitFailed;
}

json check_json(const CheckReport& r) {
  return {{"identity", r.identity},
          {"bound", r.bound},
          {"tuples_checked", r.tuples_checked},
          {"failures", r.failures}};
}

void print_check(const CheckReport& r, const RunConfig& cfg, json& agg) {
  if (cfg.format == "json") {
    agg.push_back(check_json(r));
  } else {
    std::cout << "[" << (r.ok() ? "PASS" : "FAIL") << "] " << r.identity
              << "  bound=" << r.bound << "  tuples=" << r.tuples_checked
              << "\n";
    for (const auto& f : r.failures) std::cout << "    failed at " << f << "\n";
  }
}

int cmd_cyclic(const std::string& sub, const RunConfig& cfg, long k_arg,
               const std::string& ck_arg, int count) {
  std::mt19937_64 rng(cfg.seed);
  bool ok = true;
  json agg = json::array();

  if (sub == "duality") {
    auto m = duality_matrix();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        ok = ok && (m[i][j] == CRat(i == j ? 1 : 0));
    if (cfg.format == "json") {
      json rows = json::array();
      for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
      }
      std::cout << json{{"matrix", std::move(rows)}, {"identity", ok}}.dump(2)
                << "\n";
    } else {
      std::cout << "[pair(psi_i, P_j)] over {1, P1, P2}:\n";
      for (const auto& row : m) {
        for (const auto& v : row) std::cout << "  " << v.str();
        std::cout << "\n";
      }
      std::cout << (ok ? "[PASS]" : "[FAIL]") << " duality matrix = identity\n";
    }
    return ok ? kExitOk : kExitFailed;
  }

  if (sub == "verify-0") {
    for (int i = 0; i < count; ++i) {
      CheckReport r = verify_trace(random_cochain0(rng, 6), cfg.bound);
      ok = ok && r.ok();
      print_check(r, cfg, agg);
    }
    for (int i = 0; i < count; ++i) {
      CheckReport r = verify_bb_zero(random_functional(rng, 6), cfg.bound);
      ok = ok && r.ok();
      print_check(r, cfg, agg);
    }
  } else if (sub == "verify-1") {
    for (int i = 0; i < count; ++i) {
      CheckReport r = verify_cocycle1(random_cocycle1(rng, 6), cfg.bound);
      ok = ok && r.ok();
      print_check(r, cfg, agg);
    }
  } else if (sub == "solve-1") {
    for (int i = 0; i < count; ++i) {
      CheckReport r = verify_solve1(random_cocycle1(rng, 8), cfg.bound);
      ok = ok && r.ok();
      print_check(r, cfg, agg);
    }
  } else if (sub == "solve-2") {
    CRat ck;
    if (!ck_arg.empty()) {
      ck = CRat{rational_from_string(ck_arg)};
    }
    std::vector<long> ks;
    if (k_arg != 0)
      ks.push_back(k_arg);
    else
      for (long k = 1; k <= 8; ++k) ks.push_back(k);
    for (long k : ks) {
      CheckReport r = verify_solve2(k, ck, cfg.bound);
      ok = ok && r.ok();
      print_check(r, cfg, agg);
    }
  } else {
    std::cerr << "unknown cyclic subcommand: " << sub << "\n";
    return kExitUsage;
  }
  if (cfg.format == "json")
    std::cout << json{{"reports", std::move(agg)}, {"pass", ok}}.dump(2)
              << "\n";
  else
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " cyclic " << sub << "\n";
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncommutative geometry of C*(Z x Z_2) and C*(Z x Z)"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.window = default_window();
  app.add_option("--window,-w", cfg.window, "truncation window N")
      ->check(CLI::Range(8, 1 << 20));
  app.add_option("--degree,-n", cfg.n_max, "max pairing degree n")
      ->check(CLI::Range(2, 16));
  app.add_option("--tol", cfg.tol, "float-backend tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.bound, "exponent bound for cyclic checks")
      ->check(CLI::Range(1L, 64L));
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--format", cfg.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string catalog_name;
  auto* c_catalog = app.add_subcommand("catalog", "list Fredholm modules");
  c_catalog->add_option("module", catalog_name, "single module to show");

  std::string table_algebra;
  auto* c_table = app.add_subcommand("table", "pairing table of an algebra");
  c_table->add_option("algebra", table_algebra, "A | B | CT")->required();

  std::string mod_name, class_label;
  auto* c_index = app.add_subcommand("index", "Fredholm index of E pi(u) E");
  c_index->add_option("module", mod_name, "odd catalog module")->required();
  c_index->add_option("unitary", class_label, "unitary class label")
      ->required();

  std::string pair_mod, pair_label;
  auto* c_pair = app.add_subcommand("pair", "single Chern pairing cell");
  c_pair->add_option("module", pair_mod)->required();
  c_pair->add_option("class", pair_label)->required();

  std::string verify_name;
  auto* c_verify = app.add_subcommand("verify", "Fredholm module axioms");
  c_verify->add_option("module", verify_name, "module name or 'all'");

  std::vector<std::string> grid;
  auto* c_homotopy =
      app.add_subcommand("homotopy", "degeneracy homotopy y_t checks");
  c_homotopy->add_option("--grid", grid, "t values as p/q strings");

  std::string cyclic_sub, ck_arg;
  long k_arg = 0;
  int count = 10;
  auto* c_cyclic = app.add_subcommand("cyclic", "cyclic cohomology suites");
  c_cyclic
      ->add_option("suite", cyclic_sub,
                   "verify-0 | verify-1 | solve-1 | solve-2 | duality")
      ->required();
  c_cyclic->add_option("--k", k_arg, "single k for solve-2 (default 1..8)");
  c_cyclic->add_option("--ck", ck_arg, "free scalar c_k as p/q");
  c_cyclic->add_option("--count", count, "number of random instances")
      ->check(CLI::Range(1, 100000));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_catalog) return cmd_catalog(catalog_name, cfg);
    if (*c_table) return cmd_table(table_algebra, cfg);
    if (*c_index) return cmd_pair(mod_name, class_label, cfg, true);
    if (*c_pair) return cmd_pair(pair_mod, pair_label, cfg, false);
    if (*c_verify) return cmd_verify(verify_name, cfg);
    if (*c_homotopy) return cmd_homotopy(grid, cfg);
    if (*c_cyclic) return cmd_cyclic(cyclic_sub, cfg, k_arg, ck_arg, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
