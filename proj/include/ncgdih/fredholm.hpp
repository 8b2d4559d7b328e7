#ifndef NCGDIH_FREDHOLM_HPP
#define NCGDIH_FREDHOLM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncgdih/group_ring.hpp"
#include "ncgdih/operators.hpp"
#include "ncgdih/represent.hpp"
#include "ncgdih/window.hpp"

namespace ncgdih {

struct NotAProjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAUnitary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AlgebraTag { A, B, CT };
enum class Parity { Even, Odd };
enum class Backend { Exact, Float };

std::string to_string(AlgebraTag t);
std::string to_string(Parity p);

/// Catalog tags for the generating Fredholm modules.
enum class ModuleName { z0_CT, z1_CT, w0_A, w1_A, w2_A, w0_B, w1_B, d1z1_B };

std::string to_string(ModuleName m);
std::optional<ModuleName> module_from_string(const std::string& s);

/// A catalog Fredholm module: window-parameterized recipes for pi, F and
/// (when even) the grading gamma, plus an optional automorphism precomposed
/// into the representation (how pullbacks are realized).
struct FredholmModule {
  ModuleName name;
  Parity parity;
  AlgebraTag algebra;
  Backend backend;
  RepName rep;
  int blocks;
  std::function<DihedralRing(const DihedralRing&)> precompose;  // A/CT only

  DihedralRing apply_pre(const DihedralRing& a) const {
    return precompose ? precompose(a) : a;
  }
};

FredholmModule catalog(ModuleName name);
FredholmModule catalog(const std::string& name);  // throws on unknown name
std::vector<FredholmModule> full_catalog();

/// Pull back an A/CT module along an algebra automorphism: same H, F, gamma,
/// representation a |-> pi(alpha(a)).
FredholmModule pullback(const FredholmModule& m,
                        std::function<DihedralRing(const DihedralRing&)> alpha);

// Window-parameterized operator recipes.
ExactOperator module_f_exact(const FredholmModule& m, Window w);
FloatOperator module_f_float(const FredholmModule& m, Window w);
ExactOperator module_gamma_exact(const FredholmModule& m, Window w);
FloatOperator module_gamma_float(const FredholmModule& m, Window w);
Window module_window(const FredholmModule& m, int n);

/// pi of the module applied to a group-ring element over the matching
/// algebra. Throws on algebra mismatch (e.g. a dihedral element fed to a
/// B-module, or a flip-carrying element fed to a C(T) module).
ExactOperator module_rep(const FredholmModule& m, const DihedralRing& a,
                         Window w, long margin = 0);
ExactOperator module_rep(const FredholmModule& m, const SemidirectRing& a,
                         Window w, long margin = 0);
FloatOperator module_rep_float(const FredholmModule& m,
                               const SemidirectRing& a, Window w,
                               long margin = 0);

/// Generators of the module's algebra, as ring elements (dihedral side; for
/// B-modules use semidirect_generators).
std::vector<DihedralRing> dihedral_generators(AlgebraTag t);
std::vector<SemidirectRing> semidirect_generators();

struct PairingResult {
  long long value = 0;
  std::vector<int> degrees_checked;
  bool stabilized = false;
  int window_used = 0;
};

/// Stabilized even Chern pairing: value(n) = (-1)^n Tr(gamma pi(p)
/// [F, pi(p)]^{2n}) for n = 1..n_max, requiring the last two degrees to
/// agree. Exact-backend modules only.
PairingResult even_pairing(const FredholmModule& m, const DihedralRing& p,
                           int n_max, int window_n);
PairingResult even_pairing(const FredholmModule& m, const SemidirectRing& p,
                           int n_max, int window_n);

/// Odd pairing as the Fredholm index of the compression E pi(u) E,
/// E = (1+F)/2, computed from exact kernel dimensions of rectangular
/// truncations (domain rows 0..N-b, codomain rows 0..N). The sign convention
/// makes odd_pairing(z1_CT, U) = +1.
PairingResult odd_pairing(const FredholmModule& m, const DihedralRing& u,
                          int window_n);
PairingResult odd_pairing(const FredholmModule& m, const SemidirectRing& u,
                          int window_n);

/// [F, pi(g)] = 0 for every listed generator (exactly, or within tol for the
/// float backend)?
bool degeneracy_check(const FredholmModule& m,
                      const std::vector<DihedralRing>& gens, int window_n,
                      double tol = 1e-12);
bool degeneracy_check(const FredholmModule& m,
                      const std::vector<SemidirectRing>& gens, int window_n,
                      double tol = 1e-12);

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  std::string detail;
};

struct ModuleReport {
  ModuleName name;
  bool exact_backend = true;
  int window_used = 0;
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// F = F*, F^2 = 1, grading relations, and the commutator compactness proxy
/// (window-stable finite rank when exact, shell-norm decay when float).
ModuleReport verify_module(const FredholmModule& m, int window_n,
                           double tol = 1e-12);

struct HomotopyReport {
  struct Point {
    Rational t;
    double selfadjoint_err = 0.0;
    double involution_err = 0.0;
  };
  std::vector<Point> points;
  double y0_match_err = 0.0;     // F_0 recipe vs t=0 homotopy operator
  bool y1_degenerate = false;    // [F_1, pi(U)] identically zero
  int window_used = 0;

  bool pass(double tol, double match_tol) const {
    for (const auto& p : points)
      if (p.selfadjoint_err > tol || p.involution_err > tol) return false;
    return y0_match_err <= match_tol && y1_degenerate;
  }
};

/// Checks the degeneracy homotopy y_t on the Z^2 window: F~_t self-adjoint
/// and involutive at every grid point, y_0 entrywise equal to the d1z1_B
/// operator, y_1 degenerate with respect to U. Tolerances are applied by the
/// caller via HomotopyReport::pass.
HomotopyReport homotopy_check(int window_n, const std::vector<Rational>& grid);

}  // namespace ncgdih

#endif  // NCGDIH_FREDHOLM_HPP
