#include "ncgdih/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <type_traits>

namespace ncgdih {

std::string to_string(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::A: return "A";
    case AlgebraTag::B: return "B";
    case AlgebraTag::CT: return "C(T)";
  }
  return "?";
}

std::string to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

std::string to_string(ModuleName m) {
  switch (m) {
    case ModuleName::z0_CT: return "z0_CT";
    case ModuleName::z1_CT: return "z1_CT";
    case ModuleName::w0_A: return "w0_A";
    case ModuleName::w1_A: return "w1_A";
    case ModuleName::w2_A: return "w2_A";
    case ModuleName::w0_B: return "w0_B";
    case ModuleName::w1_B: return "w1_B";
    case ModuleName::d1z1_B: return "d1z1_B";
  }
  return "?";
}

std::optional<ModuleName> module_from_string(const std::string& s) {
  static const std::map<std::string, ModuleName> names = {
      {"z0_CT", ModuleName::z0_CT},   {"z1_CT", ModuleName::z1_CT},
      {"w0_A", ModuleName::w0_A},     {"w1_A", ModuleName::w1_A},
      {"w2_A", ModuleName::w2_A},     {"w0_B", ModuleName::w0_B},
      {"w1_B", ModuleName::w1_B},     {"d1z1_B", ModuleName::d1z1_B},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

FredholmModule catalog(ModuleName name) {
  switch (name) {
    case ModuleName::z0_CT:
      return {name, Parity::Even, AlgebraTag::CT, Backend::Exact,
              RepName::pi0_dihedral, 2, nullptr};
    case ModuleName::z1_CT:
      return {name, Parity::Odd, AlgebraTag::CT, Backend::Exact,
              RepName::pi1_dihedral, 1, nullptr};
    case ModuleName::w0_A:
      return {name, Parity::Even, AlgebraTag::A, Backend::Exact,
              RepName::pi0_dihedral, 2, nullptr};
    case ModuleName::w1_A:
      return {name, Parity::Even, AlgebraTag::A, Backend::Exact,
              RepName::pi1_dihedral, 2, nullptr};
    case ModuleName::w2_A:
      return {name, Parity::Even, AlgebraTag::A, Backend::Exact,
              RepName::pi2_dihedral, 2, nullptr};
    case ModuleName::w0_B:
      return {name, Parity::Even, AlgebraTag::B, Backend::Exact,
              RepName::pi0_dihedral, 2, nullptr};
    case ModuleName::w1_B:
      return {name, Parity::Odd, AlgebraTag::B, Backend::Exact,
              RepName::pi1_semidirect_induced, 1, nullptr};
    case ModuleName::d1z1_B:
      return {name, Parity::Even, AlgebraTag::B, Backend::Float,
              RepName::pi_l2Z2, 2, nullptr};
  }
  throw std::invalid_argument("unknown module");
}

FredholmModule catalog(const std::string& name) {
  auto m = module_from_string(name);
  if (!m) throw std::invalid_argument("unknown module: " + name);
  return catalog(*m);
}

std::vector<FredholmModule> full_catalog() {
  return {catalog(ModuleName::z0_CT), catalog(ModuleName::z1_CT),
          catalog(ModuleName::w0_A),  catalog(ModuleName::w1_A),
          catalog(ModuleName::w2_A),  catalog(ModuleName::w0_B),
          catalog(ModuleName::w1_B),  catalog(ModuleName::d1z1_B)};
}

FredholmModule pullback(
    const FredholmModule& m,
    std::function<DihedralRing(const DihedralRing&)> alpha) {
  if (m.algebra == AlgebraTag::B)
    throw std::invalid_argument("pullback: automorphisms of B not in catalog");
  FredholmModule out = m;
  if (m.precompose) {
    auto prev = m.precompose;
    out.precompose = [prev, alpha](const DihedralRing& a) {
      return prev(alpha(a));
    };
  } else {
    out.precompose = std::move(alpha);
  }
  return out;
}

Window module_window(const FredholmModule& m, int n) {
  return m.rep == RepName::pi_l2Z2 ? Window::box(n) : Window::interval(n);
}

ExactOperator module_f_exact(const FredholmModule& m, Window w) {
  switch (m.rep) {
    case RepName::pi0_dihedral: {
      // off-diagonal identity blocks
      ExactOperator f(w, 2);
      for (int j = 0; j < w.dim(); ++j) {
        f.add(j, j, 0, 1, CRat(1));
        f.add(j, j, 1, 0, CRat(1));
      }
      return f;
    }
    case RepName::pi1_dihedral:
    case RepName::pi2_dihedral: {
      if (m.blocks == 1) return sign_operator(w);  // z1_CT
      // [[0, iF], [-iF, 0]]
      ExactOperator f(w, 2);
      for (long j = -w.n; j <= w.n; ++j) {
        CRat v = CRat::i() * CRat(sign_convention(j));
        f.add(w.flat(j), w.flat(j), 0, 1, v);
        f.add(w.flat(j), w.flat(j), 1, 0, -v);
      }
      return f;
    }
    case RepName::pi1_semidirect_induced:
      return sign_operator(w);
    default:
      throw std::invalid_argument("module_f_exact: float-backend module");
  }
}

FloatOperator module_f_float(const FredholmModule& m, Window w) {
  if (m.rep != RepName::pi_l2Z2)
    throw std::invalid_argument("module_f_float: exact-backend module");
  // [[0, F0], [F0*, 0]]
  FloatOperator f0 = phase_operator_f0(w);
  FloatOperator f(w, 2);
  for (const auto& [k, v] : f0.entries) {
    f.add(k.row, k.col, 0, 1, v);
    f.add(k.col, k.row, 1, 0, std::conj(v));
  }
  return f;
}

ExactOperator module_gamma_exact(const FredholmModule& m, Window w) {
  if (m.parity != Parity::Even)
    throw std::invalid_argument("gamma: odd module has no grading");
  ExactOperator g(w, 2);
  for (int j = 0; j < w.dim(); ++j) {
    g.add(j, j, 0, 0, CRat(1));
    g.add(j, j, 1, 1, CRat(-1));
  }
  return g;
}

FloatOperator module_gamma_float(const FredholmModule& m, Window w) {
  if (m.parity != Parity::Even)
    throw std::invalid_argument("gamma: odd module has no grading");
  FloatOperator g(w, 2);
  for (int j = 0; j < w.dim(); ++j) {
    g.add(j, j, 0, 0, CFloat(1.0));
    g.add(j, j, 1, 1, CFloat(-1.0));
  }
  return g;
}

namespace {

void require_algebra(const FredholmModule& m, AlgebraTag want) {
  if (m.algebra != want)
    throw std::invalid_argument("element algebra does not match module " +
                                to_string(m.name));
}

void require_torus(const DihedralRing& a) {
  if (!is_torus_element(a))
    throw std::invalid_argument(
        "C(T) module: element must be flip-free (a Laurent polynomial in S)");
}

// Graded doubling of a single-block dihedral action: block (1,1) carries the
// e |-> -e twist.
ExactOperator graded_double(RepName rep, const DihedralRing& a, Window w,
                            long margin) {
  ExactOperator up = represent_dihedral_block(rep, a, w, margin);
  ExactOperator dn =
      represent_dihedral_block(rep, flip_sign_on_e(a), w, margin);
  ExactOperator out(w, 2);
  out.truncated = up.truncated || dn.truncated;
  for (const auto& [k, v] : up.entries) out.add(k.row, k.col, 0, 0, v);
  for (const auto& [k, v] : dn.entries) out.add(k.row, k.col, 1, 1, v);
  return out;
}

}  // namespace

ExactOperator module_rep(const FredholmModule& m, const DihedralRing& a_in,
                         Window w, long margin) {
  if (m.algebra == AlgebraTag::B)
    throw std::invalid_argument("module " + to_string(m.name) +
                                " takes elements of C*(Z x Z)");
  DihedralRing a = m.apply_pre(a_in);
  if (m.algebra == AlgebraTag::CT) require_torus(a_in);
  switch (m.rep) {
    case RepName::pi0_dihedral:
      return represent_phi_corner(a, w);
    case RepName::pi1_dihedral:
    case RepName::pi2_dihedral:
      if (m.blocks == 1) return represent_dihedral_block(m.rep, a, w, margin);
      return graded_double(m.rep, a, w, margin);
    default:
      throw std::invalid_argument("module_rep: wrong element type");
  }
}

ExactOperator module_rep(const FredholmModule& m, const SemidirectRing& a,
                         Window w, long margin) {
  require_algebra(m, AlgebraTag::B);
  switch (m.rep) {
    case RepName::pi0_dihedral:
      return represent_phi_corner(a, w);
    case RepName::pi1_semidirect_induced:
      return represent_semidirect_shift(a, w, margin);
    default:
      throw std::invalid_argument("module_rep: use module_rep_float");
  }
}

FloatOperator module_rep_float(const FredholmModule& m,
                               const SemidirectRing& a, Window w,
                               long margin) {
  require_algebra(m, AlgebraTag::B);
  if (m.rep != RepName::pi_l2Z2)
    throw std::invalid_argument("module_rep_float: exact-backend module");
  FloatOperator block = represent_l2z2(a, w, margin);
  FloatOperator out(w, 2);
  out.truncated = block.truncated;
  for (const auto& [k, v] : block.entries) {
    out.add(k.row, k.col, 0, 0, v);
    out.add(k.row, k.col, 1, 1, v);
  }
  return out;
}

std::vector<DihedralRing> dihedral_generators(AlgebraTag t) {
  if (t == AlgebraTag::CT) return {DihedralRing(DihedralWord::s())};
  return {DihedralRing(DihedralWord::s()), DihedralRing(DihedralWord::e())};
}

std::vector<SemidirectRing> semidirect_generators() {
  return {SemidirectRing(SemidirectPair::u()),
          SemidirectRing(SemidirectPair::v())};
}

namespace {

// Shared even-pairing core once pi(p), F and gamma are on the window.
PairingResult even_pairing_core(const ExactOperator& rep_p,
                                const ExactOperator& f,
                                const ExactOperator& gamma, int n_max,
                                int window_n) {
  PairingResult out;
  out.window_used = window_n;
  ExactOperator comm = commutator(f, rep_p);
  ExactOperator comm_sq = comm * comm;
  ExactOperator acc = gamma * rep_p;  // will hold gamma pi(p) C^{2n}
  std::vector<CRat> values;
  for (int n = 1; n <= n_max; ++n) {
    acc = acc * comm_sq;
    CRat v = (n % 2 ? -acc.trace() : acc.trace());
    values.push_back(v);
    out.degrees_checked.push_back(n);
  }
  out.stabilized = values.size() >= 2 &&
                   values[values.size() - 1] == values[values.size() - 2];
  long long iv = 0;
  const CRat& last = values.back();
  if (last.im == 0 && rational_is_integer(last.re, &iv)) {
    out.value = iv;
  } else {
    out.stabilized = false;
  }
  return out;
}

template <class Ring>
PairingResult even_pairing_impl(const FredholmModule& m, const Ring& p,
                                int n_max, int window_n) {
  if (m.parity != Parity::Even)
    throw std::invalid_argument("even_pairing: odd module");
  if (m.backend != Backend::Exact)
    throw std::invalid_argument(
        "even_pairing: the trace formula does not stabilize for the float "
        "backend (see verify/homotopy for d1z1_B)");
  if (n_max < 2) throw std::invalid_argument("even_pairing: n_max >= 2");
  if (!is_projection(p)) throw NotAProjection("even_pairing: p^2 != p or p* != p");
  const long r = support_radius(p);
  if (window_n < r * (2 * n_max + 1) + 2)
    throw WindowTooSmall("even_pairing: N >= r(2n+1)+2 required, r = " +
                         std::to_string(r));
  Window w = module_window(m, window_n);
  ExactOperator rep_p = module_rep(m, p, w, r * 2 * n_max);
  return even_pairing_core(rep_p, module_f_exact(m, w),
                           module_gamma_exact(m, w), n_max, window_n);
}

}  // namespace

PairingResult even_pairing(const FredholmModule& m, const DihedralRing& p,
                           int n_max, int window_n) {
  if (m.algebra == AlgebraTag::B)
    throw std::invalid_argument("even_pairing: element over wrong algebra");
  return even_pairing_impl(m, p, n_max, window_n);
}

PairingResult even_pairing(const FredholmModule& m, const SemidirectRing& p,
                           int n_max, int window_n) {
  require_algebra(m, AlgebraTag::B);
  return even_pairing_impl(m, p, n_max, window_n);
}

namespace {

// Collect pi(u) as a shift polynomial: shift -> coefficient.
std::map<long, CRat> shift_poly(const FredholmModule& m,
                                const DihedralRing& u) {
  require_torus(u);
  std::map<long, CRat> out;
  DihedralRing a = m.apply_pre(u);
  for (const auto& [g, c] : a.terms()) {
    auto [it, inserted] = out.emplace(g.power, c);
    if (!inserted) it->second += c;
  }
  return out;
}

std::map<long, CRat> shift_poly(const FredholmModule&,
                                const SemidirectRing& u) {
  std::map<long, CRat> out;
  for (const auto& [g, c] : u.terms()) {
    auto [it, inserted] = out.emplace(g.n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// Kernel dimension of the compression E T E on the rectangle: domain basis
// e_0..e_{N-b}, codomain e_0..e_N, T = sum coeff(s) shift^s. The domain is
// held back from the boundary by the bandwidth so truncation cannot
// manufacture kernel vectors.
int rect_kernel_dim(const std::map<long, CRat>& poly, int window_n, long b) {
  const int cols = window_n - static_cast<int>(b) + 1;
  const int rows = window_n + 1;
  ExactOperator mat(Window::interval(window_n), 1);
  for (const auto& [s, c] : poly) {
    for (int j = 0; j < cols; ++j) {
      long t = j + s;
      if (0 <= t && t < rows) mat.add(static_cast<int>(t), j, 0, 0, c);
    }
  }
  // Empty columns are genuine kernel vectors (E T E annihilates them), so
  // count against all `cols`, not just the active ones.
  return cols - rank(mat);
}

template <class Ring>
PairingResult odd_pairing_impl(const FredholmModule& m, const Ring& u,
                               int window_n) {
  if (m.parity != Parity::Odd)
    throw std::invalid_argument("odd_pairing: even module");
  if (!is_unitary(u)) throw NotAUnitary("odd_pairing: u* u != 1");
  auto poly = shift_poly(m, u);
  auto star_poly = shift_poly(m, star(u));
  long b = 0;
  for (const auto& [s, c] : poly) b = std::max(b, std::labs(s));
  if (window_n < 2 * b + 2)
    throw WindowTooSmall("odd_pairing: N >= support + bandwidth + 2");
  PairingResult out;
  out.window_used = window_n;
  out.stabilized = true;
  const int k_minus = rect_kernel_dim(poly, window_n, b);
  const int k_plus = rect_kernel_dim(star_poly, window_n, b);
  out.value = k_plus - k_minus;
  return out;
}

}  // namespace

PairingResult odd_pairing(const FredholmModule& m, const DihedralRing& u,
                          int window_n) {
  if (m.algebra == AlgebraTag::B)
    throw std::invalid_argument("odd_pairing: element over wrong algebra");
  return odd_pairing_impl(m, u, window_n);
}

PairingResult odd_pairing(const FredholmModule& m, const SemidirectRing& u,
                          int window_n) {
  require_algebra(m, AlgebraTag::B);
  return odd_pairing_impl(m, u, window_n);
}

namespace {

template <class Op>
bool comm_vanishes(const Op& f, const Op& rep, double tol) {
  if constexpr (std::is_same_v<Op, ExactOperator>) {
    (void)tol;
    return commutator(f, rep).is_zero();
  } else {
    return max_abs(commutator(f, rep)) <= tol;
  }
}

}  // namespace

bool degeneracy_check(const FredholmModule& m,
                      const std::vector<DihedralRing>& gens, int window_n,
                      double tol) {
  Window w = module_window(m, window_n);
  ExactOperator f = module_f_exact(m, w);
  for (const auto& g : gens)
    if (!comm_vanishes(f, module_rep(m, g, w), tol)) return false;
  return true;
}

bool degeneracy_check(const FredholmModule& m,
                      const std::vector<SemidirectRing>& gens, int window_n,
                      double tol) {
  Window w = module_window(m, window_n);
  if (m.backend == Backend::Float) {
    FloatOperator f = module_f_float(m, w);
    for (const auto& g : gens)
      if (!comm_vanishes(f, module_rep_float(m, g, w), tol)) return false;
    return true;
  }
  ExactOperator f = module_f_exact(m, w);
  for (const auto& g : gens)
    if (!comm_vanishes(f, module_rep(m, g, w), tol)) return false;
  return true;
}

namespace {

template <class Op>
void check_f_axioms(const Op& f, double tol, ModuleReport& report) {
  if constexpr (std::is_same_v<Op, ExactOperator>) {
    (void)tol;
    report.checks.push_back({"F = F*", f == f.adjoint(), ""});
    bool inv = (f * f) == Op::identity(f.window, f.blocks);
    report.checks.push_back({"F^2 = 1", inv, ""});
  } else {
    double sa = max_abs_diff(f, f.adjoint());
    report.checks.push_back(
        {"F = F*", sa <= tol, "max deviation " + std::to_string(sa)});
    double iv = max_abs_diff(f * f, Op::identity(f.window, f.blocks));
    report.checks.push_back(
        {"F^2 = 1", iv <= tol, "max deviation " + std::to_string(iv)});
  }
}

template <class Op>
void check_grading_axioms(const Op& f, const Op& gamma,
                          const std::vector<Op>& gen_images, double tol,
                          ModuleReport& report) {
  auto vanish = [tol](const Op& x) {
    if constexpr (std::is_same_v<Op, ExactOperator>)
      return x.is_zero();
    else
      return max_abs(x) <= tol;
  };
  report.checks.push_back(
      {"gamma = gamma*", vanish(gamma - gamma.adjoint()), ""});
  report.checks.push_back(
      {"gamma^2 = 1",
       vanish(gamma * gamma - Op::identity(gamma.window, gamma.blocks)), ""});
  report.checks.push_back(
      {"gamma F = -F gamma", vanish(anticommutator(gamma, f)), ""});
  bool commute = true;
  for (const auto& img : gen_images)
    commute = commute && vanish(commutator(gamma, img));
  report.checks.push_back({"[gamma, pi(g)] = 0", commute, ""});
}

}  // namespace

ModuleReport verify_module(const FredholmModule& m, int window_n, double tol) {
  ModuleReport report;
  report.name = m.name;
  report.exact_backend = (m.backend == Backend::Exact);
  report.window_used = window_n;

  Window w = module_window(m, window_n);

  if (m.backend == Backend::Exact) {
    ExactOperator f = module_f_exact(m, w);
    check_f_axioms(f, tol, report);

    std::vector<ExactOperator> gen_images;
    if (m.algebra == AlgebraTag::B) {
      for (const auto& g : semidirect_generators())
        gen_images.push_back(module_rep(m, g, w));
    } else {
      for (const auto& g : dihedral_generators(m.algebra))
        gen_images.push_back(module_rep(m, g, w));
    }

    if (m.parity == Parity::Even)
      check_grading_axioms(f, module_gamma_exact(m, w), gen_images, tol,
                           report);

    // Compactness proxy: the commutator with each generator has finite rank
    // that is already stable against shrinking the window.
    const int small_n = std::max(4, window_n / 2);
    Window ws = module_window(m, small_n);
    ExactOperator fs = module_f_exact(m, ws);
    bool stable = true;
    std::string detail;
    auto check_gen = [&](const auto& g) {
      int r_big = rank(commutator(f, module_rep(m, g, w)));
      int r_small = rank(commutator(fs, module_rep(m, g, ws)));
      stable = stable && (r_big == r_small);
      if (!detail.empty()) detail += ", ";
      detail += "rank " + std::to_string(r_big);
    };
    if (m.algebra == AlgebraTag::B) {
      for (const auto& g : semidirect_generators()) check_gen(g);
    } else {
      for (const auto& g : dihedral_generators(m.algebra)) check_gen(g);
    }
    report.checks.push_back(
        {"[F, pi(g)] finite rank, window-stable", stable, detail});
  } else {
    FloatOperator f = module_f_float(m, w);
    check_f_axioms(f, tol, report);

    std::vector<FloatOperator> gen_images;
    for (const auto& g : semidirect_generators())
      gen_images.push_back(module_rep_float(m, g, w));
    check_grading_axioms(f, module_gamma_float(m, w), gen_images, tol, report);

    // Compactness proxy: shell max-norms of [F, pi(V)] decay like C/R.
    FloatOperator comm_v = commutator(
        f, module_rep_float(m, SemidirectRing(SemidirectPair::v()), w));
    bool decay = true;
    std::string detail;
    double prev = -1.0;
    for (int r : {8, 16, 32}) {
      if (2 * r > window_n) break;
      double norm = shell_max_norm(comm_v, r);
      if (prev >= 0.0 && norm > prev) decay = false;
      if (norm > 4.0 / r) decay = false;
      prev = norm;
      if (!detail.empty()) detail += ", ";
      detail += "R=" + std::to_string(r) + ": " + std::to_string(norm);
    }
    report.checks.push_back(
        {"shell norms of [F, pi(V)] decay (<= 4/R)", decay, detail});
  }
  return report;
}

HomotopyReport homotopy_check(int window_n,
                              const std::vector<Rational>& grid) {
  HomotopyReport report;
  report.window_used = window_n;
  Window w = Window::box(window_n);
  for (const auto& t : grid) {
    FloatOperator ft = homotopy_operator_ft(w, t);
    // Assemble F~_t = [[0, F_t],[F_t*, 0]] like the catalog operator.
    FloatOperator full(w, 2);
    for (const auto& [k, v] : ft.entries) {
      full.add(k.row, k.col, 0, 1, v);
      full.add(k.col, k.row, 1, 0, std::conj(v));
    }
    HomotopyReport::Point pt;
    pt.t = t;
    pt.selfadjoint_err = max_abs_diff(full, full.adjoint());
    pt.involution_err =
        max_abs_diff(full * full, FloatOperator::identity(w, 2));
    report.points.push_back(pt);
  }

  report.y0_match_err =
      max_abs_diff(homotopy_operator_ft(w, Rational(0)), phase_operator_f0(w));

  FredholmModule d1z1 = catalog(ModuleName::d1z1_B);
  FloatOperator pi_u =
      module_rep_float(d1z1, SemidirectRing(SemidirectPair::u()), w);
  FloatOperator f1 = homotopy_operator_ft(w, Rational(1));
  FloatOperator f1_full(w, 2);
  for (const auto& [k, v] : f1.entries) {
    f1_full.add(k.row, k.col, 0, 1, v);
    f1_full.add(k.col, k.row, 1, 0, std::conj(v));
  }
  report.y1_degenerate = commutator(f1_full, pi_u).is_zero();
  return report;
}

}  // namespace ncgdih
