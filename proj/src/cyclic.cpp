#include "ncgdih/cyclic.hpp"

#include <cstdlib>

namespace ncgdih {

Cochain0 Cochain0::from_data(std::map<long, CRat> a, CRat b0, CRat b1) {
  Cochain0 out;
  for (const auto& [n, v] : a) {
    auto it = a.find(-n);
    CRat mirror = it == a.end() ? CRat() : it->second;
    if (mirror != v)
      throw SymmetryViolation("cochain0: a_{-n} = a_n required at n = " +
                              std::to_string(n));
  }
  for (const auto& [n, v] : a)
    if (!v.is_zero()) out.a_[n] = v;
  out.b0_ = std::move(b0);
  out.b1_ = std::move(b1);
  return out;
}

CRat Cochain0::operator()(const Word& w) const {
  if (w.flip) return (std::labs(w.power) % 2) ? b1_ : b0_;
  auto it = a_.find(w.power);
  return it == a_.end() ? CRat() : it->second;
}

CRat Cochain0::operator()(const DihedralRing& x) const {
  CRat s;
  for (const auto& [g, c] : x.terms()) s += c * (*this)(g);
  return s;
}

Cochain0 psi0() {
  return Cochain0::from_data({{0, CRat(1)}}, CRat(-1), CRat(-1));
}

Cochain0 psi1() { return Cochain0::from_data({}, CRat(2), CRat()); }

Cochain0 psi2() { return Cochain0::from_data({}, CRat(), CRat(2)); }

Cochain0 psi_k(long k) {
  if (k == 0) throw std::invalid_argument("psi_k: k != 0 required");
  return Cochain0::from_data({{k, CRat(1)}, {-k, CRat(1)}}, CRat(), CRat());
}

CRat WordFunctional::operator()(const Word& w) const {
  const auto& table = w.flip ? on_flip : on_power;
  auto it = table.find(w.power);
  return it == table.end() ? CRat() : it->second;
}

CRat WordFunctional::operator()(const DihedralRing& x) const {
  CRat s;
  for (const auto& [g, c] : x.terms()) s += c * (*this)(g);
  return s;
}

CocycleForm1 CocycleForm1::from_data(std::map<long, CRat> c,
                                     std::map<long, CRat> d) {
  CocycleForm1 out;
  for (const auto& [n, v] : d) {
    auto it = d.find(-n);
    CRat mirror = it == d.end() ? CRat() : it->second;
    if (mirror != CRat() - v)
      throw SymmetryViolation("cocycle form: d_{-n} = -d_n required at n = " +
                              std::to_string(n));
  }
  for (const auto& [n, v] : c)
    if (!v.is_zero()) out.c_[n] = v;
  for (const auto& [n, v] : d)
    if (!v.is_zero()) out.d_[n] = v;
  return out;
}

CRat CocycleForm1::c_range_sum(long lo, long hi) const {
  // sum of c_j over j in {lo, lo+2, ..., hi}; iterate the (finite) support
  CRat s;
  for (const auto& [j, v] : c_) {
    if (j < lo || j > hi) continue;
    if (((j - lo) % 2 + 2) % 2 == 0) s += v;
  }
  return s;
}

CRat CocycleForm1::operator()(const Word& x, const Word& y) const {
  if (!x.flip && !y.flip) return CRat();  // phi(S^m, S^n) = 0
  if (x.flip && y.flip) {                 // phi(S^m e, S^n e) = d_{n-m}
    auto it = d_.find(y.power - x.power);
    return it == d_.end() ? CRat() : it->second;
  }
  // phi(S^m, S^n e) = c_{n-m+1} + c_{n-m+3} + ... + c_{n+m-1}, extended to
  // m < 0 by the cocycle recurrence; phi(S^m e, S^n) by antisymmetry.
  long m = x.flip ? y.power : x.power;
  long n = x.flip ? x.power : y.power;
  CRat v;
  if (m > 0)
    v = c_range_sum(n - m + 1, n + m - 1);
  else if (m < 0)
    v = CRat() - c_range_sum(n + m + 1, n - m - 1);
  return x.flip ? CRat() - v : v;
}

CRat CoboundaryPotential::value_power(long m) const {
  if (m <= 0) return CRat();
  auto it = d_.find(m);
  return it == d_.end() ? CRat() : CRat() - it->second;
}

CRat CoboundaryPotential::value_flip(long m) const {
  // b_0 = 0, b_1 = c_0, and b_{n+1} = b_{n-1} + c_n in both directions:
  //   m >= 0: b_m = sum of c_j, 0 <= j <= m-1, j of parity m-1
  //   m <  0: b_m = -sum of c_j, m <= j <= -1, j of parity m+1
  CRat s;
  if (m > 0) {
    for (const auto& [j, v] : c_)
      if (0 <= j && j <= m - 1 && ((j - (m - 1)) % 2 + 2) % 2 == 0) s += v;
  } else if (m < 0) {
    for (const auto& [j, v] : c_)
      if (m <= j && j <= -1 && ((j - (m + 1)) % 2 + 2) % 2 == 0) s -= v;
  }
  return s;
}

CRat CoboundaryPotential::operator()(const DihedralRing& x) const {
  CRat s;
  for (const auto& [g, c] : x.terms()) s += c * (*this)(g);
  return s;
}

CoboundaryPotential solve_1_coboundary(const CocycleForm1& phi) {
  return CoboundaryPotential(phi.c(), phi.d());
}

SPotential1::SPotential1(long k, CRat ck) : k_(k), ck_(std::move(ck)) {
  if (k == 0)
    throw std::domain_error(
        "solve_2_coboundary: S psi_0 is cohomologically nontrivial; no "
        "solution for k = 0");
}

CRat SPotential1::alpha(long m, long n) const {
  if (m + n != k_ && m + n != -k_) return CRat();
  return CRat(make_rational(m - n, m + n));
}

CRat SPotential1::gamma(long m, long n) const {
  if (m - n == k_) return CRat(make_rational(2 * n, k_)) - ck_;
  if (m - n == -k_) return CRat(make_rational(-2 * m, k_)) + ck_;
  return CRat();
}

CRat SPotential1::operator()(const Word& x, const Word& y) const {
  if (!x.flip && !y.flip) return alpha(x.power, y.power);
  if (x.flip && y.flip) return gamma(x.power, y.power);
  return CRat();  // beta = 0 on mixed pairs
}

SPotential1 solve_2_coboundary(long k, const CRat& ck) {
  return SPotential1(k, ck);
}

std::vector<Word> words_within(long bound) {
  std::vector<Word> out;
  out.reserve(2 * (2 * bound + 1));
  for (long m = -bound; m <= bound; ++m) {
    out.push_back(Word{m, 0});
    out.push_back(Word{m, 1});
  }
  return out;
}

bool is_cyclic0(const Fn0& psi, long bound) {
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws)
      if (psi(x * y) != psi(y * x)) return false;
  return true;
}

bool is_cyclic1(const Fn1& phi, long bound) {
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws)
      if (phi(x, y) != CRat() - phi(y, x)) return false;
  return true;
}

bool is_cyclic2(const Fn2& phi, long bound) {
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& z : ws)
        if (phi(x, y, z) != phi(z, x, y)) return false;
  return true;
}

CRat pair_with_projection(const Cochain0& psi, const DihedralRing& p) {
  if (!(p * p == p)) throw std::domain_error("pairing: p is not idempotent");
  return psi(p);
}

CRat pair_with_projection(const SCochain2& c, const DihedralRing& p) {
  if (!(p * p == p)) throw std::domain_error("pairing: p is not idempotent");
  return eval_trilinear(c, p, p, p);  // (1!)^{-1} = 1
}

std::array<std::array<CRat, 3>, 3> duality_matrix() {
  const std::array<Cochain0, 3> psis = {psi0(), psi1(), psi2()};
  const std::array<DihedralRing, 3> projs = {proj_one(), proj_p1(),
                                             proj_p2()};
  std::array<std::array<CRat, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i][j] = pair_with_projection(psis[i], projs[j]);
  return out;
}

namespace {

std::string tuple_str(const Word& x, const Word& y) {
  return "(" + x.str() + ", " + y.str() + ")";
}
std::string tuple_str(const Word& x, const Word& y, const Word& z) {
  return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

constexpr std::size_t kMaxFailuresKept = 16;

void record_failure(CheckReport& report, std::string what) {
  if (report.failures.size() < kMaxFailuresKept)
    report.failures.push_back(std::move(what));
}

}  // namespace

CheckReport verify_cocycle1(const CocycleForm1& phi, long bound) {
  CheckReport report{"b(phi) = 0 and phi(x,y) = -phi(y,x)", bound, 0, {}};
  auto ws = words_within(bound);
  auto b = boundary_b1(phi);
  for (const auto& x : ws) {
    for (const auto& y : ws) {
      ++report.tuples_checked;
      if (phi(x, y) != CRat() - phi(y, x))
        record_failure(report, "antisymmetry " + tuple_str(x, y));
      for (const auto& z : ws) {
        ++report.tuples_checked;
        if (!b(x, y, z).is_zero())
          record_failure(report, "cocycle " + tuple_str(x, y, z));
      }
    }
  }
  return report;
}

CheckReport verify_solve1(const CocycleForm1& phi, long bound) {
  CheckReport report{"b(solve_1(phi)) = phi", bound, 0, {}};
  CoboundaryPotential psi = solve_1_coboundary(phi);
  auto b = boundary_b0(psi);
  auto ws = words_within(bound);
  for (const auto& x : ws) {
    for (const auto& y : ws) {
      ++report.tuples_checked;
      if (b(x, y) != phi(x, y)) record_failure(report, tuple_str(x, y));
    }
  }
  return report;
}

CheckReport verify_solve2(long k, const CRat& ck, long bound) {
  CheckReport report{"b(solve_2(k, ck)) = S psi_k", bound, 0, {}};
  SPotential1 phi = solve_2_coboundary(k, ck);
  SCochain2 target = periodicity_s(psi_k(k));
  auto b = boundary_b1(phi);
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& z : ws) {
        ++report.tuples_checked;
        if (b(x, y, z) != target(x, y, z))
          record_failure(report, tuple_str(x, y, z));
      }
  return report;
}

CheckReport verify_bb_zero(const WordFunctional& psi, long bound) {
  CheckReport report{"b(b(psi)) = 0", bound, 0, {}};
  auto bb = boundary_b1(boundary_b0(psi));
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& z : ws) {
        ++report.tuples_checked;
        if (!bb(x, y, z).is_zero()) record_failure(report, tuple_str(x, y, z));
      }
  return report;
}

CheckReport verify_trace(const Cochain0& psi, long bound) {
  CheckReport report{"psi(xy) = psi(yx)", bound, 0, {}};
  auto ws = words_within(bound);
  for (const auto& x : ws)
    for (const auto& y : ws) {
      ++report.tuples_checked;
      if (psi(x * y) != psi(y * x)) record_failure(report, tuple_str(x, y));
    }
  return report;
}

CRat random_small_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> has_im(0, 3);
  CRat out{Rational(num(rng), den(rng))};
  if (has_im(rng) == 0) out.im = Rational(num(rng), den(rng));
  return out;
}

Cochain0 random_cochain0(std::mt19937_64& rng, long support) {
  std::map<long, CRat> a;
  for (long n = 0; n <= support; ++n) {
    CRat v = random_small_scalar(rng);
    if (v.is_zero()) continue;
    a[n] = v;
    a[-n] = v;
  }
  return Cochain0::from_data(std::move(a), random_small_scalar(rng),
                             random_small_scalar(rng));
}

WordFunctional random_functional(std::mt19937_64& rng, long support) {
  WordFunctional out;
  for (long n = -support; n <= support; ++n) {
    CRat av = random_small_scalar(rng);
    if (!av.is_zero()) out.on_power[n] = av;
    CRat bv = random_small_scalar(rng);
    if (!bv.is_zero()) out.on_flip[n] = bv;
  }
  return out;
}

CocycleForm1 random_cocycle1(std::mt19937_64& rng, long support) {
  std::map<long, CRat> c, d;
  for (long n = -support; n <= support; ++n) {
    CRat v = random_small_scalar(rng);
    if (!v.is_zero()) c[n] = v;
  }
  for (long n = 1; n <= support; ++n) {
    CRat v = random_small_scalar(rng);
    if (v.is_zero()) continue;
    d[n] = v;
    d[-n] = CRat() - v;
  }
  return CocycleForm1::from_data(std::move(c), std::move(d));
}

}  // namespace ncgdih
