#include "ncgdih/represent.hpp"

#include <cmath>

namespace ncgdih {

std::string to_string(RepName r) {
  switch (r) {
    case RepName::pi0_dihedral: return "pi0_dihedral";
    case RepName::pi1_dihedral: return "pi1_dihedral";
    case RepName::pi2_dihedral: return "pi2_dihedral";
    case RepName::pi1_semidirect_induced: return "pi1_semidirect_induced";
    case RepName::pi_l2Z2: return "pi_l2Z2";
    case RepName::phi_scalar: return "phi_scalar";
  }
  return "?";
}

long word_radius(const DihedralWord& w) { return std::labs(w.power) + w.flip; }
long word_radius(const SemidirectPair& g) {
  return std::labs(g.m) + std::labs(g.n);
}

namespace {

template <class G>
void check_margin(const RingElement<G>& a, Window w, long margin) {
  if (support_radius(a) > w.n - margin)
    throw WindowTooSmall("support radius " +
                         std::to_string(support_radius(a)) +
                         " exceeds N - margin = " +
                         std::to_string(w.n - margin));
}

}  // namespace

ExactOperator represent_dihedral_block(RepName rep, const DihedralRing& a,
                                       Window w, long margin) {
  if (w.kind != Window::Kind::ZInterval)
    throw std::invalid_argument("dihedral representation: Z window required");
  if (rep != RepName::pi1_dihedral && rep != RepName::pi2_dihedral)
    throw std::invalid_argument("represent_dihedral_block: pi1/pi2 only");
  check_margin(a, w, margin);
  ExactOperator out(w, 1);
  for (const auto& [g, c] : a.terms()) {
    for (long j = -w.n; j <= w.n; ++j) {
      long t = g.flip ? (rep == RepName::pi1_dihedral ? -j : -j - 1) : j;
      t += g.power;
      if (!w.contains(t)) {
        out.truncated = true;
        continue;
      }
      out.add(w.flat(t), w.flat(j), 0, 0, c);
    }
  }
  return out;
}

ExactOperator represent_semidirect_shift(const SemidirectRing& a, Window w,
                                         long margin) {
  if (w.kind != Window::Kind::ZInterval)
    throw std::invalid_argument("shift representation: Z window required");
  check_margin(a, w, margin);
  ExactOperator out(w, 1);
  for (const auto& [g, c] : a.terms()) {
    for (long j = -w.n; j <= w.n; ++j) {
      long t = j + g.n;
      if (!w.contains(t)) {
        out.truncated = true;
        continue;
      }
      out.add(w.flat(t), w.flat(j), 0, 0, c);
    }
  }
  return out;
}

FloatOperator represent_l2z2(const SemidirectRing& a, Window w, long margin) {
  if (w.kind != Window::Kind::ZBox)
    throw std::invalid_argument("l2(Z^2) representation: Z^2 window required");
  check_margin(a, w, margin);
  FloatOperator out(w, 1);
  for (const auto& [g, c] : a.terms()) {
    const CFloat cf(c.re.convert_to<double>(), c.im.convert_to<double>());
    // (m,n) = U^m V^n: e_{p,q} |-> e_{p+n, q + (-1)^{p+n} m}
    for (long p = -w.n; p <= w.n; ++p) {
      for (long q = -w.n; q <= w.n; ++q) {
        long tp = p + g.n;
        long tq = q + (((p + g.n) % 2 + 2) % 2 ? -g.m : g.m);
        if (!w.contains(tp, tq)) {
          out.truncated = true;
          continue;
        }
        out.add(w.flat(tp, tq), w.flat(p, q), 0, 0, cf);
      }
    }
  }
  return out;
}

ExactOperator sign_operator(Window w) {
  if (w.kind != Window::Kind::ZInterval)
    throw std::invalid_argument("sign operator: Z window required");
  ExactOperator out(w, 1);
  for (long j = -w.n; j <= w.n; ++j)
    out.add(w.flat(j), w.flat(j), 0, 0, CRat(sign_convention(j)));
  return out;
}

FloatOperator phase_operator_f0(Window w) {
  if (w.kind != Window::Kind::ZBox)
    throw std::invalid_argument("phase operator: Z^2 window required");
  FloatOperator out(w, 1);
  for (long p = -w.n; p <= w.n; ++p) {
    for (long q = -w.n; q <= w.n; ++q) {
      CFloat v;
      if (p == 0 && q == 0)
        v = 1.0;
      else
        v = CFloat(double(p), double(q)) /
            std::sqrt(double(p) * p + double(q) * q);
      out.add(w.flat(p, q), w.flat(p, q), 0, 0, v);
    }
  }
  return out;
}

FloatOperator homotopy_operator_ft(Window w, const Rational& t) {
  if (w.kind != Window::Kind::ZBox)
    throw std::invalid_argument("homotopy operator: Z^2 window required");
  if (t < 0 || t > 1)
    throw std::invalid_argument("homotopy operator: t in [0,1] required");
  const double s = 1.0 - t.convert_to<double>();
  const bool endpoint = (t == 1);
  FloatOperator out(w, 1);
  for (long p = -w.n; p <= w.n; ++p) {
    for (long q = -w.n; q <= w.n; ++q) {
      CFloat v;
      if (q == 0 || endpoint)
        v = double(sign_convention(p));
      else
        v = CFloat(double(p), s * double(q)) /
            std::sqrt(double(p) * p + s * s * double(q) * q);
      out.add(w.flat(p, q), w.flat(p, q), 0, 0, v);
    }
  }
  return out;
}

}  // namespace ncgdih
