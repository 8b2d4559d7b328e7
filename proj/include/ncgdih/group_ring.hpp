#ifndef NCGDIH_GROUP_RING_HPP
#define NCGDIH_GROUP_RING_HPP

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncgdih/groups.hpp"
#include "ncgdih/scalars.hpp"

namespace ncgdih {

/// Finitely supported map group element -> exact complex-rational scalar,
/// i.e. an element of the complex group ring. Zero coefficients are never
/// stored.
template <class G>
class RingElement {
 public:
  using Group = G;
  using Terms = std::map<G, CRat>;

  RingElement() = default;
  explicit RingElement(const G& g) { terms_[g] = CRat(1); }
  RingElement(std::initializer_list<std::pair<G, CRat>> init) {
    for (const auto& [g, c] : init) add_term(g, c);
  }

  static RingElement one() { return RingElement(G::one()); }
  static RingElement zero() { return {}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  CRat coeff(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CRat() : it->second;
  }

  void add_term(const G& g, const CRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [g, c] : b.terms_) r.add_term(g, c);
    return r;
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [g, c] : b.terms_) r.add_term(g, -c);
    return r;
  }
  friend RingElement operator-(const RingElement& a) {
    RingElement r;
    for (const auto& [g, c] : a.terms_) r.terms_[g] = -c;
    return r;
  }

  /// Convolution product: bilinear extension of the group law.
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement r;
    for (const auto& [g, cg] : a.terms_)
      for (const auto& [h, ch] : b.terms_) r.add_term(g * h, cg * ch);
    return r;
  }

  friend RingElement operator*(const CRat& c, const RingElement& a) {
    RingElement r;
    if (c.is_zero()) return r;
    for (const auto& [g, cg] : a.terms_) r.terms_[g] = c * cg;
    return r;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  Terms terms_;
};

using DihedralRing = RingElement<DihedralWord>;
using SemidirectRing = RingElement<SemidirectPair>;

/// Group-ring involution: conjugate coefficients on inverse elements.
template <class G>
RingElement<G> star(const RingElement<G>& a) {
  RingElement<G> r;
  for (const auto& [g, c] : a.terms()) r.add_term(g.inverse(), c.conj());
  return r;
}

/// Exact checks a^2 = a, a* = a.
template <class G>
bool is_projection(const RingElement<G>& a) {
  return a * a == a && star(a) == a;
}

/// Exact checks a* a = a a* = 1.
template <class G>
bool is_unitary(const RingElement<G>& a) {
  const auto one = RingElement<G>::one();
  return star(a) * a == one && a * star(a) == one;
}

/// Sum of all coefficients: the *-homomorphism killing every generator
/// relation (S, e |-> 1 on C*(Gamma); U, V |-> 1 on C*(G)).
template <class G>
CRat scalar_hom(const RingElement<G>& a) {
  CRat s;
  for (const auto& [g, c] : a.terms()) s += c;
  return s;
}

/// Quotient homomorphism C G -> C Gamma, (m,n) |-> S^m e^(n mod 2).
DihedralRing quotient_hom(const SemidirectRing& b);

/// The automorphism alpha_{-1}: S |-> S, e |-> S^-1 e.
DihedralRing alpha_minus_one(const DihedralRing& a);

/// Sign flip on the e-part: S^m e^eps |-> (-1)^eps S^m e^eps. This is the
/// lower-block twist of the graded dihedral representations.
DihedralRing flip_sign_on_e(const DihedralRing& a);

/// True when the element is supported on flip-free words, i.e. lies in the
/// copy of C[U,U^-1] = C(T) inside C Gamma.
bool is_torus_element(const DihedralRing& a);

// Standard projections over A = C*(Gamma).
DihedralRing proj_one();
DihedralRing proj_p1();      // (1+e)/2
DihedralRing proj_p2();      // (1+Se)/2
DihedralRing proj_p2_alt();  // (1+eS)/2 = (1+S^-1 e)/2, conjugate to P2

}  // namespace ncgdih

#endif  // NCGDIH_GROUP_RING_HPP
