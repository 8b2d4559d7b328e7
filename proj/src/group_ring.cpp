#include "ncgdih/group_ring.hpp"

#include <sstream>

namespace ncgdih {

template <class G>
std::string RingElement<G>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << g.str();
  }
  return os.str();
}

template std::string RingElement<DihedralWord>::str() const;
template std::string RingElement<SemidirectPair>::str() const;

DihedralRing quotient_hom(const SemidirectRing& b) {
  DihedralRing out;
  for (const auto& [g, c] : b.terms())
    out.add_term(DihedralWord{g.m, static_cast<int>(((g.n % 2) + 2) % 2)}, c);
  return out;
}

DihedralRing alpha_minus_one(const DihedralRing& a) {
  // S^m |-> S^m, S^m e |-> S^{m-1} e
  DihedralRing out;
  for (const auto& [g, c] : a.terms())
    out.add_term(DihedralWord{g.power - g.flip, g.flip}, c);
  return out;
}

DihedralRing flip_sign_on_e(const DihedralRing& a) {
  DihedralRing out;
  for (const auto& [g, c] : a.terms()) out.add_term(g, g.flip ? -c : c);
  return out;
}

bool is_torus_element(const DihedralRing& a) {
  for (const auto& [g, c] : a.terms())
    if (g.flip) return false;
  return true;
}

namespace {
const CRat kHalf{Rational(1, 2)};
}

DihedralRing proj_one() { return DihedralRing::one(); }

DihedralRing proj_p1() {
  return {{DihedralWord::one(), kHalf}, {DihedralWord::e(), kHalf}};
}

DihedralRing proj_p2() {
  return {{DihedralWord::one(), kHalf}, {DihedralWord{1, 1}, kHalf}};
}

DihedralRing proj_p2_alt() {
  return {{DihedralWord::one(), kHalf}, {DihedralWord{-1, 1}, kHalf}};
}

}  // namespace ncgdih
