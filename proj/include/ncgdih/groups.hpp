#ifndef NCGDIH_GROUPS_HPP
#define NCGDIH_GROUPS_HPP

#include <compare>
#include <cstdlib>
#include <set>
#include <string>

namespace ncgdih {

/// Element S^m e^eps of the infinite dihedral group, kept in the canonical
/// form with e on the right. The relations e^2 = 1 and eS = S^-1 e normalize
/// every product back to this form.
struct DihedralWord {
  long power = 0;  // exponent of S
  int flip = 0;    // exponent of e, 0 or 1

  constexpr DihedralWord() = default;
  constexpr DihedralWord(long m, int eps) : power(m), flip(eps & 1) {}

  static constexpr DihedralWord one() { return {}; }
  static constexpr DihedralWord s(long m = 1) { return {m, 0}; }
  static constexpr DihedralWord e() { return {0, 1}; }

  bool is_identity() const { return power == 0 && flip == 0; }

  /// (S^m e^a)(S^p e^b) = S^{m + (-1)^a p} e^{a+b}
  friend constexpr DihedralWord operator*(DihedralWord g, DihedralWord h) {
    return {g.power + (g.flip ? -h.power : h.power), g.flip ^ h.flip};
  }

  DihedralWord inverse() const {
    return flip ? *this : DihedralWord{-power, 0};
  }

  friend auto operator<=>(const DihedralWord&, const DihedralWord&) = default;

  std::string str() const;
};

/// Element (m,n) of G = Z x_sigma Z, with U = (1,0), V = (0,1) and
/// (m,n)(p,q) = (m + (-1)^n p, n + q).
struct SemidirectPair {
  long m = 0;
  long n = 0;

  constexpr SemidirectPair() = default;
  constexpr SemidirectPair(long m_, long n_) : m(m_), n(n_) {}

  static constexpr SemidirectPair one() { return {}; }
  static constexpr SemidirectPair u(long k = 1) { return {k, 0}; }
  static constexpr SemidirectPair v(long k = 1) { return {0, k}; }

  bool is_identity() const { return m == 0 && n == 0; }

  friend constexpr SemidirectPair operator*(SemidirectPair g,
                                            SemidirectPair h) {
    return {g.m + ((g.n & 1) ? -h.m : h.m), g.n + h.n};
  }

  SemidirectPair inverse() const {
    return {(n & 1) ? m : -m, -n};
  }

  friend auto operator<=>(const SemidirectPair&, const SemidirectPair&) =
      default;

  std::string str() const;
};

/// All conjugates h g h^-1 with conjugator h = S^k e^eps, |k| <= bound.
std::set<DihedralWord> conjugacy_class(DihedralWord g, long bound);

}  // namespace ncgdih

#endif  // NCGDIH_GROUPS_HPP
