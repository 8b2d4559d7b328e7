#ifndef NCGDIH_SCALARS_HPP
#define NCGDIH_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncgdih {

/// Exact rational scalar. Arbitrary precision so Gaussian elimination and
/// prefix sums never overflow.
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// num/den with the sign normalized into the numerator (the two-argument
/// cpp_rational constructor rejects negative denominators).
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Complex number with exact rational real and imaginary parts. This is the
/// scalar field for everything except the l^2(Z^2) modules, whose phases are
/// irrational.
struct CRat {
  Rational re{0};
  Rational im{0};

  CRat() = default;
  CRat(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  CRat(Rational r) : re(std::move(r)) {}
  CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  CRat conj() const { return CRat{re, -im}; }

  friend CRat operator+(const CRat& a, const CRat& b) {
    return CRat{a.re + b.re, a.im + b.im};
  }
  friend CRat operator-(const CRat& a, const CRat& b) {
    return CRat{a.re - b.re, a.im - b.im};
  }
  friend CRat operator-(const CRat& a) { return CRat{-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return CRat{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero scalar");
    return CRat{(a.re * b.re + a.im * b.im) / n,
                (a.im * b.re - a.re * b.im) / n};
  }
  CRat& operator+=(const CRat& b) { return *this = *this + b; }
  CRat& operator-=(const CRat& b) { return *this = *this - b; }
  CRat& operator*=(const CRat& b) { return *this = *this * b; }

  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  std::string str() const;
};

/// "p/q" with q >= 1, lowest terms; no decimals anywhere.
inline std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s);

inline std::string CRat::str() const {
  if (im == 0) return rational_to_string(re);
  return rational_to_string(re) + (im > 0 ? "+" : "-") +
         rational_to_string(im > 0 ? im : Rational(-im)) + "i";
}

/// True when the rational is an integer fitting in long long.
bool rational_is_integer(const Rational& r, long long* out);

// --- float backend helpers ---

using CFloat = std::complex<double>;

inline bool nearly_zero(const CFloat& z, double tol) {
  return std::abs(z) <= tol;
}

}  // namespace ncgdih

#endif  // NCGDIH_SCALARS_HPP
