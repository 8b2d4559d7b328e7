#include "ncgdih/scalars.hpp"

#include <limits>

namespace ncgdih {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  using Int = boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

bool rational_is_integer(const Rational& r, long long* out) {
  if (denominator(r) != 1) return false;
  const auto& n = numerator(r);
  if (n < std::numeric_limits<long long>::min() ||
      n > std::numeric_limits<long long>::max())
    return false;
  if (out) *out = n.convert_to<long long>();
  return true;
}

}  // namespace ncgdih
