#include "ncgdih/groups.hpp"

#include <string>

namespace ncgdih {

std::string DihedralWord::str() const {
  if (is_identity()) return "1";
  std::string s;
  if (power == 1)
    s = "S";
  else if (power == -1)
    s = "S^-1";
  else if (power != 0)
    s = "S^" + std::to_string(power);
  if (flip) s += "e";
  return s;
}

std::string SemidirectPair::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::set<DihedralWord> conjugacy_class(DihedralWord g, long bound) {
  std::set<DihedralWord> out;
  for (long k = -bound; k <= bound; ++k) {
    for (int eps = 0; eps <= 1; ++eps) {
      DihedralWord h{k, eps};
      out.insert(h * g * h.inverse());
    }
  }
  return out;
}

}  // namespace ncgdih
