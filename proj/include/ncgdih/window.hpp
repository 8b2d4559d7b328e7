#ifndef NCGDIH_WINDOW_HPP
#define NCGDIH_WINDOW_HPP

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ncgdih {

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite truncation of l^2(Z) or l^2(Z^2): the Z-interval [-N, N] or the
/// box [-N, N]^2. Sites are addressed by flat indices 0 .. dim()-1.
struct Window {
  enum class Kind { ZInterval, ZBox };

  Kind kind = Kind::ZInterval;
  int n = 1;

  static Window interval(int n) {
    if (n < 1) throw std::invalid_argument("window: N >= 1 required");
    return Window{Kind::ZInterval, n};
  }
  static Window box(int n) {
    if (n < 1) throw std::invalid_argument("window: N >= 1 required");
    return Window{Kind::ZBox, n};
  }

  int side() const { return 2 * n + 1; }
  int dim() const {
    return kind == Kind::ZInterval ? side() : side() * side();
  }

  bool contains(long i) const { return -n <= i && i <= n; }
  bool contains(long p, long q) const { return contains(p) && contains(q); }

  int flat(long i) const { return static_cast<int>(i + n); }
  int flat(long p, long q) const {
    return static_cast<int>((p + n) * side() + (q + n));
  }

  long site(int flat) const { return static_cast<long>(flat) - n; }
  std::pair<long, long> site2(int flat) const {
    return {flat / side() - n, flat % side() - n};
  }

  friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace ncgdih

#endif  // NCGDIH_WINDOW_HPP
