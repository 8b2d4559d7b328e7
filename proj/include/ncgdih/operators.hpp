#ifndef NCGDIH_OPERATORS_HPP
#define NCGDIH_OPERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgdih/scalars.hpp"
#include "ncgdih/window.hpp"

namespace ncgdih {

namespace detail {

inline bool scalar_is_zero(const CRat& c) { return c.is_zero(); }
inline bool scalar_is_zero(const CFloat& c) {
  return c.real() == 0.0 && c.imag() == 0.0;
}
inline CRat scalar_conj(const CRat& c) { return c.conj(); }
inline CFloat scalar_conj(const CFloat& c) { return std::conj(c); }

inline void scalar_fields(const CRat& c, std::string& re, std::string& im) {
  re = rational_to_string(c.re);
  im = rational_to_string(c.im);
}
inline void scalar_fields(const CFloat& c, std::string& re, std::string& im) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c.real());
  re = buf;
  std::snprintf(buf, sizeof buf, "%.17g", c.imag());
  im = buf;
}

}  // namespace detail

/// Sparse operator on the windowed Hilbert space, optionally block 2x2 for
/// graded modules H + H. Immutable by convention once built: every operation
/// returns a fresh value.
///
/// `truncated` records whether a nonzero entry was ever dropped at the window
/// boundary while building this operator (or either operand of an arithmetic
/// operation). Exactness claims in tests key off this flag.
template <class S>
struct WindowedOperator {
  struct Key {
    int row, col;
    std::uint8_t br, bc;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  Window window;
  int blocks = 1;
  bool truncated = false;
  std::map<Key, S> entries;

  WindowedOperator() = default;
  WindowedOperator(Window w, int nblocks) : window(w), blocks(nblocks) {
    if (nblocks != 1 && nblocks != 2)
      throw std::invalid_argument("operator: 1 or 2 blocks");
  }

  static WindowedOperator zero(Window w, int nblocks) {
    return WindowedOperator(w, nblocks);
  }

  static WindowedOperator identity(Window w, int nblocks) {
    WindowedOperator r(w, nblocks);
    for (int b = 0; b < nblocks; ++b)
      for (int j = 0; j < w.dim(); ++j)
        r.entries[{j, j, static_cast<std::uint8_t>(b),
                   static_cast<std::uint8_t>(b)}] = S(1);
    return r;
  }

  bool is_zero() const { return entries.empty(); }

  /// No nonzero entry was dropped at the window boundary anywhere in this
  /// operator's history.
  bool interior_exact() const { return !truncated; }

  S at(int row, int col, int br = 0, int bc = 0) const {
    auto it = entries.find({row, col, static_cast<std::uint8_t>(br),
                            static_cast<std::uint8_t>(bc)});
    return it == entries.end() ? S(0) : it->second;
  }

  void add(int row, int col, int br, int bc, const S& v) {
    if (detail::scalar_is_zero(v)) return;
    Key k{row, col, static_cast<std::uint8_t>(br),
          static_cast<std::uint8_t>(bc)};
    auto [it, inserted] = entries.emplace(k, v);
    if (!inserted) {
      it->second = it->second + v;
      if (detail::scalar_is_zero(it->second)) entries.erase(it);
    }
  }

  void require_compatible(const WindowedOperator& o) const {
    if (!(window == o.window) || blocks != o.blocks)
      throw std::invalid_argument("operator: window/block mismatch");
  }

  friend WindowedOperator operator+(const WindowedOperator& a,
                                    const WindowedOperator& b) {
    a.require_compatible(b);
    WindowedOperator r = a;
    r.truncated = a.truncated || b.truncated;
    for (const auto& [k, v] : b.entries) r.add(k.row, k.col, k.br, k.bc, v);
    return r;
  }

  friend WindowedOperator operator-(const WindowedOperator& a,
                                    const WindowedOperator& b) {
    a.require_compatible(b);
    WindowedOperator r = a;
    r.truncated = a.truncated || b.truncated;
    for (const auto& [k, v] : b.entries)
      r.add(k.row, k.col, k.br, k.bc, S(0) - v);
    return r;
  }

  friend WindowedOperator operator*(const WindowedOperator& a,
                                    const WindowedOperator& b) {
    a.require_compatible(b);
    WindowedOperator r(a.window, a.blocks);
    r.truncated = a.truncated || b.truncated;
    // Keys sort by row first, so all of b's entries with row == a's col form
    // one contiguous range.
    for (const auto& [ka, va] : a.entries) {
      auto it = b.entries.lower_bound({ka.col, INT32_MIN, 0, 0});
      for (; it != b.entries.end() && it->first.row == ka.col; ++it) {
        if (it->first.br != ka.bc) continue;
        r.add(ka.row, it->first.col, ka.br, it->first.bc, va * it->second);
      }
    }
    return r;
  }

  WindowedOperator scaled(const S& c) const {
    WindowedOperator r(window, blocks);
    r.truncated = truncated;
    if (detail::scalar_is_zero(c)) return r;
    for (const auto& [k, v] : entries) r.entries[k] = c * v;
    return r;
  }

  WindowedOperator adjoint() const {
    WindowedOperator r(window, blocks);
    r.truncated = truncated;
    for (const auto& [k, v] : entries)
      r.entries[{k.col, k.row, k.bc, k.br}] = detail::scalar_conj(v);
    return r;
  }

  S trace() const {
    S t(0);
    for (const auto& [k, v] : entries)
      if (k.row == k.col && k.br == k.bc) t = t + v;
    return t;
  }

  friend bool operator==(const WindowedOperator& a,
                         const WindowedOperator& b) {
    return a.window == b.window && a.blocks == b.blocks &&
           a.entries == b.entries;
  }

  /// Coordinate-list debug dump: "row col block_r block_c re im" per entry,
  /// in sorted order. Bit-exact for the exact backend.
  std::string dump() const {
    std::ostringstream os;
    std::string re, im;
    for (const auto& [k, v] : entries) {
      detail::scalar_fields(v, re, im);
      os << k.row << ' ' << k.col << ' ' << int(k.br) << ' ' << int(k.bc)
         << ' ' << re << ' ' << im << '\n';
    }
    return os.str();
  }
};

using ExactOperator = WindowedOperator<CRat>;
using FloatOperator = WindowedOperator<CFloat>;

template <class S>
WindowedOperator<S> commutator(const WindowedOperator<S>& a,
                               const WindowedOperator<S>& b) {
  return a * b - b * a;
}

template <class S>
WindowedOperator<S> anticommutator(const WindowedOperator<S>& a,
                                   const WindowedOperator<S>& b) {
  return a * b + b * a;
}

namespace detail {

// Dense Gaussian elimination over the active rows/columns only. The sparse
// operators here have tiny active support even on large windows.
template <class S, class ZeroTest, class AbsBetter>
int dense_rank(std::vector<std::vector<S>> m, ZeroTest is_zero,
               AbsBetter better_pivot) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    for (std::size_t r = lead; r < rows; ++r)
      if (!is_zero(m[r][c]) && (is_zero(m[piv][c]) ||
                                better_pivot(m[r][c], m[piv][c])))
        piv = r;
    if (is_zero(m[piv][c])) continue;
    std::swap(m[piv], m[lead]);
    for (std::size_t r = lead + 1; r < rows; ++r) {
      if (is_zero(m[r][c])) continue;
      S f = m[r][c] / m[lead][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        m[r][cc] = m[r][cc] - f * m[lead][cc];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact matrix rank via Gaussian elimination over the rationals.
int rank(const ExactOperator& a);

/// Numerical rank with the given zero tolerance.
int rank(const FloatOperator& a, double tol = 1e-12);

inline double max_abs(const FloatOperator& a) {
  double m = 0.0;
  for (const auto& [k, v] : a.entries) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const FloatOperator& a, const FloatOperator& b) {
  double m = 0.0;
  std::set<typename FloatOperator::Key> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  for (const auto& k : keys)
    m = std::max(m, std::abs(a.at(k.row, k.col, k.br, k.bc) -
                             b.at(k.row, k.col, k.br, k.bc)));
  return m;
}

/// Max |entry| over entries whose row and column sites both satisfy
/// R <= max(|p|,|q|) <= 2R. Z^2 windows only; the compactness proxy for the
/// l^2(Z^2) modules.
double shell_max_norm(const FloatOperator& a, int shell_radius);

}  // namespace ncgdih

#endif  // NCGDIH_OPERATORS_HPP
