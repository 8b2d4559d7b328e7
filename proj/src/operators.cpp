#include "ncgdih/operators.hpp"

#include <utility>
#include <vector>

namespace ncgdih {

namespace {

// Collect the active rows/columns of the sparse operator into a dense
// matrix; rank is unchanged by dropping empty rows and columns.
template <class S>
std::vector<std::vector<S>> active_dense(const WindowedOperator<S>& a) {
  std::map<std::pair<int, int>, int> row_ix, col_ix;
  for (const auto& [k, v] : a.entries) {
    row_ix.emplace(std::pair{int(k.br), k.row}, 0);
    col_ix.emplace(std::pair{int(k.bc), k.col}, 0);
  }
  int r = 0;
  for (auto& [key, ix] : row_ix) ix = r++;
  int c = 0;
  for (auto& [key, ix] : col_ix) ix = c++;
  std::vector<std::vector<S>> m(row_ix.size(),
                                std::vector<S>(col_ix.size(), S(0)));
  for (const auto& [k, v] : a.entries)
    m[row_ix[{int(k.br), k.row}]][col_ix[{int(k.bc), k.col}]] = v;
  return m;
}

}  // namespace

int rank(const ExactOperator& a) {
  return detail::dense_rank(
      active_dense(a), [](const CRat& x) { return x.is_zero(); },
      [](const CRat&, const CRat&) { return false; });
}

int rank(const FloatOperator& a, double tol) {
  return detail::dense_rank(
      active_dense(a), [tol](const CFloat& x) { return std::abs(x) <= tol; },
      [](const CFloat& x, const CFloat& y) {
        return std::abs(x) > std::abs(y);
      });
}

double shell_max_norm(const FloatOperator& a, int shell_radius) {
  if (a.window.kind != Window::Kind::ZBox)
    throw std::invalid_argument("shell_max_norm: Z^2 window required");
  const int lo = shell_radius, hi = 2 * shell_radius;
  auto in_shell = [&](int flat) {
    auto [p, q] = a.window.site2(flat);
    long r = std::max(std::labs(p), std::labs(q));
    return lo <= r && r <= hi;
  };
  double m = 0.0;
  for (const auto& [k, v] : a.entries)
    if (in_shell(k.row) && in_shell(k.col)) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace ncgdih
