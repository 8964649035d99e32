#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sphsys/quotient.hpp"

namespace sphsys {

namespace {

bool dominates(const std::vector<int>& x, const std::vector<int>& b) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < b[i]) return false;
  return true;
}

// Contejean-Devie completion for {x in N^n : A x = 0}. A frontier vector p is
// extended by e_j only when <Ap, Ae_j> < 0, and dropped once it dominates a solution.
IntMatrix kernel_basis(const IntMatrix& a, int n) {
  const std::size_t m = a.size();
  auto image = [&](const std::vector<int>& x) {
    std::vector<long> y(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) y[i] += static_cast<long>(a[i][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
    return y;
  };
  std::vector<std::vector<long>> col(static_cast<std::size_t>(n), std::vector<long>(m));
  for (int j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) col[static_cast<std::size_t>(j)][i] = a[i][static_cast<std::size_t>(j)];

  IntMatrix basis;
  std::set<std::vector<int>> frontier;
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    frontier.insert(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> open;
    for (const auto& p : frontier) {
      std::vector<long> y = image(p);
      if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; }))
        basis.push_back(p);
      else
        open.push_back(p);
    }
    std::set<std::vector<int>> next;
    for (const auto& p : open) {
      std::vector<long> y = image(p);
      for (int j = 0; j < n; ++j) {
        long dot = 0;
        for (std::size_t i = 0; i < m; ++i) dot += y[i] * col[static_cast<std::size_t>(j)][i];
        if (dot >= 0) continue;
        std::vector<int> q = p;
        ++q[static_cast<std::size_t>(j)];
        if (std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return dominates(q, b); })) continue;
        next.insert(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

}  // namespace

IntMatrix hilbert_basis(const IntMatrix& rows, int ncols, HilbertMode mode) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ncols) throw std::invalid_argument("ragged pairing matrix");
  IntMatrix out;
  if (mode == HilbertMode::kernel) {
    out = kernel_basis(rows, ncols);
  } else {
    // slack variables turn R x >= 0 into [R | -I] (x, s) = 0; s is determined by x
    const int m = static_cast<int>(rows.size());
    IntMatrix lifted;
    for (int i = 0; i < m; ++i) {
      std::vector<int> r = rows[static_cast<std::size_t>(i)];
      r.resize(static_cast<std::size_t>(ncols + m), 0);
      r[static_cast<std::size_t>(ncols + i)] = -1;
      lifted.push_back(std::move(r));
    }
    for (auto& v : kernel_basis(lifted, ncols + m)) {
      v.resize(static_cast<std::size_t>(ncols));
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    int sx = std::accumulate(x.begin(), x.end(), 0);
    int sy = std::accumulate(y.begin(), y.end(), 0);
    return std::tie(sx, x) < std::tie(sy, y);
  });
  return out;
}

}  // namespace sphsys
