#include "sphsys/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphsys::linalg {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix to_z(const IntMatrix& m, int ncols) {
  ZMatrix z;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != ncols) throw std::invalid_argument("ragged matrix");
    z.emplace_back(row.begin(), row.end());
  }
  return z;
}

int to_int(const mpz_class& v) {
  if (!v.fits_sint_p()) throw std::overflow_error("integer entry exceeds int range");
  return static_cast<int>(v.get_si());
}

// Floor division for the reduction step.
mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

int rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("ragged matrix");
    m.emplace_back(r.begin(), r.end());
  }
  int rk = 0;
  for (std::size_t col = 0; col < n && rk < static_cast<int>(m.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rk);
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rk)]);
    auto& p = m[static_cast<std::size_t>(rk)];
    for (std::size_t i = static_cast<std::size_t>(rk) + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      mpq_class f = m[i][col] / p[col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * p[j];
    }
    ++rk;
  }
  return rk;
}

IntMatrix hermite_normal_form(const IntMatrix& rows, int ncols) {
  ZMatrix m = to_z(rows, ncols);
  std::size_t r = 0;
  for (int col = 0; col < ncols && r < m.size(); ++col) {
    // Euclid on column `col` among rows r.. until a single nonzero entry remains
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        mpz_class q = m[i][col] / m[r][col];
        for (int j = col; j < ncols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (int j = col; j < ncols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(m[i][col], m[r][col]);
      if (q != 0)
        for (int j = col; j < ncols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  IntMatrix out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> row;
    for (const auto& v : m[i]) row.push_back(to_int(v));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix integer_kernel(const IntMatrix& rows, int ncols) {
  // Column operations reduce R to echelon form; the same unimodular operations on the
  // identity leave the kernel basis in the trailing columns.
  ZMatrix a = to_z(rows, ncols);
  ZMatrix u(static_cast<std::size_t>(ncols), std::vector<mpz_class>(static_cast<std::size_t>(ncols)));
  for (int i = 0; i < ncols; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  auto col_axpy = [&](int dst, int src, const mpz_class& q) {  // col dst -= q col src
    for (auto& row : a) row[static_cast<std::size_t>(dst)] -= q * row[static_cast<std::size_t>(src)];
    for (auto& row : u) row[static_cast<std::size_t>(dst)] -= q * row[static_cast<std::size_t>(src)];
  };
  auto col_swap = [&](int x, int y) {
    for (auto& row : a) std::swap(row[static_cast<std::size_t>(x)], row[static_cast<std::size_t>(y)]);
    for (auto& row : u) std::swap(row[static_cast<std::size_t>(x)], row[static_cast<std::size_t>(y)]);
  };
  int p = 0;
  for (const auto& row_ref : a) {
    if (p >= ncols) break;
    const auto& row = row_ref;
    for (;;) {
      int best = -1;
      for (int j = p; j < ncols; ++j)
        if (row[static_cast<std::size_t>(j)] != 0 &&
            (best < 0 || abs(row[static_cast<std::size_t>(j)]) < abs(row[static_cast<std::size_t>(best)])))
          best = j;
      if (best < 0) break;
      col_swap(p, best);
      bool done = true;
      for (int j = p + 1; j < ncols; ++j) {
        if (row[static_cast<std::size_t>(j)] == 0) continue;
        mpz_class q = row[static_cast<std::size_t>(j)] / row[static_cast<std::size_t>(p)];
        col_axpy(j, p, q);
        if (row[static_cast<std::size_t>(j)] != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  IntMatrix kernel;
  for (int j = p; j < ncols; ++j) {
    std::vector<int> v;
    for (int i = 0; i < ncols; ++i) v.push_back(to_int(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    kernel.push_back(std::move(v));
  }
  return hermite_normal_form(kernel, ncols);
}

std::optional<std::vector<mpq_class>> feasible_point(const std::vector<std::vector<mpq_class>>& a,
                                                     const std::vector<mpq_class>& b, int nvars) {
  const int m = static_cast<int>(a.size());
  const int n = nvars;
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("constraint size mismatch");
  // columns: x (n), surplus (m), artificial (m), rhs
  const int ncol = n + 2 * m;
  std::vector<std::vector<mpq_class>> t(static_cast<std::size_t>(m),
                                        std::vector<mpq_class>(static_cast<std::size_t>(ncol + 1)));
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::vector<mpq_class> cost(static_cast<std::size_t>(ncol), 0);
  for (int i = 0; i < m; ++i) {
    auto& row = t[static_cast<std::size_t>(i)];
    if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("constraint width mismatch");
    bool neg = b[static_cast<std::size_t>(i)] < 0;
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = neg ? -a[i][j] : a[i][j];
    row[static_cast<std::size_t>(n + i)] = neg ? 1 : -1;
    row[static_cast<std::size_t>(ncol)] = neg ? mpq_class(-b[i]) : b[i];
    if (neg) {
      basis[static_cast<std::size_t>(i)] = n + i;
    } else {
      row[static_cast<std::size_t>(n + m + i)] = 1;
      basis[static_cast<std::size_t>(i)] = n + m + i;
      cost[static_cast<std::size_t>(n + m + i)] = 1;
    }
  }
  auto reduced_cost = [&](int j) {
    mpq_class d = cost[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) d -= cost[static_cast<std::size_t>(basis[i])] * t[i][j];
    return d;
  };
  // Bland's rule: least entering index with negative reduced cost, least leaving basis index on ties.
  for (;;) {
    int enter = -1;
    for (int j = 0; j < ncol; ++j)
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][ncol] / t[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for a phase-one objective bounded below
    auto& prow = t[static_cast<std::size_t>(leave)];
    mpq_class piv = prow[static_cast<std::size_t>(enter)];
    for (auto& v : prow) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (int j = 0; j <= ncol; ++j) t[i][j] -= f * prow[static_cast<std::size_t>(j)];
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  mpq_class objective = 0;
  for (int i = 0; i < m; ++i) objective += cost[static_cast<std::size_t>(basis[i])] * t[i][ncol];
  if (objective != 0) return std::nullopt;
  std::vector<mpq_class> x(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[static_cast<std::size_t>(basis[i])] = t[i][ncol];
  return x;
}

std::vector<long> primitive_integer(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class e = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    z.push_back(e);
  }
  std::vector<long> out;
  for (auto& e : z) {
    if (g != 0) e /= g;
    if (!e.fits_slong_p()) throw std::overflow_error("witness coefficient exceeds long range");
    out.push_back(e.get_si());
  }
  return out;
}

}  // namespace sphsys::linalg
