#include <doctest.h>

#include <random>

#include "sphsys/linalg.hpp"
#include "sphsys/quotient.hpp"

using namespace sphsys;

TEST_CASE("rank") {
  CHECK(linalg::rank({}) == 0);
  CHECK(linalg::rank({{1, 0}, {0, 1}}) == 2);
  CHECK(linalg::rank({{1, 2}, {2, 4}}) == 1);
  CHECK(linalg::rank({{0, 0, 0}}) == 0);
}

TEST_CASE("hermite normal form is canonical") {
  IntMatrix a = {{2, 4}, {1, 3}};
  IntMatrix b = {{1, 3}, {3, 7}};  // same lattice
  CHECK(linalg::hermite_normal_form(a, 2) == linalg::hermite_normal_form(b, 2));
  CHECK(linalg::hermite_normal_form({{0, 0}}, 2).empty());
}

TEST_CASE("integer kernel") {
  CHECK(linalg::integer_kernel({{1, -1}}, 2) == IntMatrix{{1, 1}});
  CHECK(linalg::integer_kernel({{1, 0}, {-1, 1}}, 2).empty());
  CHECK(linalg::integer_kernel({}, 2) == IntMatrix{{1, 0}, {0, 1}});
  // saturated: 2x = 0 has kernel generated by the unit vector of the free coordinate only
  CHECK(linalg::integer_kernel({{2, 0}}, 2) == IntMatrix{{0, 1}});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m(2, std::vector<int>(4));
    for (auto& r : m)
      for (int& x : r) x = e(rng);
    IntMatrix k = linalg::integer_kernel(m, 4);
    CHECK(static_cast<int>(k.size()) == 4 - linalg::rank(m));
    for (const auto& v : k)
      for (const auto& r : m) {
        int s = 0;
        for (int j = 0; j < 4; ++j) s += r[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("feasibility") {
  using Q = mpq_class;
  // x >= 1, y >= 1, x - y >= 0
  auto p = linalg::feasible_point({{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(-1)}}, {Q(1), Q(1), Q(0)}, 2);
  REQUIRE(p);
  CHECK((*p)[0] >= (*p)[1]);
  CHECK((*p)[1] >= 1);
  // x >= 1 and -x >= 0
  CHECK_FALSE(linalg::feasible_point({{Q(1)}, {Q(-1)}}, {Q(1), Q(0)}, 1));
  CHECK(linalg::primitive_integer({Q(1, 2), Q(1, 3)}) == std::vector<long>{3, 2});
}

TEST_CASE("hilbert basis examples") {
  CHECK(hilbert_basis({{1, -1}}, 2, HilbertMode::kernel) == IntMatrix{{1, 1}});
  CHECK(hilbert_basis({{1, 0}}, 2, HilbertMode::kernel) == IntMatrix{{0, 1}});
  CHECK(hilbert_basis({{1, 0}, {-1, 1}}, 2, HilbertMode::halfspace) == IntMatrix{{0, 1}, {1, 1}});
  CHECK(hilbert_basis({}, 2, HilbertMode::kernel) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(hilbert_basis({{1, 1}}, 2, HilbertMode::kernel).empty());
  CHECK(hilbert_basis({{2, -3}}, 2, HilbertMode::kernel) == IntMatrix{{3, 2}});
  CHECK(hilbert_basis({{1, -2}}, 2, HilbertMode::halfspace) == IntMatrix{{1, 0}, {2, 1}});
}

TEST_CASE("hilbert basis output is minimal") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m(1 + t % 2, std::vector<int>(3));
    for (auto& r : m)
      for (int& x : r) x = e(rng);
    for (HilbertMode mode : {HilbertMode::kernel, HilbertMode::halfspace}) {
      IntMatrix hb = hilbert_basis(m, 3, mode);
      // no element is a sum of a nonzero smaller element and a monoid element
      for (std::size_t i = 0; i < hb.size(); ++i)
        for (std::size_t j = 0; j < hb.size(); ++j) {
          if (i == j) continue;
          std::vector<int> d(3);
          bool nonneg = true;
          for (int k = 0; k < 3; ++k) {
            d[static_cast<std::size_t>(k)] = hb[i][static_cast<std::size_t>(k)] - hb[j][static_cast<std::size_t>(k)];
            nonneg = nonneg && d[static_cast<std::size_t>(k)] >= 0;
          }
          if (!nonneg) continue;
          bool member = true;
          for (const auto& r : m) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s += r[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
            member = member && (mode == HilbertMode::kernel ? s == 0 : s >= 0);
          }
          CHECK_FALSE(member);
        }
    }
  }
}
