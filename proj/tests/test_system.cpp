#include <doctest.h>

#include "fixtures.hpp"
#include "sphsys/enumerate.hpp"
#include "sphsys/system.hpp"
#include "sphsys/textio.hpp"

using namespace sphsys;

namespace {
std::vector<std::vector<int>> rows(const ColorTable& t) { return t.matrix(); }
}  // namespace

TEST_CASE("colors of fix_b4") {
  ColorTable t = build_colors(fixtures::fix_b4());
  REQUIRE(t.size() == 3);
  CHECK(t.colors[0].name == "D1");
  CHECK(t.colors[1].name == "D2");
  CHECK(t.colors[2].name == "D3");
  for (const Color& c : t.colors) CHECK(c.kind == ColorKind::b);
  CHECK(rows(t) == std::vector<std::vector<int>>{{1, 0}, {1, -1}, {-1, 1}});
  CHECK(t.moved_by(1) == t.parse_set("D2"));
  CHECK(t.moved_by(3).empty());
  CHECK(t.format_set(t.parse_set("D3, D1")) == "{D1,D3}");
  CHECK_THROWS_AS(t.parse_set("D7"), std::invalid_argument);
}

TEST_CASE("a' and b colors") {
  ColorTable t = build_colors(parse_system("system\n roots A1\n sigma 2a1\nend\n"));
  REQUIRE(t.size() == 1);
  CHECK(t.colors[0].kind == ColorKind::a_prime);
  CHECK(t.colors[0].row == std::vector<int>{2});
  CHECK(build_colors(fixtures::rank0("B4", "a1,a2,a3,a4")).size() == 0);
  // a1 ~ a3 in A3 when a1+a3 is a spherical root
  ColorTable m = build_colors(parse_system("system\n roots A3\n sigma a1+a3\nend\n"));
  REQUIRE(m.size() == 2);
  CHECK(m.colors[0].moved_by == RootSet::of({0, 2}));
  CHECK(m.colors[1].moved_by == RootSet::of({1}));
}

TEST_CASE("half-integral a' functional is rejected") {
  // 2a1 with a1+a2 in A2: 1/2 <a1^vee, a1+a2> = 1/2
  SphericalSystem bad = parse_system("system\n roots A2\n sigma 2a1, a2\n apair p a2 -1 1\n apair m a2 -1 1\nend\n");
  CHECK_THROWS_AS(build_colors(bad), std::domain_error);
  bool sigma1 = false;
  for (const Violation& v : validate(bad)) sigma1 = sigma1 || v.axiom == "Sigma1";
  CHECK(sigma1);
}

TEST_CASE("validation") {
  CHECK(is_valid(fixtures::fix_b4()));
  CHECK(is_valid(fixtures::a1_rank1()));
  SphericalSystem wrong_sp = parse_system("system\n roots B4\n sp a3,a4\n sigma a1+a2, a3+a4\nend\n");
  std::vector<Violation> v = validate(wrong_sp);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == "compatibility");
  CHECK(v.size() == 2);
  CHECK(v.back().detail.find("a3+a4") != std::string::npos);

  SphericalSystem dependent = parse_system("system\n roots A2\n sigma a1, 2a1\n apair p a1 1 2\n apair m a1 1 2\nend\n");
  bool independence = false;
  for (const Violation& x : validate(dependent)) independence = independence || x.axiom == "independence";
  CHECK(independence);

  SphericalSystem a2_sum = parse_system("system\n roots A1\n sigma a1\n apair p a1 1\n apair m a1 0\nend\n");
  CHECK(validate(a2_sum).front().axiom == "A1");

  SphericalSystem lonely = parse_system("system\n roots A1\n sigma a1\n apair p a1 1\nend\n");
  CHECK(validate(lonely).front().axiom == "A2");
}

TEST_CASE("system construction checks shape") {
  RootSystem a1 = RootSystem::parse("A1");
  LatticeVector g = LatticeVector::simple(1, 0);
  CHECK_THROWS_AS(SphericalSystem(a1, RootSet(), {g}, {{"x", RootSet::of({0}), {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalSystem(a1, RootSet(), {g}, {{"D1", RootSet::of({0}), {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(SphericalSystem(a1, RootSet(), {g}, {{"x", RootSet::of({0}), {1}}, {"x", RootSet::of({0}), {1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SphericalSystem(a1, RootSet::of({1}), {}), std::invalid_argument);
}

TEST_CASE("canonical order of sigma permutes rows") {
  SphericalSystem s = parse_system("system\n roots A2\n sigma a2, a1\n apair p a1,a2 1 1\n apair m a1 -2 1\n apair q a2 1 -2\nend\n");
  CHECK(format_vector(s.sigma()[0]) == "a1");
  for (const AColor& c : s.apart())
    if (c.name == "m") CHECK(c.row == std::vector<int>{1, -2});
}

TEST_CASE("localization in simple roots") {
  SphericalSystem b4 = fixtures::fix_b4();
  SphericalSystem a2 = localize_simple(b4, RootSet::of({0, 1}));
  CHECK(a2 == parse_system("system\n roots A2\n sp -\n sigma a1+a2\nend\n"));
  CHECK(localize_simple(b4, b4.root_system().all()) == b4);
  SphericalSystem tip = localize_simple(b4, RootSet::of({3}));
  CHECK(tip.root_system().rank() == 1);
  CHECK(tip.sp() == RootSet::of({0}));
  CHECK(tip.rank() == 0);
}

TEST_CASE("localization in spherical roots") {
  SphericalSystem b4 = fixtures::fix_b4();
  CHECK(localize_sigma(b4, {true, false}) == parse_system("system\n roots B4\n sp a4\n sigma a1+a2\nend\n"));
  CHECK(localize_sigma(b4, {true, true}) == b4);
  SphericalSystem none = localize_sigma(b4, {false, false});
  CHECK(none.rank() == 0);
  CHECK(none.sp() == RootSet::of({3}));
  CHECK_THROWS_AS(localize_sigma(b4, {true}), std::invalid_argument);
}

TEST_CASE("structural invariants over enumerated systems") {
  for (const char* name : {"A2", "B2", "C2", "G2", "A3"}) {
    EnumerationQuery q;
    q.rs = RootSystem::parse(name);
    for (const SphericalSystem& sys : enumerate_all(q)) {
      ColorTable t = build_colors(sys);
      const RootSystem& rs = sys.root_system();
      for (int a = 0; a < rs.rank(); ++a) {
        CHECK(t.moved_by(a).size() <= 2);
        CHECK(t.moved_by(a).empty() == sys.sp().contains(a));
      }
      for (int a : sys.sp().members())
        for (const LatticeVector& g : sys.sigma()) CHECK(pairing(rs, a, g) == 0);
      // pairwise localizations stay valid
      for (int i = 0; i < sys.rank(); ++i)
        for (int j = i + 1; j < sys.rank(); ++j) {
          std::vector<bool> keep(static_cast<std::size_t>(sys.rank()), false);
          keep[static_cast<std::size_t>(i)] = keep[static_cast<std::size_t>(j)] = true;
          CHECK(is_valid(localize_sigma(sys, keep)));
        }
      // A and a' rows restrict along localize_sigma
      for (int i = 0; i < sys.rank(); ++i) {
        std::vector<bool> keep(static_cast<std::size_t>(sys.rank()), true);
        keep[static_cast<std::size_t>(i)] = false;
        ColorTable lt = build_colors(localize_sigma(sys, keep));
        for (const Color& c : lt.colors) {
          if (c.kind == ColorKind::b) continue;
          int k = t.index_of(c.name);
          REQUIRE(k >= 0);
          std::vector<int> row;
          for (int j = 0; j < sys.rank(); ++j)
            if (j != i) row.push_back(t.colors[static_cast<std::size_t>(k)].row[static_cast<std::size_t>(j)]);
          CHECK(row == c.row);
        }
      }
    }
  }
}
