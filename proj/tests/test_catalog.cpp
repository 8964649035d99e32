#include <doctest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "sphsys/catalog.hpp"
#include "sphsys/textio.hpp"

using namespace sphsys;

namespace {
LatticeVector v(const char* text, int n) { return parse_combination(text, n); }
}  // namespace

TEST_CASE("compatibility examples") {
  RootSystem b4 = RootSystem::parse("B4");
  CHECK(is_compatible(b4, v("a3+a4", 4), RootSet::of({3})));
  CHECK_FALSE(is_compatible(b4, v("a3+a4", 4), RootSet::of({2, 3})));
  CHECK(is_compatible(RootSystem::parse("A2"), v("a1+a2", 2), RootSet()));
  // sp roots outside the support must be orthogonal to gamma
  CHECK_FALSE(is_compatible(b4, v("a3+a4", 4), RootSet::of({1, 3})));
  CHECK(is_compatible(b4, v("a3+a4", 4), RootSet::of({0, 3})));
  CHECK_THROWS_AS(is_compatible(b4, LatticeVector(4), RootSet()), std::invalid_argument);
  LatticeVector neg(4);
  neg[0] = -1;
  CHECK_THROWS_AS(is_compatible(b4, neg, RootSet()), std::invalid_argument);
}

TEST_CASE("compatible roots") {
  RootSystem a1 = RootSystem::parse("A1");
  std::vector<LatticeVector> r = compatible_roots(a1, RootSet());
  REQUIRE(r.size() == 2);
  CHECK(r[0] == v("a1", 1));
  CHECK(r[1] == v("2a1", 1));
  CHECK(compatible_roots(a1, RootSet::of({0})).empty());

  RootSystem b2 = RootSystem::parse("B2");
  std::vector<LatticeVector> b = compatible_roots(b2, RootSet());
  CHECK(std::count(b.begin(), b.end(), v("a1+a2", 2)) == 1);
  CHECK(std::count(b.begin(), b.end(), v("2a1+2a2", 2)) == 0);
  std::vector<LatticeVector> b_sp = compatible_roots(b2, RootSet::of({1}));
  CHECK(std::count(b_sp.begin(), b_sp.end(), v("2a1+2a2", 2)) == 1);
}

TEST_CASE("compatible roots are compatible") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "A1 A2"}) {
    RootSystem rs = RootSystem::parse(name);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rs.rank()); ++m) {
      std::vector<LatticeVector> roots = compatible_roots(rs, RootSet(m));
      CHECK(std::is_sorted(roots.begin(), roots.end(), term_less));
      for (const LatticeVector& g : roots) CHECK(is_compatible(rs, g, RootSet(m)));
    }
  }
}

TEST_CASE("catalog entries satisfy their own friend rule") {
  std::vector<CatalogEntry> entries = catalog_entries(6);
  CHECK_FALSE(entries.empty());
  for (const CatalogEntry& e : entries) {
    CHECK((e.required_friends & e.optional_friends).empty());
    for (int c : e.coeff_pattern) CHECK(c > 0);
    LatticeVector g(e.coeff_pattern);
    for (int a : e.required_friends.members()) CHECK(pairing(e.shape, a, g) == 0);
  }
}

TEST_CASE("tail shapes") {
  RootSystem b4 = RootSystem::parse("B4");
  CHECK(classify_tail_shape(b4, v("a3+a4", 4), RootSet::of({3})).to_string() == "b(2)");
  CHECK(classify_tail_shape(b4, v("a2+a3+a4", 4), RootSet::of({2, 3})).to_string() == "b(3)");
  CHECK(classify_tail_shape(b4, v("2a3+2a4", 4), RootSet::of({3})).to_string() == "b'(2)");
  RootSystem c3 = RootSystem::parse("C3");
  CHECK(classify_tail_shape(c3, v("a1+2a2+a3", 3), RootSet::of({2})).to_string() == "c*(3)");
  CHECK_FALSE(classify_tail_shape(c3, v("a1+2a2+a3", 3), RootSet::of({0})).is_tail());
  CHECK_FALSE(classify_tail_shape(RootSystem::parse("A2"), v("a1+a2", 2), RootSet()).is_tail());
  RootSystem d4 = RootSystem::parse("D4");
  CHECK(classify_tail_shape(d4, v("2a1+2a2+a3+a4", 4), RootSet::of({1, 2, 3})).to_string() == "d(4)");
}

TEST_CASE("each tail pattern is matched by one entry per shape and m") {
  for (const char* name : {"B5", "C5", "D5"}) {
    RootSystem rs = RootSystem::parse(name);
    std::map<std::string, int> seen;
    for (const RootInstance& inst : instantiate(rs))
      if (inst.family == RootFamily::b || inst.family == RootFamily::b_prime || inst.family == RootFamily::d ||
          inst.family == RootFamily::c_star)
        ++seen[inst.tag + format_vector(inst.gamma)];
    for (const auto& [key, count] : seen) CHECK_MESSAGE(count == 1, key);
  }
}

TEST_CASE("b(1) needs the A-color condition") {
  // B2 with a2 in Sigma: c(D+, a1+..) = c(D-, ..) = -1 decides b(1)
  SphericalSystem sys = parse_system(
      "system\n roots B2\n sp -\n sigma a1, a2\n apair p a1 1 0\n apair m a1 1 -1\n apair q a2 -1 1\n apair r a2 -1 1\nend\n");
  TailShape t = classify_tail_shape(sys, 1);
  CHECK((t.is_tail() ? t.to_string() : std::string("none")) == "b(1)");
  CHECK(is_valid(sys));
  SphericalSystem other = parse_system(
      "system\n roots B2\n sp -\n sigma a1, a2\n apair p a1 1 0\n apair m a1 1 -1\n apair q a2 0 1\n apair r a2 -2 1\nend\n");
  CHECK_FALSE(classify_tail_shape(other, 1).is_tail());
}
