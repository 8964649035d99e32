#include <doctest.h>

#include "fixtures.hpp"
#include "sphsys/enumerate.hpp"
#include "sphsys/structure.hpp"
#include "sphsys/textio.hpp"

using namespace sphsys;

namespace {

// two orthogonal A1 components, each with its own pair of colors
SphericalSystem product_system() {
  return parse_system("system\n roots A1 A1\n sp -\n sigma a1, a2\n apair p a1 1 0\n apair m a1 1 0\n"
                      " apair q a2 0 1\n apair r a2 0 1\nend\n");
}

}  // namespace

TEST_CASE("projective colors") {
  SphericalSystem b4 = fixtures::fix_b4();
  CHECK(projective_colors(b4, build_colors(b4)).empty());
  SphericalSystem a1 = fixtures::a1_rank1();
  std::vector<ProjectiveColor> p = projective_colors(a1, build_colors(a1));
  REQUIRE(p.size() == 2);
  CHECK(p[0].name == "d+");
  CHECK(p[1].name == "d-");
  CHECK(p[0].support == RootSet::of({0}));
  CHECK_FALSE(p[0].meets_nonsimple_support);
  SphericalSystem neg = parse_system("system\n roots A2\n sigma a1, a2\n apair p a1,a2 1 1\n apair m a1 1 -2\n apair q a2 -2 1\nend\n");
  std::vector<ProjectiveColor> pn = projective_colors(neg, build_colors(neg));
  REQUIRE(pn.size() == 1);
  CHECK(pn[0].name == "p");
}

TEST_CASE("decompositions") {
  SphericalSystem b4 = fixtures::fix_b4();
  ColorTable t = build_colors(b4);
  DecompositionReport r = is_decomposition(b4, t, t.parse_set("D1"), t.parse_set("D2,D3"));
  CHECK_FALSE(r.decomposes());
  CHECK(r.conditions[0]);
  CHECK_FALSE(r.conditions[2]);
  CHECK(is_decomposition(b4, t, ColorSet(), t.parse_set("D1")).first_failure() == 1);
  SphericalSystem prod = product_system();
  REQUIRE(is_valid(prod));
  ColorTable pt = build_colors(prod);
  DecompositionReport pr = is_decomposition(prod, pt, pt.parse_set("p,m"), pt.parse_set("q,r"));
  CHECK(pr.decomposes());
}

TEST_CASE("primitivity and cuspidality") {
  PrimitivityReport b4 = is_primitive(fixtures::fix_b4());
  CHECK(b4.primitive());
  REQUIRE(b4.markers.size() == 1);
  CHECK(b4.markers[0].kind == Marker::Kind::tail);
  CHECK(b4.markers[0].shape.to_string() == "b(2)");
  CHECK_FALSE(is_primitive(fixtures::fix_q1()).primitive());
  CHECK_FALSE(is_primitive(fixtures::fix_q1()).cuspidal);
  CHECK_FALSE(is_primitive(fixtures::rank0("B4", "a1,a2,a3,a4")).primitive());
  CHECK(is_cuspidal(fixtures::fix_b4()));
  CHECK_FALSE(is_cuspidal(fixtures::fix_q1()));
  CHECK_FALSE(is_cuspidal(fixtures::rank0("B4", "-")));
  CHECK(is_cuspidal(fixtures::rank0("0", "-")));
}

TEST_CASE("tails") {
  SphericalSystem b4 = fixtures::fix_b4();
  ColorTable t = build_colors(b4);
  std::vector<Tail> tails = detect_tails(b4, t);
  REQUIRE(tails.size() == 1);
  CHECK(format_vector(tails[0].gamma) == "a3+a4");
  CHECK(tails[0].shape.to_string() == "b(2)");
  CHECK(tails[0].colors == t.parse_set("D1"));
  SphericalSystem q1 = fixtures::fix_q1();
  CHECK(detect_tails(q1, build_colors(q1)).empty());
  SphericalSystem r0 = fixtures::rank0("B4", "a1,a2,a3,a4");
  CHECK(detect_tails(r0, build_colors(r0)).empty());
}

TEST_CASE("tail quotients have the orthogonal S^p") {
  for (const char* name : {"B3", "C3", "B2 A1"}) {
    EnumerationQuery q;
    q.rs = RootSystem::parse(name);
    for (const SphericalSystem& sys : enumerate_all(q)) {
      ColorTable t = build_colors(sys);
      for (const Tail& tl : detect_tails(sys, t)) {
        SphericalSystem quo = quotient(sys, t, tl.colors);
        REQUIRE(quo.rank() == 1);
        CHECK(quo.sigma()[0] == tl.gamma);
        for (int a = 0; a < sys.root_system().rank(); ++a)
          CHECK(quo.sp().contains(a) == orthogonal(sys.root_system(), a, tl.gamma));
      }
    }
  }
}

TEST_CASE("reduction steps") {
  ReductionNode q1 = reduction_step(fixtures::fix_q1());
  CHECK(q1.kind == ReductionNode::Kind::parabolic_induction);
  CHECK(q1.s_prime == RootSet::of({0, 2, 3}));
  REQUIRE(q1.children.size() == 1);
  CHECK(q1.children[0].system == localize_simple(fixtures::fix_q1(), RootSet::of({0, 2, 3})));

  ReductionNode b4 = reduction_step(fixtures::fix_b4());
  CHECK(b4.kind == ReductionNode::Kind::primitive);
  REQUIRE(b4.markers.size() == 1);

  SphericalSystem a1 = fixtures::a1_rank1();
  ReductionNode pf = reduction_step(a1);
  CHECK(pf.kind == ReductionNode::Kind::projective_fibration);
  CHECK(pf.color_names[static_cast<std::size_t>(pf.delta)] == "d+");
  ColorTable t = build_colors(a1);
  CHECK(pf.children[0].system == quotient(a1, t, t.parse_set("d+")));

  ReductionNode prod = reduction_step(product_system());
  CHECK(prod.kind == ReductionNode::Kind::fiber_product);
  CHECK(prod.children.size() == 3);
}

TEST_CASE("reduction trees") {
  ReductionNode q1 = reduction_tree(fixtures::fix_q1());
  CHECK(q1.kind == ReductionNode::Kind::parabolic_induction);
  REQUIRE(q1.children.size() == 1);
  CHECK(q1.children[0].kind == ReductionNode::Kind::closed);
  CHECK(q1.children[0].children.empty());
  ReductionNode b4 = reduction_tree(fixtures::fix_b4());
  CHECK(b4.kind == ReductionNode::Kind::primitive);
  CHECK(b4.children.empty());
  ReductionNode r0 = reduction_tree(fixtures::rank0("B4", "a1,a2,a3,a4"));
  CHECK(r0.kind == ReductionNode::Kind::closed);
  CHECK(r0.children.empty());
}

TEST_CASE("primitive leaves re-check") {
  for (const char* name : {"B3", "C3", "A3"}) {
    EnumerationQuery q;
    q.rs = RootSystem::parse(name);
    for (const SphericalSystem& sys : enumerate_all(q)) {
      std::vector<const ReductionNode*> stack;
      ReductionNode root = reduction_tree(sys);
      stack.push_back(&root);
      while (!stack.empty()) {
        const ReductionNode* n = stack.back();
        stack.pop_back();
        if (n->kind == ReductionNode::Kind::primitive) {
          ColorTable t = build_colors(n->system);
          CHECK(is_cuspidal(n->system));
          CHECK(projective_colors(n->system, t).empty());
          CHECK_FALSE(find_decomposition(n->system, t).has_value());
        }
        for (const ReductionNode& c : n->children) stack.push_back(&c);
      }
    }
  }
}

TEST_CASE("projective colors and the defect jump") {
  for (const char* name : {"B2", "C2"}) {
    EnumerationQuery q;
    q.rs = RootSystem::parse(name);
    for (const SphericalSystem& sys : enumerate_all(q)) {
      ColorTable t = build_colors(sys);
      for (const ProjectiveColor& p : projective_colors(sys, t)) {
        ColorSet one;
        one.insert(p.index);
        QuotientReport r = analyze(sys, t, one);
        CHECK(r.distinguished);
        if (!r.quotient) continue;
        int jump = defect(*r.quotient) - defect(sys);
        if (p.support.size() == 1) CHECK(jump == 0);
        else CHECK(jump > 0);
      }
    }
  }
}
