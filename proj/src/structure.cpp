#include "sphsys/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphsys {

namespace {

constexpr int kMaxDepth = 64;

RootSet nonsimple_support(const SphericalSystem& sys) {
  RootSet s;
  for (const LatticeVector& g : sys.sigma())
    if (g.as_simple_root() < 0) s = s | g.support();
  return s;
}

std::vector<std::string> names_of(const ColorTable& table) {
  std::vector<std::string> out;
  for (const Color& c : table.colors) out.push_back(c.name);
  return out;
}

// Spherical roots (sigma indices) that survive in the quotient, i.e. Sigma cap Sigma/D.
RootSet surviving(const QuotientReport& r) {
  RootSet s;
  for (const auto& v : r.quotient_coords) {
    int ones = 0, pos = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        ++ones;
        pos = static_cast<int>(i);
      }
    if (ones == 1 && v[static_cast<std::size_t>(pos)] == 1) s.insert(pos);
  }
  return s;
}

bool index_less(ColorSet a, ColorSet b) { return a.members() < b.members(); }

}  // namespace

std::vector<ProjectiveColor> projective_colors(const SphericalSystem& sys, const ColorTable& table) {
  RootSet ns = nonsimple_support(sys);
  std::vector<ProjectiveColor> out;
  for (int i = 0; i < table.size(); ++i) {
    const Color& c = table.colors[static_cast<std::size_t>(i)];
    if (c.kind != ColorKind::A) continue;
    if (std::any_of(c.row.begin(), c.row.end(), [](int v) { return v < 0; })) continue;
    out.push_back({i, c.name, c.moved_by, !(c.moved_by & ns).empty()});
  }
  return out;
}

DecompositionReport is_decomposition(const SphericalSystem& sys, const ColorTable& table, ColorSet d1,
                                     ColorSet d2) {
  DecompositionReport rep;
  rep.conditions[0] = !d1.empty() && !d2.empty() && (d1 & d2).empty();
  QuotientReport r1 = analyze(sys, table, d1);
  QuotientReport r2 = analyze(sys, table, d2);
  rep.conditions[1] = r1.star && r2.star && analyze(sys, table, d1 | d2).star;
  const RootSet all_sigma = RootSet::first(sys.rank());
  RootSet lost1 = all_sigma - surviving(r1);
  RootSet lost2 = all_sigma - surviving(r2);
  rep.conditions[2] = (lost1 & lost2).empty();
  const RootSystem& rs = sys.root_system();
  RootSet new1 = quotient_sp(sys, table, d1) - sys.sp();
  RootSet new2 = quotient_sp(sys, table, d2) - sys.sp();
  bool orth = true;
  for (int a : new1.members())
    for (int b : new2.members())
      if (a == b || rs.inner2(a, b) != 0) orth = false;
  rep.conditions[3] = orth;
  rep.conditions[4] = (r1.star && r1.smooth) || (r2.star && r2.smooth);
  return rep;
}

std::optional<std::pair<ColorSet, ColorSet>> find_decomposition(const SphericalSystem& sys,
                                                                const ColorTable& table) {
  std::vector<ColorSet> star;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << table.size()); ++b)
    if (analyze(sys, table, ColorSet(b)).star) star.emplace_back(b);
  std::sort(star.begin(), star.end(), index_less);
  for (std::size_t i = 0; i < star.size(); ++i)
    for (std::size_t j = i + 1; j < star.size(); ++j) {
      if (!(star[i] & star[j]).empty()) continue;
      ColorSet a = star[i], b = star[j];
      if (index_less(b, a)) std::swap(a, b);
      if (is_decomposition(sys, table, a, b).decomposes()) return std::make_pair(a, b);
    }
  return std::nullopt;
}

bool is_cuspidal(const SphericalSystem& sys) { return sys.support() == sys.root_system().all(); }

std::vector<Tail> detect_tails(const SphericalSystem& sys, const ColorTable& table) {
  const RootSystem& rs = sys.root_system();
  std::vector<Tail> out;
  std::vector<ColorSet> subsets;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << table.size()); ++b) subsets.emplace_back(b);
  std::stable_sort(subsets.begin(), subsets.end(), [](ColorSet x, ColorSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x.members() < y.members();
  });
  for (int i = 0; i < sys.rank(); ++i) {
    TailShape shape = classify_tail_shape(sys, i);
    if (!shape.is_tail()) continue;
    const LatticeVector& gamma = sys.sigma()[static_cast<std::size_t>(i)];
    RootSet perp;
    for (int a = 0; a < rs.rank(); ++a)
      if (orthogonal(rs, a, gamma)) perp.insert(a);
    for (ColorSet s : subsets) {
      QuotientReport r = analyze(sys, table, s);
      if (!r.quotient) continue;
      const SphericalSystem& q = *r.quotient;
      if (q.rank() == 1 && q.sigma()[0] == gamma && q.sp() == perp) {
        out.push_back({i, gamma, shape, s});
        break;
      }
    }
  }
  return out;
}

PrimitivityReport is_primitive(const SphericalSystem& sys) {
  ColorTable table = build_colors(sys);
  PrimitivityReport rep;
  rep.cuspidal = is_cuspidal(sys);
  rep.no_projective = projective_colors(sys, table).empty();
  rep.indecomposable = !find_decomposition(sys, table).has_value();
  for (const Tail& t : detect_tails(sys, table))
    rep.markers.push_back({Marker::Kind::tail, t.gamma, t.shape, t.colors, 0});
  for (const HigherDefect& h : higher_defect_quotients(sys))
    rep.markers.push_back({Marker::Kind::higher_defect, LatticeVector(), TailShape{}, h.colors, h.jump});
  return rep;
}

std::string to_string(ReductionNode::Kind k) {
  switch (k) {
    case ReductionNode::Kind::parabolic_induction: return "ParabolicInduction";
    case ReductionNode::Kind::fiber_product: return "FiberProduct";
    case ReductionNode::Kind::projective_fibration: return "ProjectiveFibration";
    case ReductionNode::Kind::primitive: return "Primitive";
    case ReductionNode::Kind::closed: return "Closed";
  }
  return "?";
}

ReductionNode reduction_step(const SphericalSystem& sys) {
  ColorTable table = build_colors(sys);
  ReductionNode node;
  node.system = sys;
  node.color_names = names_of(table);
  const RootSystem& rs = sys.root_system();

  RootSet s_prime = sys.support() | sys.sp();
  if (s_prime != rs.all()) {
    node.kind = ReductionNode::Kind::parabolic_induction;
    node.s_prime = s_prime;
    node.children.push_back({});
    node.children.back().system = localize_simple(sys, s_prime);
    return node;
  }
  if (auto pair = find_decomposition(sys, table)) {
    node.kind = ReductionNode::Kind::fiber_product;
    node.d1 = pair->first;
    node.d2 = pair->second;
    for (ColorSet s : {node.d1, node.d2, node.d1 | node.d2}) {
      node.children.push_back({});
      node.children.back().system = quotient(sys, table, s);
    }
    return node;
  }
  // a projective color whose singleton is not (*)-distinguished has no quotient to recurse into
  for (const ProjectiveColor& p : projective_colors(sys, table)) {
    ColorSet single;
    single.insert(p.index);
    QuotientReport r = analyze(sys, table, single);
    if (!r.quotient) continue;
    node.kind = ReductionNode::Kind::projective_fibration;
    node.delta = p.index;
    node.children.push_back({});
    node.children.back().system = *r.quotient;
    return node;
  }
  PrimitivityReport rep = is_primitive(sys);
  node.kind = rep.primitive() ? ReductionNode::Kind::primitive : ReductionNode::Kind::closed;
  if (rep.primitive()) node.markers = rep.markers;
  return node;
}

namespace {

ReductionNode build(const SphericalSystem& sys, int depth) {
  if (depth > kMaxDepth) throw std::logic_error("reduction tree exceeds the depth guard");
  ReductionNode node = reduction_step(sys);
  for (ReductionNode& child : node.children) {
    if (child.system.rank() <= 2) {
      child.kind = ReductionNode::Kind::closed;
      child.color_names = names_of(build_colors(child.system));
    } else {
      child = build(child.system, depth + 1);
    }
  }
  return node;
}

}  // namespace

ReductionNode reduction_tree(const SphericalSystem& sys) { return build(sys, 0); }

}  // namespace sphsys
