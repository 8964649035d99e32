#include "sphsys/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sphsys/system.hpp"

namespace sphsys {

namespace {

RootSet range_set(int from, int to_inclusive) {
  RootSet s;
  for (int i = from; i <= to_inclusive; ++i) s.insert(i);
  return s;
}

CatalogEntry make_entry(RootFamily family, RootSystem shape, std::vector<int> coeffs,
                        RootSet required, RootSet optional, std::string tag, bool verify = false) {
  return {family,   std::move(shape), std::move(coeffs), required, optional,
          std::move(tag), verify};
}

// Required and optional friends must pair to zero with gamma on the shape itself.
void check_entry(const CatalogEntry& e) {
  LatticeVector gamma(e.coeff_pattern);
  if (!(e.required_friends & e.optional_friends).empty())
    throw std::logic_error("catalog entry " + e.tag + ": required and optional friends overlap");
  for (int i : (e.required_friends | e.optional_friends).members())
    if (pairing(e.shape, i, gamma) != 0)
      throw std::logic_error("catalog entry " + e.tag + ": friend " + RootSystem::root_name(i) +
                             " does not pair to zero");
  for (int c : e.coeff_pattern)
    if (c <= 0) throw std::logic_error("catalog entry " + e.tag + ": non-positive coefficient");
}

}  // namespace

std::vector<CatalogEntry> catalog_entries(int max_rank) {
  using T = DynkinType;
  std::vector<CatalogEntry> out;
  auto rs = [](T t, int n) { return RootSystem({{t, n}}); };

  if (max_rank >= 1) {
    out.push_back(make_entry(RootFamily::a, rs(T::A, 1), {1}, {}, {}, "a"));
    out.push_back(make_entry(RootFamily::two_a, rs(T::A, 1), {2}, {}, {}, "2a"));
  }
  if (max_rank >= 2)
    out.push_back(make_entry(RootFamily::a_times_a, RootSystem({{T::A, 1}, {T::A, 1}}), {1, 1},
                             {}, {}, "a+a'"));
  for (int n = 2; n <= max_rank; ++n)
    out.push_back(make_entry(RootFamily::a_n, rs(T::A, n), std::vector<int>(n, 1),
                             range_set(1, n - 2), {}, "a(" + std::to_string(n) + ")"));
  for (int n = 2; n <= max_rank; ++n) {
    out.push_back(make_entry(RootFamily::b, rs(T::B, n), std::vector<int>(n, 1),
                             range_set(1, n - 1), {}, "b(" + std::to_string(n) + ")"));
    out.push_back(make_entry(RootFamily::b_prime, rs(T::B, n), std::vector<int>(n, 2),
                             range_set(1, n - 1), {}, "b'(" + std::to_string(n) + ")"));
  }
  for (int n = 2; n <= max_rank; ++n) {
    // a1 + 2a2 + ... + 2a_{n-1} + a_n
    std::vector<int> coeffs(n, 2);
    coeffs.front() = 1;
    coeffs.back() = 1;
    out.push_back(make_entry(RootFamily::c_star, rs(T::C, n), coeffs, range_set(2, n - 1),
                             RootSet::of({0}), "c*(" + std::to_string(n) + ")"));
  }
  for (int n = 4; n <= max_rank; ++n) {
    // 2a1 + ... + 2a_{n-2} + a_{n-1} + a_n
    std::vector<int> coeffs(n, 2);
    coeffs[n - 2] = 1;
    coeffs[n - 1] = 1;
    out.push_back(make_entry(RootFamily::d, rs(T::D, n), coeffs, range_set(1, n - 1), {},
                             "d(" + std::to_string(n) + ")"));
  }
  if (max_rank >= 3) {
    out.push_back(make_entry(RootFamily::a3, rs(T::A, 3), {1, 2, 1}, RootSet::of({0, 2}), {}, "a3",
                             true));
    out.push_back(make_entry(RootFamily::b3, rs(T::B, 3), {1, 2, 3}, RootSet::of({0, 1}), {}, "b3",
                             true));
  }
  if (max_rank >= 4)
    out.push_back(make_entry(RootFamily::f4, rs(T::F, 4), {1, 2, 3, 2}, RootSet::of({0, 1, 2}), {},
                             "f4", true));
  if (max_rank >= 2) {
    out.push_back(make_entry(RootFamily::g2, rs(T::G, 2), {4, 2}, RootSet::of({1}), {}, "g2-short",
                             true));
    out.push_back(make_entry(RootFamily::g2, rs(T::G, 2), {1, 1}, {}, {}, "g2-mid", true));
    out.push_back(make_entry(RootFamily::g2, rs(T::G, 2), {2, 2}, {}, {}, "g2-double", true));
  }
  for (const CatalogEntry& e : out) check_entry(e);
  return out;
}

namespace {

// All injective maps from the shape's nodes into rs preserving every Cartan entry.
std::vector<std::vector<int>> embeddings(const RootSystem& shape, const RootSystem& rs) {
  const int k = shape.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  RootSet used;
  auto rec = [&](auto&& self, int a) -> void {
    if (a == k) {
      out.push_back(image);
      return;
    }
    int anchor = -1;
    for (int b = 0; b < a && anchor < 0; ++b)
      if (shape.adjacent(a, b)) anchor = image[static_cast<std::size_t>(b)];
    for (int node = 0; node < rs.rank(); ++node) {
      if (used.contains(node)) continue;
      if (anchor >= 0 && !rs.adjacent(anchor, node)) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        int other = image[static_cast<std::size_t>(b)];
        ok = rs.cartan(node, other) == shape.cartan(a, b) &&
             rs.cartan(other, node) == shape.cartan(b, a);
      }
      if (!ok) continue;
      used.insert(node);
      image[static_cast<std::size_t>(a)] = node;
      self(self, a + 1);
      used.erase(node);
    }
  };
  rec(rec, 0);
  return out;
}

void check_root(const RootSystem& rs, const LatticeVector& gamma) {
  if (gamma.size() != rs.rank())
    throw std::invalid_argument("spherical root length does not match rank");
  if (!gamma.is_nonnegative())
    throw std::invalid_argument("spherical root " + format_vector(gamma) + " has negative entries");
  if (gamma.is_zero()) throw std::invalid_argument("spherical root is zero");
}

bool instance_allows(const RootSystem& rs, const RootInstance& inst, RootSet sp) {
  RootSet inside = sp & inst.gamma.support();
  if (!inst.required.subset_of(inside)) return false;
  if (!inside.subset_of(inst.required | inst.optional)) return false;
  for (int a : sp.members())
    if (pairing(rs, a, inst.gamma) != 0) return false;
  return true;
}

}  // namespace

std::vector<RootInstance> instantiate(const RootSystem& rs) {
  std::vector<RootInstance> out;
  for (const CatalogEntry& e : catalog_entries(rs.rank())) {
    for (const std::vector<int>& image : embeddings(e.shape, rs)) {
      RootInstance inst;
      inst.gamma = LatticeVector(rs.rank());
      for (std::size_t k = 0; k < image.size(); ++k) {
        inst.gamma[image[k]] = e.coeff_pattern[k];
        if (e.required_friends.contains(static_cast<int>(k))) inst.required.insert(image[k]);
        if (e.optional_friends.contains(static_cast<int>(k))) inst.optional.insert(image[k]);
      }
      inst.nodes = image;
      inst.family = e.family;
      inst.tag = e.tag;
      inst.verify = e.verify;
      bool dup = std::any_of(out.begin(), out.end(), [&](const RootInstance& o) {
        return o.gamma == inst.gamma && o.required == inst.required && o.optional == inst.optional &&
               o.tag == inst.tag;
      });
      if (!dup) out.push_back(std::move(inst));
    }
  }
  return out;
}

bool is_compatible(const std::vector<RootInstance>& instances, const RootSystem& rs,
                   const LatticeVector& gamma, RootSet sp) {
  check_root(rs, gamma);
  return std::any_of(instances.begin(), instances.end(), [&](const RootInstance& inst) {
    return inst.gamma == gamma && instance_allows(rs, inst, sp);
  });
}

bool is_compatible(const RootSystem& rs, const LatticeVector& gamma, RootSet sp) {
  return is_compatible(instantiate(rs), rs, gamma, sp);
}

std::vector<LatticeVector> compatible_roots(const std::vector<RootInstance>& instances,
                                            const RootSystem& rs, RootSet sp) {
  std::vector<LatticeVector> out;
  for (const RootInstance& inst : instances)
    if (instance_allows(rs, inst, sp)) out.push_back(inst.gamma);
  std::sort(out.begin(), out.end(), term_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LatticeVector> compatible_roots(const RootSystem& rs, RootSet sp) {
  return compatible_roots(instantiate(rs), rs, sp);
}

std::string TailShape::to_string() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::b: return "b(" + std::to_string(m) + ")";
    case Kind::b_prime: return "b'(" + std::to_string(m) + ")";
    case Kind::d: return "d(" + std::to_string(m) + ")";
    case Kind::c_star: return "c*(" + std::to_string(m) + ")";
  }
  return "none";
}

namespace {

RootSet neighbours(const RootSystem& rs, int i) {
  RootSet s;
  for (int j = 0; j < rs.rank(); ++j)
    if (rs.adjacent(i, j)) s.insert(j);
  return s;
}

// alpha is the short simple root of a B-type component (C2 counts, being B2).
bool is_short_root_of_b(const RootSystem& rs, int alpha) {
  const Component& c = rs.components()[static_cast<std::size_t>(rs.component_of(alpha))];
  if (c.type == DynkinType::B) return alpha == c.offset + c.rank - 1;
  if (c.type == DynkinType::C && c.rank == 2) return alpha == c.offset;
  return false;
}

// The pattern "every support root in S^p except the listed ones".
bool sp_pattern(RootSet supp, RootSet sp, RootSet excluded) {
  return (sp & supp) == (supp - excluded);
}

}  // namespace

TailShape classify_tail_shape(const RootSystem& rs, const LatticeVector& gamma, RootSet sp) {
  using K = TailShape::Kind;
  if (gamma.size() != rs.rank() || gamma.is_zero() || !gamma.is_nonnegative()) return {};
  RootSet supp = gamma.support();

  if (supp.size() == 1) {
    int alpha = supp.min();
    if (sp.contains(alpha) || !is_short_root_of_b(rs, alpha)) return {};
    if (gamma[alpha] == 1) return {K::b, 1};
    if (gamma[alpha] == 2) return {K::b_prime, 1};
    return {};
  }

  for (const RootInstance& inst : instantiate(rs)) {
    if (inst.gamma != gamma) continue;
    const int m = static_cast<int>(inst.nodes.size());
    RootSet head = RootSet::of({inst.nodes[0]});
    switch (inst.family) {
      case RootFamily::b:
        if (sp_pattern(supp, sp, head)) return {K::b, m};
        break;
      case RootFamily::b_prime:
        if (sp_pattern(supp, sp, head)) return {K::b_prime, m};
        break;
      case RootFamily::d:
        if (sp_pattern(supp, sp, head)) return {K::d, m};
        break;
      case RootFamily::a3:
        // D3 = A3: the head of the D-pattern is the middle node
        if (sp_pattern(supp, sp, RootSet::of({inst.nodes[1]}))) return {K::d, 3};
        break;
      case RootFamily::c_star:
        if (sp_pattern(supp, sp, RootSet::of({inst.nodes[0], inst.nodes[1]}))) return {K::c_star, m};
        break;
      case RootFamily::a_times_a: {
        int a = inst.nodes[0], b = inst.nodes[1];
        RootSet na = neighbours(rs, a), nb = neighbours(rs, b);
        if (!sp.contains(a) && !sp.contains(b) && !na.empty() && na == nb) return {K::d, 2};
        break;
      }
      default:
        break;
    }
  }
  return {};
}

TailShape classify_tail_shape(const SphericalSystem& sys, int sigma_index) {
  const RootSystem& rs = sys.root_system();
  const LatticeVector& gamma = sys.sigma().at(static_cast<std::size_t>(sigma_index));
  TailShape shape = classify_tail_shape(rs, gamma, sys.sp());
  if (!(shape.kind == TailShape::Kind::b && shape.m == 1)) return shape;

  // b(1): the unique other spherical root g' not orthogonal to alpha must pair to -1
  // with both colors of A(alpha).
  int alpha = gamma.as_simple_root();
  int other = -1;
  for (int j = 0; j < sys.rank(); ++j) {
    if (j == sigma_index || orthogonal(rs, alpha, sys.sigma()[static_cast<std::size_t>(j)])) continue;
    if (other >= 0) return {};
    other = j;
  }
  if (other < 0) return {};
  int count = 0;
  for (const AColor& c : sys.apart()) {
    if (!c.moved_by.contains(alpha)) continue;
    ++count;
    if (c.row[static_cast<std::size_t>(other)] != -1) return {};
  }
  return count == 2 ? shape : TailShape{};
}

std::string dump_catalog(const RootSystem& rs) {
  std::vector<RootInstance> insts = instantiate(rs);
  std::stable_sort(insts.begin(), insts.end(), [](const RootInstance& a, const RootInstance& b) {
    return term_less(a.gamma, b.gamma);
  });
  std::ostringstream out;
  for (const RootInstance& inst : insts) {
    out << format_vector(inst.gamma) << "  " << inst.tag << "  required " << format_root_set(inst.required)
        << "  optional " << format_root_set(inst.optional);
    if (inst.verify) out << "  verify";
    out << '\n';
  }
  return out.str();
}

}  // namespace sphsys
