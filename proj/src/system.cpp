#include "sphsys/system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sphsys/catalog.hpp"
#include "sphsys/linalg.hpp"

namespace sphsys {

namespace {

bool reserved_color_name(const std::string& name) {
  return name.size() >= 2 && name[0] == 'D' &&
         std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' || c == '\'';
  });
}

}  // namespace

SphericalSystem::SphericalSystem(RootSystem rs, RootSet sp, std::vector<LatticeVector> sigma,
                                 std::vector<AColor> apart)
    : rs_(std::move(rs)), sp_(sp) {
  if (!sp_.subset_of(rs_.all())) throw std::invalid_argument("S^p contains roots outside the system");
  for (const LatticeVector& g : sigma)
    if (g.size() != rs_.rank())
      throw std::invalid_argument("spherical root " + format_vector(g) + " has wrong length");
  std::set<std::string> names;
  for (const AColor& c : apart) {
    if (!valid_name(c.name)) throw std::invalid_argument("bad color name '" + c.name + "'");
    if (reserved_color_name(c.name))
      throw std::invalid_argument("color name '" + c.name + "' is reserved for b and a' colors");
    if (!names.insert(c.name).second) throw std::invalid_argument("duplicate color name '" + c.name + "'");
    if (c.row.size() != sigma.size())
      throw std::invalid_argument("row of color '" + c.name + "' has wrong length");
    if (!c.moved_by.subset_of(rs_.all()))
      throw std::invalid_argument("color '" + c.name + "' moved by a root outside the system");
  }

  std::vector<std::size_t> order(sigma.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return term_less(sigma[a], sigma[b]); });
  for (std::size_t k : order) sigma_.push_back(std::move(sigma[k]));
  for (AColor& c : apart) {
    std::vector<int> row;
    for (std::size_t k : order) row.push_back(c.row[k]);
    c.row = std::move(row);
  }
  std::sort(apart.begin(), apart.end(), [](const AColor& a, const AColor& b) {
    int ka = a.moved_by.empty() ? 64 : a.moved_by.min();
    int kb = b.moved_by.empty() ? 64 : b.moved_by.min();
    return std::tie(ka, a.name) < std::tie(kb, b.name);
  });
  apart_ = std::move(apart);
}

RootSet SphericalSystem::simple_spherical() const {
  RootSet s;
  for (const LatticeVector& g : sigma_)
    if (int a = g.as_simple_root(); a >= 0) s.insert(a);
  return s;
}

RootSet SphericalSystem::support() const {
  RootSet s;
  for (const LatticeVector& g : sigma_) s = s | g.support();
  return s;
}

int SphericalSystem::sigma_index(const LatticeVector& gamma) const {
  for (std::size_t i = 0; i < sigma_.size(); ++i)
    if (sigma_[i] == gamma) return static_cast<int>(i);
  return -1;
}

std::string to_string(ColorKind k) {
  switch (k) {
    case ColorKind::A: return "A";
    case ColorKind::a_prime: return "a'";
    case ColorKind::b: return "b";
  }
  return "?";
}

std::vector<std::vector<int>> ColorTable::matrix() const {
  std::vector<std::vector<int>> m;
  for (const Color& c : colors) m.push_back(c.row);
  return m;
}

int ColorTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i].name == name) return static_cast<int>(i);
  return -1;
}

ColorSet ColorTable::moved_by(int alpha) const {
  ColorSet s;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i].moved_by.contains(alpha)) s.insert(static_cast<int>(i));
  return s;
}

ColorSet ColorTable::parse_set(const std::string& names) const {
  ColorSet s;
  std::string item;
  std::istringstream in(names);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               item.end());
    if (item.empty() || item == "-") continue;
    int idx = index_of(item);
    if (idx < 0) throw std::invalid_argument("unknown color '" + item + "'");
    s.insert(idx);
  }
  return s;
}

std::string ColorTable::format_set(ColorSet s) const {
  std::string out;
  for (int i : s.members()) {
    if (!out.empty()) out += ',';
    out += colors[static_cast<std::size_t>(i)].name;
  }
  return "{" + out + "}";
}

namespace {

std::vector<int> coroot_row(const SphericalSystem& sys, int alpha) {
  std::vector<int> row;
  for (const LatticeVector& g : sys.sigma()) row.push_back(pairing(sys.root_system(), alpha, g));
  return row;
}

// Simple roots alpha with 2*alpha in Sigma.
RootSet half_sigma(const SphericalSystem& sys) {
  RootSet s;
  for (const LatticeVector& g : sys.sigma()) {
    RootSet supp = g.support();
    if (supp.size() == 1 && g[supp.min()] == 2) s.insert(supp.min());
  }
  return s;
}

bool simple_orthogonal(const RootSystem& rs, int a, int b) { return a != b && rs.inner2(a, b) == 0; }

// Index of alpha + beta in sigma, or -1.
int sum_index(const SphericalSystem& sys, int a, int b) {
  LatticeVector v(sys.root_system().rank());
  v[a] += 1;
  v[b] += 1;
  return sys.sigma_index(v);
}

int kind_rank(ColorKind k) { return k == ColorKind::A ? 0 : k == ColorKind::a_prime ? 1 : 2; }

}  // namespace

ColorTable build_colors(const SphericalSystem& sys) {
  const RootSystem& rs = sys.root_system();
  ColorTable table;
  for (const AColor& a : sys.apart()) table.colors.push_back({a.name, ColorKind::A, a.moved_by, a.row});

  RootSet halves = half_sigma(sys);
  for (int alpha : halves.members()) {
    std::vector<int> row = coroot_row(sys, alpha);
    for (int& v : row) {
      if (v % 2 != 0)
        throw std::domain_error("a' color of " + RootSystem::root_name(alpha) + " has a half-integral functional");
      v /= 2;
    }
    table.colors.push_back({"D" + std::to_string(alpha + 1), ColorKind::a_prime, RootSet::of({alpha}), row});
  }

  RootSet candidates = rs.all() - sys.simple_spherical() - halves - sys.sp();
  std::vector<int> parent(static_cast<std::size_t>(rs.rank()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int a : candidates.members())
    for (int b : candidates.members())
      if (a < b && simple_orthogonal(rs, a, b) && sum_index(sys, a, b) >= 0) {
        int ra = find(a), rb = find(b);
        parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
  for (int a : candidates.members()) {
    if (find(a) != a) continue;
    RootSet cls;
    for (int b : candidates.members())
      if (find(b) == a) cls.insert(b);
    std::vector<int> row = coroot_row(sys, a);
    for (int b : cls.members())
      if (coroot_row(sys, b) != row)
        throw std::domain_error("inconsistent functionals in the class of " + RootSystem::root_name(a));
    table.colors.push_back({"D" + std::to_string(a + 1), ColorKind::b, cls, row});
  }

  std::stable_sort(table.colors.begin(), table.colors.end(), [](const Color& x, const Color& y) {
    int kx = x.moved_by.empty() ? 64 : x.moved_by.min();
    int ky = y.moved_by.empty() ? 64 : y.moved_by.min();
    return std::make_tuple(kx, kind_rank(x.kind), x.name) < std::make_tuple(ky, kind_rank(y.kind), y.name);
  });
  return table;
}

std::vector<Violation> validate(const SphericalSystem& sys) {
  const RootSystem& rs = sys.root_system();
  std::vector<Violation> out;
  auto add = [&](std::string axiom, std::string detail) { out.push_back({std::move(axiom), std::move(detail)}); };

  std::vector<RootInstance> instances = instantiate(rs);
  for (const LatticeVector& g : sys.sigma()) {
    bool ok = false;
    try {
      ok = is_compatible(instances, rs, g, sys.sp());
    } catch (const std::invalid_argument& e) {
      add("compatibility", format_vector(g) + ": " + e.what());
      continue;
    }
    if (!ok) add("compatibility", format_vector(g) + " is not compatible with S^p = {" + format_root_set(sys.sp()) + "}");
  }

  IntMatrix sigma_rows;
  for (const LatticeVector& g : sys.sigma()) sigma_rows.emplace_back(g.coeffs().begin(), g.coeffs().end());
  if (linalg::rank(sigma_rows) != sys.rank()) add("independence", "spherical roots are linearly dependent");

  RootSet simple = sys.simple_spherical();
  const auto& sigma = sys.sigma();
  std::vector<Violation> coverage;
  for (const AColor& c : sys.apart()) {
    if (c.moved_by.empty()) coverage.push_back({"A3", c.name + " is not moved by any simple root"});
    if (!c.moved_by.subset_of(simple))
      coverage.push_back(
          {"A3", c.name + " is moved by " + format_root_set(c.moved_by - simple) + ", not in S cap Sigma"});
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      int v = c.row[j];
      int alpha = sigma[j].as_simple_root();
      bool moved = alpha >= 0 && c.moved_by.contains(alpha);
      if (v > 1) add("A1", "c(" + c.name + ", " + format_vector(sigma[j]) + ") = " + std::to_string(v) + " > 1");
      if (v == 1 && !moved)
        add("A1", "c(" + c.name + ", " + format_vector(sigma[j]) + ") = 1 but " + c.name + " is not in A(" +
                      format_vector(sigma[j]) + ")");
      if (moved && v != 1)
        add("A1", "c(" + c.name + ", " + format_vector(sigma[j]) + ") = " + std::to_string(v) + ", expected 1");
    }
  }
  for (int alpha : simple.members()) {
    std::vector<const AColor*> pair;
    for (const AColor& c : sys.apart())
      if (c.moved_by.contains(alpha)) pair.push_back(&c);
    if (pair.size() != 2) {
      add("A2", "A(" + RootSystem::root_name(alpha) + ") has " + std::to_string(pair.size()) + " elements, expected 2");
      continue;
    }
    std::vector<int> expected = coroot_row(sys, alpha);
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (pair[0]->row[j] + pair[1]->row[j] != expected[j])
        add("A2", "c(" + pair[0]->name + ", " + format_vector(sigma[j]) + ") + c(" + pair[1]->name + ", " +
                      format_vector(sigma[j]) + ") != <" + RootSystem::root_name(alpha) + "^vee, " +
                      format_vector(sigma[j]) + ">");
  }
  out.insert(out.end(), coverage.begin(), coverage.end());

  RootSet halves = half_sigma(sys);
  for (int alpha : halves.members()) {
    for (const LatticeVector& g : sigma) {
      if (g.support() == RootSet::of({alpha}) && g[alpha] == 2) continue;
      int v = pairing(rs, alpha, g);
      if (v % 2 != 0 || v > 0)
        add("Sigma1", "1/2 <" + RootSystem::root_name(alpha) + "^vee, " + format_vector(g) +
                          "> is not a non-positive integer");
    }
  }
  for (int a = 0; a < rs.rank(); ++a)
    for (int b = a + 1; b < rs.rank(); ++b) {
      if (!simple_orthogonal(rs, a, b) || sum_index(sys, a, b) < 0) continue;
      for (const LatticeVector& g : sigma)
        if (pairing(rs, a, g) != pairing(rs, b, g))
          add("Sigma2", "<" + RootSystem::root_name(a) + "^vee, " + format_vector(g) + "> != <" +
                            RootSystem::root_name(b) + "^vee, " + format_vector(g) + ">");
    }
  for (int alpha : halves.members())
    for (const LatticeVector& g : sigma)
      if (pairing(rs, alpha, g) % 2 != 0)
        add("a'-integrality", "functional of the a' color of " + RootSystem::root_name(alpha) +
                                  " is half-integral on " + format_vector(g));
  return out;
}

SphericalSystem localize_simple(const SphericalSystem& sys, RootSet subset) {
  Restriction r = sys.root_system().restrict(subset);
  std::vector<std::size_t> kept;
  std::vector<LatticeVector> sigma;
  for (std::size_t j = 0; j < sys.sigma().size(); ++j)
    if (sys.sigma()[j].support().subset_of(subset)) {
      kept.push_back(j);
      sigma.push_back(r.from_parent(sys.sigma()[j]));
    }
  std::vector<AColor> apart;
  for (const AColor& c : sys.apart()) {
    RootSet moved = c.moved_by & subset;
    if (moved.empty()) continue;
    std::vector<int> row;
    for (std::size_t j : kept) row.push_back(c.row[j]);
    apart.push_back({c.name, r.from_parent(moved), std::move(row)});
  }
  return SphericalSystem(r.system, r.from_parent(sys.sp()), std::move(sigma), std::move(apart));
}

SphericalSystem localize_sigma(const SphericalSystem& sys, const std::vector<bool>& keep) {
  if (keep.size() != sys.sigma().size()) throw std::invalid_argument("localization mask has wrong length");
  std::vector<LatticeVector> sigma;
  RootSet simple;
  for (std::size_t j = 0; j < keep.size(); ++j)
    if (keep[j]) {
      sigma.push_back(sys.sigma()[j]);
      if (int a = sys.sigma()[j].as_simple_root(); a >= 0) simple.insert(a);
    }
  std::vector<AColor> apart;
  for (const AColor& c : sys.apart()) {
    RootSet moved = c.moved_by & simple;
    if (moved.empty()) continue;
    std::vector<int> row;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (keep[j]) row.push_back(c.row[j]);
    apart.push_back({c.name, moved, std::move(row)});
  }
  return SphericalSystem(sys.root_system(), sys.sp(), std::move(sigma), std::move(apart));
}

}  // namespace sphsys
