#include "sphsys/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphsys {

namespace {

IntMatrix subset_rows(const ColorTable& table, ColorSet subset) {
  IntMatrix rows;
  for (int i : subset.members()) rows.push_back(table.colors[static_cast<std::size_t>(i)].row);
  return rows;
}

void check_subset(const ColorTable& table, ColorSet subset) {
  if (!subset.subset_of(table.all())) throw std::invalid_argument("color subset out of range");
}

std::vector<ColorSet> subsets_by_size(int n) {
  std::vector<ColorSet> out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  std::stable_sort(out.begin(), out.end(), [](ColorSet x, ColorSet y) { return x.size() < y.size(); });
  return out;
}

bool is_minimal_star(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  if (subset.empty() || !analyze(sys, table, subset).star) return false;
  // proper nonempty subsets of `subset`
  const std::uint64_t bits = subset.bits();
  for (std::uint64_t s = (bits - 1) & bits; s != 0; s = (s - 1) & bits)
    if (analyze(sys, table, ColorSet(s)).star) return false;
  return true;
}

}  // namespace

LatticeVector combine(const SphericalSystem& sys, const std::vector<int>& coords) {
  LatticeVector v(sys.root_system().rank());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) v += coords[i] * sys.sigma()[i];
  return v;
}

QuotientReport is_distinguished(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  check_subset(table, subset);
  QuotientReport r;
  r.delta_prime = subset;
  if (subset.empty()) return r;
  const std::vector<int> members = subset.members();
  const int k = static_cast<int>(members.size());
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (int i = 0; i < k; ++i) {
    std::vector<mpq_class> row(static_cast<std::size_t>(k), 0);
    row[static_cast<std::size_t>(i)] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (int j = 0; j < sys.rank(); ++j) {
    std::vector<mpq_class> row;
    for (int m : members) row.emplace_back(table.colors[static_cast<std::size_t>(m)].row[static_cast<std::size_t>(j)]);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  auto x = linalg::feasible_point(a, b, k);
  if (!x) return r;
  r.distinguished = true;
  r.witness = linalg::primitive_integer(*x);
  return r;
}

QuotientReport analyze(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  QuotientReport r = is_distinguished(sys, table, subset);
  const int n = sys.rank();
  IntMatrix rows = subset_rows(table, subset);
  r.kernel = linalg::integer_kernel(rows, n);
  r.quotient_coords = hilbert_basis(rows, n, HilbertMode::kernel);
  bool basis = r.quotient_coords.size() == r.kernel.size() &&
               linalg::hermite_normal_form(r.quotient_coords, n) == r.kernel;
  r.star = r.distinguished && basis;
  r.homogeneous = r.quotient_coords.empty();
  r.smooth = std::all_of(r.quotient_coords.begin(), r.quotient_coords.end(), [](const std::vector<int>& v) {
    int s = 0;
    for (int c : v) s += c;
    return s == 1;
  });
  if (r.star) {
    RootSet sp = quotient_sp(sys, table, subset);
    std::vector<LatticeVector> sigma;
    for (const auto& c : r.quotient_coords) sigma.push_back(combine(sys, c));
    RootSet simple;
    for (const LatticeVector& g : sigma)
      if (int a = g.as_simple_root(); a >= 0) simple.insert(a);
    std::vector<AColor> apart;
    for (const AColor& d : sys.apart()) {
      RootSet moved = d.moved_by & simple;
      if (moved.empty()) continue;
      std::vector<int> row;
      for (const auto& c : r.quotient_coords) {
        int v = 0;
        for (int j = 0; j < n; ++j) v += c[static_cast<std::size_t>(j)] * d.row[static_cast<std::size_t>(j)];
        row.push_back(v);
      }
      apart.push_back({d.name, moved, std::move(row)});
    }
    r.quotient = SphericalSystem(sys.root_system(), sp, std::move(sigma), std::move(apart));
  }
  return r;
}

RootSet quotient_sp(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  RootSet sp;
  for (int a = 0; a < sys.root_system().rank(); ++a)
    if (table.moved_by(a).subset_of(subset)) sp.insert(a);
  return sp;
}

SphericalSystem quotient(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  if (subset.empty()) return sys;
  QuotientReport r = analyze(sys, table, subset);
  if (!r.quotient)
    throw NotStarDistinguished(table.format_set(subset) + (r.distinguished ? " is not (*)-distinguished"
                                                                          : " is not distinguished"),
                               r.kernel);
  return *r.quotient;
}

SphericalSystem quotient(const SphericalSystem& sys, ColorSet subset) {
  return quotient(sys, build_colors(sys), subset);
}

int defect(const SphericalSystem& sys) { return build_colors(sys).size() - sys.rank(); }

Reductivity is_reductive(const SphericalSystem& sys) {
  ColorTable table = build_colors(sys);
  Reductivity out;
  const int n = sys.rank();
  if (table.size() == 0) {
    out.reductive = true;
    out.witness.assign(static_cast<std::size_t>(n), 0);
    return out;
  }
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (const Color& c : table.colors) {
    a.emplace_back(c.row.begin(), c.row.end());
    b.emplace_back(1);
  }
  auto y = linalg::feasible_point(a, b, n);
  if (!y) return out;
  out.reductive = true;
  out.witness = linalg::primitive_integer(*y);
  return out;
}

std::vector<ColorSet> minimal_subsets(const SphericalSystem& sys, const ColorTable& table, SubsetKind kind) {
  std::vector<ColorSet> found;
  for (ColorSet s : subsets_by_size(table.size())) {
    if (std::any_of(found.begin(), found.end(), [&](ColorSet f) { return f.subset_of(s); })) continue;
    QuotientReport r = analyze(sys, table, s);
    bool hit = r.star && (kind == SubsetKind::star || r.homogeneous);
    if (hit) found.push_back(s);
  }
  return found;
}

std::vector<HigherDefect> higher_defect_quotients(const SphericalSystem& sys) {
  ColorTable table = build_colors(sys);
  const int d = table.size() - sys.rank();
  std::vector<HigherDefect> out;
  for (ColorSet s : minimal_subsets(sys, table, SubsetKind::star)) {
    int jump = defect(quotient(sys, table, s)) - d;
    if (jump > 0) out.push_back({s, jump});
  }
  return out;
}

ColorSet localized_colors(const SphericalSystem&, const ColorTable& table, ColorSet subset,
                          const SphericalSystem&, const ColorTable& loc_table) {
  ColorSet image;
  for (int i : subset.members()) {
    const Color& c = table.colors[static_cast<std::size_t>(i)];
    if (c.kind == ColorKind::A) {
      int j = loc_table.index_of(c.name);
      if (j >= 0 && loc_table.colors[static_cast<std::size_t>(j)].kind == ColorKind::A) {
        image.insert(j);
        continue;
      }
    }
    for (int alpha : c.moved_by.members()) image = image | loc_table.moved_by(alpha);
  }
  return image;
}

std::vector<int> higher_defect_witnesses(const SphericalSystem& sys, ColorSet subset) {
  ColorTable table = build_colors(sys);
  check_subset(table, subset);
  if (!is_minimal_star(sys, table, subset))
    throw std::invalid_argument(table.format_set(subset) + " is not a minimal (*)-distinguished subset");
  const int k = defect(quotient(sys, table, subset)) - defect(sys);
  if (k <= 0) throw std::invalid_argument(table.format_set(subset) + " does not raise the defect");

  const RootSet all = sys.root_system().all();
  std::vector<int> out;
  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<bool> keep(static_cast<std::size_t>(sys.rank()), true);
    keep[static_cast<std::size_t>(i)] = false;
    SphericalSystem loc = localize_sigma(sys, keep);
    if (loc.support() == all) continue;
    ColorTable loc_table = build_colors(loc);
    ColorSet image = localized_colors(sys, table, subset, loc, loc_table);
    if (!is_minimal_star(loc, loc_table, image)) continue;
    if (defect(quotient(loc, loc_table, image)) - defect(loc) != k - 1) continue;
    out.push_back(i);
  }
  return out;
}

CenterData center_data(const SphericalSystem& sys, ColorSet q_colors) {
  ColorTable table = build_colors(sys);
  check_subset(table, q_colors);
  std::vector<ColorSet> minimal = minimal_subsets(sys, table, SubsetKind::homogeneous);
  bool ok = std::find(minimal.begin(), minimal.end(), q_colors) != minimal.end();
  // the rank-0 system with no colors has only the empty homogeneous subset
  if (!ok && !(q_colors.empty() && table.size() == 0 && sys.rank() == 0))
    throw std::invalid_argument(table.format_set(q_colors) + " is not a minimal homogeneous subset");

  const RootSystem& rs = sys.root_system();
  const std::vector<int> iota = dynkin_involution(rs);
  CenterData cd;
  cd.q_colors = q_colors;
  cd.n_basis = linalg::integer_kernel(subset_rows(table, q_colors), sys.rank());
  for (const auto& v : cd.n_basis) {
    std::vector<int> w(static_cast<std::size_t>(rs.rank()), 0);
    for (int d = 0; d < table.size(); ++d) {
      if (q_colors.contains(d)) continue;
      const Color& c = table.colors[static_cast<std::size_t>(d)];
      int value = 0;
      for (int j = 0; j < sys.rank(); ++j) value += c.row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      for (int alpha : c.moved_by.members()) w[static_cast<std::size_t>(iota[static_cast<std::size_t>(alpha)])] += value;
    }
    cd.lambda_weights.push_back(std::move(w));
  }
  RootSet moving = rs.all() - quotient_sp(sys, table, q_colors);
  cd.dim_c = moving.size() - linalg::rank(cd.lambda_weights);
  return cd;
}

std::vector<LatticeVector> weight_monoid(const SphericalSystem& sys, ColorSet q_colors) {
  ColorTable table = build_colors(sys);
  check_subset(table, q_colors);
  std::vector<LatticeVector> out;
  for (const auto& c : hilbert_basis(subset_rows(table, q_colors), sys.rank(), HilbertMode::halfspace))
    out.push_back(combine(sys, c));
  return out;
}

}  // namespace sphsys
