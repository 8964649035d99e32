#include "sphsys/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sphsys/catalog.hpp"
#include "sphsys/linalg.hpp"
#include "sphsys/quotient.hpp"
#include "sphsys/structure.hpp"
#include "sphsys/textio.hpp"

namespace sphsys {

namespace {

using Row = std::vector<int>;

// Pairwise forms of Sigma1 and Sigma2 between two chosen roots (either order).
bool pair_ok(const RootSystem& rs, const LatticeVector& x, const LatticeVector& y,
             const std::vector<LatticeVector>& chosen) {
  for (const auto* g : {&x, &y}) {
    const LatticeVector& other = g == &x ? y : x;
    RootSet supp = g->support();
    if (supp.size() == 1 && (*g)[supp.min()] == 2 && !(other == *g)) {
      int v = pairing(rs, supp.min(), other);
      if (v % 2 != 0 || v > 0) return false;
    }
    if (supp.size() == 2 && g->height() == 2) {
      int a = supp.min(), b = supp.members()[1];
      if (rs.inner2(a, b) == 0) {
        for (const LatticeVector& h : chosen)
          if (pairing(rs, a, h) != pairing(rs, b, h)) return false;
        if (pairing(rs, a, other) != pairing(rs, b, other)) return false;
      }
    }
  }
  return true;
}

struct Search {
  const EnumerationQuery& q;
  const std::function<bool(const SphericalSystem&)>& emit;
  int max_rank;
  EnumerationSummary summary;
  std::set<std::string> seen;
  bool stop = false;

  void offer(const SphericalSystem& sys) {
    if (stop || !is_valid(sys)) return;
    if (q.cuspidal && !is_cuspidal(sys)) return;
    if (q.defect && defect(sys) != *q.defect) return;
    if (q.reductive && !is_reductive(sys).reductive) return;
    if (q.primitive && !is_primitive(sys).primitive()) return;
    std::string key = print_system(sys);
    if (q.mod_aut && print_system(apply_involution(sys)) < key) return;
    if (!seen.insert(key).second) return;
    if (q.limit > 0 && summary.count >= q.limit) {
      summary.truncated = true;
      stop = true;
      return;
    }
    ++summary.count;
    if (!emit(sys)) {
      summary.truncated = true;
      stop = true;
    }
  }

  // Rows r over sigma with r[k] = 1 at the index of alpha and entries bounded by A1,
  // pairs summing to the coroot row (A2). Returned as ordered pairs (plus >= minus).
  std::vector<std::pair<Row, Row>> row_pairs(RootSet simple, const std::vector<LatticeVector>& sigma, int alpha) {
    const RootSystem& rs = q.rs;
    const int n = static_cast<int>(sigma.size());
    Row target;
    for (const LatticeVector& g : sigma) target.push_back(pairing(rs, alpha, g));
    std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      int beta = sigma[static_cast<std::size_t>(j)].as_simple_root();
      int t = target[static_cast<std::size_t>(j)];
      if (beta == alpha) {
        lo[static_cast<std::size_t>(j)] = hi[static_cast<std::size_t>(j)] = 1;
      } else if (beta >= 0 && simple.contains(beta)) {
        // other entry is at most 1 as well
        lo[static_cast<std::size_t>(j)] = t - 1;
        hi[static_cast<std::size_t>(j)] = 1;
      } else {
        lo[static_cast<std::size_t>(j)] = t;
        hi[static_cast<std::size_t>(j)] = 0;
      }
    }
    std::vector<std::pair<Row, Row>> out;
    Row r(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int j) {
      if (j == n) {
        Row m(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k)];
        for (int k = 0; k < n; ++k)
          if (m[static_cast<std::size_t>(k)] < lo[static_cast<std::size_t>(k)] ||
              m[static_cast<std::size_t>(k)] > hi[static_cast<std::size_t>(k)])
            return;
        if (r >= m) out.emplace_back(r, m);
        return;
      }
      for (int v = lo[static_cast<std::size_t>(j)]; v <= hi[static_cast<std::size_t>(j)]; ++v) {
        r[static_cast<std::size_t>(j)] = v;
        rec(j + 1);
      }
    };
    rec(0);
    return out;
  }

  void assign_colors(RootSet sp, const std::vector<LatticeVector>& sigma) {
    RootSet simple;
    std::vector<int> index_of(static_cast<std::size_t>(q.rs.rank()), -1);
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (int a = sigma[j].as_simple_root(); a >= 0) {
        simple.insert(a);
        index_of[static_cast<std::size_t>(a)] = static_cast<int>(j);
      }
    std::vector<int> alphas = simple.members();
    std::vector<std::vector<std::pair<Row, Row>>> options;
    for (int a : alphas) options.push_back(row_pairs(simple, sigma, a));
    std::vector<std::size_t> pick(alphas.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (stop) return;
      if (k == alphas.size()) {
        // multiplicity of every row must agree across the roots at which it takes value 1
        std::map<Row, int> mult;
        bool ok = true;
        for (std::size_t i = 0; i < alphas.size() && ok; ++i) {
          const auto& [p, m] = options[i][pick[i]];
          std::map<Row, int> here;
          ++here[p];
          ++here[m];
          for (const auto& [row, c] : here) {
            auto [it, fresh] = mult.emplace(row, c);
            if (!fresh && it->second != c) ok = false;
          }
        }
        if (!ok) return;
        for (const auto& [row, c] : mult)
          for (int a : alphas) {
            if (row[static_cast<std::size_t>(index_of[static_cast<std::size_t>(a)])] != 1) continue;
            std::size_t i = static_cast<std::size_t>(std::find(alphas.begin(), alphas.end(), a) - alphas.begin());
            const auto& [p, m] = options[i][pick[i]];
            if ((p == row) + (m == row) != c) ok = false;
          }
        if (!ok) return;
        std::vector<AColor> apart;
        for (const auto& [row, c] : mult) {
          RootSet moved;
          for (int a : alphas)
            if (row[static_cast<std::size_t>(index_of[static_cast<std::size_t>(a)])] == 1) moved.insert(a);
          for (int copy = 0; copy < c; ++copy)
            apart.push_back({"X" + std::to_string(apart.size()), moved, row});
        }
        offer(canonical_names(SphericalSystem(q.rs, sp, sigma, std::move(apart))));
        return;
      }
      for (std::size_t o = 0; o < options[k].size(); ++o) {
        pick[k] = o;
        rec(k + 1);
      }
    };
    rec(0);
  }

  void run() {
    const RootSystem& rs = q.rs;
    std::vector<RootInstance> instances = instantiate(rs);
    const int n = rs.rank();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !stop; ++mask) {
      RootSet sp(mask);
      std::vector<LatticeVector> cands = compatible_roots(instances, rs, sp);
      std::vector<LatticeVector> chosen;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (stop) return;
        assign_colors(sp, chosen);
        if (static_cast<int>(chosen.size()) >= max_rank) return;
        for (std::size_t i = from; i < cands.size(); ++i) {
          const LatticeVector& g = cands[i];
          bool ok = true;
          for (const LatticeVector& h : chosen)
            if (!pair_ok(rs, g, h, chosen)) ok = false;
          if (!ok) continue;
          chosen.push_back(g);
          IntMatrix m;
          for (const LatticeVector& h : chosen) m.emplace_back(h.coeffs().begin(), h.coeffs().end());
          if (linalg::rank(m) == static_cast<int>(chosen.size())) rec(i + 1);
          chosen.pop_back();
        }
      };
      rec(0);
    }
  }
};

}  // namespace

bool has_shared_color(const SphericalSystem& sys) {
  return std::any_of(sys.apart().begin(), sys.apart().end(), [](const AColor& c) { return c.moved_by.size() > 1; });
}

SphericalSystem canonical_names(const SphericalSystem& sys) {
  // group colors by least moving root; within a group, larger row first
  std::vector<AColor> colors = sys.apart();
  std::stable_sort(colors.begin(), colors.end(), [](const AColor& x, const AColor& y) {
    int kx = x.moved_by.min(), ky = y.moved_by.min();
    if (kx != ky) return kx < ky;
    return x.row > y.row;
  });
  std::map<int, int> used;
  for (AColor& c : colors) {
    int k = c.moved_by.min();
    int pos = used[k]++;
    std::string suffix = pos == 0 ? "+" : pos == 1 ? "-" : std::to_string(pos);
    c.name = "A" + std::to_string(k + 1) + suffix;
  }
  return SphericalSystem(sys.root_system(), sys.sp(), sys.sigma(), std::move(colors));
}

SphericalSystem apply_involution(const SphericalSystem& sys) {
  const RootSystem& rs = sys.root_system();
  std::vector<int> iota = dynkin_involution(rs);
  auto map_set = [&](RootSet s) {
    RootSet out;
    for (int a : s.members()) out.insert(iota[static_cast<std::size_t>(a)]);
    return out;
  };
  std::vector<LatticeVector> sigma;
  for (const LatticeVector& g : sys.sigma()) {
    LatticeVector v(rs.rank());
    for (int a = 0; a < rs.rank(); ++a) v[iota[static_cast<std::size_t>(a)]] = g[a];
    sigma.push_back(v);
  }
  std::vector<AColor> apart;
  for (const AColor& c : sys.apart()) apart.push_back({c.name, map_set(c.moved_by), c.row});
  return canonical_names(SphericalSystem(rs, map_set(sys.sp()), std::move(sigma), std::move(apart)));
}

EnumerationSummary enumerate(const EnumerationQuery& query, const std::function<bool(const SphericalSystem&)>& emit) {
  if (query.max_rank < -1) throw std::invalid_argument("max_rank must be nonnegative");
  int max_rank = query.max_rank < 0 ? query.rs.rank() : std::min(query.max_rank, query.rs.rank());
  bool capped = max_rank > query.rank_cap;
  Search s{query, emit, std::min(max_rank, query.rank_cap), {}, {}, false};
  s.run();
  if (capped) s.summary.truncated = true;
  return s.summary;
}

std::vector<SphericalSystem> enumerate_all(const EnumerationQuery& query) {
  std::vector<SphericalSystem> out;
  enumerate(query, [&](const SphericalSystem& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<ProbeHit> probe_distinguished_not_star(const EnumerationQuery& query) {
  std::vector<ProbeHit> hits;
  enumerate(query, [&](const SphericalSystem& sys) {
    ColorTable table = build_colors(sys);
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << table.size()); ++b) {
      QuotientReport r = analyze(sys, table, ColorSet(b));
      if (r.distinguished && !r.star) hits.push_back({sys, ColorSet(b)});
    }
    return true;
  });
  return hits;
}

}  // namespace sphsys
