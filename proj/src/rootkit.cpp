#include "sphsys/rootkit.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sphsys {

RootSet LatticeVector::support() const {
  RootSet s;
  for (int i = 0; i < size(); ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != 0) s.insert(i);
  return s;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool LatticeVector::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

int LatticeVector::as_simple_root() const {
  int found = -1;
  for (int i = 0; i < size(); ++i) {
    int c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c != 1 || found >= 0) return -1;
    found = i;
  }
  return found;
}

int LatticeVector::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw std::invalid_argument("lattice vector length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

bool term_less(const LatticeVector& a, const LatticeVector& b) {
  auto terms = [](const LatticeVector& v) {
    std::vector<std::pair<int, int>> t;
    for (int i = 0; i < v.size(); ++i)
      if (v[i] != 0) t.emplace_back(i, v[i]);
    return t;
  };
  return terms(a) < terms(b);
}

namespace {

struct TypeShape {
  std::vector<int> norms;
  std::vector<std::pair<int, int>> edges;
};

TypeShape shape_of(DynkinType type, int n) {
  TypeShape s;
  s.norms.assign(static_cast<std::size_t>(n), 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) s.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case DynkinType::A:
      chain(0, n - 1);
      break;
    case DynkinType::B:
      chain(0, n - 1);
      s.norms[static_cast<std::size_t>(n - 1)] = 1;
      break;
    case DynkinType::C:
      chain(0, n - 1);
      std::fill(s.norms.begin(), s.norms.end(), 1);
      s.norms[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case DynkinType::D:
      chain(0, n - 2);
      s.edges.emplace_back(n - 3, n - 1);
      break;
    case DynkinType::E:
      s.edges.emplace_back(0, 2);
      chain(2, n - 1);
      s.edges.emplace_back(1, 3);
      break;
    case DynkinType::F:
      chain(0, 3);
      s.norms = {2, 2, 1, 1};
      break;
    case DynkinType::G:
      s.edges.emplace_back(0, 1);
      s.norms = {1, 3};
      break;
  }
  return s;
}

DynkinType type_from_char(char c) {
  switch (c) {
    case 'A': return DynkinType::A;
    case 'B': return DynkinType::B;
    case 'C': return DynkinType::C;
    case 'D': return DynkinType::D;
    case 'E': return DynkinType::E;
    case 'F': return DynkinType::F;
    case 'G': return DynkinType::G;
    default: throw std::invalid_argument(std::string("unknown Dynkin type '") + c + "'");
  }
}

constexpr DynkinType kAllTypes[] = {DynkinType::A, DynkinType::B, DynkinType::C, DynkinType::D,
                                    DynkinType::E, DynkinType::F, DynkinType::G};

}  // namespace

bool valid_type(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::A: return rank >= 1;
    case DynkinType::B: return rank >= 2;
    case DynkinType::C: return rank >= 2;
    case DynkinType::D: return rank >= 4;
    case DynkinType::E: return rank >= 6 && rank <= 8;
    case DynkinType::F: return rank == 4;
    case DynkinType::G: return rank == 2;
  }
  return false;
}

std::vector<int> standard_cartan(DynkinType type, int n) {
  if (!valid_type(type, n))
    throw std::invalid_argument(std::string("invalid simple type ") + static_cast<char>(type) +
                                std::to_string(n));
  TypeShape s = shape_of(type, n);
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 2;
  for (auto [i, j] : s.edges) {
    int ni = s.norms[static_cast<std::size_t>(i)], nj = s.norms[static_cast<std::size_t>(j)];
    int big = std::max(ni, nj);
    m[static_cast<std::size_t>(i * n + j)] = -big / ni;
    m[static_cast<std::size_t>(j * n + i)] = -big / nj;
  }
  return m;
}

RootSystem::RootSystem(std::vector<std::pair<DynkinType, int>> components) {
  for (auto [type, r] : components) {
    if (!valid_type(type, r))
      throw std::invalid_argument(std::string("invalid simple type ") + static_cast<char>(type) +
                                  std::to_string(r));
    components_.push_back({type, r, rank_});
    rank_ += r;
  }
  if (rank_ > 64) throw std::invalid_argument("root systems of rank above 64 are not supported");
  cartan_.assign(static_cast<std::size_t>(rank_ * rank_), 0);
  norm_.assign(static_cast<std::size_t>(rank_), 2);
  for (const Component& c : components_) {
    std::vector<int> m = standard_cartan(c.type, c.rank);
    TypeShape s = shape_of(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i) {
      norm_[static_cast<std::size_t>(c.offset + i)] = s.norms[static_cast<std::size_t>(i)];
      for (int j = 0; j < c.rank; ++j)
        cartan_[static_cast<std::size_t>((c.offset + i) * rank_ + c.offset + j)] =
            m[static_cast<std::size_t>(i * c.rank + j)];
    }
  }
}

RootSystem RootSystem::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text) cleaned.push_back(ch == 'x' || ch == '*' || ch == ',' ? ' ' : ch);
  std::istringstream in(cleaned);
  std::vector<std::pair<DynkinType, int>> comps;
  std::string tok;
  while (in >> tok) {
    if (tok == "0") continue;
    if (tok.size() < 2 || !std::isdigit(static_cast<unsigned char>(tok[1])))
      throw std::invalid_argument("bad root system token '" + tok + "'");
    DynkinType t = type_from_char(static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0]))));
    std::size_t used = 0;
    int r = 0;
    try {
      r = std::stoi(tok.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad root system token '" + tok + "'");
    }
    if (used + 1 != tok.size()) throw std::invalid_argument("bad root system token '" + tok + "'");
    comps.emplace_back(t, r);
  }
  return RootSystem(std::move(comps));
}

int RootSystem::component_of(int i) const {
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (i >= components_[k].offset && i < components_[k].offset + components_[k].rank)
      return static_cast<int>(k);
  throw std::out_of_range("simple root index out of range");
}

std::vector<RootSet> RootSystem::connected_components(RootSet s) const {
  std::vector<RootSet> out;
  RootSet left = s;
  while (!left.empty()) {
    RootSet comp;
    std::vector<int> stack{left.min()};
    left.erase(stack.back());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      comp.insert(i);
      for (int j : left.members())
        if (adjacent(i, j)) {
          left.erase(j);
          stack.push_back(j);
        }
    }
    out.push_back(comp);
  }
  return out;
}

bool RootSystem::is_connected(RootSet s) const { return connected_components(s).size() <= 1; }

namespace {

// Smallest (in lexicographic order of images) Cartan-preserving bijection from the
// standard diagram of `type` onto `nodes`, or empty.
std::vector<int> best_identification(const RootSystem& rs, const std::vector<int>& nodes,
                                     DynkinType type) {
  const int k = static_cast<int>(nodes.size());
  if (!valid_type(type, k)) return {};
  std::vector<int> std_cartan = standard_cartan(type, k);
  std::vector<int> image(static_cast<std::size_t>(k), -1), best;
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  auto rec = [&](auto&& self, int a) -> void {
    if (a == k) {
      if (best.empty() || image < best) best = image;
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      int node = nodes[static_cast<std::size_t>(c)];
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        int other = image[static_cast<std::size_t>(b)];
        ok = rs.cartan(node, other) == std_cartan[static_cast<std::size_t>(a * k + b)] &&
             rs.cartan(other, node) == std_cartan[static_cast<std::size_t>(b * k + a)];
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(c)] = true;
      image[static_cast<std::size_t>(a)] = node;
      self(self, a + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

Restriction RootSystem::restrict(RootSet subset) const {
  if (!subset.subset_of(all())) throw std::out_of_range("restriction to roots outside the system");
  std::vector<std::pair<DynkinType, int>> comps;
  std::vector<int> origin;
  for (RootSet comp : connected_components(subset)) {
    std::vector<int> nodes = comp.members();
    std::vector<int> best;
    DynkinType best_type = DynkinType::A;
    for (DynkinType t : kAllTypes) {
      std::vector<int> cand = best_identification(*this, nodes, t);
      if (!cand.empty() && (best.empty() || cand < best)) {
        best = cand;
        best_type = t;
      }
    }
    if (best.empty()) throw std::logic_error("unrecognized sub-diagram");
    comps.emplace_back(best_type, static_cast<int>(nodes.size()));
    origin.insert(origin.end(), best.begin(), best.end());
  }
  return {RootSystem(std::move(comps)), std::move(origin)};
}

std::string RootSystem::name() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const Component& c : components_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(c.type);
    out += std::to_string(c.rank);
  }
  return out;
}

std::vector<std::pair<char, int>> RootSystem::components_key() const {
  std::vector<std::pair<char, int>> key;
  for (const Component& c : components_) key.emplace_back(static_cast<char>(c.type), c.rank);
  return key;
}

RootSet Restriction::to_parent(RootSet s) const {
  RootSet out;
  for (int i : s.members()) out.insert(origin[static_cast<std::size_t>(i)]);
  return out;
}

RootSet Restriction::from_parent(RootSet s) const {
  RootSet out;
  for (std::size_t i = 0; i < origin.size(); ++i)
    if (s.contains(origin[i])) out.insert(static_cast<int>(i));
  return out;
}

LatticeVector Restriction::from_parent(const LatticeVector& v) const {
  LatticeVector out(static_cast<int>(origin.size()));
  for (std::size_t i = 0; i < origin.size(); ++i) out[static_cast<int>(i)] = v[origin[i]];
  return out;
}

int pairing(const RootSystem& rs, int i, const LatticeVector& v) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple root index out of range");
  if (v.size() != rs.rank()) throw std::out_of_range("lattice vector length does not match rank");
  int sum = 0;
  for (int j = 0; j < rs.rank(); ++j) sum += rs.cartan(i, j) * v[j];
  return sum;
}

bool orthogonal(const RootSystem& rs, int i, const LatticeVector& v) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple root index out of range");
  if (v.size() != rs.rank()) throw std::out_of_range("lattice vector length does not match rank");
  int sum = 0;
  for (int j = 0; j < rs.rank(); ++j) sum += rs.inner2(i, j) * v[j];
  return sum == 0;
}

std::vector<int> dynkin_involution(const RootSystem& rs) {
  std::vector<int> perm(static_cast<std::size_t>(rs.rank()));
  std::iota(perm.begin(), perm.end(), 0);
  for (const Component& c : rs.components()) {
    auto at = [&](int local) -> int& { return perm[static_cast<std::size_t>(c.offset + local)]; };
    switch (c.type) {
      case DynkinType::A:
        for (int i = 0; i < c.rank; ++i) at(i) = c.offset + c.rank - 1 - i;
        break;
      case DynkinType::D:
        if (c.rank % 2 == 1) {
          at(c.rank - 2) = c.offset + c.rank - 1;
          at(c.rank - 1) = c.offset + c.rank - 2;
        }
        break;
      case DynkinType::E:
        if (c.rank == 6) {
          // 1<->6, 3<->5 in Bourbaki numbering
          at(0) = c.offset + 5;
          at(5) = c.offset + 0;
          at(2) = c.offset + 4;
          at(4) = c.offset + 2;
        }
        break;
      default:
        break;
    }
  }
  return perm;
}

std::string format_root_set(RootSet s) {
  if (s.empty()) return "-";
  std::string out;
  for (int i : s.members()) {
    if (!out.empty()) out += ',';
    out += RootSystem::root_name(i);
  }
  return out;
}

std::string format_vector(const LatticeVector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (c != 1) out += std::to_string(c) + '*';
    out += RootSystem::root_name(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace sphsys
