#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sphsys {

/// Dynkin type letter of a simple component.
enum class DynkinType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A set of simple roots, indexed 0..rank-1. Root systems are capped at 64 simple roots.
class RootSet {
 public:
  constexpr RootSet() = default;
  constexpr explicit RootSet(std::uint64_t bits) : bits_(bits) {}

  static RootSet of(std::initializer_list<int> indices) {
    RootSet s;
    for (int i : indices) s.insert(i);
    return s;
  }
  static constexpr RootSet first(int n) {
    return RootSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(RootSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr RootSet operator|(RootSet o) const { return RootSet(bits_ | o.bits_); }
  constexpr RootSet operator&(RootSet o) const { return RootSet(bits_ & o.bits_); }
  constexpr RootSet operator-(RootSet o) const { return RootSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const RootSet&) const = default;
  constexpr auto operator<=>(const RootSet&) const = default;

  /// Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Integer vector over the simple-root basis.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int n) : coeffs_(static_cast<std::size_t>(n), 0) {}
  explicit LatticeVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static LatticeVector simple(int n, int i, int k = 1) {
    LatticeVector v(n);
    v[i] = k;
    return v;
  }

  int size() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const int> coeffs() const { return coeffs_; }

  RootSet support() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  /// Index i if this vector equals alpha_i, otherwise -1.
  int as_simple_root() const;
  /// Sum of coefficients.
  int height() const;

  LatticeVector& operator+=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator*(int k, LatticeVector v) {
    for (int& c : v.coeffs_) c *= k;
    return v;
  }

  bool operator==(const LatticeVector&) const = default;

 private:
  std::vector<int> coeffs_;
};

/// Canonical order on roots: compare the lists of nonzero terms (index, coefficient)
/// lexicographically, so a1 < 2*a1 < a1+a2 < a2.
bool term_less(const LatticeVector& a, const LatticeVector& b);

struct Component {
  DynkinType type;
  int rank;
  int offset;  // global index of the component's first simple root
};

class RootSystem;

struct Restriction;

/// A product of simple Dynkin types, globally indexed in Bourbaki order per component.
class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(std::vector<std::pair<DynkinType, int>> components);

  /// Parses "B4", "A1 A3", "C2xC3". Throws std::invalid_argument.
  static RootSystem parse(std::string_view text);

  int rank() const { return rank_; }
  RootSet all() const { return RootSet::first(rank_); }
  std::span<const Component> components() const { return components_; }
  int component_of(int i) const;

  /// <alpha_i^vee, alpha_j>.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  /// Squared length of alpha_i; short roots of B, C, F, G have length 1.
  int norm(int i) const { return norm_[static_cast<std::size_t>(i)]; }
  /// 2 (alpha_i, alpha_j), an integer symmetric matrix.
  int inner2(int i, int j) const { return norm(i) * cartan(i, j); }
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  /// Connected components of the sub-diagram on `s`.
  std::vector<RootSet> connected_components(RootSet s) const;
  bool is_connected(RootSet s) const;

  /// Restriction to a sub-diagram, re-indexed into canonical component order.
  Restriction restrict(RootSet subset) const;

  /// "B4", "A1 B2"; "0" for the empty system.
  std::string name() const;
  static std::string root_name(int i) { return "a" + std::to_string(i + 1); }

  bool operator==(const RootSystem& o) const { return components_key() == o.components_key(); }

 private:
  std::vector<std::pair<char, int>> components_key() const;

  int rank_ = 0;
  std::vector<Component> components_;
  std::vector<int> cartan_;
  std::vector<int> norm_;
};

struct Restriction {
  RootSystem system;
  std::vector<int> origin;  // origin[new index] = index in the parent system

  RootSet to_parent(RootSet s) const;
  /// Maps a parent-indexed set into this restriction (roots outside are dropped).
  RootSet from_parent(RootSet s) const;
  LatticeVector from_parent(const LatticeVector& v) const;
};

/// Sum_j cartan[i][j] v[j]. Throws std::out_of_range on bad index or length.
int pairing(const RootSystem& rs, int i, const LatticeVector& v);

/// True iff (alpha_i, v) = 0 for the invariant inner product.
bool orthogonal(const RootSystem& rs, int i, const LatticeVector& v);

/// The permutation of simple roots induced by -w0.
std::vector<int> dynkin_involution(const RootSystem& rs);

/// Standard Cartan matrix of one simple type in Bourbaki numbering (row-major).
std::vector<int> standard_cartan(DynkinType type, int rank);
bool valid_type(DynkinType type, int rank);

std::string format_root_set(RootSet s);
std::string format_vector(const LatticeVector& v);

}  // namespace sphsys
