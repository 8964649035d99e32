#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sphsys/rootkit.hpp"

namespace sphsys {

/// An element of A with its functional c(delta, -) over sigma.
struct AColor {
  std::string name;
  RootSet moved_by;
  std::vector<int> row;

  bool operator==(const AColor&) const = default;
};

/// The triple (S^p, Sigma, A). Construction checks shape only (lengths, index ranges,
/// unique names) and brings the data into canonical order: sigma sorted by `term_less`
/// with rows permuted alongside, A sorted by (least moving root, name).
class SphericalSystem {
 public:
  SphericalSystem() = default;
  SphericalSystem(RootSystem rs, RootSet sp, std::vector<LatticeVector> sigma,
                  std::vector<AColor> apart = {});

  const RootSystem& root_system() const { return rs_; }
  RootSet sp() const { return sp_; }
  const std::vector<LatticeVector>& sigma() const { return sigma_; }
  const std::vector<AColor>& apart() const { return apart_; }

  int rank() const { return static_cast<int>(sigma_.size()); }
  /// Simple roots that are spherical roots, S cap Sigma.
  RootSet simple_spherical() const;
  /// Union of the supports of all spherical roots.
  RootSet support() const;
  /// Index of gamma in sigma, or -1.
  int sigma_index(const LatticeVector& gamma) const;

  bool operator==(const SphericalSystem&) const = default;

 private:
  RootSystem rs_;
  RootSet sp_;
  std::vector<LatticeVector> sigma_;
  std::vector<AColor> apart_;
};

enum class ColorKind { A, a_prime, b };
std::string to_string(ColorKind k);

struct Color {
  std::string name;
  ColorKind kind;
  RootSet moved_by;
  std::vector<int> row;  // c(D, gamma) for gamma in sigma
};

/// A subset of the colors of a table, by table index (at most 64 colors).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr ColorSet first(int n) {
    return ColorSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr bool operator==(const ColorSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// The full color set Delta = A u Delta^a' u Delta^b with the Cartan pairing.
/// Colors are ordered by (least moving root, kind, name).
struct ColorTable {
  std::vector<Color> colors;

  int size() const { return static_cast<int>(colors.size()); }
  std::vector<std::vector<int>> matrix() const;
  /// Index of the color with this name, or -1.
  int index_of(const std::string& name) const;
  /// Colors moved by simple root alpha.
  ColorSet moved_by(int alpha) const;
  ColorSet all() const { return ColorSet::first(size()); }
  /// Parses "D1,D3" into a set; throws std::invalid_argument on unknown names.
  ColorSet parse_set(const std::string& names) const;
  std::string format_set(ColorSet s) const;
};

/// Throws std::domain_error on a half-integral a' functional or an inconsistent ~-class.
ColorTable build_colors(const SphericalSystem& sys);

struct Violation {
  std::string axiom;   // compatibility, independence, A1, A2, A3, Sigma1, Sigma2, a'-integrality
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// All axiom violations, in the order: compatibility, independence, A1-A3, Sigma1,
/// Sigma2, integrality. Empty means valid.
std::vector<Violation> validate(const SphericalSystem& sys);
inline bool is_valid(const SphericalSystem& sys) { return validate(sys).empty(); }

/// Localization in a subset of simple roots; the root system is re-indexed
/// (see RootSystem::restrict).
SphericalSystem localize_simple(const SphericalSystem& sys, RootSet subset);

/// Localization in a subset of spherical roots, given as a mask over sys.sigma().
SphericalSystem localize_sigma(const SphericalSystem& sys, const std::vector<bool>& keep);

}  // namespace sphsys
