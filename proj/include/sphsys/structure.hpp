#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphsys/catalog.hpp"
#include "sphsys/quotient.hpp"
#include "sphsys/system.hpp"

namespace sphsys {

struct ProjectiveColor {
  int index;           // into the color table
  std::string name;
  RootSet support;     // {alpha : delta in A(alpha)}
  bool meets_nonsimple_support;  // supp delta meets supp(Sigma \ S)
};
std::vector<ProjectiveColor> projective_colors(const SphericalSystem& sys, const ColorTable& table);

struct DecompositionReport {
  std::array<bool, 5> conditions{};
  bool decomposes() const {
    for (bool c : conditions)
      if (!c) return false;
    return true;
  }
  /// 1-based index of the first failing condition, 0 if none.
  int first_failure() const {
    for (int i = 0; i < 5; ++i)
      if (!conditions[static_cast<std::size_t>(i)]) return i + 1;
    return 0;
  }
};
DecompositionReport is_decomposition(const SphericalSystem& sys, const ColorTable& table, ColorSet d1,
                                     ColorSet d2);

/// The least decomposing pair, comparing subsets by their sorted color indices.
std::optional<std::pair<ColorSet, ColorSet>> find_decomposition(const SphericalSystem& sys,
                                                                const ColorTable& table);

bool is_cuspidal(const SphericalSystem& sys);

struct Tail {
  int sigma_index;
  LatticeVector gamma;
  TailShape shape;
  ColorSet colors;
};
std::vector<Tail> detect_tails(const SphericalSystem& sys, const ColorTable& table);

struct Marker {
  enum class Kind { tail, higher_defect };
  Kind kind;
  LatticeVector gamma;  // tail only
  TailShape shape;      // tail only
  ColorSet colors;
  int jump = 0;         // higher_defect only
};

struct PrimitivityReport {
  bool cuspidal = false;
  bool no_projective = false;
  bool indecomposable = false;
  std::vector<Marker> markers;
  bool primitive() const { return cuspidal && no_projective && indecomposable; }
};
PrimitivityReport is_primitive(const SphericalSystem& sys);

struct ReductionNode {
  enum class Kind { parabolic_induction, fiber_product, projective_fibration, primitive, closed };
  Kind kind = Kind::closed;
  SphericalSystem system;
  RootSet s_prime;                 // parabolic_induction
  ColorSet d1, d2;                 // fiber_product; the third subset is d1 | d2
  int delta = -1;                  // projective_fibration, index into the color table
  std::vector<std::string> color_names;  // of `system`, for printing
  std::vector<Marker> markers;     // primitive
  std::vector<ReductionNode> children;
};

std::string to_string(ReductionNode::Kind k);

/// One step: parabolic induction to supp(Sigma) u S^p when proper, else the least
/// decomposing pair, else the least projective color with a (*)-distinguished singleton,
/// else a primitive (or closed) leaf.
ReductionNode reduction_step(const SphericalSystem& sys);

/// Children of rank at most 2 are closed leaves; others are reduced recursively.
ReductionNode reduction_tree(const SphericalSystem& sys);

}  // namespace sphsys
