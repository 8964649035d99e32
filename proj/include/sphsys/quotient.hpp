#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphsys/linalg.hpp"
#include "sphsys/system.hpp"

namespace sphsys {

enum class HilbertMode {
  kernel,     // {x in N^n : R x = 0}
  halfspace,  // {x in N^n : R x >= 0}
};

/// Minimal generators of the monoid cut out of N^ncols by the rows, sorted by
/// (coordinate sum, lexicographic).
IntMatrix hilbert_basis(const IntMatrix& rows, int ncols, HilbertMode mode);

struct QuotientReport {
  ColorSet delta_prime;
  std::vector<long> witness;  // integer coefficients on delta_prime members; empty if not distinguished
  bool distinguished = false;
  bool star = false;
  bool smooth = false;
  bool homogeneous = false;
  IntMatrix kernel;           // Z-basis of {s in ZSigma : c(D, s) = 0, D in delta_prime}, sigma coordinates
  IntMatrix quotient_coords;  // Sigma/delta_prime in sigma coordinates
  std::optional<SphericalSystem> quotient;
};

/// Thrown by `quotient` when the subset is not (*)-distinguished.
class NotStarDistinguished : public std::domain_error {
 public:
  NotStarDistinguished(const std::string& what, IntMatrix kernel)
      : std::domain_error(what), kernel_(std::move(kernel)) {}
  const IntMatrix& kernel() const { return kernel_; }

 private:
  IntMatrix kernel_;
};

/// Only `distinguished` and `witness` are filled.
QuotientReport is_distinguished(const SphericalSystem& sys, const ColorTable& table, ColorSet subset);
/// Full report. Sigma/delta_prime is computed even when the subset is not distinguished.
QuotientReport analyze(const SphericalSystem& sys, const ColorTable& table, ColorSet subset);
inline QuotientReport is_star_distinguished(const SphericalSystem& sys, const ColorTable& table, ColorSet subset) {
  return analyze(sys, table, subset);
}

/// The quotient system; the empty subset gives sys back.
SphericalSystem quotient(const SphericalSystem& sys, const ColorTable& table, ColorSet subset);
SphericalSystem quotient(const SphericalSystem& sys, ColorSet subset);

/// Simple roots alpha with Delta(alpha) inside the subset.
RootSet quotient_sp(const SphericalSystem& sys, const ColorTable& table, ColorSet subset);

int defect(const SphericalSystem& sys);

struct Reductivity {
  bool reductive = false;
  std::vector<long> witness;  // coefficients on sigma
};
Reductivity is_reductive(const SphericalSystem& sys);

enum class SubsetKind { homogeneous, star };
/// All inclusion-minimal nonempty subsets of the kind, ordered by size then bits.
std::vector<ColorSet> minimal_subsets(const SphericalSystem& sys, const ColorTable& table, SubsetKind kind);

struct HigherDefect {
  ColorSet colors;
  int jump;
};
std::vector<HigherDefect> higher_defect_quotients(const SphericalSystem& sys);

/// The image of `subset` in the colors of localize_sigma(sys, keep).
ColorSet localized_colors(const SphericalSystem& sys, const ColorTable& table, ColorSet subset,
                          const SphericalSystem& loc, const ColorTable& loc_table);

/// Indices into sys.sigma() of the roots gamma satisfying the three witness conditions.
/// Throws std::invalid_argument unless `subset` is a higher-defect quotient.
std::vector<int> higher_defect_witnesses(const SphericalSystem& sys, ColorSet subset);

struct CenterData {
  ColorSet q_colors;
  IntMatrix n_basis;                 // sigma coordinates
  std::vector<std::vector<int>> lambda_weights;  // per basis vector, coefficients on fundamental weights
  int dim_c = 0;
};
/// Throws std::invalid_argument unless the subset is a minimal homogeneous subset.
CenterData center_data(const SphericalSystem& sys, ColorSet q_colors);

/// Hilbert basis of {s in NSigma : c(D, s) >= 0, D in q_colors}, in simple-root coordinates.
std::vector<LatticeVector> weight_monoid(const SphericalSystem& sys, ColorSet q_colors);

/// sum_i coords[i] * sigma[i] in simple-root coordinates.
LatticeVector combine(const SphericalSystem& sys, const std::vector<int>& coords);

}  // namespace sphsys
