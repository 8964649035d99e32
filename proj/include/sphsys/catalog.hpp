#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphsys/rootkit.hpp"

namespace sphsys {

class SphericalSystem;

enum class RootFamily { a, two_a, a_times_a, a_n, a3, b, b_prime, b3, c_star, d, f4, g2 };

/// One spherical root of a rank-one wonderful variety, in the coordinates of its
/// support diagram `shape`. Friend positions index into the shape.
struct CatalogEntry {
  RootFamily family;
  RootSystem shape;
  std::vector<int> coeff_pattern;
  RootSet required_friends;
  RootSet optional_friends;
  std::string tag;
  bool verify = false;  // exceptional-support data awaiting confirmation against rank-one tables
};

/// A catalog entry embedded into a concrete root system.
struct RootInstance {
  LatticeVector gamma;
  RootSet required;
  RootSet optional;
  std::vector<int> nodes;  // nodes[k] = image of shape position k
  RootFamily family;
  std::string tag;
  bool verify = false;
};

/// Catalog entries whose support has at most `max_rank` simple roots. Each entry is
/// checked against its own friend rule when the table is built (std::logic_error).
std::vector<CatalogEntry> catalog_entries(int max_rank);

/// Every embedding of every catalog entry into `rs`, deduplicated by (gamma, friends).
std::vector<RootInstance> instantiate(const RootSystem& rs);

/// Throws std::invalid_argument if gamma is zero, has negative entries, or has the wrong length.
bool is_compatible(const RootSystem& rs, const LatticeVector& gamma, RootSet sp);
bool is_compatible(const std::vector<RootInstance>& instances, const RootSystem& rs,
                   const LatticeVector& gamma, RootSet sp);

/// All catalog roots compatible with `sp`, sorted by `term_less`, without duplicates.
std::vector<LatticeVector> compatible_roots(const RootSystem& rs, RootSet sp);
std::vector<LatticeVector> compatible_roots(const std::vector<RootInstance>& instances,
                                            const RootSystem& rs, RootSet sp);

struct TailShape {
  enum class Kind { none, b, b_prime, d, c_star };
  Kind kind = Kind::none;
  int m = 0;

  bool is_tail() const { return kind != Kind::none; }
  std::string to_string() const;
  bool operator==(const TailShape&) const = default;
};

/// Matches gamma against the tail patterns b(m), b'(m), d(m), c*(m), including the
/// S^p condition on the support. The b(1) condition on A-colors is not checked here.
TailShape classify_tail_shape(const RootSystem& rs, const LatticeVector& gamma, RootSet sp);

/// As above, for the spherical root sys.sigma()[sigma_index], also checking the b(1)
/// condition c(D+, g') = c(D-, g') = -1 on the unique root g' not orthogonal to alpha.
TailShape classify_tail_shape(const SphericalSystem& sys, int sigma_index);

/// Text dump of every embedded catalog root of `rs`, one per line.
std::string dump_catalog(const RootSystem& rs);

}  // namespace sphsys
