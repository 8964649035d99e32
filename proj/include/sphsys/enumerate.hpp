#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sphsys/system.hpp"

namespace sphsys {

struct EnumerationQuery {
  RootSystem rs;
  int max_rank = -1;  // -1: up to rs.rank()
  bool cuspidal = false;
  bool primitive = false;
  bool reductive = false;
  std::optional<int> defect;
  bool mod_aut = false;  // one representative per dynkin_involution orbit
  long limit = 0;        // stop after this many systems; 0 = no limit
  int rank_cap = 8;      // spherical-rank guard
};

struct EnumerationSummary {
  long count = 0;
  bool truncated = false;
};

/// Streams every valid system passing the filters, in a fixed order. The callback
/// returns false to stop early (reported as truncated).
EnumerationSummary enumerate(const EnumerationQuery& query,
                             const std::function<bool(const SphericalSystem&)>& emit);
std::vector<SphericalSystem> enumerate_all(const EnumerationQuery& query);

/// True if some A-color is moved by more than one simple root.
bool has_shared_color(const SphericalSystem& sys);

/// Renames A-colors to A<i>+ / A<i>- after the least moving root a<i>.
SphericalSystem canonical_names(const SphericalSystem& sys);

/// The system transported by the Dynkin involution, with canonical names.
SphericalSystem apply_involution(const SphericalSystem& sys);

struct ProbeHit {
  SphericalSystem system;
  ColorSet colors;
};
/// Distinguished subsets that are not (*)-distinguished, over the enumerated systems.
std::vector<ProbeHit> probe_distinguished_not_star(const EnumerationQuery& query);

}  // namespace sphsys
