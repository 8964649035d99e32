#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace sphsys {

using IntMatrix = std::vector<std::vector<int>>;

namespace linalg {

/// Rank over Q of a list of integer rows (all rows of equal length).
int rank(const IntMatrix& rows);

/// Row Hermite normal form with zero rows dropped; a canonical basis of the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& rows, int ncols);

/// A basis of the saturated lattice {x in Z^ncols : R x = 0}, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& rows, int ncols);

/// A point of {x >= 0 : A x >= b} in exact rationals, or nothing if the polyhedron is empty.
std::optional<std::vector<mpq_class>> feasible_point(const std::vector<std::vector<mpq_class>>& a,
                                                     const std::vector<mpq_class>& b, int nvars);

/// The primitive integer vector on the ray of a nonnegative rational vector.
std::vector<long> primitive_integer(const std::vector<mpq_class>& v);

}  // namespace linalg
}  // namespace sphsys
