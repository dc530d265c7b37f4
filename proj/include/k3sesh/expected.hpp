#pragma once

// Maximal expected multiplicity of |nL| and the (L^2, n, m) triples for which a
// curve with such a point would beat the Kleiman bound sqrt(L^2).

#include <vector>

#include "k3sesh/arith.hpp"

namespace k3sesh {

struct ExpectedTuple {
  Int l2 = 0;
  Int n = 0;
  Int m = 0;

  friend bool operator==(const ExpectedTuple&, const ExpectedTuple&) = default;
  friend auto operator<=>(const ExpectedTuple&, const ExpectedTuple&) = default;
};

/// dim |nL| = n^2 l2 / 2 + 1 on a K3 surface.
Int dim_nL(Int n, Int l2);

/// Largest m >= 1 with m(m+1)/2 <= dim + 2.
Int max_expected_mult(Int dim);

/// Even l2 in [4, l2_max] and n in [1, n_max] with n^2 l2 < m^2, sorted by (l2, n).
std::vector<ExpectedTuple> classify_subsqrt(Int l2_max, Int n_max);

}  // namespace k3sesh
