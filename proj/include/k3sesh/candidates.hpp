#pragma once

// Numerically admissible (multiplicity, degree, self-intersection) triples for
// an irreducible Seshadri curve on a K3 surface of degree l2.

#include <compare>
#include <stdexcept>
#include <vector>

#include "k3sesh/arith.hpp"

namespace k3sesh {

/// (m, d, c) = (mult_x C, L.C, C^2).
struct CandidateTriple {
  Int m = 0;
  Int d = 0;
  Int c = 0;

  /// L.C / mult_x C.
  Rational ratio() const { return Rational(d, m); }

  friend bool operator==(const CandidateTriple&, const CandidateTriple&) = default;
  friend auto operator<=>(const CandidateTriple&, const CandidateTriple&) = default;
};

struct EnumerationParams {
  Int l2 = 0;
  Rational eps_sup;  // strict upper bound on d/m
  bool include_m1 = true;
};

/// Raised when eps_sup >= sqrt(l2): the multiplicity is then unbounded.
class UnboundedCapError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// m(m-1) - 2, the least C^2 of an irreducible curve with an m-fold point.
Int adjunction_floor(Int m);

/// Largest m with l2 (m(m-1) - 2) < eps_sup^2 m^2.
Int multiplicity_cap(const EnumerationParams& p);

/// All triples with 1 <= m <= cap (m >= 2 unless include_m1), d >= 1, d/m < eps_sup,
/// c even, c >= max(-2, m(m-1)-2) and l2 c <= d^2, sorted by (m, d, c).
std::vector<CandidateTriple> enumerate(const EnumerationParams& p);

}  // namespace k3sesh
