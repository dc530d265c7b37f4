#include "k3sesh/candidates.hpp"

#include <algorithm>

namespace k3sesh {

namespace {

void check_params(const EnumerationParams& p) {
  if (p.l2 < 2 || p.l2 % 2 != 0) throw std::invalid_argument("l2 must be an even integer >= 2");
  require_input_range(p.l2, "l2");
  if (p.eps_sup <= Rational(0)) throw std::invalid_argument("eps_sup must be positive");
  if (compare_with_sqrt(p.eps_sup, p.l2) >= 0)
    throw UnboundedCapError("eps_sup " + p.eps_sup.str() + " is not below sqrt(" + std::to_string(p.l2) +
                            "); the multiplicity cap is unbounded (Kleiman)");
}

// l2 (m(m-1) - 2) q^2 < p^2 m^2, in 128-bit.
bool below_cap(Int l2, const Rational& eps, Int m) {
  const Wide q2 = Wide{eps.den()} * eps.den();
  const Wide lhs = Wide{l2} * adjunction_floor(m) * q2;
  const Wide rhs = Wide{eps.num()} * eps.num() * m * m;
  return lhs < rhs;
}

}  // namespace

Int adjunction_floor(Int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
  return checked_sub(checked_mul(m, m - 1), 2);
}

Int multiplicity_cap(const EnumerationParams& p) {
  check_params(p);
  // The admissible m form an initial segment: the defining quadratic in m has a
  // positive leading coefficient and is negative at m = 0 and m = 1.
  Int m = 1;
  while (below_cap(p.l2, p.eps_sup, m + 1)) {
    ++m;
    if (m > (Int{1} << 20)) throw OverflowError("multiplicity cap exceeds 2^20; eps_sup is too close to sqrt(l2)");
  }
  return m;
}

std::vector<CandidateTriple> enumerate(const EnumerationParams& p) {
  const Int cap = multiplicity_cap(p);
  const Int pn = p.eps_sup.num();
  const Int qn = p.eps_sup.den();
  std::vector<CandidateTriple> out;
  for (Int m = p.include_m1 ? 1 : 2; m <= cap; ++m) {
    const Int c_lo = std::max<Int>(-2, adjunction_floor(m));
    // d/m < p/q  <=>  d q < p m
    for (Int d = 1; Wide{d} * qn < Wide{pn} * m; ++d) {
      // Hodge index: l2 c <= d^2. c_lo is even for every m.
      for (Int c = c_lo; Wide{p.l2} * c <= Wide{d} * d; c += 2) out.push_back({m, d, c});
    }
  }
  return out;  // loop order is already (m, d, c)
}

}  // namespace k3sesh
