#include "k3sesh/expected.hpp"

#include <stdexcept>

namespace k3sesh {

Int dim_nL(Int n, Int l2) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (l2 < 2 || l2 % 2 != 0) throw std::invalid_argument("l2 must be an even integer >= 2");
  return checked_add(checked_mul(checked_mul(n, n), l2 / 2), 1);
}

Int max_expected_mult(Int dim) {
  if (dim < 0) throw std::invalid_argument("dimension must be >= 0");
  const Int bound = checked_add(dim, 2);
  // m(m+1)/2 <= bound  <=>  (2m+1)^2 <= 8 bound + 1
  Int m = (isqrt(checked_add(checked_mul(8, bound), 1)) - 1) / 2;
  while (Wide{m + 1} * (m + 2) / 2 <= bound) ++m;
  while (m > 1 && Wide{m} * (m + 1) / 2 > bound) --m;
  return m;
}

std::vector<ExpectedTuple> classify_subsqrt(Int l2_max, Int n_max) {
  if (l2_max < 4) throw std::invalid_argument("l2_max must be >= 4");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<ExpectedTuple> out;
  for (Int l2 = 4; l2 <= l2_max; l2 += 2) {
    for (Int n = 1; n <= n_max; ++n) {
      const Int m = max_expected_mult(dim_nL(n, l2));
      // n l2 / m < sqrt(l2)  <=>  n^2 l2 < m^2
      if (Wide{n} * n * l2 < Wide{m} * m) out.push_back({l2, n, m});
    }
  }
  return out;
}

}  // namespace k3sesh
