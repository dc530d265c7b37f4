#include "k3sesh/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace k3sesh {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Int to_int(std::string_view s) {
  if (s.find('/') != std::string_view::npos) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return Rational::parse(s).num();
}

void check_class(const DivisorClass& u) {
  require_input_range(u.a, "class coefficient");
  require_input_range(u.b, "class coefficient");
}

}  // namespace

Int GramMatrix2::determinant() const {
  return narrow(Wide{l2} * c - Wide{d} * d);
}

GramMatrix2 GramMatrix2::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw std::invalid_argument("Gram matrix must look like \"l2 d; d c\"");
  const auto row1 = split_ws(text.substr(0, semi));
  const auto row2 = split_ws(text.substr(semi + 1));
  if (row1.size() != 2 || row2.size() != 2)
    throw std::invalid_argument("Gram matrix rows must have two entries each: \"l2 d; d c\"");
  GramMatrix2 g{to_int(row1[0]), to_int(row1[1]), to_int(row2[1])};
  if (to_int(row2[0]) != g.d) throw std::invalid_argument("Gram matrix is not symmetric");
  return g;
}

std::string GramMatrix2::str() const {
  return std::to_string(l2) + " " + std::to_string(d) + "; " + std::to_string(d) + " " + std::to_string(c);
}

DivisorClass DivisorClass::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("class must look like \"a,b\"");
  return {to_int(text.substr(0, comma)), to_int(text.substr(comma + 1))};
}

std::string DivisorClass::str() const { return std::to_string(a) + "," + std::to_string(b); }

DivisorClass operator+(const DivisorClass& u, const DivisorClass& v) {
  return {checked_add(u.a, v.a), checked_add(u.b, v.b)};
}

std::string_view describe(GramViolation v) {
  switch (v) {
    case GramViolation::NonPositiveL2: return "L^2 must be positive";
    case GramViolation::OddL2: return "L^2 must be even (K3 lattices are even)";
    case GramViolation::OddC: return "C^2 must be even (K3 lattices are even)";
    case GramViolation::PositiveDeterminant: return "l2*c - d^2 > 0 violates the Hodge index theorem";
    case GramViolation::OutOfRange: return "entries must satisfy |value| <= 2^40";
  }
  return "unknown violation";
}

std::vector<GramViolation> validate(const GramMatrix2& g) {
  std::vector<GramViolation> out;
  for (Int v : {g.l2, g.d, g.c}) {
    if (v > kInputLimit || v < -kInputLimit) {
      out.push_back(GramViolation::OutOfRange);
      return out;
    }
  }
  if (g.l2 <= 0) out.push_back(GramViolation::NonPositiveL2);
  if (g.l2 % 2 != 0) out.push_back(GramViolation::OddL2);
  if (g.c % 2 != 0) out.push_back(GramViolation::OddC);
  if (g.determinant() > 0) out.push_back(GramViolation::PositiveDeterminant);
  return out;
}

void require_valid(const GramMatrix2& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  if (violations.front() == GramViolation::OutOfRange) throw OverflowError(std::string(describe(violations.front())));
  std::string msg = "invalid Gram matrix (" + g.str() + "):";
  for (auto v : violations) msg += " " + std::string(describe(v)) + ";";
  throw std::invalid_argument(msg);
}

Int pairing(const GramMatrix2& g, const DivisorClass& u, const DivisorClass& v) {
  for (Int x : {g.l2, g.d, g.c}) require_input_range(x, "Gram entry");
  check_class(u);
  check_class(v);
  // Each term is below 2^120 in magnitude, so the 128-bit sum cannot wrap.
  const Wide sum = Wide{u.a} * v.a * g.l2 + (Wide{u.a} * v.b + Wide{u.b} * v.a) * g.d + Wide{u.b} * v.b * g.c;
  return narrow(sum);
}

bool LatticeScanResult::has_isotropic_of_degree(Int k) const {
  return std::any_of(isotropic.begin(), isotropic.end(), [k](const ScannedClass& s) { return s.degree == k; });
}

bool LatticeScanResult::has_minus_two_of_degree(Int k) const {
  return std::any_of(minus_two.begin(), minus_two.end(), [k](const ScannedClass& s) { return s.degree == k; });
}

LatticeScanResult scan(const GramMatrix2& g, Int box_radius, Int max_degree) {
  require_valid(g);
  if (box_radius < 1) throw std::invalid_argument("box radius must be at least 1");
  require_input_range(box_radius, "box radius");
  if (max_degree <= 0) max_degree = g.l2;

  LatticeScanResult out;
  out.box_radius = box_radius;
  for (Int a = -box_radius; a <= box_radius; ++a) {
    for (Int b = -box_radius; b <= box_radius; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const DivisorClass u{a, b};
      const Int deg = degree(g, u);
      if (deg <= 0 || deg > max_degree) continue;
      const Int sq = square(g, u);
      if (sq == 0) out.isotropic.push_back({u, deg});
      if (sq == -2) out.minus_two.push_back({u, deg});
    }
  }
  auto by_degree = [](const ScannedClass& x, const ScannedClass& y) {
    return std::tie(x.degree, x.cls.a, x.cls.b) < std::tie(y.degree, y.cls.a, y.cls.b);
  };
  std::sort(out.isotropic.begin(), out.isotropic.end(), by_degree);
  std::sort(out.minus_two.begin(), out.minus_two.end(), by_degree);
  return out;
}

std::vector<DivisorClass> find_classes(const GramMatrix2& g, Int box_radius, Int deg, Int sq) {
  std::vector<DivisorClass> out;
  for (Int a = -box_radius; a <= box_radius; ++a) {
    for (Int b = -box_radius; b <= box_radius; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const DivisorClass u{a, b};
      if (degree(g, u) == deg && square(g, u) == sq) out.push_back(u);
    }
  }
  return out;
}

}  // namespace k3sesh
