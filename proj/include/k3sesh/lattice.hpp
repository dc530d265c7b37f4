#pragma once

// Intersection theory on a rank-2 sublattice <L, C> of a K3 Picard lattice.

#include <string>
#include <string_view>
#include <vector>

#include "k3sesh/arith.hpp"

namespace k3sesh {

/// Symmetric form [[l2, d], [d, c]] in the basis {L, C}.
struct GramMatrix2 {
  Int l2 = 0;
  Int d = 0;
  Int c = 0;

  Int determinant() const;  // l2*c - d^2
  friend bool operator==(const GramMatrix2&, const GramMatrix2&) = default;

  /// Parses "l2 d; d c". The two off-diagonal entries must agree.
  static GramMatrix2 parse(std::string_view text);
  std::string str() const;
};

/// D = a L + b C.
struct DivisorClass {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  /// Parses "a,b".
  static DivisorClass parse(std::string_view text);
  std::string str() const;  // "a,b"
};

DivisorClass operator+(const DivisorClass& u, const DivisorClass& v);

inline constexpr DivisorClass kPolarization{1, 0};
inline constexpr DivisorClass kSecondClass{0, 1};

enum class GramViolation {
  NonPositiveL2,
  OddL2,
  OddC,
  PositiveDeterminant,
  OutOfRange,
};

std::string_view describe(GramViolation v);

/// Every violated condition, in a fixed order. Empty means valid.
std::vector<GramViolation> validate(const GramMatrix2& g);

/// Throws std::invalid_argument naming the violations (or OverflowError for out-of-range entries).
void require_valid(const GramMatrix2& g);

/// u.v under g. Throws OverflowError rather than wrapping.
Int pairing(const GramMatrix2& g, const DivisorClass& u, const DivisorClass& v);

inline Int square(const GramMatrix2& g, const DivisorClass& u) { return pairing(g, u, u); }
inline Int degree(const GramMatrix2& g, const DivisorClass& u) { return pairing(g, u, kPolarization); }

struct ScannedClass {
  DivisorClass cls;
  Int degree = 0;

  friend bool operator==(const ScannedClass&, const ScannedClass&) = default;
};

struct LatticeScanResult {
  std::vector<ScannedClass> isotropic;  // square 0
  std::vector<ScannedClass> minus_two;  // square -2
  Int box_radius = 0;

  bool has_isotropic_of_degree(Int k) const;
  bool has_minus_two_of_degree(Int k) const;
};

inline constexpr Int kDefaultScanBox = 5;

/// Primitive classes (a, b) with |a|, |b| <= box_radius, square in {0, -2} and
/// 0 < degree <= max_degree, sorted by (degree, a, b). A max_degree <= 0 means l2.
LatticeScanResult scan(const GramMatrix2& g, Int box_radius = kDefaultScanBox, Int max_degree = 0);

/// Primitive classes in the box with the given (degree, square), sorted by (a, b).
std::vector<DivisorClass> find_classes(const GramMatrix2& g, Int box_radius, Int degree, Int square);

}  // namespace k3sesh
