#pragma once

// Checked integer arithmetic and exact rationals.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3sesh {

using Int = std::int64_t;
using Wide = __int128;

/// Raised whenever an intermediate or result leaves the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Inputs (Gram entries, class coefficients) are accepted up to this magnitude.
inline constexpr Int kInputLimit = Int{1} << 40;

void require_input_range(Int v, std::string_view what);

Int narrow(Wide v);
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int num, Int den = 1);  // NOLINT(google-explicit-constructor)

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p", "p/q" with optional surrounding whitespace; throws std::invalid_argument.
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// Sign of (r - sqrt(n)) for n >= 0, computed exactly.
std::strong_ordering compare_with_sqrt(const Rational& r, Int n);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(Int n);

inline bool is_perfect_square(Int n) {
  if (n < 0) return false;
  const Int s = isqrt(n);
  return s * s == n;
}

/// A real number that is either rational or the square root of a non-square integer.
/// Covers every bound the engine reports (exact Seshadri values and the Kleiman cap).
class ExactReal {
 public:
  ExactReal() : rational_(Rational(0)) {}
  ExactReal(Rational r) : rational_(r) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(n); collapses to an integer when n is a perfect square.
  static ExactReal sqrt_of(Int n);

  bool is_rational() const { return rational_.has_value(); }
  const std::optional<Rational>& rational() const { return rational_; }
  Int radicand() const { return radicand_; }

  friend bool operator==(const ExactReal& a, const ExactReal& b) = default;
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

  /// "p/q" for rationals, "sqrt(n)" otherwise.
  std::string str() const;
  static ExactReal parse(std::string_view text);

 private:
  std::optional<Rational> rational_;
  Int radicand_ = 0;
};

}  // namespace k3sesh
