#include "k3sesh/arith.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace k3sesh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer literal out of range: " + std::string(s));
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

void require_input_range(Int v, std::string_view what) {
  if (v > kInputLimit || v < -kInputLimit)
    throw OverflowError(std::string(what) + " exceeds the accepted magnitude 2^40");
}

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("integer result does not fit in 64 bits");
  return static_cast<Int>(v);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (num == std::numeric_limits<Int>::min() || den == std::numeric_limits<Int>::min())
    throw OverflowError("rational component out of range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

Rational from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = wide_abs(num);
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return from_wide(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  Int lo = 0;
  Int hi = std::min<Int>(n, Int{3037000499});  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    const Int mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::strong_ordering compare_with_sqrt(const Rational& r, Int n) {
  if (n < 0) throw std::domain_error("square root of a negative number");
  if (r.num() < 0) return std::strong_ordering::less;
  // Both sides non-negative: compare squares, p^2 vs n q^2.
  const Wide lhs = Wide{r.num()} * r.num();
  const Wide q2 = Wide{r.den()} * r.den();
  if (q2 > 0 && Wide{n} > (std::numeric_limits<Wide>::max() / q2)) return std::strong_ordering::less;
  return lhs <=> Wide{n} * q2;
}

ExactReal ExactReal::sqrt_of(Int n) {
  if (n < 0) throw std::domain_error("square root of a negative number");
  if (is_perfect_square(n)) return ExactReal(Rational(isqrt(n)));
  ExactReal x;
  x.rational_.reset();
  x.radicand_ = n;
  return x;
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  if (a.rational_ && b.rational_) return *a.rational_ <=> *b.rational_;
  if (a.rational_) return compare_with_sqrt(*a.rational_, b.radicand_);
  if (b.rational_) return 0 <=> compare_with_sqrt(*b.rational_, a.radicand_);
  return a.radicand_ <=> b.radicand_;
}

std::string ExactReal::str() const {
  if (rational_) return rational_->str();
  return "sqrt(" + std::to_string(radicand_) + ")";
}

ExactReal ExactReal::parse(std::string_view text) {
  text = trim(text);
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    return sqrt_of(parse_int(text.substr(5, text.size() - 6)));
  }
  return ExactReal(Rational::parse(text));
}

}  // namespace k3sesh
