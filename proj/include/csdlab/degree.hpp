#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace csdlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An exact probability in (0, 1], kept in lowest terms.
class Degree {
 public:
  // Throws InvalidArgument unless 0 < value <= 1.
  explicit Degree(Rational value);
  Degree(const BigInt& numerator, const BigInt& denominator);

  static Degree one() { return Degree(Rational(1)); }

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const { return value_.convert_to<double>(); }

  // "num/den", always with both parts ("1/1" for one).
  std::string to_string() const;

  friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
  friend bool operator<(const Degree& a, const Degree& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Degree& a, const Degree& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Degree& a, const Degree& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Degree& a, const Degree& b) { return a.value_ >= b.value_; }
  friend Degree operator*(const Degree& a, const Degree& b) { return Degree(a.value_ * b.value_); }

 private:
  Rational value_;
};

// Parses "num/den" or an integer.
Rational parse_rational(const std::string& text);

// Positive rational in decimal with `significant` significant digits,
// rounding half to even: 41/49 -> "0.836735".
std::string format_decimal(const Rational& value, int significant = 6);

}  // namespace csdlab
