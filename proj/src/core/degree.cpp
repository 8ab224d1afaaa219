#include "csdlab/degree.hpp"

#include "csdlab/errors.hpp"

namespace csdlab {

Degree::Degree(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ > 1) {
    throw InvalidArgument("degree " + value_.str() + " is outside (0, 1]");
  }
}

Degree::Degree(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidArgument("degree with zero denominator");
  *this = Degree(Rational(numerator, denominator));
}

std::string Degree::to_string() const { return numerator().str() + "/" + denominator().str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in \"" + text + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a rational number: \"" + text + "\"");
  }
}

std::string format_decimal(const Rational& value, int significant) {
  if (value <= 0) throw InvalidArgument("format_decimal expects a positive value");
  if (significant < 1) throw InvalidArgument("need at least one significant digit");
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);

  // exponent e with 10^e <= value < 10^(e+1)
  int e = 0;
  {
    BigInt n = num, d = den;
    while (n >= d * 10) {
      d *= 10;
      ++e;
    }
    while (n < d) {
      n *= 10;
      --e;
    }
  }

  auto scaled_digits = [&](int exponent) {
    // round(value * 10^(significant - 1 - exponent)), half to even
    const int shift = significant - 1 - exponent;
    BigInt n = num, d = den;
    if (shift >= 0) {
      n *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
    } else {
      d *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
    }
    BigInt q = n / d;
    const BigInt twice_rem = (n % d) * 2;
    if (twice_rem > d || (twice_rem == d && (q % 2) == 1)) ++q;
    return q;
  };

  BigInt digits = scaled_digits(e);
  if (digits >= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(significant))) {
    ++e;
    digits = scaled_digits(e);
  }
  std::string s = digits.str();  // exactly `significant` characters
  std::string out;
  if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len >= s.size()) {
      out = s + std::string(int_len - s.size(), '0');
    } else {
      out = s.substr(0, int_len) + "." + s.substr(int_len);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  }
  return out;
}

}  // namespace csdlab
