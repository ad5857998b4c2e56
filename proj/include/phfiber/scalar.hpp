#ifndef PHFIBER_SCALAR_HPP
#define PHFIBER_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <system_error>

#include "phfiber/error.hpp"

namespace phfiber {

/// Exact rational scalar. Expression templates are disabled so that `auto`
/// always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Comparison tolerance for floating-point scalars. Ignored by exact scalars.
struct Tolerance {
  double epsilon = 1e-9;
};

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "double";

  static double floor(double x) { return std::floor(x); }
  static double to_double(double x) { return x; }
  static bool is_integer(double x, Tolerance tol) {
    return std::abs(x - std::round(x)) <= tol.epsilon;
  }
  static bool equal(double a, double b, Tolerance tol) { return std::abs(a - b) <= tol.epsilon; }

  static double parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
    }
    double value = 0.0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    }
    return value;
  }
};

namespace detail {

// Parses [sign] digits [. digits] [(e|E) [sign] digits] exactly.
inline Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  auto fail = [&] { throw Error(ErrorCode::ParseError, "not a decimal number: '" + original + "'"); };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long long scale = 0;  // value = digits * 10^(-scale)
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits.push_back(text[i]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits.push_back(text[i]);
      ++scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    long long exponent = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc{} || ptr != last) fail();
    if (exponent > 4000 || exponent < -4000) fail();
    scale -= exponent;
    i = text.size();
  }
  if (i != text.size()) fail();

  // Leading zeros would make gmp read the digits as octal.
  const auto nonzero = digits.find_first_not_of('0');
  Integer numerator(nonzero == std::string::npos ? std::string("0") : digits.substr(nonzero));
  Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  Rational value = scale >= 0 ? Rational(numerator) / Rational(ten_power) : Rational(numerator * ten_power);
  return negative ? Rational(-value) : value;
}

}  // namespace detail

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational floor(const Rational& x) {
    Integer q;
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
    return Rational(q);
  }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static bool is_integer(const Rational& x, Tolerance) { return boost::multiprecision::denominator(x) == 1; }
  static bool equal(const Rational& a, const Rational& b, Tolerance) { return a == b; }

  static Rational parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Rational den = detail::parse_decimal(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
      return detail::parse_decimal(text.substr(0, slash)) / den;
    }
    return detail::parse_decimal(text);
  }
};

template <class Scalar>
bool approx_equal(const Scalar& a, const Scalar& b, Tolerance tol = {}) {
  return ScalarTraits<Scalar>::equal(a, b, tol);
}

/// a < b, and not within tolerance of b.
template <class Scalar>
bool definitely_less(const Scalar& a, const Scalar& b, Tolerance tol = {}) {
  return a < b && !ScalarTraits<Scalar>::equal(a, b, tol);
}

template <class Scalar>
double to_double(const Scalar& x) {
  return ScalarTraits<Scalar>::to_double(x);
}

template <class Scalar>
Scalar floor_of(const Scalar& x) {
  return ScalarTraits<Scalar>::floor(x);
}

/// Shortest decimal text that round-trips to `x`.
inline std::string shortest_decimal(double x) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  (void)ec;
  return std::string(buffer, ptr);
}

/// Converts a double to a scalar through its shortest decimal form, so that
/// 0.2 becomes exactly 1/5 for rational scalars.
template <class Scalar>
Scalar from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite number");
  if constexpr (std::is_same_v<Scalar, double>) {
    return x;
  } else {
    return ScalarTraits<Scalar>::parse(shortest_decimal(x));
  }
}

/// Lexicographic three-way comparison under tolerance: -1, 0 or 1.
template <class Scalar>
int compare(const Scalar& a, const Scalar& b, Tolerance tol = {}) {
  if (approx_equal(a, b, tol)) return 0;
  return a < b ? -1 : 1;
}

}  // namespace phfiber

#endif  // PHFIBER_SCALAR_HPP
