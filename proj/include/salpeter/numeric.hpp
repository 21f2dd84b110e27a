#pragma once

// Exact rationals, extended-precision reals, and the small number-theory
// helpers shared by every module.

// Boost's own default is 20 digits; the oracle tolerances need more.
#ifndef BOOST_MULTIPRECISION_MPFR_DEFAULT_PRECISION
#define BOOST_MULTIPRECISION_MPFR_DEFAULT_PRECISION 50
#endif

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace salpeter {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

/// Raised when an operation is asked for a dimension it does not model
/// (e.g. radial eigenfunctions at d = 1).
class unsupported_dimension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr unsigned kDefaultWorkingDigits = 50;
inline constexpr unsigned kMinimumWorkingDigits = 20;

inline unsigned working_digits() { return Real::default_precision(); }

inline void set_working_digits(unsigned digits) {
  if (digits < kMinimumWorkingDigits)
    throw std::invalid_argument("working precision must be at least " +
                                std::to_string(kMinimumWorkingDigits) + " digits");
  Real::default_precision(digits);
}

/// Applies SALPETER_PRECISION if set, otherwise the 50-digit default.
/// Call once, before any worker threads start.
inline unsigned configure_precision_from_env() {
  unsigned digits = kDefaultWorkingDigits;
  if (const char* env = std::getenv("SALPETER_PRECISION"); env && *env) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (*end != '\0' || parsed <= 0)
      throw std::invalid_argument(std::string("SALPETER_PRECISION is not a positive integer: ") + env);
    digits = static_cast<unsigned>(parsed);
  }
  set_working_digits(digits);
  return digits;
}

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

inline Real sqrt_pi() {
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return sqrt(pi);
}

/// Gamma(x) for x = twice_x / 2 > 0, built from Gamma(1) = 1 and
/// Gamma(1/2) = sqrt(pi) by the upward recursion.
inline Real gamma_half_integer(long twice_x) {
  if (twice_x <= 0) throw std::domain_error("gamma_half_integer requires a positive argument");
  if (twice_x % 2 == 0) return Real(factorial(twice_x / 2 - 1));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const long k = (twice_x - 1) / 2;
  const Rational coeff(factorial(2 * k), BigInt(factorial(k)) << (2 * k));
  return to_real(coeff) * sqrt_pi();
}

inline std::optional<BigInt> exact_isqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(v);
  if (root * root != v) return std::nullopt;
  return root;
}

/// sqrt(q) when q is the square of a rational, otherwise nullopt.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_isqrt(boost::multiprecision::numerator(q));
  if (!num) return std::nullopt;
  auto den = exact_isqrt(boost::multiprecision::denominator(q));
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

/// "p/q" form; integers keep the "/1" so every field parses the same way.
inline std::string to_pq(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Decimal rendering to `digits` significant digits (approximate).
inline std::string to_decimal(const Rational& q, int digits = 12) {
  if (q == 0) return "0";
  return to_real(q).str(digits);
}

inline std::string to_decimal(const Real& x, int digits = 12) {
  if (x == 0) return "0";
  return x.str(digits);
}

/// Parses "p/q", an integer, or a decimal with optional exponent
/// ("0.001", "-2.5e-3") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) fail();
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail();
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };

  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  long exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp = parse_int(text.substr(e + 1));
    if (abs(exp) > 4000) fail();
    exponent = exp.convert_to<long>();
    mantissa = text.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    i = 1;
  }
  bool seen_point = false, seen_digit = false;
  for (; i < mantissa.size(); ++i) {
    const char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      fail();
    }
  }
  if (!seen_digit) fail();
  const BigInt mant{digits};
  const BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(mant, ten_pow) : Rational(mant * ten_pow);
  return negative ? Rational(-value) : value;
}

/// A real number stored as sign * sqrt(squared), with `squared` exact.
/// Matrix elements built from ladder or Laguerre coefficients are products of
/// square roots of rationals; this keeps them exact.
struct SignedRoot {
  int sign = 0;
  Rational squared = 0;

  static SignedRoot from_square(int sign, Rational squared) {
    if (squared < 0) throw std::domain_error("negative squared magnitude");
    if (squared == 0) sign = 0;
    else if (sign == 0) throw std::domain_error("zero sign with non-zero magnitude");
    return SignedRoot{sign > 0 ? 1 : (sign < 0 ? -1 : 0), std::move(squared)};
  }
  static SignedRoot from_value(const Rational& v) { return from_square(sign_of(v), v * v); }

  bool is_zero() const { return sign == 0; }

  /// The exact value when `squared` is a perfect square.
  std::optional<Rational> exact() const {
    auto root = exact_sqrt(squared);
    if (!root) return std::nullopt;
    return sign < 0 ? Rational(-*root) : *root;
  }

  Real to_real() const {
    Real r = sqrt(salpeter::to_real(squared));
    return sign < 0 ? Real(-r) : r;
  }

  friend SignedRoot operator*(const SignedRoot& x, const SignedRoot& y) {
    return from_square(x.sign * y.sign, x.squared * y.squared);
  }
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

}  // namespace salpeter
