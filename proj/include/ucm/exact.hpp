#pragma once

// Exact integers and rationals, plus the error hierarchy shared by the
// whole library. Nothing in the core uses floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ucm {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (e.g. a centralizer order that is not an
/// integer). Always a bug or a violated mathematical assumption.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it exceeds a configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) throw DomainError(what);
}

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// (a * b) mod m without overflow for |a|, |b| < 2^62.
constexpr std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const __int128 p = static_cast<__int128>(mod(a, m)) * mod(b, m);
  return static_cast<std::int64_t>(p % m);
}

/// Base raised to a non-negative power, throwing if the result leaves int64.
inline std::int64_t checked_pow(std::int64_t base, int exponent) {
  require(exponent >= 0, "checked_pow: negative exponent");
  __int128 result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= base;
    if (result > INT64_MAX || result < INT64_MIN) {
      throw ResourceError("integer overflow computing " + std::to_string(base) + "^" +
                          std::to_string(exponent));
    }
  }
  return static_cast<std::int64_t>(result);
}

inline Rational pow(const Rational& x, long long k) {
  if (k < 0) {
    require(x != 0, "pow: zero to a negative power");
    return pow(Rational(1) / x, -k);
  }
  Rational result = 1;
  Rational base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw InternalError("expected an integer, got " + r.str());
  return boost::multiprecision::numerator(r);
}

/// "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const Integer& z) { return z.str(); }

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    const Integer num(std::string(text.substr(0, slash)));
    const Integer den(std::string(text.substr(slash + 1)));
    require(den != 0, "parse_rational: zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw DomainError("parse_rational: malformed rational '" + std::string(text) + "'");
  }
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > INT64_MAX) throw ResourceError("lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace ucm
