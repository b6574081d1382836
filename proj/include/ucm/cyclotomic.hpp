#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_M).
//
// An element is stored in the power basis 1, z, ..., z^(phi(M)-1) and is
// always fully reduced modulo the M-th cyclotomic polynomial, so two values
// are equal exactly when their coefficient vectors are equal.

#include "ucm/exact.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ucm {

using IntPoly = std::vector<Integer>;  // coefficients, low degree first

namespace detail {

inline IntPoly poly_exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) ensure(num[i] == 0, "cyclotomic: inexact division");
  return quot;
}

class CyclotomicMemo {
 public:
  static CyclotomicMemo& instance() {
    static CyclotomicMemo memo;
    return memo;
  }

  std::shared_ptr<const IntPoly> get(std::int64_t m) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(m); it != table_.end()) return it->second;
    }
    // Compute outside the lock; recursion re-enters get() for divisors.
    IntPoly num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
      if (m % d == 0) num = poly_exact_divide(std::move(num), *get(d));
    }
    auto value = std::make_shared<const IntPoly>(std::move(num));
    std::lock_guard lock(mutex_);
    return table_.emplace(m, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const IntPoly>> table_;
};

}  // namespace detail

/// Phi_M, monic of degree euler_phi(M).
inline IntPoly cyclotomic_polynomial(std::int64_t m) {
  require(m >= 1, "cyclotomic_polynomial: modulus must be positive");
  return *detail::CyclotomicMemo::instance().get(m);
}

inline std::int64_t euler_phi(std::int64_t m) {
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

class Cyclotomic {
 public:
  /// Zero of Q(zeta_M).
  explicit Cyclotomic(std::int64_t modulus = 1)
      : modulus_(modulus), coeffs_(static_cast<std::size_t>(euler_phi(checked(modulus))), Rational(0)) {}

  static Cyclotomic from_rational(std::int64_t modulus, const Rational& value) {
    Cyclotomic c(modulus);
    c.coeffs_[0] = value;
    return c;
  }

  /// Reduces an arbitrary polynomial in z modulo Phi_M.
  static Cyclotomic from_polynomial(std::int64_t modulus, std::vector<Rational> raw) {
    Cyclotomic c(modulus);
    c.assign_reduced(std::move(raw));
    return c;
  }

  std::int64_t modulus() const { return modulus_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool operator==(const Cyclotomic& other) const {
    return modulus_ == other.modulus_ && coeffs_ == other.coeffs_;
  }

  Cyclotomic& operator+=(const Cyclotomic& other) {
    check_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& other) {
    check_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& other) {
    check_same(other);
    std::vector<Rational> prod(coeffs_.size() * 2, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
      }
    }
    assign_reduced(std::move(prod));
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  /// Image under z -> z^k, gcd(k, M) = 1.
  Cyclotomic galois(std::int64_t k) const {
    require(std::gcd(mod(k, modulus_), modulus_) == 1, "galois: exponent not a unit");
    std::vector<Rational> raw(static_cast<std::size_t>(modulus_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      raw[static_cast<std::size_t>(mulmod(static_cast<std::int64_t>(i), k, modulus_))] += coeffs_[i];
    }
    return from_polynomial(modulus_, std::move(raw));
  }

  /// Complex conjugation, z -> z^(M-1).
  Cyclotomic conj() const { return galois(modulus_ - 1); }

  /// The same number viewed in Q(zeta_L), using zeta_M = zeta_L^(L/M).
  Cyclotomic embed(std::int64_t target) const {
    require(target % modulus_ == 0, "embed: target modulus is not a multiple");
    const std::int64_t step = target / modulus_;
    std::vector<Rational> raw(static_cast<std::size_t>(target), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * static_cast<std::size_t>(step)] = coeffs_[i];
    return from_polynomial(target, std::move(raw));
  }

 private:
  static std::int64_t checked(std::int64_t m) {
    require(m >= 1, "Cyclotomic: modulus must be positive");
    return m;
  }

  void check_same(const Cyclotomic& other) const {
    if (modulus_ != other.modulus_) {
      throw DomainError("Cyclotomic: modulus mismatch (" + std::to_string(modulus_) + " vs " +
                        std::to_string(other.modulus_) + ")");
    }
  }

  void assign_reduced(std::vector<Rational> raw) {
    const auto phi = detail::CyclotomicMemo::instance().get(modulus_);
    const std::size_t deg = phi->size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
      if (raw[i] == 0) continue;
      const Rational c = raw[i];
      for (std::size_t j = 0; j < deg; ++j) {
        if ((*phi)[j] != 0) raw[i - deg + j] -= c * Rational((*phi)[j]);
      }
      raw[i] = 0;
    }
    raw.resize(deg, Rational(0));
    coeffs_ = std::move(raw);
  }

  std::int64_t modulus_;
  std::vector<Rational> coeffs_;
};

/// zeta_M^k in canonical form; k is reduced mod M.
inline Cyclotomic zeta_pow(std::int64_t modulus, std::int64_t k) {
  require(modulus >= 1, "zeta_pow: modulus must be positive");
  std::vector<Rational> raw(static_cast<std::size_t>(modulus), Rational(0));
  raw[static_cast<std::size_t>(mod(k, modulus))] = 1;
  return Cyclotomic::from_polynomial(modulus, std::move(raw));
}

enum class ValueKind { rational, real_irrational, non_real };

struct Classification {
  ValueKind kind;
  std::optional<Rational> value;  // set when kind == rational
};

inline Classification classify(const Cyclotomic& a) {
  bool rational = true;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) rational = rational && a.coeffs()[i] == 0;
  if (rational) return {ValueKind::rational, a.coeffs()[0]};
  if (a.conj() == a) return {ValueKind::real_irrational, std::nullopt};
  return {ValueKind::non_real, std::nullopt};
}

inline std::string field_name(std::int64_t modulus) { return "Q(zeta_" + std::to_string(modulus) + ")"; }

/// Canonical text form, e.g. "1/2 - z + 3*z^2"; zero prints as "0".
inline std::string to_string(const Cyclotomic& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    Rational c = a.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c) + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << to_string(a); }

/// Inverse of to_string. Accepts any power of z (reducing as needed).
inline Cyclotomic parse_cyclotomic(std::int64_t modulus, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  require(!s.empty(), "parse_cyclotomic: empty input");
  std::vector<Rational> raw(static_cast<std::size_t>(modulus), Rational(0));
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    require(!term.empty(), "parse_cyclotomic: malformed term in '" + std::string(text) + "'");
    pos = end == std::string::npos ? s.size() : end;
    Rational coeff = 1;
    std::int64_t power = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      if (zpos > 0) {
        require(zpos >= 2 && term[zpos - 1] == '*', "parse_cyclotomic: expected '*' before z");
        coeff = parse_rational(term.substr(0, zpos - 1));
      }
      power = 1;
      if (zpos + 1 < term.size()) {
        require(term[zpos + 1] == '^', "parse_cyclotomic: expected '^' after z");
        try {
          power = std::stoll(term.substr(zpos + 2));
        } catch (const std::exception&) {
          throw DomainError("parse_cyclotomic: bad exponent in '" + term + "'");
        }
      }
    }
    raw[static_cast<std::size_t>(mod(power, modulus))] += negative ? -coeff : coeff;
  }
  return Cyclotomic::from_polynomial(modulus, std::move(raw));
}

}  // namespace ucm
