#pragma once

// Small finite fields F_{p^k} with table arithmetic, polynomials over them,
// and extension fields F_{q^d} realized as F_q[x]/(m(x)).

#include "ucm/exact.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ucm {

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// (p, k) with q = p^k, or DomainError when q is not a prime power.
inline std::pair<int, int> prime_power(std::int64_t q) {
  require(q >= 2, "prime_power: q must be at least 2");
  const auto f = prime_factors(q);
  if (f.size() != 1) throw DomainError("prime_power: " + std::to_string(q) + " is not a prime power");
  int k = 0;
  for (std::int64_t r = q; r > 1; r /= f[0]) ++k;
  return {static_cast<int>(f[0]), k};
}

/// F_{p^k}. Elements are integers in [0, p^k) whose base-p digits are the
/// coefficients of 1, y, y^2, ... modulo the defining polynomial m(y).
class FiniteField {
 public:
  static constexpr std::int64_t max_order = 1024;

  explicit FiniteField(std::int64_t q) : q_(q) {
    std::tie(p_, k_) = prime_power(q);
    require(q <= max_order, "FiniteField: order above the supported bound");
    modulus_ = k_ == 1 ? std::vector<int>{0, 1} : least_irreducible();
    build_tables();
  }

  std::int64_t order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Defining polynomial over F_p, low degree first (x for prime fields).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int inv(int a) const {
    require(a != 0, "FiniteField: inverse of zero");
    return inv_[static_cast<std::size_t>(a)];
  }
  int minus_one() const { return neg(1); }

  /// Element as a polynomial in y with F_p coefficients, e.g. "2*y + 1".
  std::string element_string(int a) const {
    if (k_ == 1) return std::to_string(a);
    return poly_string(digits(a), "y");
  }

  /// "GF(3)" or "GF(9)=GF(3)[y]/(y^2 + 1)".
  std::string name() const {
    std::string out = "GF(" + std::to_string(q_) + ")";
    if (k_ > 1) out += "=GF(" + std::to_string(p_) + ")[y]/(" + poly_string(modulus_, "y") + ")";
    return out;
  }

  static std::string poly_string(const std::vector<int>& c, const std::string& var) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
      if (i > 0 && c[i] != 1) out += "*";
      if (i > 0) out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  }

  int from_digits(const std::vector<int>& d) const {
    int a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  /// Least monic irreducible of degree k over F_p, ordered by the integer
  /// encoding of its lower coefficients.
  std::vector<int> least_irreducible() const {
    std::int64_t count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<int> f(static_cast<std::size_t>(k_) + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < k_; ++i, c /= p_) f[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
      f[static_cast<std::size_t>(k_)] = 1;
      if (prime_irreducible(f)) return f;
    }
    throw InternalError("FiniteField: no irreducible polynomial found");
  }

  /// Trial division over F_p by every monic polynomial of degree <= deg/2.
  bool prime_irreducible(const std::vector<int>& f) const {
    const int n = static_cast<int>(f.size()) - 1;
    if (f[0] == 0) return n == 1;
    for (int d = 1; 2 * d <= n; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < d; ++i, c /= p_) g[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
        g[static_cast<std::size_t>(d)] = 1;
        // remainder of f mod g
        std::vector<int> r(f);
        for (int i = n; i >= d; --i) {
          const int lead = r[static_cast<std::size_t>(i)];
          if (lead == 0) continue;
          for (int j = 0; j <= d; ++j) {
            auto& x = r[static_cast<std::size_t>(i - d + j)];
            x = static_cast<int>(mod(x - static_cast<std::int64_t>(lead) * g[static_cast<std::size_t>(j)], p_));
          }
        }
        bool zero = true;
        for (int i = 0; i < d; ++i) zero = zero && r[static_cast<std::size_t>(i)] == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  void build_tables() {
    const auto n = static_cast<std::size_t>(q_);
    add_.assign(n * n, 0);
    mul_.assign(n * n, 0);
    neg_.assign(n, 0);
    inv_.assign(n, 0);
    for (int a = 0; a < q_; ++a) {
      const auto da = digits(a);
      std::vector<int> dn(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[static_cast<std::size_t>(a)] = from_digits(dn);
      for (int b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<int> s(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
        add_[index(a, b)] = from_digits(s);
        // product of the digit polynomials reduced modulo m(y)
        std::vector<int> prod(2 * da.size(), 0);
        for (std::size_t i = 0; i < da.size(); ++i) {
          for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (std::size_t i = prod.size(); i-- > static_cast<std::size_t>(k_);) {
          const int lead = prod[i];
          if (lead == 0) continue;
          for (int j = 0; j <= k_; ++j) {
            auto& x = prod[i - static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)];
            x = static_cast<int>(mod(x - static_cast<std::int64_t>(lead) * modulus_[static_cast<std::size_t>(j)], p_));
          }
        }
        prod.resize(static_cast<std::size_t>(k_));
        mul_[index(a, b)] = from_digits(prod);
      }
    }
    for (int a = 1; a < q_; ++a) {
      for (int b = 1; b < q_; ++b) {
        if (mul(a, b) == 1) {
          inv_[static_cast<std::size_t>(a)] = b;
          break;
        }
      }
    }
  }

  std::int64_t q_;
  int p_ = 0;
  int k_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr make_field(std::int64_t q) { return std::make_shared<const FiniteField>(q); }

/// Polynomial over a FiniteField, coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(FieldPtr field, std::vector<int> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    require(field_ != nullptr, "FqPoly: missing field");
    for (int a : c_) require(a >= 0 && a < field_->order(), "FqPoly: coefficient outside the field");
    trim();
  }

  static FqPoly constant(FieldPtr field, int a) { return FqPoly(std::move(field), {a}); }
  static FqPoly x_plus(FieldPtr field, int a) { return FqPoly(std::move(field), {a, 1}); }

  const FieldPtr& field() const { return field_; }
  const std::vector<int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0; }
  int leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return leading() == 1; }

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

  /// Degree first, then coefficients from the top.
  friend bool operator<(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    const auto& f = a.common(b);
    std::vector<int> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return FqPoly(f, std::move(out));
  }

  friend FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    const auto& f = a.common(b);
    std::vector<int> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return FqPoly(f, std::move(out));
  }

  friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    const auto& f = a.common(b);
    if (a.is_zero() || b.is_zero()) return FqPoly(f, {});
    std::vector<int> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f->add(out[i + j], f->mul(a.c_[i], b.c_[j]));
    }
    return FqPoly(f, std::move(out));
  }

  FqPoly scaled(int s) const {
    std::vector<int> out(c_);
    for (auto& a : out) a = field_->mul(a, s);
    return FqPoly(field_, std::move(out));
  }

  /// (quotient, remainder); the divisor must be nonzero.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const {
    const auto& f = common(d);
    require(!d.is_zero(), "FqPoly: division by zero");
    std::vector<int> r(c_);
    if (r.size() < d.c_.size()) return {FqPoly(f, {}), *this};
    const std::size_t dn = d.c_.size() - 1;
    std::vector<int> q(r.size() - dn, 0);
    const int lead_inv = f->inv(d.leading());
    for (std::size_t shift = q.size(); shift-- > 0;) {
      const int coef = f->mul(r[shift + dn], lead_inv);
      q[shift] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) r[shift + j] = f->sub(r[shift + j], f->mul(coef, d.c_[j]));
    }
    return {FqPoly(f, std::move(q)), FqPoly(f, std::move(r))};
  }

  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }

  FqPoly monic() const {
    require(!is_zero(), "FqPoly: zero polynomial has no monic form");
    return scaled(field_->inv(leading()));
  }

 private:
  const FieldPtr& common(const FqPoly& other) const {
    require(field_ && other.field_, "FqPoly: operation on an uninitialized polynomial");
    require(field_ == other.field_ || field_->order() == other.field_->order(), "FqPoly: field mismatch");
    return field_;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldPtr field_;
  std::vector<int> c_;
};

inline FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// "x^2 + 2 over GF(3)"; non-prime coefficients appear in parentheses.
inline std::string to_string(const FqPoly& h) {
  const auto& f = *h.field();
  std::string out;
  for (int i = h.degree(); i >= 0; --i) {
    const int a = h.coeff(i);
    if (a == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = f.element_string(a);
    if (coeff.find(' ') != std::string::npos && i > 0) coeff = "(" + coeff + ")";
    if (i == 0) {
      out += coeff;
    } else {
      if (a != 1) out += coeff + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out + " over " + f.name();
}

/// F_q[x]/(m), m monic irreducible of degree d: a field with q^d elements.
class ExtensionField {
 public:
  ExtensionField(FieldPtr base, int degree) : base_(std::move(base)), degree_(degree) {
    require(degree >= 1, "ExtensionField: degree must be positive");
    order_ = 1;
    for (int i = 0; i < degree; ++i) {
      if (order_ > (std::int64_t{1} << 40) / base_->order()) throw ResourceError("ExtensionField: order too large");
      order_ *= base_->order();
    }
    modulus_ = least_irreducible();
  }

  const FieldPtr& base() const { return base_; }
  std::int64_t order() const { return order_; }
  const FqPoly& modulus() const { return modulus_; }

  FqPoly reduce(const FqPoly& a) const { return a % modulus_; }
  FqPoly mul(const FqPoly& a, const FqPoly& b) const { return reduce(a * b); }

  FqPoly pow(FqPoly a, std::int64_t e) const {
    FqPoly r = FqPoly::constant(base_, 1);
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// The element with encoding `code`: base-q digits as coefficients.
  FqPoly element(std::int64_t code) const {
    std::vector<int> c(static_cast<std::size_t>(degree_), 0);
    for (int i = 0; i < degree_; ++i, code /= base_->order()) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(code % base_->order());
    }
    return FqPoly(base_, std::move(c));
  }

  /// Least-encoded element of multiplicative order exactly `target`.
  FqPoly element_of_order(std::int64_t target) const {
    const std::int64_t group = order_ - 1;
    require(target >= 1 && group % target == 0, "ExtensionField: order does not divide the group order");
    const auto primes = prime_factors(target);
    const FqPoly one = FqPoly::constant(base_, 1);
    for (std::int64_t code = 1; code < order_; ++code) {
      const FqPoly h = pow(element(code), group / target);
      bool exact = true;
      for (auto r : primes) exact = exact && !(pow(h, target / r) == one);
      if (exact) return h;
    }
    throw InternalError("ExtensionField: no element of the requested order");
  }

 private:
  /// Ben-Or: f of degree d is irreducible iff gcd(x^{q^i} - x, f) = 1 for i <= d/2.
  bool irreducible(const FqPoly& f) const {
    const FqPoly x = FqPoly(base_, {0, 1});
    FqPoly power = x;  // x^{q^i} mod f
    for (int i = 1; 2 * i <= f.degree(); ++i) {
      FqPoly r = FqPoly::constant(base_, 1);
      FqPoly b = power;
      for (std::int64_t e = base_->order(); e > 0; e >>= 1) {
        if (e & 1) r = (r * b) % f;
        b = (b * b) % f;
      }
      power = r;
      if (gcd(power - x, f).degree() != 0) return false;
    }
    return true;
  }

  FqPoly least_irreducible() const {
    for (std::int64_t code = 0; code < order_; ++code) {
      std::vector<int> c = element(code).coeffs();
      c.resize(static_cast<std::size_t>(degree_), 0);
      c.push_back(1);
      FqPoly f(base_, std::move(c));
      if (f.coeff(0) != 0 || degree_ == 1) {
        if (irreducible(f)) return f;
      }
    }
    throw InternalError("ExtensionField: no irreducible polynomial found");
  }

  FieldPtr base_;
  int degree_;
  std::int64_t order_ = 1;
  FqPoly modulus_;
};

}  // namespace ucm
