#pragma once

// Exponent model of the tori T_d of U(n, F_{q^2}) and of their character
// groups.
//
// T_d is cyclic of order M_d = q^d - (-1)^d. Elements are exponents of a
// fixed generator g_d, with the compatible family g_d = N_{N,d}(g_N); a
// character of T_d is the exponent c of g_d -> zeta_{M_d}^c. Frobenius acts
// on both sides by e -> -q e (mod M_d).
//
// Because of the compatibility, T_s sits inside T_m (s | m) as
// g_s = g_m^S with S = sum_{i < m/s} (-q)^{s i} = (-1)^{m+s} M_m / M_s,
// while a character of T_s lifts to T_m along the norm as c -> c M_m / M_s.

#include "ucm/cyclotomic.hpp"
#include "ucm/exact.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace ucm {

/// Phi side (Frobenius orbits of torus elements, indexing classes) or
/// Theta side (orbits of torus characters, indexing irreducibles).
enum class Side { element, character };

inline const char* side_name(Side s) { return s == Side::element ? "phi" : "theta"; }

/// A Frobenius orbit in canonical form: `level` equals the orbit size and
/// `min_exponent` is the smallest exponent of the orbit in Z/M_level.
struct OrbitLabel {
  Side side = Side::character;
  int level = 1;
  std::int64_t min_exponent = 0;

  int size() const { return level; }
  auto operator<=>(const OrbitLabel&) const = default;
};

/// Serialized as "side:level:min_exponent", e.g. "theta:2:1".
inline std::string to_string(const OrbitLabel& o) {
  return std::string(side_name(o.side)) + ":" + std::to_string(o.level) + ":" + std::to_string(o.min_exponent);
}

inline std::ostream& operator<<(std::ostream& os, const OrbitLabel& o) { return os << to_string(o); }

inline OrbitLabel parse_orbit(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  require(a != std::string::npos && b != std::string::npos, "parse_orbit: expected side:level:exponent");
  const std::string side = text.substr(0, a);
  require(side == "phi" || side == "theta", "parse_orbit: unknown side '" + side + "'");
  OrbitLabel o;
  o.side = side == "phi" ? Side::element : Side::character;
  try {
    o.level = std::stoi(text.substr(a + 1, b - a - 1));
    o.min_exponent = std::stoll(text.substr(b + 1));
  } catch (const std::exception&) {
    throw DomainError("parse_orbit: malformed label '" + text + "'");
  }
  return o;
}

/// Root of unity zeta_order^exponent, kept symbolic until a field is chosen.
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;

  Cyclotomic in_field(std::int64_t field_modulus) const {
    require(field_modulus % order == 0, "RootOfUnity: field does not contain this root");
    return zeta_pow(field_modulus, exponent * (field_modulus / order));
  }
};

class TorusContext {
 public:
  /// Context for working degree n: top level N = lcm(1..n).
  TorusContext(std::int64_t q, int degree) : q_(q), degree_(degree) {
    require(q >= 2, "TorusContext: q must be at least 2");
    require(degree >= 1, "TorusContext: degree must be positive");
    top_level_ = 1;
    for (int d = 1; d <= degree; ++d) top_level_ = lcm64(top_level_, d);
    for (int d = 1; d <= degree; ++d) moduli_.push_back(compute_modulus(d));
  }

  std::int64_t q() const { return q_; }
  int degree() const { return degree_; }
  std::int64_t top_level() const { return top_level_; }
  bool q_odd() const { return q_ % 2 == 1; }

  /// |T_d| = q^d - (-1)^d; d must divide the top level.
  std::int64_t modulus(int d) const {
    require(d >= 1 && top_level_ % d == 0,
            "modulus: level " + std::to_string(d) + " does not divide top level " + std::to_string(top_level_));
    if (d <= degree_) return moduli_[static_cast<std::size_t>(d - 1)];
    return compute_modulus(d);
  }

  /// Exponent of sigma (the order-2 character of T_1), or of -1 in T_1.
  std::int64_t half_exponent() const {
    require(q_odd(), "sigma / -1 exist in T_1 only for odd q");
    return (q_ + 1) / 2;
  }

 private:
  std::int64_t compute_modulus(int d) const {
    const std::int64_t power = checked_pow(q_, d);
    return d % 2 == 0 ? power - 1 : power + 1;
  }

  std::int64_t q_;
  int degree_;
  std::int64_t top_level_;
  std::vector<std::int64_t> moduli_;
};

/// Exponent image of Frobenius: e -> -q e mod M_d.
inline std::int64_t frobenius_step(const TorusContext& ctx, int d, std::int64_t e) {
  const std::int64_t m = ctx.modulus(d);
  return mulmod(-ctx.q(), e, m);
}

/// Orbit of e at level d in Frobenius order (e, -q e, q^2 e, ...).
inline std::vector<std::int64_t> orbit_at_level(const TorusContext& ctx, int d, std::int64_t e) {
  const std::int64_t m = ctx.modulus(d);
  std::vector<std::int64_t> members{mod(e, m)};
  for (std::int64_t x = frobenius_step(ctx, d, members[0]); x != members[0]; x = frobenius_step(ctx, d, x)) {
    members.push_back(x);
  }
  return members;
}

/// Sign-aware index of T_s in T_m for elements: g_s = g_m^S.
inline std::int64_t element_embedding_factor(const TorusContext& ctx, int m, int s) {
  require(m % s == 0, "embedding: level " + std::to_string(s) + " does not divide " + std::to_string(m));
  const std::int64_t ratio = ctx.modulus(m) / ctx.modulus(s);
  return (m + s) % 2 == 0 ? ratio : -ratio;
}

/// g_s^e viewed as an element of T_m.
inline std::int64_t element_lift(const TorusContext& ctx, int s, int m, std::int64_t e) {
  return mulmod(e, element_embedding_factor(ctx, m, s), ctx.modulus(m));
}

/// Inverse of element_lift; e must lie in T_s inside T_m.
inline std::int64_t element_descend(const TorusContext& ctx, int m, int s, std::int64_t e) {
  const std::int64_t factor = element_embedding_factor(ctx, m, s);
  const std::int64_t ratio = factor < 0 ? -factor : factor;
  e = mod(e, ctx.modulus(m));
  require(e % ratio == 0, "element_descend: exponent not in the sublevel");
  const std::int64_t local = e / ratio;
  return mod(factor < 0 ? -local : local, ctx.modulus(s));
}

/// Character of T_r lifted to T_m along the norm map: c -> c M_m / M_r.
inline std::int64_t character_lift(const TorusContext& ctx, int r, int m, std::int64_t c) {
  require(m % r == 0, "character_lift: level does not divide");
  return mulmod(c, ctx.modulus(m) / ctx.modulus(r), ctx.modulus(m));
}

inline std::int64_t character_descend(const TorusContext& ctx, int m, int r, std::int64_t c) {
  require(m % r == 0, "character_descend: level does not divide");
  const std::int64_t ratio = ctx.modulus(m) / ctx.modulus(r);
  c = mod(c, ctx.modulus(m));
  require(c % ratio == 0, "character_descend: character is not lifted from the sublevel");
  return c / ratio;
}

/// Canonical label of the Frobenius orbit through exponent e at level d.
/// The orbit is moved down to the level equal to its size.
inline OrbitLabel frobenius_orbit(const TorusContext& ctx, Side side, int d, std::int64_t e) {
  const auto members = orbit_at_level(ctx, d, e);
  const int size = static_cast<int>(members.size());
  const std::int64_t local = side == Side::element ? element_descend(ctx, d, size, members[0])
                                                   : character_descend(ctx, d, size, members[0]);
  const auto canonical = orbit_at_level(ctx, size, local);
  return {side, size, *std::min_element(canonical.begin(), canonical.end())};
}

/// Exponents of a canonical orbit at its own level, ascending.
inline std::vector<std::int64_t> orbit_members(const TorusContext& ctx, const OrbitLabel& o) {
  auto members = orbit_at_level(ctx, o.level, o.min_exponent);
  std::sort(members.begin(), members.end());
  return members;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// (1/d) sum_{e | d} mu(d/e) M_e.
inline std::int64_t orbit_count(const TorusContext& ctx, int d) {
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e == 0) total += mobius(d / e) * ctx.modulus(e);
  }
  ensure(total % d == 0, "orbit_count: Mobius sum not divisible by level");
  return total / d;
}

/// All orbits of exact size d, by increasing minimal exponent.
inline std::vector<OrbitLabel> orbits_of_exact_size(const TorusContext& ctx, Side side, int d) {
  const std::int64_t m = ctx.modulus(d);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<OrbitLabel> out;
  for (std::int64_t e = 0; e < m; ++e) {
    if (seen[static_cast<std::size_t>(e)]) continue;
    const auto members = orbit_at_level(ctx, d, e);
    for (auto x : members) seen[static_cast<std::size_t>(x)] = 1;
    if (static_cast<int>(members.size()) == d) out.push_back({side, d, e});
  }
  return out;
}

/// Every orbit of size at most max_size, ordered by (level, exponent).
inline std::vector<OrbitLabel> orbit_universe(const TorusContext& ctx, Side side, int max_size) {
  std::vector<OrbitLabel> out;
  for (int d = 1; d <= max_size; ++d) {
    auto level = orbits_of_exact_size(ctx, side, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Orbit of the negated exponents (complex conjugate / inverse elements).
inline OrbitLabel conjugate_orbit(const TorusContext& ctx, const OrbitLabel& o) {
  return frobenius_orbit(ctx, o.side, o.level, -o.min_exponent);
}

inline OrbitLabel trivial_orbit(Side side) { return {side, 1, 0}; }

/// {sigma} on the character side, {-1} on the element side (q odd).
inline OrbitLabel sigma_orbit(const TorusContext& ctx, Side side) { return {side, 1, ctx.half_exponent()}; }

/// N_{m,r}(g_m^e), computed as the product of the (-q)^{r i} powers and
/// expressed as an exponent of g_r.
inline std::int64_t norm(const TorusContext& ctx, int m, int r, std::int64_t e) {
  require(r >= 1 && m % r == 0, "norm: level " + std::to_string(r) + " does not divide " + std::to_string(m));
  const std::int64_t mm = ctx.modulus(m);
  std::int64_t step = 1;  // (-q)^r mod M_m
  for (int i = 0; i < r; ++i) step = mulmod(step, -ctx.q(), mm);
  std::int64_t power = 1;
  std::int64_t multiplier = 0;
  for (int i = 0; i < m / r; ++i) {
    multiplier = mod(multiplier + power, mm);
    power = mulmod(power, step, mm);
  }
  return element_descend(ctx, m, r, mulmod(e, multiplier, mm));
}

/// Pairing of the level-r character c with the level-m element e, evaluated
/// at level m after lifting c along the norm.
inline RootOfUnity pairing_root(const TorusContext& ctx, int r, std::int64_t c, int m, std::int64_t e) {
  require(r >= 1 && m % r == 0, "pairing: character level does not divide evaluation level");
  const std::int64_t mm = ctx.modulus(m);
  return {mm, mulmod(character_lift(ctx, r, m, c), e, mm)};
}

inline Cyclotomic pairing(const TorusContext& ctx, int r, std::int64_t c, int m, std::int64_t e) {
  const auto root = pairing_root(ctx, r, c, m, e);
  return zeta_pow(root.order, root.exponent);
}

/// The level-1 character whose norm lift is the F-fixed level-d character c.
inline std::int64_t to_level_one(const TorusContext& ctx, int d, std::int64_t c) {
  const std::int64_t m = ctx.modulus(d);
  c = mod(c, m);
  if (frobenius_step(ctx, d, c) != c) {
    throw DomainError("to_level_one: character " + std::to_string(c) + " at level " + std::to_string(d) +
                      " is not Frobenius-fixed");
  }
  return character_descend(ctx, d, 1, c);
}

/// The orbit-level bijection used by Delta: a character orbit is sent to the
/// element orbit with the same level and exponent, and back.
inline OrbitLabel delta_orbit(const OrbitLabel& o) {
  require(o.side == Side::character, "delta_orbit: expected a character orbit");
  return {Side::element, o.level, o.min_exponent};
}

inline OrbitLabel delta_orbit_inverse(const OrbitLabel& o) {
  require(o.side == Side::element, "delta_orbit_inverse: expected an element orbit");
  return {Side::character, o.level, o.min_exponent};
}

}  // namespace ucm
