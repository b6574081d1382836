#pragma once

// Degrees, reality and type predicates, central characters and
// Frobenius-Schur indicators of the irreducible characters.

#include "ucm/chartable.hpp"

#include <map>
#include <vector>

namespace ucm {

/// q^{n(lambda')} prod_{i<=n}(q^i - (-1)^i) / prod_boxes (q^h - (-1)^h), h weighted hooks.
inline Integer degree(const TorusContext& ctx, const MultiPartition& lambda) {
  require(lambda.side() == Side::character, "degree: expected a character label");
  const Integer q = ctx.q();
  auto signed_power = [&](int k) {
    const Integer qk = boost::multiprecision::pow(q, static_cast<unsigned>(k));
    return k % 2 == 0 ? Integer(qk - 1) : Integer(qk + 1);
  };
  Integer numerator = boost::multiprecision::pow(q, static_cast<unsigned>(n_stat(conjugate(lambda))));
  for (int i = 1; i <= lambda.size(); ++i) numerator *= signed_power(i);
  Integer denominator = 1;
  for (int h : weighted_hooks(lambda)) denominator *= signed_power(h);
  if (numerator % denominator != 0) {
    throw InternalError("degree: non-integral degree for " + to_string(lambda));
  }
  return numerator / denominator;
}

inline bool is_real(const TorusContext& ctx, const MultiPartition& lambda) { return bar(ctx, lambda) == lambda; }

inline bool is_semisimple(const MultiPartition& lambda) {
  for (const auto& [phi, part] : lambda.entries()) {
    if (!part.is_column()) return false;
  }
  return true;
}

inline bool is_regular(const MultiPartition& lambda) {
  for (const auto& [phi, part] : lambda.entries()) {
    if (!part.is_row()) return false;
  }
  return true;
}

inline bool is_unipotent(const MultiPartition& lambda) {
  for (const auto& [phi, part] : lambda.entries()) {
    if (phi != trivial_orbit(Side::character)) return false;
  }
  return true;
}

/// Level-1 exponent of prod_{xi in phi} xi, a Frobenius-fixed character.
inline std::int64_t orbit_product_level_one(const TorusContext& ctx, const OrbitLabel& phi) {
  const int d = phi.level;
  const std::int64_t m = ctx.modulus(d);
  std::int64_t sum = 0;
  for (auto c : orbit_members(ctx, phi)) sum = mod(sum + c, m);
  return to_level_one(ctx, d, sum);
}

/// omega_lambda as a level-1 character exponent, restricted to the orbits
/// accepted by the filter.
template <class Filter>
std::int64_t omega_partial(const TorusContext& ctx, const MultiPartition& lambda, Filter&& keep) {
  const std::int64_t m1 = ctx.modulus(1);
  std::int64_t omega = 0;
  for (const auto& [phi, part] : lambda.entries()) {
    if (!keep(phi)) continue;
    omega = mod(omega + mulmod(orbit_product_level_one(ctx, phi), part.size(), m1), m1);
  }
  return omega;
}

/// Central character omega_lambda = prod_phi prod_{xi in phi} xi^{|lambda^(phi)|}.
inline std::int64_t omega_central(const TorusContext& ctx, const MultiPartition& lambda) {
  return omega_partial(ctx, lambda, [](const OrbitLabel&) { return true; });
}

/// Partial product over orbits with phi != bar(phi) or |phi| even.
inline std::int64_t omega_star(const TorusContext& ctx, const MultiPartition& lambda) {
  return omega_partial(ctx, lambda, [&](const OrbitLabel& phi) {
    return phi.size() % 2 == 0 || conjugate_orbit(ctx, phi) != phi;
  });
}

/// chi^lambda(alpha I) for alpha = g_1^exponent: omega(alpha) * degree, in Q(zeta_{M_1}).
inline Cyclotomic central_value(const TorusContext& ctx, const MultiPartition& lambda, std::int64_t exponent) {
  const std::int64_t m1 = ctx.modulus(1);
  return zeta_pow(m1, mulmod(omega_central(ctx, lambda), exponent, m1)) * Rational(degree(ctx, lambda));
}

/// Frobenius-Schur indicator of a real semisimple or regular character.
/// Evaluates omega_lambda at a generator and checks it against the sign
/// (-1)^{|lambda^(sigma)|}.
inline int fs_semisimple_regular(const TorusContext& ctx, const MultiPartition& lambda) {
  require(is_real(ctx, lambda), "fs_semisimple_regular: character is not real");
  require(is_semisimple(lambda) || is_regular(lambda), "fs_semisimple_regular: neither semisimple nor regular");
  if (lambda.size() % 2 == 1 || !ctx.q_odd()) return 1;
  const std::int64_t m1 = ctx.modulus(1);
  const std::int64_t omega = omega_central(ctx, lambda);  // omega(beta) for beta = g_1
  ensure(omega == 0 || 2 * omega == m1, "fs_semisimple_regular: real character with central character of order > 2");
  const int generic = omega == 0 ? 1 : -1;
  const int shortcut = lambda.at(sigma_orbit(ctx, Side::character)).size() % 2 == 0 ? 1 : -1;
  ensure(generic == shortcut, "fs_semisimple_regular: central-character route and sigma-part route disagree for " +
                                  to_string(lambda));
  return generic;
}

/// Indicator of the unipotent character labelled by a partition:
/// (-1)^{floor(|c_2(lambda)| / 2)}.
inline int fs_unipotent(const Partition& lambda) { return (two_core(lambda).size() / 2) % 2 == 0 ? 1 : -1; }

/// |G|^{-1} sum_classes |class| chi(g^2), per row of the table.
inline std::vector<int> fs_bruteforce(const TorusContext& ctx, const CharTable& table) {
  require(ctx.q_odd(), "fs_bruteforce: requires odd q");
  const Integer order = group_order(ctx, table.n);
  std::vector<std::size_t> square_column(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    square_column[c] = table.column_index(class_square(ctx, table.columns[c].label));
  }
  std::vector<int> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    Cyclotomic sum(table.field_modulus);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      sum += table.values[r][square_column[c]] * Rational(table.columns[c].class_size);
    }
    sum *= Rational(1) / Rational(order);
    const auto kind = classify(sum);
    ensure(kind.kind == ValueKind::rational, "fs_bruteforce: irrational indicator");
    const Rational v = *kind.value;
    ensure(v == 0 || v == 1 || v == -1, "fs_bruteforce: indicator outside {-1, 0, 1}");
    out.push_back(static_cast<int>(to_integer(v)));
  }
  return out;
}

struct FsOptions {
  int max_n = 2;
  CharTableOptions table;
};

/// Brute-force indicators for every character at degree n, gated by max_n.
inline std::map<MultiPartition, int> fs_bruteforce(const TorusContext& ctx, int n, const FsOptions& options = {}) {
  if (n > options.max_n) {
    throw ResourceError("fs_bruteforce: degree " + std::to_string(n) + " exceeds the configured bound " +
                        std::to_string(options.max_n));
  }
  const CharTable table = char_table(ctx, n, options.table);
  const auto values = fs_bruteforce(ctx, table);
  std::map<MultiPartition, int> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) out.emplace(table.rows[r], values[r]);
  return out;
}

/// Real semisimple character labels at degree n.
inline std::vector<MultiPartition> real_semisimple_labels(const TorusContext& ctx, int n) {
  std::vector<MultiPartition> out;
  for (auto& lambda : enumerate_multipartitions(ctx, n, Side::character, PartFamily::columns)) {
    if (is_real(ctx, lambda)) out.push_back(std::move(lambda));
  }
  return out;
}

struct Census {
  std::int64_t q = 0;
  int n = 0;
  Integer symplectic = 0;
  Integer orthogonal = 0;
  Integer real_total = 0;
  Integer sigma_odd = 0;  // labels with |lambda^(sigma)| odd
  bool route_agreement = true;
};

/// Indicators of all real semisimple characters at degree n.
inline Census census_semisimple(const TorusContext& ctx, int n, unsigned jobs = 1) {
  const auto labels = real_semisimple_labels(ctx, n);
  std::vector<int> eps(labels.size(), 0);
  parallel_for(labels.size(), jobs, [&](std::size_t i) { eps[i] = fs_semisimple_regular(ctx, labels[i]); });
  Census census;
  census.q = ctx.q();
  census.n = n;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (eps[i] < 0 ? census.symplectic : census.orthogonal) += 1;
    if (ctx.q_odd() && labels[i].at(sigma_orbit(ctx, Side::character)).size() % 2 == 1) census.sigma_odd += 1;
    if (omega_star(ctx, labels[i]) != 0) census.route_agreement = false;
  }
  census.real_total = census.symplectic + census.orthogonal;
  if (ctx.q_odd() && n % 2 == 0 && census.symplectic != census.sigma_odd) census.route_agreement = false;
  return census;
}

}  // namespace ucm
