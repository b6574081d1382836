#pragma once

// Conjugacy classes of U(n, F_{q^2}): centralizer orders, class sizes,
// central classes and the squaring map on class labels.

#include "ucm/multipartition.hpp"

#include <map>
#include <vector>

namespace ucm {

/// a_mu(x) = x^{|mu| + 2 n(mu)} prod_i prod_{j=1}^{m_i} (1 - x^{-j})
inline Rational a_partition_poly(const Partition& mu, const Rational& x) {
  require(x != 0, "a_partition_poly: x must be nonzero");
  Rational value = pow(x, mu.size() + 2 * n_stat(mu));
  const Rational inv = Rational(1) / x;
  for (int i = 1; i <= mu[0]; ++i) {
    const int m = mu.multiplicity(i);
    for (int j = 1; j <= m; ++j) value *= Rational(1) - pow(inv, j);
  }
  return value;
}

/// |U(n, F_{q^2})| = q^{n(n-1)/2} prod_{i=1}^n (q^i - (-1)^i)
inline Integer group_order(std::int64_t q, int n) {
  require(q >= 2 && n >= 0, "group_order: bad arguments");
  Integer order = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    const Integer qi = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(i));
    order *= (i % 2 == 0) ? qi - 1 : qi + 1;
  }
  return order;
}

inline Integer group_order(const TorusContext& ctx, int n) { return group_order(ctx.q(), n); }

/// a_mu = (-1)^{|mu|} prod_f a_{mu^(f)}((-q)^{|f|}); must be a positive integer.
inline Integer centralizer_order(const TorusContext& ctx, const MultiPartition& mu) {
  require(mu.side() == Side::element, "centralizer_order: expected a class label");
  Rational value = mu.size() % 2 == 0 ? 1 : -1;
  for (const auto& [orbit, part] : mu.entries()) {
    value *= a_partition_poly(part, pow(Rational(-ctx.q()), orbit.size()));
  }
  if (!is_integer(value) || value <= 0) {
    throw InternalError("centralizer_order: non-positive or non-integral value " + value.str() + " for " +
                        to_string(mu));
  }
  return to_integer(value);
}

struct ClassData {
  MultiPartition label;
  Integer centralizer_order;
  Integer class_size;
};

inline ClassData class_data(const TorusContext& ctx, const MultiPartition& mu) {
  const Integer a = centralizer_order(ctx, mu);
  const Integer g = group_order(ctx, mu.size());
  ensure(g % a == 0, "class_data: centralizer order does not divide the group order");
  return {mu, a, g / a};
}

inline std::vector<ClassData> enumerate_classes(const TorusContext& ctx, int n) {
  std::vector<ClassData> out;
  for (const auto& mu : enumerate_multipartitions(ctx, n, Side::element)) out.push_back(class_data(ctx, mu));
  return out;
}

/// Class of the scalar matrix alpha I, alpha = g_1^exponent.
inline MultiPartition central_class(const TorusContext& ctx, std::int64_t exponent, int n) {
  const std::int64_t m1 = ctx.modulus(1);
  require(exponent >= 0 && exponent < m1, "central_class: exponent outside T_1");
  MultiPartition mu(Side::element);
  mu.set({Side::element, 1, exponent}, Partition::column(n));
  return mu;
}

/// Class of g^2 for g in the class mu (q odd). Each eigenvalue orbit [a] maps
/// to [a^2]; the |f|/|f'| eigenvalues over each root of the image orbit keep
/// their Jordan types, which are merged by multiset union.
inline MultiPartition class_square(const TorusContext& ctx, const MultiPartition& mu) {
  require(ctx.q_odd(), "class_square: unsupported for even q");
  require(mu.side() == Side::element, "class_square: expected a class label");
  std::map<OrbitLabel, std::vector<int>> merged;
  for (const auto& [orbit, part] : mu.entries()) {
    const OrbitLabel image = frobenius_orbit(ctx, Side::element, orbit.level, 2 * orbit.min_exponent);
    const int copies = orbit.size() / image.size();
    auto& parts = merged[image];
    for (int c = 0; c < copies; ++c) parts.insert(parts.end(), part.parts().begin(), part.parts().end());
  }
  MultiPartition out(Side::element);
  for (auto& [orbit, parts] : merged) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.set(orbit, Partition(std::move(parts)));
  }
  return out;
}

}  // namespace ucm
