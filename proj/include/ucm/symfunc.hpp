#pragma once

// Symmetric functions in one alphabet (Schur, power sums, monomials,
// Hall-Littlewood P) and the multi-alphabet transform that turns power sums
// in the character alphabets Y^(phi) into power sums in the class alphabets
// X^(f).

#include "ucm/cyclotomic.hpp"
#include "ucm/multipartition.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace ucm {

using PartitionMap = std::map<Partition, Rational>;

/// Symmetric-group character chi^lambda at cycle type rho (Murnaghan-Nakayama).
inline Integer sym_group_character(const Partition& lambda, const Partition& rho) {
  require(lambda.size() == rho.size(), "sym_group_character: size mismatch");
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<Partition, Partition>, Integer> table;
  };
  static Memo memo;
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.table.find({lambda, rho}); it != memo.table.end()) return it->second;
  }
  Integer value = 0;
  if (rho.empty()) {
    value = 1;
  } else {
    // Remove a rim hook of length rho_1: move a bead from b to b - r on the
    // abacus; the sign counts the beads jumped over.
    const int r = rho[0];
    const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const auto beta = beta_numbers(lambda, lambda.length());
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
      auto moved = beta;
      moved[i] = target;
      const Integer sub = sym_group_character(from_beta_numbers(moved), rest);
      value += between % 2 == 0 ? sub : Integer(-sub);
    }
  }
  std::lock_guard lock(memo.mutex);
  memo.table.emplace(std::make_pair(lambda, rho), value);
  return value;
}

/// s_lambda = sum_rho z_rho^{-1} chi^lambda(rho) p_rho
inline PartitionMap schur_to_power(const Partition& lambda) {
  PartitionMap out;
  for (const auto& rho : enumerate_partitions(lambda.size())) {
    const Integer chi = sym_group_character(lambda, rho);
    if (chi != 0) out[rho] = Rational(chi, z_coefficient(rho));
  }
  return out;
}

/// p_rho = sum_lambda chi^lambda(rho) s_lambda
inline std::map<Partition, Integer> power_to_schur(const Partition& rho) {
  std::map<Partition, Integer> out;
  for (const auto& lambda : enumerate_partitions(rho.size())) {
    const Integer chi = sym_group_character(lambda, rho);
    if (chi != 0) out[lambda] = chi;
  }
  return out;
}

/// Coefficient of x^mu in p_rho: ways to distribute the parts of rho over
/// the variables so that variable i receives total mu_i.
inline Integer power_monomial_coefficient(const Partition& rho, const Partition& mu) {
  if (rho.size() != mu.size()) return 0;
  std::vector<int> remaining(mu.parts());
  std::function<Integer(std::size_t)> place = [&](std::size_t k) -> Integer {
    if (k == rho.parts().size()) return 1;
    Integer total = 0;
    for (auto& slot : remaining) {
      if (slot < rho.parts()[k]) continue;
      slot -= rho.parts()[k];
      total += place(k + 1);
      slot += rho.parts()[k];
    }
    return total;
  };
  return place(0);
}

namespace detail {

/// psi_{outer/inner}(t) for a horizontal strip: product of (1 - t^{m_j(inner)})
/// over j >= 1 with the strip absent from column j and present in column j+1.
inline Rational hl_strip_weight(const Partition& outer, const Partition& inner, const Rational& t) {
  const Partition oc = conjugate(outer);
  const Partition ic = conjugate(inner);
  Rational w = 1;
  for (int j = 1; j <= outer[0]; ++j) {
    const bool here = oc[static_cast<std::size_t>(j - 1)] != ic[static_cast<std::size_t>(j - 1)];
    const bool next = oc[static_cast<std::size_t>(j)] != ic[static_cast<std::size_t>(j)];
    if (!here && next) w *= Rational(1) - pow(t, inner.multiplicity(j));
  }
  return w;
}

/// Partitions nu with inner inside nu inside bound, nu/inner a horizontal
/// strip of the given size.
inline std::vector<Partition> horizontal_strips(const Partition& inner, const Partition& bound, int size) {
  std::vector<Partition> out;
  std::vector<int> rows(static_cast<std::size_t>(bound.length()), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i == rows.size()) {
      if (left == 0) out.emplace_back(rows);
      return;
    }
    // row i may grow up to min(bound_i, inner_{i-1}) (horizontal strip)
    const int low = inner[i];
    const int high = std::min(bound[i], i == 0 ? bound[0] : inner[i - 1]);
    for (int v = low; v <= high && v - low <= left; ++v) {
      rows[i] = v;
      fill(i + 1, left - (v - low));
    }
    rows[i] = 0;
  };
  fill(0, size);
  return out;
}

}  // namespace detail

/// Monomial coefficients of P_lambda(x_1..x_nvars; t), via the tableau
/// formula P = sum_T psi_T(t) x^T.
inline PartitionMap hl_monomial_expansion(const Partition& lambda, const Rational& t, int nvars) {
  if (nvars < lambda.length()) throw DomainError("hl_monomial_expansion: fewer variables than parts");
  PartitionMap out;
  for (const auto& mu : enumerate_partitions(lambda.size())) {
    if (mu.length() > nvars) continue;
    // Sum over chains of horizontal strips with sizes mu_1, mu_2, ...
    std::map<Partition, Rational> layer{{Partition(), Rational(1)}};
    for (int part : mu.parts()) {
      std::map<Partition, Rational> next;
      for (const auto& [inner, weight] : layer) {
        for (const auto& outer : detail::horizontal_strips(inner, lambda, part)) {
          next[outer] += weight * detail::hl_strip_weight(outer, inner, t);
        }
      }
      layer = std::move(next);
    }
    auto it = layer.find(lambda);
    if (it != layer.end() && it->second != 0) out[mu] = it->second;
  }
  return out;
}

/// Coefficients c_lambda with p_rho = sum_lambda c_lambda P_lambda(; t),
/// by unitriangular elimination in the monomial basis with |rho| variables.
inline PartitionMap power_to_hl(const Partition& rho, const Rational& t) {
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<Partition, Rational>, PartitionMap> table;
  };
  static Memo memo;
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.table.find({rho, t}); it != memo.table.end()) return it->second;
  }
  const int n = rho.size();
  const auto parts = enumerate_partitions(n);  // reverse lex: dominance-compatible, largest first
  PartitionMap residual;
  for (const auto& mu : parts) {
    const Integer c = power_monomial_coefficient(rho, mu);
    if (c != 0) residual[mu] = Rational(c);
  }
  PartitionMap out;
  for (const auto& lambda : parts) {
    auto it = residual.find(lambda);
    if (it == residual.end() || it->second == 0) continue;
    const Rational c = it->second;
    out[lambda] = c;
    const auto expansion = hl_monomial_expansion(lambda, t, std::max(n, 1));
    ensure(expansion.count(lambda) && expansion.at(lambda) == 1, "power_to_hl: P_lambda not monic");
    for (const auto& [mu, coeff] : expansion) residual[mu] -= c * coeff;
  }
  for (const auto& [mu, c] : residual) {
    if (c != 0) throw InternalError("power_to_hl: singular elimination for " + to_string(rho));
  }
  std::lock_guard lock(memo.mutex);
  memo.table.emplace(std::make_pair(rho, t), out);
  return out;
}

/// Basis of a multi-alphabet symmetric function expression.
enum class Basis { power_y, schur_y, power_x, hall_littlewood_x };

/// Exact linear combination of basis elements indexed by multipartitions
/// (character side for Y bases, element side for X bases). For
/// hall_littlewood_x the index mu denotes the normalized
/// P_mu = (-q)^{-n(mu)} prod_f P_{mu^(f)}(X^(f); (-q)^{-|f|}).
struct SymExpr {
  Basis basis = Basis::power_x;
  int degree = 0;
  std::int64_t field_modulus = 1;
  std::map<MultiPartition, Cyclotomic> terms;

  void add(const MultiPartition& index, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Cyclotomic coefficient(const MultiPartition& index) const {
    auto it = terms.find(index);
    return it == terms.end() ? Cyclotomic(field_modulus) : it->second;
  }
};

inline Side basis_side(Basis b) {
  return (b == Basis::power_y || b == Basis::schur_y) ? Side::character : Side::element;
}

/// Product of two power_x expressions (power sums multiply by merging parts).
inline SymExpr multiply_power_x(const SymExpr& a, const SymExpr& b) {
  require(a.basis == Basis::power_x && b.basis == Basis::power_x, "multiply_power_x: wrong basis");
  require(a.field_modulus == b.field_modulus, "multiply_power_x: field mismatch");
  SymExpr out{Basis::power_x, a.degree + b.degree, a.field_modulus, {}};
  for (const auto& [ia, ca] : a.terms) {
    for (const auto& [ib, cb] : b.terms) {
      MultiPartition index = ia;
      for (const auto& [orbit, part] : ib.entries()) {
        std::vector<int> parts = index.at(orbit).parts();
        parts.insert(parts.end(), part.parts().begin(), part.parts().end());
        std::sort(parts.begin(), parts.end(), std::greater<>());
        index.set(orbit, Partition(std::move(parts)));
      }
      out.add(index, ca * cb);
    }
  }
  return out;
}

/// lcm of M_d for d = 1..n: one field holds every value at degree n.
inline std::int64_t table_field_modulus(const TorusContext& ctx, int n) {
  std::int64_t l = 1;
  for (int d = 1; d <= n; ++d) l = lcm64(l, ctx.modulus(d));
  return l;
}

/// p_k(Y^(phi)) = (-1)^{k|phi|-1} sum_{a in T_{k|phi|}} xi(a) p_{k|phi|/|f_a|}(X^(f_a)),
/// with xi the minimal character of phi lifted to level k|phi|. Values land
/// in Q(zeta_field_modulus), which must contain zeta_{M_{k|phi|}}.
inline SymExpr transform_y_to_x(const TorusContext& ctx, int k, const OrbitLabel& phi, std::int64_t field_modulus) {
  require(k >= 1, "transform_y_to_x: k must be positive");
  require(phi.side == Side::character, "transform_y_to_x: expected a character orbit");
  const int level = k * phi.size();
  const std::int64_t m = ctx.modulus(level);
  require(field_modulus % m == 0, "transform_y_to_x: field too small");
  const std::int64_t step = field_modulus / m;
  const std::int64_t xi = character_lift(ctx, phi.level, level, phi.min_exponent);
  const Rational sign = level % 2 == 1 ? 1 : -1;  // (-1)^{level - 1}

  SymExpr out{Basis::power_x, level, field_modulus, {}};
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (std::int64_t e = 0; e < m; ++e) {
    if (seen[static_cast<std::size_t>(e)]) continue;
    const auto members = orbit_at_level(ctx, level, e);
    std::vector<Rational> raw(static_cast<std::size_t>(field_modulus), Rational(0));
    for (auto a : members) {
      seen[static_cast<std::size_t>(a)] = 1;
      raw[static_cast<std::size_t>(mulmod(mulmod(xi, a, m), step, field_modulus))] += sign;
    }
    const OrbitLabel f = frobenius_orbit(ctx, Side::element, level, e);
    MultiPartition index(Side::element);
    index.set(f, Partition::row(level / f.size()));
    out.add(index, Cyclotomic::from_polynomial(field_modulus, std::move(raw)));
  }
  return out;
}

inline SymExpr transform_y_to_x(const TorusContext& ctx, int k, const OrbitLabel& phi) {
  return transform_y_to_x(ctx, k, phi, ctx.modulus(k * phi.size()));
}

/// Rewrites a power_x expression in the normalized Hall-Littlewood basis.
inline SymExpr power_x_to_hl(const TorusContext& ctx, const SymExpr& expr) {
  require(expr.basis == Basis::power_x, "power_x_to_hl: wrong basis");
  SymExpr out{Basis::hall_littlewood_x, expr.degree, expr.field_modulus, {}};
  const Rational minus_q = -ctx.q();
  for (const auto& [index, coeff] : expr.terms) {
    // Partial products over the orbits of this term.
    std::vector<std::pair<MultiPartition, Rational>> partial{{MultiPartition(Side::element), Rational(1)}};
    for (const auto& [orbit, rho] : index.entries()) {
      const Rational t = pow(minus_q, -orbit.size());
      std::vector<std::pair<MultiPartition, Rational>> next;
      for (const auto& [lambda, c] : power_to_hl(rho, t)) {
        for (const auto& [mp, w] : partial) {
          MultiPartition extended = mp;
          extended.set(orbit, lambda);
          next.emplace_back(std::move(extended), w * c);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [mu, w] : partial) {
      // prod_f P_{mu^(f)} = (-q)^{n(mu)} * normalized P_mu
      out.add(mu, coeff * (w * pow(minus_q, n_stat(mu))));
    }
  }
  return out;
}

}  // namespace ucm
