#pragma once

// Character values through the characteristic map, full character tables
// and Deligne-Lusztig labels.

#include "ucm/classes.hpp"
#include "ucm/parallel.hpp"
#include "ucm/symfunc.hpp"

#include <map>
#include <memory>
#include <vector>

namespace ucm {

/// (-1)^{floor(n/2) + n(lambda)}: sign relating chi^lambda and s_lambda.
inline int irreducible_sign(const MultiPartition& lambda) {
  return (lambda.size() / 2 + n_stat(lambda)) % 2 == 0 ? 1 : -1;
}

/// (-1)^{|nu| + l(nu)}: sign relating R_nu and p_nu.
inline int deligne_lusztig_sign(const MultiPartition& nu) {
  return (nu.size() + length(nu)) % 2 == 0 ? 1 : -1;
}

/// prod_phi p_{rho^(phi)}(Y^(phi)) in the normalized Hall-Littlewood basis.
inline SymExpr power_y_in_hl(const TorusContext& ctx, const MultiPartition& rho, std::int64_t field_modulus) {
  require(rho.side() == Side::character, "power_y_in_hl: expected a character-side multipartition");
  SymExpr product{Basis::power_x, 0, field_modulus, {}};
  product.add(MultiPartition(Side::element), Cyclotomic::from_rational(field_modulus, 1));
  for (const auto& [phi, part] : rho.entries()) {
    for (int k : part.parts()) product = multiply_power_x(product, transform_y_to_x(ctx, k, phi, field_modulus));
  }
  return power_x_to_hl(ctx, product);
}

/// All character-side multipartitions with the same support as lambda and
/// |rho^(phi)| = |lambda^(phi)|, with weight prod_phi chi^{lambda^(phi)}(rho^(phi)) / z.
inline std::vector<std::pair<MultiPartition, Rational>> schur_power_terms(const MultiPartition& lambda) {
  std::vector<std::pair<MultiPartition, Rational>> terms{{MultiPartition(Side::character), Rational(1)}};
  for (const auto& [phi, part] : lambda.entries()) {
    std::vector<std::pair<MultiPartition, Rational>> next;
    for (const auto& [rho, c] : schur_to_power(part)) {
      for (const auto& [mp, w] : terms) {
        MultiPartition extended = mp;
        extended.set(phi, rho);
        next.emplace_back(std::move(extended), w * c);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

/// Character value chi^lambda(mu) in Q(zeta_L), L = table_field_modulus.
inline Cyclotomic char_value(const TorusContext& ctx, const MultiPartition& lambda, const MultiPartition& mu) {
  require(lambda.side() == Side::character && mu.side() == Side::element, "char_value: label sides");
  require(lambda.size() == mu.size(), "char_value: size mismatch");
  const std::int64_t l = table_field_modulus(ctx, lambda.size());
  Cyclotomic value(l);
  for (const auto& [rho, w] : schur_power_terms(lambda)) value += power_y_in_hl(ctx, rho, l).coefficient(mu) * w;
  return value * Rational(irreducible_sign(lambda));
}

struct CharTable {
  int n = 0;
  std::int64_t field_modulus = 1;
  std::vector<MultiPartition> rows;     // character labels
  std::vector<ClassData> columns;       // class labels with their data
  std::vector<std::vector<Cyclotomic>> values;

  std::size_t column_index(const MultiPartition& mu) const {
    auto it = std::lower_bound(columns.begin(), columns.end(), mu,
                               [](const ClassData& c, const MultiPartition& m) { return c.label < m; });
    ensure(it != columns.end() && it->label == mu, "CharTable: unknown class " + to_string(mu));
    return static_cast<std::size_t>(it - columns.begin());
  }

  std::size_t row_index(const MultiPartition& lambda) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), lambda);
    ensure(it != rows.end() && *it == lambda, "CharTable: unknown character " + to_string(lambda));
    return static_cast<std::size_t>(it - rows.begin());
  }

  const Cyclotomic& at(const MultiPartition& lambda, const MultiPartition& mu) const {
    return values[row_index(lambda)][column_index(mu)];
  }
};

/// Rough work estimate for a full table: entries times field degree.
inline Integer char_table_cost(const TorusContext& ctx, int n) {
  const auto count = enumerate_multipartitions(ctx, n, Side::character).size();
  return Integer(count) * Integer(count) * Integer(euler_phi(table_field_modulus(ctx, n)));
}

struct CharTableOptions {
  unsigned jobs = 1;
  Integer max_cost = 2000000;
};

/// Full exact character table of U(n, F_{q^2}). Refuses with ResourceError
/// when the cost estimate exceeds options.max_cost.
inline CharTable char_table(const TorusContext& ctx, int n, const CharTableOptions& options = {}) {
  require(n >= 1, "char_table: n must be positive");
  const Integer cost = char_table_cost(ctx, n);
  if (cost > options.max_cost) {
    throw ResourceError("char_table: estimated cost " + cost.str() + " exceeds the bound " +
                        options.max_cost.str());
  }
  CharTable table;
  table.n = n;
  table.field_modulus = table_field_modulus(ctx, n);
  table.rows = enumerate_multipartitions(ctx, n, Side::character);
  table.columns = enumerate_classes(ctx, n);

  // Every row is a combination of the same power-sum images, one per
  // character-side multipartition.
  const auto& types = table.rows;
  std::vector<SymExpr> images(types.size());
  parallel_for(types.size(), options.jobs,
               [&](std::size_t i) { images[i] = power_y_in_hl(ctx, types[i], table.field_modulus); });

  table.values.assign(table.rows.size(), {});
  parallel_for(table.rows.size(), options.jobs, [&](std::size_t r) {
    const auto& lambda = table.rows[r];
    std::vector<Cyclotomic> row(table.columns.size(), Cyclotomic(table.field_modulus));
    for (const auto& [rho, w] : schur_power_terms(lambda)) {
      const auto& image = images[static_cast<std::size_t>(
          std::lower_bound(types.begin(), types.end(), rho) - types.begin())];
      for (const auto& [mu, c] : image.terms) row[table.column_index(mu)] += c * w;
    }
    const Rational sign = irreducible_sign(lambda);
    for (auto& v : row) v *= sign;
    table.values[r] = std::move(row);
  });
  return table;
}

/// Groups torus factors (level nu_i, character exponent theta_i) by
/// character orbit; each factor contributes the part nu_i / |orbit|.
inline MultiPartition dl_label(const TorusContext& ctx, const Partition& nu, const std::vector<std::int64_t>& theta) {
  require(static_cast<int>(theta.size()) == nu.length(), "dl_label: one character per part of nu");
  std::map<OrbitLabel, std::vector<int>> parts;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const int level = nu.parts()[i];
    const OrbitLabel phi = frobenius_orbit(ctx, Side::character, level, theta[i]);
    if (level % phi.size() != 0) throw DomainError("dl_label: orbit size does not divide the torus level");
    parts[phi].push_back(level / phi.size());
  }
  MultiPartition out(Side::character);
  for (auto& [phi, p] : parts) {
    std::sort(p.begin(), p.end(), std::greater<>());
    out.set(phi, Partition(std::move(p)));
  }
  return out;
}

/// R_nu as an integer combination of irreducible characters chi^lambda.
inline std::map<MultiPartition, Integer> dl_expand(const MultiPartition& nu) {
  require(nu.side() == Side::character, "dl_expand: expected a character-side multipartition");
  std::vector<std::pair<MultiPartition, Integer>> terms{{MultiPartition(Side::character), Integer(1)}};
  for (const auto& [phi, part] : nu.entries()) {
    std::vector<std::pair<MultiPartition, Integer>> next;
    for (const auto& [lambda, c] : power_to_schur(part)) {
      for (const auto& [mp, w] : terms) {
        MultiPartition extended = mp;
        extended.set(phi, lambda);
        next.emplace_back(std::move(extended), w * c);
      }
    }
    terms = std::move(next);
  }
  std::map<MultiPartition, Integer> out;
  const int sign = deligne_lusztig_sign(nu);
  for (const auto& [lambda, c] : terms) {
    const Integer coeff = c * sign * irreducible_sign(lambda);
    if (coeff != 0) out[lambda] += coeff;
  }
  return out;
}

}  // namespace ucm
