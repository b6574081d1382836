#pragma once

// Self-dual polynomials over F_q and the map from real semisimple
// characters to them.

#include "ucm/characters.hpp"
#include "ucm/finite_field.hpp"

#include <map>
#include <vector>

namespace ucm {

/// h(0)^{-1} x^d h(1/x)
inline FqPoly dual_poly(const FqPoly& h) {
  require(!h.is_zero() && h.degree() >= 1, "dual_poly: expected a non-constant polynomial");
  require(h.is_monic(), "dual_poly: expected a monic polynomial");
  require(h.coeff(0) != 0, "dual_poly: constant term is zero");
  std::vector<int> rev(h.coeffs().rbegin(), h.coeffs().rend());
  return FqPoly(h.field(), std::move(rev)).scaled(h.field()->inv(h.coeff(0)));
}

inline bool is_self_dual(const FqPoly& h) {
  return h.degree() >= 1 && h.is_monic() && h.coeff(0) != 0 && dual_poly(h) == h;
}

struct SelfDualFactorization {
  int s = 0;  // multiplicity of x - 1
  int t = 0;  // multiplicity of x + 1
  std::vector<std::pair<FqPoly, int>> pairs;      // v != dual(v); dual(v) has the same multiplicity
  std::vector<std::pair<FqPoly, int>> selfduals;  // r = dual(r) irreducible, r != x +- 1
};

inline FqPoly reassemble(const FieldPtr& field, const SelfDualFactorization& fac) {
  FqPoly out = FqPoly::constant(field, 1);
  auto times = [&](const FqPoly& f, int k) {
    for (int i = 0; i < k; ++i) out = out * f;
  };
  times(FqPoly::x_plus(field, field->minus_one()), fac.s);
  times(FqPoly::x_plus(field, 1), fac.t);
  for (const auto& [v, k] : fac.pairs) {
    times(v, k);
    times(dual_poly(v), k);
  }
  for (const auto& [r, k] : fac.selfduals) times(r, k);
  return out;
}

/// Every monic polynomial of degree d over the field, in encoding order.
inline std::vector<FqPoly> monic_polynomials(const FieldPtr& field, int d) {
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= field->order();
    if (count > 50'000'000) throw ResourceError("monic_polynomials: too many candidates");
  }
  std::vector<FqPoly> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t code = 0; code < count; ++code) {
    std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
    std::int64_t r = code;
    for (int i = 0; i < d; ++i, r /= field->order()) c[static_cast<std::size_t>(i)] = static_cast<int>(r % field->order());
    c[static_cast<std::size_t>(d)] = 1;
    out.emplace_back(field, std::move(c));
  }
  return out;
}

/// Factorization of a self-dual polynomial by trial division with monic
/// polynomials of increasing degree.
inline SelfDualFactorization self_dual_factorization(const FqPoly& g) {
  require(is_self_dual(g), "self_dual_factorization: input is not self-dual");
  const FieldPtr& field = g.field();
  require(field->characteristic() != 2, "self_dual_factorization: characteristic 2 is unsupported");
  SelfDualFactorization fac;
  FqPoly rest = g;
  auto strip = [&](const FqPoly& f) {
    int k = 0;
    while (rest.degree() >= f.degree()) {
      auto [quot, rem] = rest.divmod(f);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++k;
    }
    return k;
  };
  fac.s = strip(FqPoly::x_plus(field, field->minus_one()));
  fac.t = strip(FqPoly::x_plus(field, 1));
  auto record = [&](const FqPoly& v, int k) {
    const FqPoly w = dual_poly(v);
    if (w == v) {
      fac.selfduals.emplace_back(v, k);
    } else {
      ensure(strip(w) == k, "self_dual_factorization: dual factor multiplicity differs");
      fac.pairs.emplace_back(v, k);
    }
  };
  for (int d = 1; rest.degree() > 0; ++d) {
    if (2 * d > rest.degree()) {
      // no factor of degree < d is left, so the remainder is irreducible
      const FqPoly v = rest;
      rest = FqPoly::constant(field, 1);
      record(v, 1);
      break;
    }
    for (const auto& v : monic_polynomials(field, d)) {
      if (v.coeff(0) == 0) continue;
      const int k = strip(v);
      if (k > 0) record(v, k);
      if (2 * d > rest.degree()) break;
    }
  }
  ensure(rest.degree() == 0 && rest.coeff(0) == 1, "self_dual_factorization: incomplete factorization");
  ensure(reassemble(field, fac) == g, "self_dual_factorization: reassembly mismatch");
  return fac;
}

/// Which constant terms to enumerate: -1, +1 or both.
enum class ConstantFilter { minus_one, plus_one, any };

inline bool accepts(const FieldPtr& field, ConstantFilter filter, int constant) {
  switch (filter) {
    case ConstantFilter::minus_one:
      return constant == field->minus_one();
    case ConstantFilter::plus_one:
      return constant == 1;
    case ConstantFilter::any:
      break;
  }
  return true;
}

/// Self-dual monic polynomials of degree n, built from the coefficient
/// symmetry a_{n-i} = a_0 a_i with a_0 = +-1. Sorted.
inline std::vector<FqPoly> enumerate_self_dual(const FieldPtr& field, int n, ConstantFilter filter = ConstantFilter::any) {
  require(n >= 1, "enumerate_self_dual: degree must be positive");
  if (field->characteristic() == 2) throw DomainError("enumerate_self_dual: characteristic 2 is unsupported");
  std::vector<FqPoly> out;
  for (int a0 : {1, field->minus_one()}) {
    if (!accepts(field, filter, a0)) continue;
    // free coefficients a_1 .. a_{ceil(n/2)-1}, plus the middle one when n is even and a0 = 1
    const int half = (n - 1) / 2;
    const bool free_middle = n % 2 == 0 && a0 == 1;
    const int slots = half + (free_middle ? 1 : 0);
    std::int64_t count = 1;
    for (int i = 0; i < slots; ++i) count *= field->order();
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
      c[0] = a0;
      c[static_cast<std::size_t>(n)] = 1;
      std::int64_t r = code;
      for (int i = 1; i <= slots; ++i, r /= field->order()) {
        const int a = static_cast<int>(r % field->order());
        c[static_cast<std::size_t>(i)] = a;
        c[static_cast<std::size_t>(n - i)] = field->mul(a0, a);
      }
      out.emplace_back(field, std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Same set by filtering all q^n monic polynomials. Sorted.
inline std::vector<FqPoly> enumerate_self_dual_bruteforce(const FieldPtr& field, int n,
                                                          ConstantFilter filter = ConstantFilter::any) {
  std::vector<FqPoly> out;
  for (auto& h : monic_polynomials(field, n)) {
    if (h.coeff(0) != 0 && accepts(field, filter, h.coeff(0)) && dual_poly(h) == h) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Integer count_by_constant(const FieldPtr& field, int n, int constant) {
  require(constant == 1 || constant == -1, "count_by_constant: constant must be +1 or -1");
  return enumerate_self_dual(field, n, constant == 1 ? ConstantFilter::plus_one : ConstantFilter::minus_one).size();
}

/// The torus elements g_d^e live in F_{q^{2d}}; one extension and one
/// generator of T_d per level.
class TorusRealization {
 public:
  TorusRealization(const TorusContext& ctx, FieldPtr field) : ctx_(ctx), field_(std::move(field)) {
    require(field_->order() == ctx.q(), "TorusRealization: field order differs from q");
  }

  /// prod_{gamma} (x + gamma) over the members of the given orbits, which
  /// share one level, as a polynomial over the extension.
  std::vector<FqPoly> orbit_factor(const std::vector<OrbitLabel>& orbits) {
    require(!orbits.empty(), "TorusRealization: no orbits");
    const Level& level = at(orbits.front().level);
    std::vector<FqPoly> poly{FqPoly::constant(field_, 1)};
    for (const auto& f : orbits) {
      require(f.level == orbits.front().level, "TorusRealization: orbits at different levels");
      for (auto e : orbit_members(ctx_, f)) {
        const FqPoly gamma = level.extension->pow(level.generator, e);
        std::vector<FqPoly> next(poly.size() + 1, FqPoly(field_, {}));
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] = next[i + 1] + poly[i];
          next[i] = next[i] + level.extension->mul(poly[i], gamma);
        }
        poly = std::move(next);
      }
    }
    return poly;
  }

  /// Collapses an extension-valued polynomial whose coefficients lie in F_q.
  FqPoly to_base(const std::vector<FqPoly>& poly) const {
    std::vector<int> c;
    for (const auto& a : poly) {
      ensure(a.degree() <= 0, "TorusRealization: coefficient outside the base field");
      c.push_back(a.coeff(0));
    }
    return FqPoly(field_, std::move(c));
  }

 private:
  struct Level {
    std::unique_ptr<ExtensionField> extension;
    FqPoly generator;
  };

  const Level& at(int d) {
    auto it = levels_.find(d);
    if (it != levels_.end()) return it->second;
    Level level;
    level.extension = std::make_unique<ExtensionField>(field_, 2 * d);
    level.generator = level.extension->element_of_order(ctx_.modulus(d));
    return levels_.emplace(d, std::move(level)).first->second;
  }

  const TorusContext& ctx_;
  FieldPtr field_;
  std::map<int, Level> levels_;
};

/// rho(Delta(lambda)) = prod_f prod_{gamma in f} (x + gamma)^{m_f} for a
/// real semisimple character label.
inline FqPoly char_to_polynomial(const TorusContext& ctx, const FieldPtr& field, const MultiPartition& lambda) {
  require(is_real(ctx, lambda), "char_to_polynomial: character is not real");
  require(is_semisimple(lambda), "char_to_polynomial: character is not semisimple");
  TorusRealization torus(ctx, field);
  const MultiPartition mu = delta_map(lambda);
  FqPoly out = FqPoly::constant(field, 1);
  std::map<OrbitLabel, bool> done;
  for (const auto& [f, part] : mu.entries()) {
    if (done[f]) continue;
    const OrbitLabel g = conjugate_orbit(ctx, f);
    std::vector<OrbitLabel> orbits{f};
    if (g != f) {
      // f and its conjugate carry the same column; their union is defined over F_q.
      ensure(mu.at(g) == part, "char_to_polynomial: conjugate orbits carry different partitions");
      orbits.push_back(g);
      done[g] = true;
    }
    const auto factor = torus.orbit_factor(orbits);
    const FqPoly base = torus.to_base(factor);
    for (int i = 0; i < part.size(); ++i) out = out * base;
    done[f] = true;
  }
  return out;
}

}  // namespace ucm
