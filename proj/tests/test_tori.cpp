#include "ucm/finite_field.hpp"
#include "ucm/multipartition.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ucm;

TEST(Torus, Moduli) {
  EXPECT_EQ(TorusContext(3, 1).modulus(1), 4);
  EXPECT_EQ(TorusContext(3, 2).modulus(2), 8);
  EXPECT_EQ(TorusContext(2, 1).modulus(1), 3);
  EXPECT_EQ(TorusContext(3, 4).top_level(), 12);
  EXPECT_THROW(TorusContext(3, 2).modulus(3), DomainError);
  // M_d divides M_e whenever d divides e
  const TorusContext ctx(5, 6);
  for (int e = 1; e <= 6; ++e) {
    for (int d = 1; d <= e; ++d) {
      if (e % d == 0) {
        EXPECT_EQ(ctx.modulus(e) % ctx.modulus(d), 0) << d << " | " << e;
      }
    }
  }
}

TEST(Torus, FrobeniusOrbitExamples) {
  const TorusContext ctx(3, 2);
  const auto o = frobenius_orbit(ctx, Side::element, 2, 1);
  EXPECT_EQ(o.size(), 2);
  EXPECT_EQ(orbit_members(ctx, o), (std::vector<std::int64_t>{1, 5}));
  const auto fixed = frobenius_orbit(ctx, Side::element, 1, 2);
  EXPECT_EQ(fixed.size(), 1);
  EXPECT_EQ(fixed.min_exponent, 2);
  for (int d : {1, 2}) {
    const auto zero = frobenius_orbit(ctx, Side::character, d, 0);
    EXPECT_EQ(zero, trivial_orbit(Side::character));
  }
}

TEST(Torus, OrbitsOfExactSize) {
  const TorusContext ctx(3, 2);
  const auto level1 = orbits_of_exact_size(ctx, Side::character, 1);
  ASSERT_EQ(level1.size(), 4u);
  for (int e = 0; e < 4; ++e) EXPECT_EQ(level1[static_cast<std::size_t>(e)].min_exponent, e);
  const auto level2 = orbits_of_exact_size(ctx, Side::character, 2);
  ASSERT_EQ(level2.size(), 2u);
  EXPECT_EQ(orbit_members(ctx, level2[0]), (std::vector<std::int64_t>{1, 5}));
  EXPECT_EQ(orbit_members(ctx, level2[1]), (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(orbit_count(ctx, 2), (ctx.modulus(2) - ctx.modulus(1)) / 2);
}

TEST(Torus, MobiusCountsMatchBruteForce) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    const TorusContext ctx(q, 6);
    for (int d = 1; d <= 6; ++d) {
      const std::int64_t m = ctx.modulus(d);
      std::int64_t exact = 0;
      for (std::int64_t e = 0; e < m; ++e) {
        // orbit size by direct iteration of e -> -q e
        std::int64_t x = e;
        int size = 0;
        do {
          x = mod(static_cast<std::int64_t>(static_cast<__int128>(-q) * x % m), m);
          ++size;
        } while (x != e);
        if (size == d) ++exact;
      }
      EXPECT_EQ(exact % d, 0);
      EXPECT_EQ(orbit_count(ctx, d), exact / d) << "q = " << q << ", d = " << d;
      EXPECT_EQ(static_cast<std::int64_t>(orbits_of_exact_size(ctx, Side::element, d).size()), exact / d);
    }
  }
}

TEST(Torus, OrbitsPartitionEachLevel) {
  const TorusContext ctx(3, 4);
  for (int d = 1; d <= 4; ++d) {
    std::int64_t total = 0;
    std::set<std::int64_t> members;
    for (int s = 1; s <= d; ++s) {
      if (d % s) continue;
      for (const auto& o : orbits_of_exact_size(ctx, Side::element, s)) {
        for (auto e : orbit_members(ctx, o)) {
          EXPECT_TRUE(members.insert(element_lift(ctx, s, d, e)).second);
        }
        total += o.size();
      }
    }
    EXPECT_EQ(total, ctx.modulus(d));
  }
}

TEST(Torus, ConjugateOrbit) {
  const TorusContext ctx(3, 2);
  const OrbitLabel a{Side::character, 2, 1};
  EXPECT_EQ(conjugate_orbit(ctx, a), (OrbitLabel{Side::character, 2, 3}));
  EXPECT_EQ(conjugate_orbit(ctx, trivial_orbit(Side::character)), trivial_orbit(Side::character));
  EXPECT_EQ(conjugate_orbit(ctx, sigma_orbit(ctx, Side::character)), sigma_orbit(ctx, Side::character));
  const TorusContext big(5, 4);
  for (const auto& o : orbit_universe(big, Side::character, 4)) EXPECT_EQ(conjugate_orbit(big, conjugate_orbit(big, o)), o);
}

TEST(Torus, NormIsTheIdentityOnCompatibleGenerators) {
  // N_{m,r} is a homomorphism sending g_m to g_r, so g_m^e maps to g_r^e.
  const TorusContext ctx(3, 4);
  for (int m = 1; m <= 4; ++m) {
    for (int r = 1; r <= m; ++r) {
      if (m % r) continue;
      for (std::int64_t e = 0; e < ctx.modulus(m); ++e) EXPECT_EQ(norm(ctx, m, r, e), mod(e, ctx.modulus(r)));
    }
  }
  EXPECT_THROW(norm(ctx, 3, 2, 1), DomainError);
  EXPECT_EQ(norm(ctx, 2, 1, 0), 0);
  EXPECT_EQ(std::gcd(norm(ctx, 2, 1, 1), ctx.modulus(1)), 1);
}

TEST(Torus, NormTransitivity) {
  const TorusContext ctx(3, 4);
  for (std::int64_t e = 0; e < ctx.modulus(4); ++e) {
    EXPECT_EQ(norm(ctx, 2, 1, norm(ctx, 4, 2, e)), norm(ctx, 4, 1, e));
  }
}

TEST(Torus, NormInTheActualField) {
  // T_2 for q = 3 is the order-8 subgroup of F_81^x; the norm x -> x * x^{-3}
  // maps a generator onto a generator of T_1.
  const auto f3 = make_field(3);
  const ExtensionField f81(f3, 4);
  const FqPoly g = f81.element_of_order(8);
  const FqPoly image = f81.mul(g, f81.pow(g, 80 - 3));
  const FqPoly one = FqPoly::constant(f3, 1);
  EXPECT_FALSE(f81.pow(image, 2) == one);
  EXPECT_TRUE(f81.pow(image, 4) == one);
}

TEST(Torus, PairingExamples) {
  const TorusContext ctx(3, 4);
  for (int m = 1; m <= 4; ++m) {
    for (std::int64_t e = 0; e < ctx.modulus(m); ++e) {
      EXPECT_EQ(pairing(ctx, 1, 0, m, e), Cyclotomic::from_rational(ctx.modulus(m), 1));
    }
    EXPECT_EQ(pairing(ctx, 1, ctx.half_exponent(), m, 1), Cyclotomic::from_rational(ctx.modulus(m), -1));
  }
  EXPECT_EQ(pairing(ctx, 1, 1, 1, 1), zeta_pow(4, 1));
  EXPECT_THROW(pairing(ctx, 3, 1, 4, 1), DomainError);
}

TEST(Torus, PairingIdentity) {
  const TorusContext ctx(3, 4);
  for (int m = 1; m <= 4; ++m) {
    for (int r = 1; r <= m; ++r) {
      if (m % r) continue;
      const std::int64_t l = ctx.modulus(m);
      for (std::int64_t c = 0; c < ctx.modulus(r); ++c) {
        for (std::int64_t e = 0; e < ctx.modulus(r); ++e) {
          const auto at_m = pairing(ctx, r, c, m, element_lift(ctx, r, m, e));
          const auto at_r = pairing(ctx, r, c, r, e).embed(l);
          Cyclotomic power = Cyclotomic::from_rational(l, 1);
          for (int i = 0; i < m / r; ++i) power *= at_r;
          EXPECT_EQ(at_m, power) << "r=" << r << " m=" << m << " c=" << c << " e=" << e;
        }
      }
    }
  }
}

TEST(Torus, DeltaMap) {
  const TorusContext ctx(3, 4);
  EXPECT_EQ(delta_orbit(sigma_orbit(ctx, Side::character)), sigma_orbit(ctx, Side::element));
  EXPECT_EQ(delta_orbit(trivial_orbit(Side::character)), trivial_orbit(Side::element));
  MultiPartition theta(Side::character, {{OrbitLabel{Side::character, 2, 1}, Partition{1}}});
  MultiPartition phi(Side::element, {{OrbitLabel{Side::element, 2, 1}, Partition{1}}});
  EXPECT_EQ(delta_map(theta), phi);
  for (int n = 0; n <= 4; ++n) {
    const auto thetas = enumerate_multipartitions(ctx, n, Side::character);
    std::set<MultiPartition> images;
    for (const auto& t : thetas) {
      EXPECT_EQ(delta_inverse(delta_map(t)), t);
      images.insert(delta_map(t));
    }
    const auto phis = enumerate_multipartitions(ctx, n, Side::element);
    EXPECT_EQ(images, std::set<MultiPartition>(phis.begin(), phis.end()));
  }
}

TEST(Torus, ToLevelOne) {
  const TorusContext ctx(3, 4);
  EXPECT_EQ(to_level_one(ctx, 3, 0), 0);
  for (int d = 1; d <= 4; ++d) {
    EXPECT_EQ(to_level_one(ctx, d, character_lift(ctx, 1, d, ctx.half_exponent())), ctx.half_exponent());
  }
  std::set<std::int64_t> images;
  for (std::int64_t c : {0, 2, 4, 6}) images.insert(to_level_one(ctx, 2, c));
  EXPECT_EQ(images, (std::set<std::int64_t>{0, 1, 2, 3}));
  EXPECT_THROW(to_level_one(ctx, 2, 1), DomainError);
}

TEST(Torus, OddSelfConjugateOrbitsAreTrivialOrSigma) {
  for (std::int64_t q : {3, 5}) {
    const TorusContext ctx(q, 5);
    for (int d = 1; d <= 5; d += 2) {
      for (const auto& o : orbits_of_exact_size(ctx, Side::character, d)) {
        if (conjugate_orbit(ctx, o) != o) continue;
        EXPECT_TRUE(o == trivial_orbit(Side::character) || o == sigma_orbit(ctx, Side::character))
            << to_string(o) << " for q = " << q;
      }
    }
  }
}

TEST(Torus, OrbitText) {
  const OrbitLabel o{Side::character, 2, 1};
  EXPECT_EQ(to_string(o), "theta:2:1");
  EXPECT_EQ(parse_orbit("theta:2:1"), o);
  EXPECT_EQ(parse_orbit("phi:1:3"), (OrbitLabel{Side::element, 1, 3}));
  EXPECT_THROW(parse_orbit("psi:1:0"), DomainError);
  EXPECT_THROW(parse_orbit("theta:x:0"), DomainError);
}
