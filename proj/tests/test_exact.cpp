#include "ucm/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ucm;

namespace {

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly x_power_minus_one(std::int64_t m) {
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  return p;
}

Cyclotomic random_element(std::mt19937& rng, std::int64_t m) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> raw(static_cast<std::size_t>(m));
  for (auto& c : raw) c = Rational(num(rng), den(rng));
  return Cyclotomic::from_polynomial(m, raw);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (IntPoly{1, 0, 0, 0, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), DomainError);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXmMinusOne) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    IntPoly product{1};
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d == 0) product = multiply(product, cyclotomic_polynomial(d));
    }
    EXPECT_EQ(product, x_power_minus_one(m)) << "M = " << m;
    const auto phi = cyclotomic_polynomial(m);
    EXPECT_EQ(static_cast<std::int64_t>(phi.size()) - 1, euler_phi(m));
    EXPECT_EQ(phi.back(), 1);
  }
}

TEST(CyclotomicPolynomial, DividesXmMinusOne) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    // long division of x^m - 1 by the monic Phi_m leaves no remainder
    IntPoly rem = x_power_minus_one(m);
    const auto phi = cyclotomic_polynomial(m);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > d;) {
      const Integer c = rem[i];
      for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < d; ++i) EXPECT_EQ(rem[i], 0) << "M = " << m;
  }
}

TEST(ZetaPow, Examples) {
  EXPECT_EQ(zeta_pow(8, 4), Cyclotomic::from_rational(8, -1));
  EXPECT_EQ(zeta_pow(8, 8), Cyclotomic::from_rational(8, 1));
  const auto z = zeta_pow(4, 1);
  EXPECT_EQ(z.coeffs(), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(zeta_pow(8, -1), zeta_pow(8, 7));
}

TEST(ZetaPow, MultiplicativeOrder) {
  for (std::int64_t m = 1; m <= 30; ++m) {
    const auto one = Cyclotomic::from_rational(m, 1);
    for (std::int64_t k = 0; k < m; ++k) {
      const auto z = zeta_pow(m, k);
      const std::int64_t expected = m / std::gcd(m, k);
      Cyclotomic power = z;
      std::int64_t order = 1;
      while (!(power == one)) {
        power *= z;
        ++order;
      }
      EXPECT_EQ(order, expected) << "M = " << m << ", k = " << k;
    }
  }
}

TEST(CyclotomicArith, Examples) {
  EXPECT_EQ(zeta_pow(8, 1) * zeta_pow(8, 7), Cyclotomic::from_rational(8, 1));
  const auto one = Cyclotomic::from_rational(8, 1);
  const auto z2 = zeta_pow(8, 2);
  EXPECT_EQ((one + z2) * (one - z2), Cyclotomic::from_rational(8, 2));
  EXPECT_EQ(zeta_pow(8, 1).conj(), zeta_pow(8, 7));
  EXPECT_THROW(zeta_pow(8, 1) + zeta_pow(4, 1), DomainError);
  EXPECT_THROW(zeta_pow(8, 1) * zeta_pow(4, 1), DomainError);
}

TEST(CyclotomicArith, RingLawsOnRandomSamples) {
  std::mt19937 rng(12345);
  for (std::int64_t m : {1, 3, 4, 7, 8, 12, 15, 24, 56}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(rng, m);
      const auto b = random_element(rng, m);
      const auto c = random_element(rng, m);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a.conj().conj(), a);
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    }
  }
}

TEST(CyclotomicArith, EmbeddingIsARingMap) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(rng, 8);
    const auto b = random_element(rng, 8);
    EXPECT_EQ((a * b).embed(56), a.embed(56) * b.embed(56));
    EXPECT_EQ(a.conj().embed(56), a.embed(56).conj());
  }
  EXPECT_EQ(zeta_pow(8, 3).embed(56), zeta_pow(56, 21));
  EXPECT_THROW(zeta_pow(8, 1).embed(12), DomainError);
}

TEST(Classify, Examples) {
  const auto r = classify(Cyclotomic::from_rational(8, Rational(3, 2)));
  EXPECT_EQ(r.kind, ValueKind::rational);
  EXPECT_EQ(*r.value, Rational(3, 2));
  EXPECT_EQ(classify(zeta_pow(8, 1) + zeta_pow(8, 7)).kind, ValueKind::real_irrational);
  EXPECT_EQ(classify(zeta_pow(8, 2)).kind, ValueKind::non_real);
}

TEST(Rational, AlwaysReduced) {
  const Rational r = Rational(6) / Rational(-4);
  EXPECT_EQ(boost::multiprecision::numerator(r), -3);
  EXPECT_EQ(boost::multiprecision::denominator(r), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("-6/4"), r);
  EXPECT_EQ(parse_rational("6/-4"), r);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(CyclotomicText, RoundTrip) {
  std::mt19937 rng(99);
  EXPECT_EQ(to_string(Cyclotomic(8)), "0");
  EXPECT_EQ(to_string(zeta_pow(8, 1) * Rational(-1, 2) + Cyclotomic::from_rational(8, 1)), "1 - 1/2*z");
  EXPECT_EQ(field_name(8), "Q(zeta_8)");
  for (std::int64_t m : {1, 4, 8, 9, 24}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_element(rng, m);
      EXPECT_EQ(parse_cyclotomic(m, to_string(a)), a);
    }
  }
  EXPECT_EQ(parse_cyclotomic(8, "z^4"), Cyclotomic::from_rational(8, -1));
  EXPECT_THROW(parse_cyclotomic(8, "2z"), DomainError);
}

TEST(Exact, OverflowIsReported) {
  EXPECT_THROW(checked_pow(10, 30), ResourceError);
  EXPECT_EQ(checked_pow(3, 4), 81);
}
