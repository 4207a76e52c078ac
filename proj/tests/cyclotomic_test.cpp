#include <random>

#include <gtest/gtest.h>

#include "ngcat/cyclotomic.hpp"

namespace ngcat {
namespace {

CycInt z(long long k) { return CycInt::root_of_unity(k); }
CycInt integer(long long v) { return CycInt::from_integer(v); }

CycInt random_element(std::mt19937_64& rng) {
  CycInt out(36);
  for (int t = 0; t < 4; ++t) {
    const auto k = static_cast<long long>(rng() % 36);
    const auto c = static_cast<long long>(rng() % 7) - 3;
    out += integer(c) * z(k);
  }
  return out;
}

TEST(CyclotomicPolynomial, KnownValues) {
  const auto& phi36 = cyclotomic_polynomial(36);
  ASSERT_EQ(phi36.size(), 13U);
  for (std::size_t i = 0; i < phi36.size(); ++i) {
    const int expected = i == 0 ? 1 : i == 6 ? -1 : i == 12 ? 1 : 0;
    EXPECT_EQ(phi36[i], expected) << "degree " << i;
  }
  EXPECT_EQ(euler_phi(36), 12);
  EXPECT_EQ(cyclotomic_polynomial(1).size(), 2U);
  EXPECT_EQ(cyclotomic_polynomial(3).size(), 3U);
}

TEST(RootOfUnity, Basics) {
  EXPECT_EQ(z(0), integer(1));
  EXPECT_EQ(z(18), integer(-1));
  EXPECT_EQ(z(36), integer(1));
  EXPECT_EQ(z(-1), z(35));
  EXPECT_TRUE((integer(1) + z(12) + z(24)).is_zero());
  const auto w = z(12).approx();
  EXPECT_NEAR(w.real(), -0.5, 1e-12);
  EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-12);
}

TEST(RootOfUnity, PowersMultiplyExhaustively) {
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b) EXPECT_EQ(z(a) * z(b), z(a + b));
  CycInt p = integer(1);
  for (int i = 0; i < 36; ++i) p *= z(1);
  EXPECT_EQ(p, integer(1));
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(mul(z(9), z(9)), integer(-1));
  CycInt s(36);
  for (int j = 0; j < 3; ++j) s = add(s, z(12 * j));
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(conj(integer(2) * z(24)), integer(2) * z(12));
  EXPECT_EQ(neg(z(0)), z(18));
  EXPECT_THROW(z(1) + CycInt::root_of_unity(1, 12), CyclotomicError);
}

TEST(Arithmetic, RationalIntegerAndApprox) {
  EXPECT_EQ(integer(1).as_rational_integer(), 1);
  EXPECT_EQ(z(12).as_rational_integer(), std::nullopt);
  const CycInt v = integer(2) * z(24);
  EXPECT_EQ(v.as_rational_integer(), std::nullopt);
  EXPECT_NEAR(v.approx().real(), -1.0, 1e-9);
  EXPECT_NEAR(v.approx().imag(), -std::sqrt(3.0), 1e-9);
  EXPECT_EQ((integer(4) * z(18)).as_rational_integer(), -4);
}

TEST(Arithmetic, ExactDivision) {
  const CycInt v = integer(4) * z(7) - integer(8);
  EXPECT_TRUE(v.divided_by(4).is_integral());
  EXPECT_FALSE(v.divided_by(8).is_integral());
  EXPECT_EQ(v.divided_by(4) * integer(4), v);
  EXPECT_THROW(v.divided_by(0), CyclotomicError);
}

TEST(Arithmetic, Rendering) {
  EXPECT_EQ(CycInt(36).to_string(), "0");
  EXPECT_EQ(integer(-1).to_string(), "-1");
  EXPECT_EQ((integer(2) - z(6)).to_string(), "2 - ζ36^6");
  EXPECT_EQ((integer(2) * z(24)).to_string(), "-2*ζ36^6");
}

TEST(Properties, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const CycInt a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(conj(a * b), conj(a) * conj(b));
    EXPECT_EQ(conj(conj(a)), a);
  }
}

TEST(Properties, ReductionIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const CycInt a = random_element(rng);
    EXPECT_EQ(a * integer(1), a);
    EXPECT_EQ(a + CycInt(36), a);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
      EXPECT_EQ((a * z(0)).coeffs()[k], a.coeffs()[k]);
    }
  }
}

TEST(Properties, NormMatchesFloatingPoint) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const CycInt a = random_element(rng);
    const auto n = (a * conj(a)).approx();
    EXPECT_NEAR(n.real(), std::norm(a.approx()), 1e-9);
    EXPECT_NEAR(n.imag(), 0.0, 1e-9);
  }
}

}  // namespace
}  // namespace ngcat
