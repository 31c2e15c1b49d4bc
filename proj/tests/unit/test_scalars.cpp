#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "absdil/errors.hpp"
#include "absdil/scalars.hpp"
#include "properties.hpp"
#include "sampling.hpp"

using namespace absdil;

namespace {

// Reference decimals computed with 30-digit arithmetic.
constexpr double kSqrt2Over3 = 0.471404520791031682933896241403;
constexpr double kInv2Sqrt3 = 0.288675134594812882254574390251;

double ulp(double x) { return std::nextafter(std::abs(x), std::numeric_limits<double>::infinity()) - std::abs(x); }

ExactScalar b_const() { return ExactScalar::rational(-1, 2) + ExactScalar::imag_unit() * ExactScalar::sqrt3() * ExactScalar::rational(1, 6); }

}  // namespace

TEST(ExactArith, BasisProducts) {
  EXPECT_EQ(exact_arith(ExactOp::kMul, ExactScalar::sqrt2(), ExactScalar::sqrt3()), ExactScalar::sqrt6());
  EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt6(), ExactScalar(2) * ExactScalar::sqrt3());
  EXPECT_EQ(ExactScalar::sqrt3() * ExactScalar::sqrt6(), ExactScalar(3) * ExactScalar::sqrt2());
  EXPECT_EQ(ExactScalar::imag_unit() * ExactScalar::imag_unit(), ExactScalar(-1));
  EXPECT_EQ(ExactScalar::sqrt6() * ExactScalar::sqrt6(), ExactScalar(6));
}

TEST(ExactArith, AbsBSquared) {
  const ExactScalar b = b_const();
  EXPECT_EQ(exact_arith(ExactOp::kMul, b, exact_arith(ExactOp::kConj, b)), ExactScalar::rational(1, 3));
}

TEST(ExactArith, CubeRootOfUnity) {
  const ExactScalar j = *ExactScalar::root_of_unity(1, 3);
  EXPECT_EQ(j, ExactScalar::rational(-1, 2) + ExactScalar::imag_unit() * ExactScalar::sqrt3() * ExactScalar::rational(1, 2));
  EXPECT_EQ(exact_arith(ExactOp::kMul, j, j * j), ExactScalar(1));
  EXPECT_EQ(ExactScalar(1) + j + j * j, ExactScalar{});
}

TEST(ExactArith, RootsOfUnityOfOrderDividing12) {
  for (long den : {1, 2, 3, 4, 6, 12}) {
    for (long num = 0; num < den; ++num) {
      const auto z = ExactScalar::root_of_unity(num, den);
      ASSERT_TRUE(z.has_value()) << num << "/" << den;
      EXPECT_EQ(z->pow(static_cast<unsigned>(den)), ExactScalar(1));
      EXPECT_EQ(*z * z->conj(), ExactScalar(1));
      const double angle = 2.0 * std::acos(-1.0) * static_cast<double>(num) / static_cast<double>(den);
      EXPECT_NEAR(std::abs(z->to_float() - std::polar(1.0, angle)), 0.0, 1e-15);
    }
  }
  EXPECT_FALSE(ExactScalar::root_of_unity(1, 5).has_value());
  EXPECT_FALSE(ExactScalar::root_of_unity(1, 8).has_value());
}

TEST(ExactArith, ConjNegatesImaginaryCoordinates) {
  sample::Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const ExactScalar x = sample::random_exact(rng);
    const ExactScalar c = x.conj();
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(c.re()[i], x.re()[i]);
      EXPECT_EQ(c.im()[i], -x.im()[i]);
    }
  }
}

TEST(ExactArith, DispatchMatchesOperators) {
  const ExactScalar x = ExactScalar::sqrt2() + ExactScalar::imag_unit();
  const ExactScalar y = ExactScalar::rational(3, 7) - ExactScalar::sqrt6();
  EXPECT_EQ(exact_arith(ExactOp::kAdd, x, y), x + y);
  EXPECT_EQ(exact_arith(ExactOp::kSub, x, y), x - y);
  EXPECT_EQ(exact_arith(ExactOp::kNeg, x), -x);
  EXPECT_EQ(exact_arith(ExactOp::kInv, x) * x, ExactScalar(1));
  EXPECT_THROW(exact_arith(ExactOp::kAdd, x), DomainError);
}

TEST(ExactArith, InverseOfZeroThrows) {
  EXPECT_THROW(ExactScalar{}.inv(), DivisionByZero);
  EXPECT_THROW(exact_arith(ExactOp::kInv, ExactScalar{}), DivisionByZero);
  EXPECT_THROW(ExactScalar(1) / ExactScalar{}, DivisionByZero);
}

TEST(ExactArith, NormIsRationalAndVanishesOnlyAtZero) {
  sample::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const ExactScalar x = sample::random_exact(rng);
    EXPECT_EQ(x.norm() == 0, x.is_zero());
  }
}

TEST(ExactArith, CapacityErrorOnCoefficientBlowup) {
  ExactScalar x = ExactScalar::rational(3, 2);
  EXPECT_THROW(
      {
        for (int k = 0; k < 20; ++k) x = x * x;
      },
      CapacityError);
}

TEST(ExactArith, FieldAxiomsOnRandomSamples) {
  const auto r = sample::field_axioms(300, 20261015);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(ToFloat, DeltaWithinTwoUlp) {
  const Complex v = (ExactScalar::sqrt2() * ExactScalar::rational(1, 3)).to_float();
  EXPECT_LE(std::abs(v.real() - kSqrt2Over3), 2 * ulp(kSqrt2Over3));
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(ToFloat, One) { EXPECT_EQ(ExactScalar(1).to_float(), Complex(1.0, 0.0)); }

TEST(ToFloat, B) {
  const Complex v = b_const().to_float();
  EXPECT_EQ(v.real(), -0.5);
  EXPECT_LE(std::abs(v.imag() - kInv2Sqrt3), 2 * ulp(kInv2Sqrt3));
}

TEST(ToFloat, HomomorphismOnProducts) {
  sample::Rng rng(3);
  for (int k = 0; k < 500; ++k) {
    const ExactScalar x = sample::random_exact(rng, 10, 10);
    const ExactScalar y = sample::random_exact(rng, 10, 10);
    const Complex lhs = (x * y).to_float();
    const Complex rhs = x.to_float() * y.to_float();
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs))) << x.to_string() << " * " << y.to_string();
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" -5/10 "), Rational(-1, 2));
  EXPECT_THROW(parse_rational("5/-10"), DomainError);
  EXPECT_EQ(rational_to_string(parse_rational("-2/4")), "-1/2");
  EXPECT_EQ(rational_to_string(Rational(3)), "3/1");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(ExactScalar, Predicates) {
  EXPECT_TRUE(ExactScalar::rational(2, 3).is_rational());
  EXPECT_FALSE(ExactScalar::sqrt2().is_rational());
  EXPECT_TRUE(ExactScalar::sqrt2().is_real());
  EXPECT_FALSE(ExactScalar::imag_unit().is_real());
  EXPECT_TRUE(ExactScalar{}.is_zero());
}

TEST(ExactScalar, PowMatchesRepeatedProduct) {
  const ExactScalar b = b_const();
  EXPECT_EQ(b.pow(0), ExactScalar(1));
  EXPECT_EQ(b.pow(3), b * b * b);
}

TEST(ExactScalar, ToStringIsReadable) {
  EXPECT_EQ(ExactScalar{}.to_string(), "0");
  EXPECT_NE(b_const().to_string().find("sqrt3"), std::string::npos);
}

TEST(Tolerance, ApproxEqualIsRelative) {
  EXPECT_TRUE(approx_equal(1e6, 1e6 + 1e-4));
  EXPECT_FALSE(approx_equal(1.0, 1.0 + 1e-6));
  EXPECT_TRUE(approx_equal(Complex(0, 0), Complex(1e-10, 0)));
  EXPECT_TRUE(approx_equal(1.0, 1.0 + 1e-6, 1e-5));
  EXPECT_THROW(require_finite(Complex(std::nan(""), 0)), DomainError);
  EXPECT_THROW(require_finite(Complex(0, std::numeric_limits<double>::infinity())), DomainError);
}
