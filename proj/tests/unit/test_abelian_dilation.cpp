#include <cmath>

#include <gtest/gtest.h>

#include "absdil/abelian_dilation.hpp"
#include "absdil/errors.hpp"
#include "sampling.hpp"

using namespace absdil;

namespace {

FiniteGroup group(const char* spec) { return build_group(parse_group_spec(spec)); }

std::vector<Complex> delta(std::size_t n, std::size_t at) {
  std::vector<Complex> f(n);
  f[at] = 1.0;
  return f;
}

double sup_diff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(x[i] - y[i]));
  return r;
}

GroupFunction from_measure(const FiniteGroup& g, const std::vector<double>& w) {
  return GroupFunction(g, inverse_bochner(dual_group(g), w));
}

}  // namespace

TEST(BuildDilation, CyclicTwoUniformMeasure) {
  const DilationModel m = build_dilation(GroupFunction(group("Z2"), std::vector<Complex>{1.0, 0.0}), 3);
  EXPECT_NEAR(m.measure().weights[0], 0.5, 1e-15);
  EXPECT_NEAR(m.measure().weights[1], 0.5, 1e-15);
  EXPECT_EQ(m.state_size(), 16u);
  EXPECT_EQ(m.lift(delta(2, 0)).values.size(), 16u);
}

TEST(BuildDilation, CharacterGivesDeterministicRotation) {
  const FiniteGroup g = group("Z3");
  const DualGroup d = dual_group(g);
  std::vector<Complex> u(3);
  for (Index t = 0; t < 3; ++t) u[t] = d.value(1, t);
  const DilationModel m = build_dilation(GroupFunction(g, u), 5);
  EXPECT_NEAR(m.measure().weights[1], 1.0, 1e-15);
  // E_J U^k J delta_0 = delta_{k chi_1}
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto out = m.dilate(delta(3, 0), k);
    EXPECT_LE(sup_diff(out, delta(3, k % 3)), 1e-14) << k;
  }
}

TEST(BuildDilation, CyclicFourAcceptedWithNonnegativeWeights) {
  const FiniteGroup g = group("Z4");
  const Complex i(0, 1);
  const GroupFunction u(g, std::vector<Complex>{1.0, 0.5 * i, 0.0, -0.5 * i});
  const DualGroup d = dual_group(g);
  ASSERT_NEAR(std::abs(d.value(1, 1) - i), 0.0, 1e-15);  // chi_k(t) = i^{kt}
  const DilationModel m = build_dilation(u, 2);
  const double expected[4] = {0.25, 0.5, 0.25, 0.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(m.measure().weights[k], expected[k], 1e-15);
}

TEST(BuildDilation, RejectsNonPositiveDefinite) {
  EXPECT_THROW(build_dilation(GroupFunction(group("Z2"), std::vector<Complex>{1.0, 2.0}), 2), DomainError);
  EXPECT_THROW(build_dilation(GroupFunction(group("Z2"), std::vector<Complex>{2.0, 0.0}), 2), DomainError);
  EXPECT_THROW(build_dilation(GroupFunction(group("S3"), std::vector<Complex>(6, 1.0)), 2), DomainError);
}

TEST(BuildDilation, CapIsEnforced) {
  const GroupFunction u(group("Z6"), std::vector<Complex>(6, 1.0));
  EXPECT_THROW(build_dilation(u, 8), CapacityError);  // 6^9 > 10^6
  EXPECT_NO_THROW(build_dilation(u, 6));              // 6^7 < 10^6
  EXPECT_THROW(build_dilation(u, 2, kDefaultTol, 100), CapacityError);
  EXPECT_THROW(build_dilation(u, 0), DomainError);
}

TEST(DilationResidual, ZeroPowerIsExact) {
  sample::Rng rng(1);
  const FiniteGroup g = group("Z5");
  const DilationModel m = build_dilation(from_measure(g, sample::random_probability(rng, 5)), 2);
  std::vector<Complex> f(5);
  for (auto& x : f) x = sample::random_complex(rng);
  // Both sides are f; only the rounding of the fibre weights remains.
  EXPECT_LE(dilation_residual(m, 0, f), 1e-14);
  EXPECT_LE(sup_diff(m.dilate(f, 0), f), 1e-14);
}

TEST(DilationResidual, CyclicTwoFourTermSum) {
  const DilationModel m = build_dilation(GroupFunction(group("Z2"), std::vector<Complex>{1.0, 0.0}), 3);
  const auto f = delta(2, 0);
  // sum_{s0, s1} (1/4) delta_0(t - s0 - s1)
  std::vector<Complex> oracle(2);
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t s0 = 0; s0 < 2; ++s0)
      for (std::size_t s1 = 0; s1 < 2; ++s1) oracle[t] += 0.25 * f[(t + 4 - s0 - s1) % 2];
  EXPECT_LE(sup_diff(m.dilate(f, 2), oracle), 1e-15);
  EXPECT_NEAR(oracle[0].real(), 0.5, 1e-15);
  EXPECT_EQ(dilation_residual(m, 2, f), 0.0);
}

TEST(DilationResidual, CyclicThreeFourierCoefficient) {
  const FiniteGroup g = group("Z3");
  const DilationModel m = build_dilation(GroupFunction(g, std::vector<Complex>{1.0, -0.5, -0.5}), 3);
  const auto f = character_function(m.dual(), 1);
  EXPECT_LE(dilation_residual(m, 2, f), 1e-15);
  const Complex c = fourier_coefficient(m.dual(), m.dilate(f, 2), 1);
  EXPECT_NEAR(std::abs(c - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_coefficient(m.dual(), m.dilate(f, 2), 2)), 0.0, 1e-15);
}

TEST(DilationResidual, PowerAboveDepthThrows) {
  const DilationModel m = build_dilation(GroupFunction(group("Z2"), std::vector<Complex>{1.0, 0.0}), 2);
  EXPECT_THROW(dilation_residual(m, 3, delta(2, 0)), DomainError);
}

TEST(ConvolutionPower, Basics) {
  const DualGroup d = dual_group(group("Z5"));
  sample::Rng rng(3);
  const SpectralMeasure mu = make_measure(sample::random_probability(rng, 5));
  const SpectralMeasure p1 = convolution_power(d, mu, 1);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(p1.weights[i], mu.weights[i]);
  const SpectralMeasure p0 = convolution_power(d, mu, 0);
  EXPECT_EQ(p0.weights, (std::vector<double>{1, 0, 0, 0, 0}));
  EXPECT_NEAR(convolution_power(d, mu, 4).total, 1.0, 1e-15);

  const DualGroup d2 = dual_group(group("Z2"));
  const SpectralMeasure half = make_measure({0.5, 0.5});
  EXPECT_EQ(convolution_power(d2, half, 2).weights, (std::vector<double>{0.5, 0.5}));

  const SpectralMeasure point = make_measure({0, 0, 1, 0, 0});
  EXPECT_EQ(convolution_power(d, point, 3).weights, (std::vector<double>{0, 1, 0, 0, 0}));  // 3*2 = 6 = 1 mod 5
}

TEST(DilationProperties, IntertwiningSemigroupAndEvaluators) {
  sample::Rng rng(77);
  for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z2xZ3"}) {
    const FiniteGroup g = group(spec);
    const std::size_t n = g.order();
    const GroupFunction u = from_measure(g, sample::random_probability(rng, n, true));
    const std::size_t depth = n > 4 ? 3 : 4;
    const DilationModel m = build_dilation(u, depth);
    for (std::size_t k = 0; k <= depth; ++k) {
      for (Index t = 0; t < n; ++t) {
        const auto f = character_function(m.dual(), t);
        const Complex c = fourier_coefficient(m.dual(), m.dilate(f, k), t);
        EXPECT_LE(std::abs(c - std::pow(u(t), static_cast<double>(k))), 1e-12) << spec << " k=" << k;
      }
      std::vector<Complex> f(n);
      for (auto& x : f) x = sample::random_complex(rng);
      const auto power = convolution_power(m.dual(), m.measure(), k);
      EXPECT_LE(sup_diff(m.dilate(f, k), convolve(m.dual(), power.weights, f)), 1e-12);
      EXPECT_LE(sup_diff(m.dilate(f, k), direct_dilation_sum(m.dual(), m.measure().weights, f, k)), 1e-13);
    }
  }
}

TEST(DilationProperties, ExpectationOfLiftIsIdentityAndPreservesTrace) {
  sample::Rng rng(8);
  const FiniteGroup g = group("Z2xZ2");
  const DilationModel m = build_dilation(from_measure(g, sample::random_probability(rng, 4, true)), 3);
  std::vector<Complex> f(4);
  for (auto& x : f) x = sample::random_complex(rng);
  const StateFunction jf = m.lift(f);
  EXPECT_LE(sup_diff(m.expect(jf), f), 1e-15);
  // Average of J f against uniform x nu equals the uniform average of f.
  Complex mean_f{}, mean_jf{};
  for (const auto& x : f) mean_f += x / 4.0;
  for (const auto& x : m.expect(jf)) mean_jf += x / 4.0;
  EXPECT_LE(std::abs(mean_f - mean_jf), 1e-15);
}

TEST(DilationProperties, StepShiftsFibreAndTranslates) {
  const FiniteGroup g = group("Z3");
  const DilationModel m = build_dilation(GroupFunction(g, std::vector<Complex>{1.0, -0.5, -0.5}), 2);
  StateFunction s;
  s.values.resize(m.state_size());
  for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] = static_cast<double>(i);
  const StateFunction u = m.step(s);
  // U F(t, s0, s1) = F(t - s0, s1, 0)
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t s0 = 0; s0 < 3; ++s0)
      for (std::size_t s1 = 0; s1 < 3; ++s1) {
        const std::size_t src = (t + 3 - s0) % 3 + 3 * (s1 + 3 * 0);
        EXPECT_EQ(u.values[t + 3 * (s0 + 3 * s1)], s.values[src]);
      }
}
