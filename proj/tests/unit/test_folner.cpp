#include <cstdlib>

#include <gtest/gtest.h>

#include "absdil/errors.hpp"
#include "absdil/folner.hpp"

using namespace absdil;

namespace {

DiscreteGroup integers() { return build_discrete_group(GroupSpec::integers()); }

FolnerWindow interval(std::int64_t n) {
  std::vector<std::int64_t> f;
  for (std::int64_t i = 0; i < n; ++i) f.push_back(i);
  return FolnerWindow(integers(), f);
}

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// u(m) = r^{|m|} on Z.
ExactGroupFunction geometric(long num, long den) {
  return [=](std::int64_t m) { return ExactScalar::rational(num, den).pow(static_cast<unsigned>(std::llabs(m))); };
}

// tau_F(T^k(C_t) C_s) on F = {0..n-1} with plain rationals: C_t(p, q) = [p = q + t].
Rational brute_force_pairing(long n, long s, long t, unsigned k, const Rational& r) {
  auto c = [](long shift, long p, long qq) { return p == qq + shift ? 1 : 0; };
  Rational acc = 0;
  for (long p = 0; p < n; ++p) {
    for (long x = 0; x < n; ++x) {
      if (c(t, p, x) == 0 || c(s, x, p) == 0) continue;
      Rational w = 1;
      for (unsigned i = 0; i < k; ++i)
        for (long j = 0; j < std::labs(p - x); ++j) w *= r;
      acc += w;
    }
  }
  return acc / n;
}

}  // namespace

TEST(Window, Validation) {
  EXPECT_THROW(FolnerWindow(integers(), {}), DomainError);
  EXPECT_THROW(FolnerWindow(integers(), {1, 2, 1}), DomainError);
  EXPECT_THROW(FolnerWindow(integers(), {IntegerGroup::kBound}), DomainError);
  EXPECT_THROW(FolnerWindow(build_discrete_group(GroupSpec::symmetric(3)), {0, 6}), DomainError);
  const FolnerWindow w(integers(), {5, -2, 9});
  EXPECT_EQ(w.position(-2), 1u);
  EXPECT_FALSE(w.contains(0));
}

TEST(Compress, IntervalShiftIsLowerShift) {
  const IMatrix c = compress(interval(5), 1);
  for (std::size_t p = 0; p < 5; ++p)
    for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(c(p, x), p == x + 1 ? 1 : 0);
}

TEST(Compress, IdentityElement) {
  EXPECT_EQ(compress(interval(4), 0), IMatrix::identity(4));
  const FolnerWindow w(build_discrete_group(GroupSpec::symmetric(3)), {1, 3, 5});
  EXPECT_EQ(compress(w, 0), IMatrix::identity(3));
}

TEST(Compress, WholeGroupIsRegularRepresentation) {
  const FiniteGroup g = build_group(GroupSpec::symmetric(3));
  const auto windows = folner_sequence(DiscreteGroup(g), FolnerKind::kWholeGroup);
  ASSERT_EQ(windows.size(), 1u);
  for (Index s = 0; s < 6; ++s) EXPECT_EQ(compress(windows[0], static_cast<std::int64_t>(s)), regular_representation(g, s));
}

TEST(Compress, PartialPermutation) {
  const FolnerWindow w(integers(), {0, 3, 4, 7, 8});
  for (std::int64_t s = -8; s <= 8; ++s) {
    const IMatrix c = compress(w, s);
    for (std::size_t i = 0; i < w.size(); ++i) {
      long long row = 0, col = 0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        row += c(i, j);
        col += c(j, i);
      }
      EXPECT_LE(row, 1);
      EXPECT_LE(col, 1);
    }
  }
}

TEST(TraceIdentity, Examples) {
  EXPECT_EQ(trace_identity(interval(7), 0), 1);
  EXPECT_EQ(trace_identity(interval(10), 3), 0);
  const DiscreteGroup s3 = build_discrete_group(GroupSpec::symmetric(3));
  const FolnerWindow w(s3, {0, 1});  // {1, (123)}
  EXPECT_EQ(trace_identity(w, 3), 0);  // (12)
  for (std::int64_t s = 0; s < 6; ++s) EXPECT_EQ(trace_identity(FolnerWindow(s3, {0, 2, 3, 5}), s), s == 0 ? 1 : 0);
}

TEST(MultDefect, UpThenDownLosesTheCorner) {
  // n = 4 by hand: H = F, H cap (F + 1) = {1, 2, 3}, difference {0}.
  const CompressionReport r = mult_defect(interval(4), 1, -1);
  EXPECT_EQ(r.defect_sq, q(1, 4));
  EXPECT_EQ(r.defect_sq_matrix, q(1, 4));
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(mult_defect(interval(n), 1, -1).defect_sq, q(1, n));
}

TEST(MultDefect, ShiftPowersComposeExactly) {
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(mult_defect(interval(n), 1, 1).defect_sq, 0);
}

TEST(MultDefect, WholeFiniteGroupIsMultiplicative) {
  const DiscreteGroup g = build_discrete_group(GroupSpec::symmetric(3));
  const auto w = folner_sequence(g, FolnerKind::kWholeGroup).front();
  for (std::int64_t s = 0; s < 6; ++s)
    for (std::int64_t t = 0; t < 6; ++t) {
      const CompressionReport r = mult_defect(w, s, t);
      EXPECT_EQ(r.defect_sq, 0);
      EXPECT_EQ(r.bound, 0);
      EXPECT_EQ(r.intersect_ratio, 1);
    }
}

TEST(MultDefect, BoundForUnitShift) {
  // F sym-diff (F - 1) = {-1, n - 1}
  for (long n = 2; n <= 30; ++n) EXPECT_EQ(mult_defect(interval(n), 0, 1).bound, q(2, n));
}

TEST(MultDefect, CombinatorialMatchesMatricesAndBound) {
  const FolnerWindow irregular(integers(), {-3, 0, 1, 2, 5, 6, 10});
  for (std::int64_t s = -5; s <= 5; ++s)
    for (std::int64_t t = -5; t <= 5; ++t) {
      const CompressionReport r = mult_defect(irregular, s, t);
      EXPECT_EQ(r.defect_sq, r.defect_sq_matrix);
      EXPECT_LE(r.defect_sq, r.bound);
      EXPECT_GE(r.defect_sq, 0);
      EXPECT_LE(r.bound, 2);
      EXPECT_GE(r.intersect_ratio, 0);
      EXPECT_LE(r.intersect_ratio, 1);
    }
}

TEST(MultDefect, ConvergenceOnIntervals) {
  for (std::int64_t s = -4; s <= 4; ++s)
    for (std::int64_t t = -4; t <= 4; ++t) {
      Rational previous = -1;
      const long m = std::labs(s) + std::labs(t);
      for (long n = 1; n <= 64; ++n) {
        const Rational d = mult_defect(interval(n), s, t).defect_sq;
        EXPECT_LE(d * n, 2 * m) << s << " " << t << " " << n;
        if (n > m && previous >= 0) EXPECT_LE(d, previous) << s << " " << t << " " << n;
        if (n >= m) previous = d;
      }
    }
}

TEST(Pairing, ZeroUnlessInverse) {
  const auto u = geometric(1, 2);
  const PairingResult r = pairing_value(interval(6), u, 2, 1, 2);
  EXPECT_EQ(r.direct, ExactScalar{});
  EXPECT_EQ(r.closed_form, ExactScalar{});
}

TEST(Pairing, WholeGroupGivesPowerOfU) {
  const DiscreteGroup g = build_discrete_group(GroupSpec::cyclic(5));
  const auto w = folner_sequence(g, FolnerKind::kWholeGroup).front();
  const std::vector<ExactScalar> vals = {1, ExactScalar::rational(1, 3), ExactScalar::imag_unit(), -ExactScalar::imag_unit(),
                                         ExactScalar::rational(1, 3)};
  const ExactGroupFunction u = [&](std::int64_t x) { return vals[static_cast<std::size_t>(x)]; };
  for (std::int64_t t = 0; t < 5; ++t) {
    const PairingResult r = pairing_value(w, u, 3, (5 - t) % 5, t);
    EXPECT_EQ(r.direct, vals[static_cast<std::size_t>(t)].pow(3));
  }
}

TEST(Pairing, GeometricOnIntervalMatchesBruteForce) {
  // u(2) = 1/4, so the value at n = 8 is (1/4)^3 * 6/8
  const PairingResult r = pairing_value(interval(8), geometric(1, 2), 3, -2, 2);
  EXPECT_EQ(brute_force_pairing(8, -2, 2, 3, q(1, 2)), q(3, 256));
  EXPECT_EQ(r.direct, ExactScalar(q(3, 256)));
  EXPECT_EQ(r.closed_form, r.direct);
  for (long n = 1; n <= 12; ++n) {
    for (long t = -3; t <= 3; ++t) {
      const PairingResult p = pairing_value(interval(n), geometric(1, 2), 2, -t, t);
      EXPECT_EQ(p.direct, ExactScalar(brute_force_pairing(n, -t, t, 2, q(1, 2))));
      // ratio (n - |t|)_+ / n
      const long keep = std::max(0L, n - std::labs(t));
      EXPECT_EQ(p.direct, geometric(1, 2)(t).pow(2) * ExactScalar(q(keep, n)));
    }
  }
}

TEST(FolnerSequence, Intervals) {
  const auto ws = folner_sequence(integers(), FolnerKind::kIntervals, 4);
  ASSERT_EQ(ws.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::int64_t> expected(i + 1);
    for (std::size_t j = 0; j <= i; ++j) expected[j] = static_cast<std::int64_t>(j);
    EXPECT_EQ(ws[i].elements(), expected);
  }
}

TEST(FolnerSequence, WholeGroupAndInvalidPairings) {
  const DiscreteGroup s3 = build_discrete_group(GroupSpec::symmetric(3));
  EXPECT_EQ(folner_sequence(s3, FolnerKind::kWholeGroup).front().size(), 6u);
  EXPECT_THROW(folner_sequence(s3, FolnerKind::kIntervals, 4), DomainError);
  EXPECT_THROW(folner_sequence(integers(), FolnerKind::kWholeGroup), DomainError);
  EXPECT_THROW(folner_sequence(integers(), FolnerKind::kIntervals, 0), DomainError);
}
