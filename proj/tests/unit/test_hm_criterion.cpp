#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "absdil/errors.hpp"
#include "absdil/groups.hpp"
#include "absdil/hm_criterion.hpp"
#include "absdil/s3_pipeline.hpp"
#include "sampling.hpp"

using namespace absdil;

namespace {

const double kPi = std::acos(-1.0);

CMatrix s3_matrix() { return to_float(run_s3_report().a); }

Certificate cos_certificate(double theta) {
  Certificate c;
  c.m = 2;
  c.labels = {"0", "1"};
  c.unitaries = {CMatrix::identity(2), CMatrix{{std::polar(1.0, theta), 0.0}, {0.0, std::polar(1.0, -theta)}}};
  return c;
}

CMatrix cos_matrix(double theta) { return CMatrix{{1.0, std::cos(theta)}, {std::cos(theta), 1.0}}; }

Certificate trivial_certificate(std::size_t n, std::size_t m) {
  Certificate c;
  c.m = m;
  for (std::size_t k = 0; k < n; ++k) {
    c.labels.push_back(std::to_string(k));
    c.unitaries.push_back(CMatrix::identity(m));
  }
  return c;
}

CMatrix permute(const CMatrix& a, const std::vector<std::size_t>& p) {
  CMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(p[i], p[j]);
  return b;
}

}  // namespace

TEST(HmVerdictTest, S3IsNotFactorizable) {
  const HmVerdict v = hm_verdict(s3_matrix());
  EXPECT_EQ(v.verdict, Verdict::kNotFactorizable);
  EXPECT_EQ(v.d, 2u);
  EXPECT_EQ(v.hadamard_rank, 4u);
  EXPECT_EQ(v.witness.rows(), 4u);
  EXPECT_EQ(v.witness.cols(), 6u);
  EXPECT_NEAR(v.min_eigenvalue, 0.0, 1e-12);
}

TEST(HmVerdictTest, AllOnesIsInconclusive) {
  const HmVerdict v = hm_verdict(CMatrix(5, 5, 1.0));
  EXPECT_EQ(v.verdict, Verdict::kInconclusive);
  EXPECT_EQ(v.d, 1u);
  EXPECT_EQ(v.hadamard_rank, 1u);
}

TEST(HmVerdictTest, IdentityIsInconclusive) {
  for (std::size_t n : {2, 3, 6}) {
    const HmVerdict v = hm_verdict(CMatrix::identity(n));
    EXPECT_EQ(v.verdict, Verdict::kInconclusive);
    EXPECT_EQ(v.d, n);
    // conj(e_k) . e_l vanishes for k != l
    EXPECT_EQ(v.hadamard_rank, n);
  }
}

TEST(HmVerdictTest, RejectsBadInput) {
  EXPECT_THROW(hm_verdict(CMatrix{{2.0, 0.0}, {0.0, 1.0}}), DomainError);
  EXPECT_THROW(hm_verdict(CMatrix{{1.0, 2.0}, {2.0, 1.0}}), DomainError);
  EXPECT_THROW(hm_verdict(CMatrix{{1.0, 0.0}}), DimensionError);
}

TEST(HmVerdictTest, InvariantUnderRelabeling) {
  const CMatrix a = s3_matrix();
  std::vector<std::size_t> p(6);
  std::iota(p.begin(), p.end(), 0);
  sample::Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(p.begin(), p.end(), rng);
    const HmVerdict v = hm_verdict(permute(a, p));
    EXPECT_EQ(v.verdict, Verdict::kNotFactorizable);
    EXPECT_EQ(v.hadamard_rank, 4u);
  }
}

TEST(HmVerdictTest, Deterministic) {
  const HmVerdict x = hm_verdict(s3_matrix());
  const HmVerdict y = hm_verdict(s3_matrix());
  EXPECT_EQ(x.witness, y.witness);
  EXPECT_EQ(x.min_eigenvalue, y.min_eigenvalue);
}

TEST(Certificate, CosineCertificateAccepted) {
  const CertificateResult r = verify_certificate(cos_matrix(kPi / 3), cos_certificate(kPi / 3), 1e-12);
  EXPECT_TRUE(r.accepted) << r.reason;
  EXPECT_EQ(r.orientation, Orientation::kStandard);
  // trace(d_1^* d_0) / 2 = cos(pi/3)
  const Certificate c = cos_certificate(kPi / 3);
  EXPECT_NEAR(std::abs(normalized_pairing(c.unitaries[1], c.unitaries[0]) - 0.5), 0.0, 1e-15);
}

TEST(Certificate, CosineCertificateRejectedAgainstWrongMatrix) {
  const CertificateResult r = verify_certificate(cos_matrix(std::acos(0.6)), cos_certificate(kPi / 3), 1e-9);
  EXPECT_FALSE(r.accepted);
  EXPECT_NEAR(r.mismatch_standard, 0.1, 1e-12);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Certificate, TrivialCertificateAcceptedOnlyForAllOnes) {
  EXPECT_TRUE(verify_certificate(CMatrix(3, 3, 1.0), trivial_certificate(3, 2)).accepted);
  EXPECT_FALSE(verify_certificate(CMatrix::identity(3), trivial_certificate(3, 2)).accepted);
  EXPECT_FALSE(verify_certificate(s3_matrix(), trivial_certificate(6, 1)).accepted);
}

TEST(Certificate, TransposedOrientationForHermitianMatrices) {
  // Z3 with u a character: A[s][t] = chi(s - t). Scalar certificate d_t = conj(chi(t))
  // matches tau(d_s^* d_t) rather than tau(d_t^* d_s).
  const DualGroup d = dual_group(build_group(GroupSpec::cyclic(3)));
  CMatrix a(3, 3);
  for (Index s = 0; s < 3; ++s)
    for (Index t = 0; t < 3; ++t) a(s, t) = d.value(1, (s + 3 - t) % 3);
  Certificate c;
  c.m = 1;
  for (Index t = 0; t < 3; ++t) {
    c.labels.push_back(std::to_string(t));
    c.unitaries.push_back(CMatrix{{std::conj(d.value(1, t))}});
  }
  const CertificateResult r = verify_certificate(a, c, 1e-12);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.orientation, Orientation::kTransposed);
  EXPECT_GT(r.mismatch_standard, 0.5);
  for (auto& u : c.unitaries) u = conjugate(u);
  EXPECT_EQ(verify_certificate(a, c, 1e-12).orientation, Orientation::kStandard);
}

TEST(Certificate, NonUnitaryRejected) {
  Certificate c = trivial_certificate(2, 2);
  c.unitaries[1](0, 0) = 2.0;
  const CertificateResult r = verify_certificate(CMatrix(2, 2, 1.0), c);
  EXPECT_FALSE(r.accepted);
  EXPECT_NEAR(r.unitarity_defect, 3.0, 1e-15);
}

TEST(Certificate, SizeMismatch) {
  EXPECT_THROW(verify_certificate(CMatrix(3, 3, 1.0), trivial_certificate(2, 2)), DimensionError);
  Certificate c = trivial_certificate(2, 2);
  c.unitaries[0] = CMatrix::identity(3);
  EXPECT_THROW(verify_certificate(CMatrix(2, 2, 1.0), c), DimensionError);
}

TEST(MutualExclusion, S3RejectsDiagonalCharacterCertificates) {
  // Random diagonal unitaries never certify the S3 matrix.
  sample::Rng rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const CMatrix a = s3_matrix();
  ASSERT_EQ(hm_verdict(a).verdict, Verdict::kNotFactorizable);
  for (int trial = 0; trial < 20; ++trial) {
    Certificate c;
    c.m = 3;
    for (std::size_t t = 0; t < 6; ++t) {
      CMatrix d(3, 3);
      for (std::size_t i = 0; i < 3; ++i) d(i, i) = std::polar(1.0, angle(rng));
      c.unitaries.push_back(d);
      c.labels.push_back(std::to_string(t));
    }
    EXPECT_FALSE(verify_certificate(a, c).accepted);
  }
}
