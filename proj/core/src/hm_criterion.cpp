#include "absdil/hm_criterion.hpp"

#include <algorithm>
#include <cmath>

#include "absdil/errors.hpp"
#include "absdil/gram.hpp"

namespace absdil {

std::string_view to_string(Verdict v) {
  return v == Verdict::kNotFactorizable ? "NotFactorizable" : "Inconclusive";
}

std::string_view to_string(Orientation o) {
  return o == Orientation::kStandard ? "standard" : "transposed";
}

HmVerdict hm_verdict(const CMatrix& a, double tol) {
  if (!a.is_square()) throw DimensionError("hm_verdict: non-square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (std::abs(a(i, i) - Complex{1.0}) > tol) {
      throw DomainError("hm_verdict: diagonal entry " + std::to_string(i) + " is not 1");
    }
  }
  const GramDecomposition dec = gram_vectors(a, tol);
  HmVerdict v;
  v.d = dec.d;
  v.min_eigenvalue = dec.min_eigenvalue;
  v.witness = hadamard_family(dec);
  v.hadamard_rank = rank_float(v.witness, tol);
  v.verdict = (v.d >= 2 && v.hadamard_rank == v.d * v.d) ? Verdict::kNotFactorizable
                                                          : Verdict::kInconclusive;
  return v;
}

Complex normalized_pairing(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square()) {
    throw DimensionError("normalized_pairing: shape mismatch");
  }
  Complex s{};
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) s += std::conj(x(i, j)) * y(i, j);
  return s / static_cast<double>(x.rows());
}

CertificateResult verify_certificate(const CMatrix& a, const Certificate& cert, double tol) {
  if (!a.is_square() || cert.unitaries.size() != a.rows()) {
    throw DimensionError("verify_certificate: certificate has " +
                         std::to_string(cert.unitaries.size()) + " unitaries for a " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  CertificateResult r;
  for (const auto& d : cert.unitaries) {
    if (d.rows() != cert.m || d.cols() != cert.m) {
      throw DimensionError("verify_certificate: unitary is not " + std::to_string(cert.m) + "x" +
                           std::to_string(cert.m));
    }
    const CMatrix dd = adjoint(d) * d - CMatrix::identity(cert.m);
    r.unitarity_defect = std::max(r.unitarity_defect, max_abs(dd));
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex standard = normalized_pairing(cert.unitaries[j], cert.unitaries[i]);
      const Complex transposed = normalized_pairing(cert.unitaries[i], cert.unitaries[j]);
      r.mismatch_standard = std::max(r.mismatch_standard, std::abs(a(i, j) - standard));
      r.mismatch_transposed = std::max(r.mismatch_transposed, std::abs(a(i, j) - transposed));
    }
  }
  if (r.unitarity_defect > tol) {
    r.reason = "certificate matrices are not unitary";
    return r;
  }
  const bool hermitian = hermitian_defect(a) <= tol;
  if (r.mismatch_standard <= tol) {
    r.orientation = Orientation::kStandard;
  } else if (hermitian && r.mismatch_transposed <= tol) {
    r.orientation = Orientation::kTransposed;
  }
  r.accepted = r.orientation.has_value();
  if (!r.accepted) {
    r.reason = "Gram entries differ from A by " +
               std::to_string(hermitian ? std::min(r.mismatch_standard, r.mismatch_transposed)
                                        : r.mismatch_standard);
  }
  return r;
}

}  // namespace absdil
