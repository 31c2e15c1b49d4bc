#pragma once

// One-directional non-factorizability test for unit-diagonal PSD Schur
// symbols, and a verifier for unitary Gram certificates, the matrix-level
// witnesses of factorizability.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absdil/matrix.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

enum class Verdict { kNotFactorizable, kInconclusive };

std::string_view to_string(Verdict v);

struct HmVerdict {
  Verdict verdict = Verdict::kInconclusive;
  std::size_t d = 0;               // rank of the minimal Gram decomposition
  std::size_t hadamard_rank = 0;   // rank of {conj(phi(k)) . phi(l)}
  double min_eigenvalue = 0.0;
  CMatrix witness;                 // the d^2 x n Hadamard family
};

/// NotFactorizable iff d >= 2 and the d^2 Hadamard products are linearly
/// independent; everything else is Inconclusive. Never claims
/// factorizability. Throws DomainError for a non-unit diagonal or a
/// non-PSD matrix.
HmVerdict hm_verdict(const CMatrix& a, double tol = kDefaultTol);

/// Unitaries d_t in M_m(C), one per index, with the normalized trace
/// tr(x) / m on M_m(C).
struct Certificate {
  std::vector<std::string> labels;
  std::size_t m = 0;
  std::vector<CMatrix> unitaries;
};

enum class Orientation {
  kStandard,    // A[i][j] = tau(d_j^* d_i)
  kTransposed,  // A[i][j] = tau(d_i^* d_j), accepted for Hermitian A
};

std::string_view to_string(Orientation o);

struct CertificateResult {
  bool accepted = false;
  std::string reason;  // empty when accepted
  std::optional<Orientation> orientation;
  double unitarity_defect = 0.0;      // max_t max|d_t^* d_t - I|
  double mismatch_standard = 0.0;     // max_ij |A_ij - tau(d_j^* d_i)|
  double mismatch_transposed = 0.0;   // max_ij |A_ij - tau(d_i^* d_j)|
};

/// Normalized trace tau(x^* y) = tr(x^* y) / m.
Complex normalized_pairing(const CMatrix& x, const CMatrix& y);

/// Throws DimensionError when the certificate size differs from A.
CertificateResult verify_certificate(const CMatrix& a, const Certificate& cert,
                                     double tol = kDefaultTol);

}  // namespace absdil
