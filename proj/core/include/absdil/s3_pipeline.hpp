#pragma once

// Exact reproduction of the S3 counterexample: a unital positive definite
// u on S3 whose Herz-Schur multiplier is not factorizable.

#include <array>
#include <string>
#include <vector>

#include "absdil/hm_criterion.hpp"
#include "absdil/matrix.hpp"
#include "absdil/multipliers.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

/// Values of u at 1, (123), (132), (12), (23), (31).
struct S3Constants {
  ExactScalar a, b, c, d, e, f;
  std::array<ExactScalar, 6> values() const { return {a, b, c, d, e, f}; }
};

/// a = 1, b = -1/2 + i/(2 sqrt3), c = conj(b), d = f = -sqrt2/3, e = 2 sqrt2/3.
S3Constants s3_constants();

/// j = exp(2 pi i / 3).
ExactScalar cube_root_of_unity();

struct PeterWeylBlocks {
  ExactScalar trivial;   // a+b+c+d+e+f
  ExactScalar sign;      // a+b+c-d-e-f
  XMatrix two_dim;       // B, the 2x2 block in the basis (xi, eta)
};

PeterWeylBlocks peter_weyl_blocks(const S3Constants& k);

/// Matrices of the two-dimensional irreducible representation on the
/// non-identity elements (123), (132), (12), (23), (31), in the basis
/// xi = (1, j, j^2)/sqrt3, eta = (1, j^2, j)/sqrt3 of {x1+x2+x3 = 0}.
std::array<XMatrix, 5> standard_representation_matrices();

struct IdentityCheck {
  std::string name;
  std::string detail;
};

struct S3Report {
  S3Constants constants;
  XMatrix a;
  PeterWeylBlocks blocks;
  std::array<XMatrix, 5> pi;
  std::vector<ExactScalar> charpoly;  // det(xI - A), ascending
  std::vector<int> spectrum;          // multiset, descending
  std::vector<ExactScalar> phi, phi_prime, psi;
  ExactScalar norm_phi_sq, norm_phi_prime_sq, norm_psi_sq;
  ExactScalar inner_phi_prime_phi;
  std::array<std::vector<ExactScalar>, 4> hadamard;  // conj(phi).phi, conj(phi).psi, conj(psi).phi, conj(psi).psi
  XMatrix m;                                         // columns conj(psi).psi, conj(psi).phi, conj(phi).psi
  ExactScalar delta;                                 // det of rows 2, 3, 5 of M
  std::size_t rank_m = 0;
  std::size_t rank_quadruple = 0;
  std::vector<double> float_eigenvalues;
  HmVerdict verdict;
  std::vector<IdentityCheck> checks;  // every verified identity, in order
};

/// Runs every identity in exact arithmetic (plus the float-path verdict).
/// Throws ConsistencyError naming the first identity that fails.
S3Report run_s3_report();

}  // namespace absdil
