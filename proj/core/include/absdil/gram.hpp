#pragma once

// Hermitian eigensolver, singular values, numerical and exact rank, Gram
// vectors and Hadamard-product families.

#include <cstddef>
#include <span>
#include <vector>

#include "absdil/matrix.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below threshold * ||A||_F.
  double threshold = 1e-13;
  int max_sweeps = 100;
  /// Input must satisfy max|a_ij - conj(a_ji)| <= hermitian_tol * max(1, max|a_ij|).
  double hermitian_tol = 1e-12;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
  double residual = 0.0;            // ||A V - V diag(lambda)||_F
  int sweeps = 0;
};

/// Cyclic complex Jacobi with a fixed sweep order (p < q, row-major), so
/// identical input gives bit-identical output. Each eigenvector is scaled
/// by a phase making its first non-negligible entry real and positive.
/// Throws DomainError for non-Hermitian input and ConvergenceError when
/// max_sweeps is exhausted.
EigenResult hermitian_eigen(const CMatrix& a, const JacobiOptions& options = {});

/// Singular values in descending order (one-sided Jacobi).
std::vector<double> singular_values(const CMatrix& a);

/// Number of singular values above tol * sigma_max.
std::size_t rank_float(const CMatrix& a, double tol = kDefaultTol);

/// Exact rank by fraction-free elimination over Q(i, sqrt2, sqrt3).
std::size_t rank_exact(const XMatrix& a);

ExactScalar determinant(const XMatrix& a);

/// Coefficients c_0..c_n of det(x I - A), c_n = 1 (Faddeev-LeVerrier).
std::vector<ExactScalar> characteristic_polynomial(const XMatrix& a);

/// Polynomial product, coefficients in ascending degree.
std::vector<ExactScalar> poly_mul(std::span<const ExactScalar> p, std::span<const ExactScalar> q);

/// A = sum_k conj(phi(k)) (x) phi(k), i.e. A[i][j] = sum_k conj(phi(k)_i) phi(k)_j.
struct GramDecomposition {
  std::size_t d = 0;
  std::vector<std::vector<Complex>> vectors;
  std::vector<double> weights;  // eigenvalues kept, descending
  double min_eigenvalue = 0.0;
  double reconstruction_error = 0.0;  // Frobenius
};

/// Minimal Gram decomposition from the spectral decomposition: phi(k) is
/// sqrt(lambda_k) conj(u_k) for every eigenpair with lambda_k > tol * lambda_max.
/// Throws DomainError if some eigenvalue is below -tol * ||A||.
GramDecomposition gram_vectors(const CMatrix& a, double tol = kDefaultTol);

template <class T>
Matrix<T> gram_reconstruction(std::span<const std::vector<T>> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  Matrix<T> a(n, n);
  for (const auto& phi : vectors) {
    if (phi.size() != n) throw DimensionError("gram_reconstruction: vectors differ in length");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) += detail::conj_of(phi[i]) * phi[j];
  }
  return a;
}

/// Row (k, l), in lexicographic order, is the entrywise product conj(phi(k)) . phi(l).
template <class T>
Matrix<T> hadamard_family(std::span<const std::vector<T>> vectors) {
  const std::size_t d = vectors.size();
  const std::size_t n = d == 0 ? 0 : vectors.front().size();
  Matrix<T> rows(d * d, n);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      if (vectors[k].size() != n || vectors[l].size() != n) {
        throw DimensionError("hadamard_family: vectors differ in length");
      }
      for (std::size_t i = 0; i < n; ++i) {
        rows(k * d + l, i) = detail::conj_of(vectors[k][i]) * vectors[l][i];
      }
    }
  }
  return rows;
}

inline CMatrix hadamard_family(const GramDecomposition& dec) {
  return hadamard_family<Complex>(dec.vectors);
}

}  // namespace absdil
