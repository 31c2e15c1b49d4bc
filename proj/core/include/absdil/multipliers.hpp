#pragma once

// Functions on finite groups, their Herz-Schur matrices, positivity
// decisions, Schur/Fourier multiplier actions and the Bochner transform.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absdil/groups.hpp"
#include "absdil/matrix.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

/// u : G -> C, one value per element in the group's enumeration order.
/// Exact values are kept when every input value was exact; the float image
/// is always available.
class GroupFunction {
 public:
  GroupFunction(const FiniteGroup& group, std::vector<Complex> values);
  GroupFunction(const FiniteGroup& group, std::vector<ExactScalar> values);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  bool is_exact() const { return exact_.has_value(); }
  const std::vector<Complex>& values() const { return values_; }
  const std::vector<ExactScalar>& exact_values() const;
  Complex operator()(Index t) const { return values_[t]; }

  /// u(e) == 1 (exactly for exact functions, within tol otherwise).
  bool is_unital(double tol = kDefaultTol) const;

 private:
  FiniteGroup group_;
  std::vector<Complex> values_;
  std::optional<std::vector<ExactScalar>> exact_;
};

/// A[s][t] = u(s t^{-1}).
template <class T>
Matrix<T> herz_schur_matrix(const FiniteGroup& g, std::span<const T> u) {
  if (u.size() != g.order()) throw DimensionError("herz_schur_matrix: u has wrong length");
  Matrix<T> a(g.order(), g.order());
  for (Index s = 0; s < g.order(); ++s)
    for (Index t = 0; t < g.order(); ++t) a(s, t) = u[g.mul(s, g.inv(t))];
  return a;
}

CMatrix herz_schur_matrix(const GroupFunction& u);
/// Requires an exact function.
XMatrix herz_schur_matrix_exact(const GroupFunction& u);

struct UcpReport {
  bool unital = false;
  bool hermitian = false;
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
  std::string reason;  // empty when ucp
  bool ucp() const { return unital && positive_definite; }
};

/// Decides unital complete positivity of M_u from the spectrum of the full
/// Herz-Schur matrix: positive definite iff min eigenvalue >= -tol * ||A||.
/// A non-Hermitian matrix is reported as not positive with reason
/// "non-Hermitian".
UcpReport check_ucp(const GroupFunction& u, double tol = kDefaultTol);
UcpReport check_ucp(const FiniteGroup& g, std::span<const Complex> u, double tol = kDefaultTol);

/// Entrywise (Schur) product.
template <class T>
Matrix<T> apply_schur(const Matrix<T>& symbol, const Matrix<T>& x) {
  if (symbol.rows() != x.rows() || symbol.cols() != x.cols()) {
    throw DimensionError("apply_schur: symbol and argument differ in shape");
  }
  Matrix<T> r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = symbol(i, j) * x(i, j);
  return r;
}

/// k-th power of M_u on x = sum_t coeffs(t) lambda(t): output(t) = u(t)^k coeffs(t).
template <class T>
std::vector<T> apply_fourier(std::span<const T> u, std::span<const T> coeffs, unsigned k) {
  if (u.size() != coeffs.size()) throw DimensionError("apply_fourier: length mismatch");
  std::vector<T> out(coeffs.begin(), coeffs.end());
  for (std::size_t t = 0; t < out.size(); ++t) {
    T p(1);
    for (unsigned i = 0; i < k; ++i) p *= u[t];
    out[t] *= p;
  }
  return out;
}

/// Weights of a (signed) measure on the dual of a finite abelian group.
struct SpectralMeasure {
  std::vector<double> weights;  // indexed like DualGroup characters
  double total = 0.0;
  /// max |Im mu(chi)| before the imaginary parts were dropped.
  double imag_residual = 0.0;
  bool nonnegative = false;
  bool probability = false;
};

SpectralMeasure make_measure(std::vector<double> weights, double tol = kDefaultTol);

/// mu(chi) = (1/n) sum_t u(t) conj(chi(t)), so that u(t) = sum_chi mu(chi) chi(t).
SpectralMeasure bochner_measure(const DualGroup& dual, std::span<const Complex> u,
                                double tol = kDefaultTol);
SpectralMeasure bochner_measure(const GroupFunction& u, double tol = kDefaultTol);

/// u(t) = sum_chi mu(chi) chi(t).
std::vector<Complex> inverse_bochner(const DualGroup& dual, std::span<const double> weights);

}  // namespace absdil
