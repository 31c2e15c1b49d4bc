#pragma once

// Truncated realization of the absolute dilation of a Fourier multiplier on
// a finite abelian group G. Through VN(G) = L-infinity(dual G) the
// multiplier becomes convolution by its Bochner measure mu, and the dilation
// lives on dual(G) x dual(G)^K with the product measure nu = mu^K on the
// fibre:
//
//   J f (t, s)      = f(t)
//   U F (t, s)      = F(t - s_0, s_1, ..., s_{K-1}, 0)
//   E_J F (t)       = sum_s nu(s) F(t, s)
//
// so that E_J U^k J f = mu^{*k} * f for every k <= K. The truncated U is not
// invertible; only the identity above is claimed.

#include <cstddef>
#include <span>
#include <vector>

#include "absdil/groups.hpp"
#include "absdil/multipliers.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// Dense values on dual(G) x dual(G)^K. Index of (t, s_0, ..., s_{K-1}) is
/// t + n (s_0 + n (s_1 + ...)).
struct StateFunction {
  std::vector<Complex> values;
};

class DilationModel {
 public:
  DilationModel(DualGroup dual, SpectralMeasure mu, std::size_t depth);

  const DualGroup& dual() const { return dual_; }
  const SpectralMeasure& measure() const { return mu_; }
  std::size_t depth() const { return depth_; }
  std::size_t state_size() const { return state_size_; }

  StateFunction lift(std::span<const Complex> f) const;           // J
  StateFunction step(const StateFunction& state) const;           // U
  std::vector<Complex> expect(const StateFunction& state) const;  // E_J

  /// E_J U^k J f on the materialized state array. Throws DomainError for k > K.
  std::vector<Complex> dilate(std::span<const Complex> f, std::size_t k) const;

 private:
  DualGroup dual_;
  SpectralMeasure mu_;
  std::size_t depth_;
  std::size_t state_size_;
  std::vector<double> fibre_weights_;  // nu over dual(G)^K
};

/// Requires u unital and positive definite (probability Bochner measure)
/// and |dual G|^(K+1) <= cap. Throws DomainError / CapacityError.
DilationModel build_dilation(const GroupFunction& u, std::size_t depth, double tol = kDefaultTol,
                             std::size_t cap = kDefaultStateCap);

/// (mu * f)(t) = sum_x mu(x) f(t - x), with the dual written additively.
std::vector<Complex> convolve(const DualGroup& dual, std::span<const double> mu,
                              std::span<const Complex> f);

/// k-fold convolution power; k = 0 is the point mass at the trivial character.
SpectralMeasure convolution_power(const DualGroup& dual, const SpectralMeasure& mu, std::size_t k);

/// Independent evaluation of E_J U^k J f as the explicit k-fold sum
/// sum_{s_0..s_{k-1}} mu(s_0)...mu(s_{k-1}) f(t - s_0 - ... - s_{k-1}).
std::vector<Complex> direct_dilation_sum(const DualGroup& dual, std::span<const double> mu,
                                         std::span<const Complex> f, std::size_t k);

/// sup_t |E_J U^k J f (t) - (mu^{*k} * f)(t)|.
double dilation_residual(const DilationModel& model, std::size_t k, std::span<const Complex> f);

/// The function on dual(G) corresponding to lambda(t): chi -> conj(chi(t)).
std::vector<Complex> character_function(const DualGroup& dual, Index t);

/// Coefficient of lambda(t) in g: (1/n) sum_chi g(chi) chi(t).
Complex fourier_coefficient(const DualGroup& dual, std::span<const Complex> g, Index t);

}  // namespace absdil
