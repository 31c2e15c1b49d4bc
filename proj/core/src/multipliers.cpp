#include "absdil/multipliers.hpp"

#include <algorithm>
#include <cmath>

#include "absdil/errors.hpp"
#include "absdil/gram.hpp"

namespace absdil {

GroupFunction::GroupFunction(const FiniteGroup& group, std::vector<Complex> values)
    : group_(group), values_(std::move(values)) {
  if (values_.size() != group.order()) {
    throw DimensionError("GroupFunction: expected " + std::to_string(group.order()) +
                         " values, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) require_finite(v);
}

GroupFunction::GroupFunction(const FiniteGroup& group, std::vector<ExactScalar> values)
    : group_(group) {
  if (values.size() != group.order()) {
    throw DimensionError("GroupFunction: expected " + std::to_string(group.order()) +
                         " values, got " + std::to_string(values.size()));
  }
  values_.reserve(values.size());
  for (const auto& v : values) values_.push_back(v.to_float());
  exact_ = std::move(values);
}

const std::vector<ExactScalar>& GroupFunction::exact_values() const {
  if (!exact_) throw DomainError("GroupFunction holds floating-point values only");
  return *exact_;
}

bool GroupFunction::is_unital(double tol) const {
  if (exact_) return (*exact_)[0] == ExactScalar(1);
  return approx_equal(values_[0], Complex{1.0}, tol);
}

CMatrix herz_schur_matrix(const GroupFunction& u) {
  return herz_schur_matrix<Complex>(u.group(), u.values());
}

XMatrix herz_schur_matrix_exact(const GroupFunction& u) {
  return herz_schur_matrix<ExactScalar>(u.group(), u.exact_values());
}

UcpReport check_ucp(const FiniteGroup& g, std::span<const Complex> u, double tol) {
  UcpReport report;
  report.unital = approx_equal(u[0], Complex{1.0}, tol);
  const CMatrix a = herz_schur_matrix<Complex>(g, u);
  const double scale = std::max(1.0, max_abs(a));
  report.hermitian = hermitian_defect(a) <= tol * scale;
  if (!report.hermitian) {
    report.reason = "non-Hermitian";
    report.min_eigenvalue = std::nan("");
    return report;
  }
  // Symmetrize away rounding-level asymmetry before the eigensolver.
  CMatrix h = a;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  const EigenResult eig = hermitian_eigen(h);
  double norm = 0.0;
  for (double l : eig.eigenvalues) norm = std::max(norm, std::abs(l));
  report.min_eigenvalue = eig.eigenvalues.back();
  report.positive_definite = report.min_eigenvalue >= -tol * norm;
  if (!report.unital) report.reason = "u(e) != 1";
  if (!report.positive_definite) {
    report.reason += report.reason.empty() ? "" : "; ";
    report.reason += "Herz-Schur matrix has a negative eigenvalue";
  }
  return report;
}

UcpReport check_ucp(const GroupFunction& u, double tol) {
  UcpReport r = check_ucp(u.group(), u.values(), tol);
  if (u.is_exact()) {
    r.unital = u.is_unital();
    if (r.unital && r.reason == "u(e) != 1") r.reason.clear();
  }
  return r;
}

SpectralMeasure make_measure(std::vector<double> weights, double tol) {
  SpectralMeasure m;
  m.weights = std::move(weights);
  for (double w : m.weights) m.total += w;
  m.nonnegative = std::all_of(m.weights.begin(), m.weights.end(), [tol](double w) { return w >= -tol; });
  m.probability = m.nonnegative && std::abs(m.total - 1.0) <= tol;
  return m;
}

SpectralMeasure bochner_measure(const DualGroup& dual, std::span<const Complex> u, double tol) {
  const std::size_t n = dual.base().order();
  if (u.size() != n) throw DimensionError("bochner_measure: u has wrong length");
  std::vector<double> weights(dual.size());
  double imag = 0.0;
  for (Index chi = 0; chi < dual.size(); ++chi) {
    Complex s{};
    for (Index t = 0; t < n; ++t) s += u[t] * std::conj(dual.value(chi, t));
    s /= static_cast<double>(n);
    weights[chi] = s.real();
    imag = std::max(imag, std::abs(s.imag()));
  }
  SpectralMeasure m = make_measure(std::move(weights), tol);
  m.imag_residual = imag;
  if (imag > tol) m.nonnegative = m.probability = false;
  return m;
}

SpectralMeasure bochner_measure(const GroupFunction& u, double tol) {
  return bochner_measure(dual_group(u.group()), u.values(), tol);
}

std::vector<Complex> inverse_bochner(const DualGroup& dual, std::span<const double> weights) {
  if (weights.size() != dual.size()) throw DimensionError("inverse_bochner: wrong length");
  std::vector<Complex> u(dual.base().order());
  for (Index t = 0; t < u.size(); ++t)
    for (Index chi = 0; chi < dual.size(); ++chi) u[t] += weights[chi] * dual.value(chi, t);
  return u;
}

}  // namespace absdil
