#include "absdil/matrix.hpp"

#include <algorithm>

namespace absdil {

CMatrix to_float(const XMatrix& a) {
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_float();
  return r;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double hermitian_defect(const CMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_defect: non-square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

bool is_hermitian(const XMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i).conj())) return false;
  return true;
}

}  // namespace absdil
