#include "absdil/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "absdil/errors.hpp"

namespace absdil {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Parameters of the 2x2 unitary G = diag(1, conj(e)) * [[c, s], [-s, c]]
// that diagonalizes [[app, apq], [conj(apq), aqq]], with e = apq / |apq|.
struct Rotation {
  double c;
  double s;
  Complex e;
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double r = std::abs(apq);
  const double theta = (aqq - app) / (2.0 * r);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c, apq / r};
}

}  // namespace

EigenResult hermitian_eigen(const CMatrix& a, const JacobiOptions& options) {
  if (!a.is_square()) throw DimensionError("hermitian_eigen: non-square matrix");
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, max_abs(a));
  if (hermitian_defect(a) > options.hermitian_tol * scale) {
    throw DomainError("hermitian_eigen: matrix is not Hermitian");
  }

  CMatrix w = a;
  for (std::size_t i = 0; i < n; ++i) w(i, i) = w(i, i).real();
  CMatrix v = CMatrix::identity(n);
  const double stop = options.threshold * frobenius_norm(a);

  int sweeps = 0;
  while (off_diagonal_norm(w) > stop) {
    if (sweeps == options.max_sweeps) {
      throw ConvergenceError("hermitian_eigen: no convergence after " +
                             std::to_string(options.max_sweeps) + " sweeps");
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = w(p, q);
        if (apq == Complex{}) continue;
        const auto [c, s, e] = jacobi_rotation(w(p, p).real(), w(q, q).real(), apq);
        const Complex ce = std::conj(e);
        // W <- W G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wkp = w(k, p);
          const Complex wkq = w(k, q) * ce;
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        // W <- G^* W
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wpk = w(p, k);
          const Complex wqk = w(q, k) * e;
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        w(p, q) = w(q, p) = Complex{};
        w(p, p) = w(p, p).real();
        w(q, q) = w(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q) * ce;
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w(x, x).real() > w(y, y).real(); });

  EigenResult result;
  result.sweeps = sweeps;
  result.eigenvalues.resize(n);
  result.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    result.eigenvalues[k] = w(src, src).real();
    // Phase: first entry with modulus above 1e-12 becomes real positive.
    Complex phase{1.0, 0.0};
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > 1e-12) {
        phase = std::conj(v(i, src)) / m;
        pivot = i;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, src) * phase;
    if (pivot < n) result.eigenvectors(pivot, k) = std::abs(v(pivot, src));
  }

  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex av{};
      for (std::size_t j = 0; j < n; ++j) av += a(i, j) * result.eigenvectors(j, k);
      res += std::norm(av - result.eigenvalues[k] * result.eigenvectors(i, k));
    }
  }
  result.residual = std::sqrt(res);
  return result;
}

std::vector<double> singular_values(const CMatrix& a) {
  // Work on columns of X with cols <= rows.
  CMatrix x = a.cols() > a.rows() ? adjoint(a) : a;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  constexpr double kEps = 1e-15;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(x(i, p));
          beta += std::norm(x(i, q));
          gamma += std::conj(x(i, p)) * x(i, q);
        }
        if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta) || gamma == Complex{}) continue;
        rotated = true;
        const auto [c, s, e] = jacobi_rotation(alpha, beta, gamma);
        const Complex ce = std::conj(e);
        for (std::size_t i = 0; i < m; ++i) {
          const Complex xp = x(i, p);
          const Complex xq = x(i, q) * ce;
          x(i, p) = c * xp - s * xq;
          x(i, q) = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(x(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t rank_float(const CMatrix& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const auto sv = singular_values(a);
  if (sv.front() == 0.0) return 0;
  const double cut = tol * sv.front();
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

std::size_t rank_exact(const XMatrix& a) {
  XMatrix m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  ExactScalar prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const ExactScalar piv = m(rank, col);
    const ExactScalar prev_inv = prev.inv();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const ExactScalar lead = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        m(i, j) = (piv * m(i, j) - lead * m(rank, j)) * prev_inv;
      }
      m(i, col) = ExactScalar{};
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

ExactScalar determinant(const XMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: non-square matrix");
  XMatrix m = a;
  const std::size_t n = m.rows();
  ExactScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return ExactScalar{};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const ExactScalar inv = m(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      const ExactScalar f = m(i, col) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::vector<ExactScalar> characteristic_polynomial(const XMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic_polynomial: non-square matrix");
  const std::size_t n = a.rows();
  std::vector<ExactScalar> c(n + 1);
  c[n] = ExactScalar(1);
  XMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const ExactScalar tr = trace(a * mk);
    c[n - k] = -tr * ExactScalar::rational(1, static_cast<long>(k));
  }
  return c;
}

std::vector<ExactScalar> poly_mul(std::span<const ExactScalar> p, std::span<const ExactScalar> q) {
  if (p.empty() || q.empty()) return {};
  std::vector<ExactScalar> r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

GramDecomposition gram_vectors(const CMatrix& a, double tol) {
  const EigenResult eig = hermitian_eigen(a);
  const std::size_t n = a.rows();
  GramDecomposition dec;
  if (n == 0) return dec;
  double norm = 0.0;
  for (double l : eig.eigenvalues) norm = std::max(norm, std::abs(l));
  dec.min_eigenvalue = eig.eigenvalues.back();
  if (dec.min_eigenvalue < -tol * norm) {
    throw DomainError("gram_vectors: matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(dec.min_eigenvalue) + ")");
  }
  const double lambda_max = eig.eigenvalues.front();
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (!(lambda > tol * lambda_max)) break;
    std::vector<Complex> phi(n);
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) phi[i] = root * std::conj(eig.eigenvectors(i, k));
    dec.vectors.push_back(std::move(phi));
    dec.weights.push_back(lambda);
  }
  dec.d = dec.vectors.size();
  const CMatrix recon = dec.d == 0 ? CMatrix(n, n) : gram_reconstruction<Complex>(dec.vectors);
  dec.reconstruction_error = frobenius_norm(recon - a);
  return dec;
}

}  // namespace absdil
