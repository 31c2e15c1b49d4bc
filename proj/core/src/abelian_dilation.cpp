#include "absdil/abelian_dilation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "absdil/errors.hpp"

namespace absdil {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace

DilationModel::DilationModel(DualGroup dual, SpectralMeasure mu, std::size_t depth)
    : dual_(std::move(dual)), mu_(std::move(mu)), depth_(depth) {
  if (depth_ < 1) throw DomainError("DilationModel: truncation depth K must be >= 1");
  if (mu_.weights.size() != dual_.size()) throw DimensionError("DilationModel: measure length");
  const std::size_t n = dual_.size();
  std::size_t fibre = 1;
  for (std::size_t i = 0; i < depth_; ++i) fibre *= n;
  state_size_ = fibre * n;
  fibre_weights_.assign(fibre, 1.0);
  for (std::size_t idx = 0; idx < fibre; ++idx) {
    std::size_t r = idx;
    double w = 1.0;
    for (std::size_t i = 0; i < depth_; ++i) {
      w *= mu_.weights[r % n];
      r /= n;
    }
    fibre_weights_[idx] = w;
  }
}

StateFunction DilationModel::lift(std::span<const Complex> f) const {
  const std::size_t n = dual_.size();
  if (f.size() != n) throw DimensionError("lift: f has wrong length");
  StateFunction s;
  s.values.resize(state_size_);
  for (std::size_t idx = 0; idx < state_size_; ++idx) s.values[idx] = f[idx % n];
  return s;
}

StateFunction DilationModel::step(const StateFunction& state) const {
  const std::size_t n = dual_.size();
  if (state.values.size() != state_size_) throw DimensionError("step: state has wrong size");
  StateFunction out;
  out.values.resize(state_size_);
  for (std::size_t idx = 0; idx < state_size_; ++idx) {
    const std::size_t t = idx % n;
    const std::size_t rest = idx / n;
    const std::size_t s0 = rest % n;
    const std::size_t shifted = rest / n;  // (s_1, ..., s_{K-1}, 0)
    const std::size_t src_t = dual_.mul(t, dual_.inv(s0));
    out.values[idx] = state.values[src_t + n * shifted];
  }
  return out;
}

std::vector<Complex> DilationModel::expect(const StateFunction& state) const {
  const std::size_t n = dual_.size();
  if (state.values.size() != state_size_) throw DimensionError("expect: state has wrong size");
  std::vector<Complex> g(n);
  for (std::size_t idx = 0; idx < state_size_; ++idx) {
    g[idx % n] += fibre_weights_[idx / n] * state.values[idx];
  }
  return g;
}

std::vector<Complex> DilationModel::dilate(std::span<const Complex> f, std::size_t k) const {
  if (k > depth_) {
    throw DomainError("dilate: power " + std::to_string(k) + " exceeds truncation depth " +
                      std::to_string(depth_));
  }
  StateFunction state = lift(f);
  for (std::size_t i = 0; i < k; ++i) state = step(state);
  return expect(state);
}

DilationModel build_dilation(const GroupFunction& u, std::size_t depth, double tol,
                             std::size_t cap) {
  DualGroup dual = dual_group(u.group());
  SpectralMeasure mu = bochner_measure(dual, u.values(), tol);
  if (!mu.probability) {
    throw DomainError("build_dilation: u is not unital positive definite (Bochner weights are "
                      "not a probability measure)");
  }
  if (depth < 1) throw DomainError("build_dilation: K must be >= 1");
  if (checked_power(dual.size(), depth + 1, cap) > cap) {
    throw CapacityError("build_dilation: state space |dual G|^(K+1) exceeds cap " +
                        std::to_string(cap));
  }
  return DilationModel(std::move(dual), std::move(mu), depth);
}

std::vector<Complex> convolve(const DualGroup& dual, std::span<const double> mu,
                              std::span<const Complex> f) {
  const std::size_t n = dual.size();
  if (mu.size() != n || f.size() != n) throw DimensionError("convolve: length mismatch");
  std::vector<Complex> g(n);
  for (Index t = 0; t < n; ++t)
    for (Index x = 0; x < n; ++x) g[t] += mu[x] * f[dual.mul(t, dual.inv(x))];
  return g;
}

SpectralMeasure convolution_power(const DualGroup& dual, const SpectralMeasure& mu, std::size_t k) {
  const std::size_t n = dual.size();
  std::vector<double> p(n, 0.0);
  p[dual.identity()] = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> q(n, 0.0);
    for (Index a = 0; a < n; ++a) {
      if (p[a] == 0.0) continue;
      for (Index b = 0; b < n; ++b) q[dual.mul(a, b)] += p[a] * mu.weights[b];
    }
    p = std::move(q);
  }
  return make_measure(std::move(p));
}

std::vector<Complex> direct_dilation_sum(const DualGroup& dual, std::span<const double> mu,
                                         std::span<const Complex> f, std::size_t k) {
  const std::size_t n = dual.size();
  if (mu.size() != n || f.size() != n) throw DimensionError("direct_dilation_sum: length mismatch");
  std::vector<Complex> g(n);
  std::vector<Index> s(k, 0);
  for (Index t = 0; t < n; ++t) {
    std::fill(s.begin(), s.end(), 0);
    while (true) {
      double w = 1.0;
      Index x = t;
      for (Index si : s) {
        w *= mu[si];
        x = dual.mul(x, dual.inv(si));
      }
      g[t] += w * f[x];
      std::size_t i = 0;
      while (i < k && ++s[i] == n) s[i++] = 0;
      if (i == k) break;
    }
  }
  return g;
}

double dilation_residual(const DilationModel& model, std::size_t k, std::span<const Complex> f) {
  const auto lhs = model.dilate(f, k);
  const auto power = convolution_power(model.dual(), model.measure(), k);
  const auto rhs = convolve(model.dual(), power.weights, f);
  double r = 0.0;
  for (std::size_t t = 0; t < lhs.size(); ++t) r = std::max(r, std::abs(lhs[t] - rhs[t]));
  return r;
}

std::vector<Complex> character_function(const DualGroup& dual, Index t) {
  std::vector<Complex> f(dual.size());
  for (Index chi = 0; chi < dual.size(); ++chi) f[chi] = std::conj(dual.value(chi, t));
  return f;
}

Complex fourier_coefficient(const DualGroup& dual, std::span<const Complex> g, Index t) {
  if (g.size() != dual.size()) throw DimensionError("fourier_coefficient: length mismatch");
  Complex c{};
  for (Index chi = 0; chi < dual.size(); ++chi) c += g[chi] * dual.value(chi, t);
  return c / static_cast<double>(dual.size());
}

}  // namespace absdil
