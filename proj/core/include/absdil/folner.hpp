#pragma once

// Finite-window quantities behind the transference of absolute dilations
// from Herz-Schur to Fourier multipliers on amenable groups: compressions
// alpha_F(lambda(s)) = Gamma_F^* lambda(s) Gamma_F, their normalized traces,
// the multiplicativity defect and the pairing
// tau_F(T_F^k(alpha_F lambda(t)) alpha_F lambda(s)). Every quantity is an
// exact rational (or an exact field element for the pairing).

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "absdil/groups.hpp"
#include "absdil/matrix.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

class FolnerWindow {
 public:
  /// Throws DomainError when F is empty, has duplicates or leaves the group
  /// (for Z: |x| < 2^31).
  FolnerWindow(DiscreteGroup group, std::vector<std::int64_t> elements);

  const DiscreteGroup& group() const { return group_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> position(std::int64_t x) const;
  bool contains(std::int64_t x) const { return position(x).has_value(); }

 private:
  DiscreteGroup group_;
  std::vector<std::int64_t> elements_;
  std::unordered_map<std::int64_t, std::size_t> index_;
};

/// |F| x |F| partial permutation: entry (p, q) is 1 iff p = s q.
IMatrix compress(const FolnerWindow& window, std::int64_t s);

/// Normalized trace of compress(window, s): 1 for s = e, else 0.
Rational trace_identity(const FolnerWindow& window, std::int64_t s);

/// (1/|F|) sum |x_ij|^2.
Rational normalized_hs_norm_sq(const FolnerWindow& window, const IMatrix& x);

struct CompressionReport {
  std::int64_t s = 0;
  std::int64_t t = 0;
  Rational defect_sq;         // |H \ (H cap t^{-1}F)| / |F|, H = F cap t^{-1}s^{-1}F
  Rational defect_sq_matrix;  // ||compress(st) - compress(s)compress(t)||^2, normalized HS
  Rational bound;             // |F sym-diff t^{-1}F| / |F|
  Rational intersect_ratio;   // |F cap tF| / |F|
};

/// Computes the defect both combinatorially and from the matrices; throws
/// ConsistencyError if they differ.
CompressionReport mult_defect(const FolnerWindow& window, std::int64_t s, std::int64_t t);

using ExactGroupFunction = std::function<ExactScalar(std::int64_t)>;

struct PairingResult {
  ExactScalar direct;       // tau_F(T_F^k(compress(t)) compress(s)) from the matrices
  ExactScalar closed_form;  // u(t)^k |F cap tF| / |F| if s = t^{-1}, else 0
};

/// Throws ConsistencyError if the two evaluations differ.
PairingResult pairing_value(const FolnerWindow& window, const ExactGroupFunction& u, unsigned k,
                            std::int64_t s, std::int64_t t);

enum class FolnerKind { kIntervals, kWholeGroup };

/// kIntervals (Z only): F_n = {0, ..., n-1} for n = 1..n_max.
/// kWholeGroup (finite groups only): the single window F = G.
std::vector<FolnerWindow> folner_sequence(const DiscreteGroup& group, FolnerKind kind,
                                          std::size_t n_max = 0);

}  // namespace absdil
