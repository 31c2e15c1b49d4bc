#include "absdil/folner.hpp"

#include <numeric>
#include <string>

#include "absdil/errors.hpp"

namespace absdil {

namespace {

Rational ratio(std::size_t count, std::size_t size) {
  Rational q(static_cast<unsigned long>(count), static_cast<unsigned long>(size));
  q.canonicalize();
  return q;
}

}  // namespace

FolnerWindow::FolnerWindow(DiscreteGroup group, std::vector<std::int64_t> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("FolnerWindow: window must be non-empty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const std::int64_t x = elements_[i];
    if (!group_.contains(x)) {
      throw DomainError("FolnerWindow: element " + std::to_string(x) + " is not in " +
                        group_.name());
    }
    if (!index_.emplace(x, i).second) {
      throw DomainError("FolnerWindow: duplicate element " + group_.element_name(x));
    }
  }
}

std::optional<std::size_t> FolnerWindow::position(std::int64_t x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IMatrix compress(const FolnerWindow& window, std::int64_t s) {
  const auto& g = window.group();
  if (!g.contains(s)) throw DomainError("compress: element not in group");
  IMatrix m(window.size(), window.size());
  for (std::size_t q = 0; q < window.size(); ++q) {
    if (const auto p = window.position(g.mul(s, window.elements()[q]))) m(*p, q) = 1;
  }
  return m;
}

Rational trace_identity(const FolnerWindow& window, std::int64_t s) {
  const IMatrix m = compress(window, s);
  long long tr = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return ratio(static_cast<std::size_t>(tr), window.size());
}

Rational normalized_hs_norm_sq(const FolnerWindow& window, const IMatrix& x) {
  mpz_class s = 0;
  for (long long v : x.data()) s += mpz_class(static_cast<long>(v * v));
  Rational q(s, mpz_class(static_cast<unsigned long>(window.size())));
  q.canonicalize();
  return q;
}

CompressionReport mult_defect(const FolnerWindow& window, std::int64_t s, std::int64_t t) {
  const auto& g = window.group();
  if (!g.contains(s) || !g.contains(t)) throw DomainError("mult_defect: element not in group");
  CompressionReport r;
  r.s = s;
  r.t = t;

  const std::int64_t st = g.mul(s, t);
  const std::int64_t t_inv = g.inv(t);
  std::size_t defect = 0;
  std::size_t sym_diff = 0;
  std::size_t intersect = 0;
  for (const std::int64_t q : window.elements()) {
    const bool in_h = window.contains(g.mul(st, q));          // q in t^{-1}s^{-1}F
    const bool in_t_pre = window.contains(g.mul(t, q));       // q in t^{-1}F
    if (in_h && !in_t_pre) ++defect;
    if (!in_t_pre) ++sym_diff;                                // F \ t^{-1}F
    if (!window.contains(g.mul(t_inv, q))) ++sym_diff;        // t^{-1}F \ F, via x = t^{-1}q
    if (window.contains(g.mul(t_inv, q))) ++intersect;        // q in tF
  }
  r.defect_sq = ratio(defect, window.size());
  r.bound = ratio(sym_diff, window.size());
  r.intersect_ratio = ratio(intersect, window.size());

  const IMatrix diff = compress(window, st) - compress(window, s) * compress(window, t);
  r.defect_sq_matrix = normalized_hs_norm_sq(window, diff);
  if (r.defect_sq != r.defect_sq_matrix) {
    throw ConsistencyError("mult_defect: combinatorial value " + rational_to_string(r.defect_sq) +
                           " differs from matrix value " + rational_to_string(r.defect_sq_matrix));
  }
  return r;
}

PairingResult pairing_value(const FolnerWindow& window, const ExactGroupFunction& u, unsigned k,
                            std::int64_t s, std::int64_t t) {
  const auto& g = window.group();
  if (!g.contains(s) || !g.contains(t)) throw DomainError("pairing_value: element not in group");
  const auto& f = window.elements();
  const IMatrix ct = compress(window, t);
  const IMatrix cs = compress(window, s);

  // tau(X C_s) = (1/|F|) sum_{p,q} X(p,q) C_s(q,p), with X = T_F^k(C_t) the
  // Schur product of C_t with [u(p q^{-1})^k].
  ExactScalar acc;
  for (std::size_t p = 0; p < window.size(); ++p) {
    for (std::size_t q = 0; q < window.size(); ++q) {
      if (ct(p, q) == 0 || cs(q, p) == 0) continue;
      acc += u(g.mul(f[p], g.inv(f[q]))).pow(k) * ExactScalar(static_cast<long>(ct(p, q) * cs(q, p)));
    }
  }
  PairingResult r;
  r.direct = acc * ExactScalar(ratio(1, window.size()));

  if (g.mul(s, t) == g.identity()) {
    std::size_t intersect = 0;
    for (const std::int64_t q : f)
      if (window.contains(g.mul(g.inv(t), q))) ++intersect;
    r.closed_form = u(t).pow(k) * ExactScalar(ratio(intersect, window.size()));
  }
  if (!(r.direct == r.closed_form)) {
    throw ConsistencyError("pairing_value: matrix evaluation " + r.direct.to_string() +
                           " differs from closed form " + r.closed_form.to_string());
  }
  return r;
}

std::vector<FolnerWindow> folner_sequence(const DiscreteGroup& group, FolnerKind kind,
                                          std::size_t n_max) {
  std::vector<FolnerWindow> windows;
  if (kind == FolnerKind::kIntervals) {
    if (group.is_finite()) throw DomainError("folner_sequence: intervals require the group Z");
    if (n_max == 0) throw DomainError("folner_sequence: n_max must be >= 1");
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::vector<std::int64_t> f(n);
      std::iota(f.begin(), f.end(), 0);
      windows.emplace_back(group, std::move(f));
    }
  } else {
    if (!group.is_finite()) throw DomainError("folner_sequence: whole_group requires a finite group");
    std::vector<std::int64_t> f(group.finite().order());
    std::iota(f.begin(), f.end(), 0);
    windows.emplace_back(group, std::move(f));
  }
  return windows;
}

}  // namespace absdil
