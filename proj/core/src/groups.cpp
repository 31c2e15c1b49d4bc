#include "absdil/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>

#include "absdil/errors.hpp"

namespace absdil {

namespace {

using Perm = std::vector<int>;  // one-line notation over 1..n

// (a b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x] - 1)];
  return r;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start) + 1) continue;
    out += '(';
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x] - 1)) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

FiniteGroup from_permutations(std::string name, const std::vector<Perm>& perms,
                              std::vector<std::string> names) {
  std::map<Perm, Index> index;
  for (Index i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  std::vector<std::vector<Index>> table(perms.size(), std::vector<Index>(perms.size()));
  for (Index a = 0; a < perms.size(); ++a)
    for (Index b = 0; b < perms.size(); ++b) table[a][b] = index.at(compose(perms[a], perms[b]));
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

FiniteGroup build_symmetric(int n) {
  if (n < 1) throw DomainError("symmetric(n) requires n >= 1");
  if (n > kMaxSymmetricDegree) {
    throw DomainError("symmetric(" + std::to_string(n) + "): degree exceeds " +
                      std::to_string(kMaxSymmetricDegree));
  }
  std::vector<Perm> perms;
  std::vector<std::string> names;
  if (n == 3) {
    perms = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
    names = {"1", "(123)", "(132)", "(12)", "(23)", "(31)"};
  } else {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      perms.push_back(p);
      names.push_back(cycle_name(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return from_permutations("S" + std::to_string(n), perms, std::move(names));
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw DomainError("cyclic(n) requires n >= 1");
  if (static_cast<std::size_t>(n) > kMaxGroupOrder) {
    throw DomainError("cyclic(" + std::to_string(n) + "): order exceeds " +
                      std::to_string(kMaxGroupOrder));
  }
  const auto order = static_cast<std::size_t>(n);
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(order, std::vector<Index>(order));
  for (Index a = 0; a < order; ++a) {
    names.push_back(std::to_string(a));
    for (Index b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup build_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order();
  const std::size_t k = h.order();
  if (m * k > kMaxGroupOrder) {
    throw DomainError("product " + g.name() + "x" + h.name() + ": order exceeds " +
                      std::to_string(kMaxGroupOrder));
  }
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(m * k, std::vector<Index>(m * k));
  for (Index a = 0; a < m * k; ++a) {
    names.push_back("(" + g.element_name(a / k) + "," + h.element_name(a % k) + ")");
    for (Index b = 0; b < m * k; ++b) {
      table[a][b] = g.mul(a / k, b / k) * k + h.mul(a % k, b % k);
    }
  }
  return FiniteGroup(g.name() + "x" + h.name(), std::move(names), std::move(table));
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<Index>> cayley)
    : name_(std::move(name)), names_(std::move(element_names)), cayley_(std::move(cayley)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DomainError("group must be non-empty");
  if (cayley_.size() != n) throw DomainError("Cayley table size does not match element list");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw DomainError("Cayley table is not square");
    for (Index v : row)
      if (v >= n) throw DomainError("Cayley table entry out of range");
  }
  for (Index a = 0; a < n; ++a) {
    if (cayley_[0][a] != a || cayley_[a][0] != a) throw DomainError("index 0 is not the identity");
  }
  inv_.assign(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (cayley_[a][b] == 0 && cayley_[b][a] == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == n) throw DomainError("element " + names_[a] + " has no inverse");
  }
  if (n <= 24 && !is_associative()) throw DomainError("Cayley table is not associative");
}

std::optional<Index> FiniteGroup::find(std::string_view element_name) const {
  const auto it = std::find(names_.begin(), names_.end(), element_name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < order(); ++a)
    for (Index b = a + 1; b < order(); ++b)
      if (cayley_[a][b] != cayley_[b][a]) return false;
  return true;
}

bool FiniteGroup::is_associative() const {
  for (Index a = 0; a < order(); ++a)
    for (Index b = 0; b < order(); ++b)
      for (Index c = 0; c < order(); ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Index a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::kCyclic: return "Z" + std::to_string(n);
    case Kind::kSymmetric: return "S" + std::to_string(n);
    case Kind::kInteger: return "Z";
    case Kind::kProduct: return factors.at(0).to_string() + "x" + factors.at(1).to_string();
  }
  return {};
}

GroupSpec parse_group_spec(std::string_view text) {
  auto parse_factor = [&](std::string_view tok) -> GroupSpec {
    if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'S')) {
      throw DomainError("unsupported group spec '" + std::string(text) + "'");
    }
    const std::string_view digits = tok.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        digits.size() > 6) {
      throw DomainError("unsupported group spec '" + std::string(text) + "'");
    }
    const int n = std::stoi(std::string(digits));
    return tok[0] == 'Z' ? GroupSpec::cyclic(n) : GroupSpec::symmetric(n);
  };
  if (text == "Z") return GroupSpec::integers();
  std::vector<GroupSpec> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('x', start);
    const auto tok = text.substr(start, pos == std::string_view::npos ? text.npos : pos - start);
    factors.push_back(parse_factor(tok));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  GroupSpec spec = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) spec = GroupSpec::product(spec, factors[i]);
  return spec;
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return build_cyclic(spec.n);
    case GroupSpec::Kind::kSymmetric: return build_symmetric(spec.n);
    case GroupSpec::Kind::kProduct:
      if (spec.factors.size() != 2) throw DomainError("product spec needs two factors");
      return build_product(build_group(spec.factors[0]), build_group(spec.factors[1]));
    case GroupSpec::Kind::kInteger:
      throw DomainError("Z is infinite; use build_discrete_group");
  }
  throw DomainError("unsupported group spec");
}

IMatrix regular_representation(const FiniteGroup& g, Index s) {
  if (s >= g.order()) throw DomainError("element index out of range");
  IMatrix m(g.order(), g.order());
  for (Index q = 0; q < g.order(); ++q) m(g.mul(s, q), q) = 1;
  return m;
}

DualGroup::DualGroup(FiniteGroup base, std::size_t exponent,
                     std::vector<std::vector<std::size_t>> phases)
    : base_(std::move(base)), exponent_(exponent), phases_(std::move(phases)) {
  const std::size_t n = phases_.size();
  std::map<std::vector<std::size_t>, Index> index;
  for (Index k = 0; k < n; ++k) index.emplace(phases_[k], k);
  mul_.assign(n, std::vector<Index>(n));
  inv_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    std::vector<std::size_t> neg(base_.order());
    for (Index t = 0; t < base_.order(); ++t) neg[t] = (exponent_ - phases_[a][t]) % exponent_;
    inv_[a] = index.at(neg);
    for (Index b = 0; b < n; ++b) {
      std::vector<std::size_t> sum(base_.order());
      for (Index t = 0; t < base_.order(); ++t) sum[t] = (phases_[a][t] + phases_[b][t]) % exponent_;
      mul_[a][b] = index.at(sum);
    }
  }
}

Complex DualGroup::value(Index chi, Index t) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(phases_[chi][t]) /
                       static_cast<double>(exponent_);
  return std::polar(1.0, angle);
}

ExactScalar DualGroup::exact_value(Index chi, Index t) const {
  auto v = ExactScalar::root_of_unity(static_cast<long>(phases_[chi][t]),
                                      static_cast<long>(exponent_));
  if (!v) throw DomainError("character values of " + base_.name() + " are not exact in Q(i, sqrt3)");
  return *v;
}

CMatrix DualGroup::table() const {
  CMatrix m(size(), base_.order());
  for (Index k = 0; k < size(); ++k)
    for (Index t = 0; t < base_.order(); ++t) m(k, t) = value(k, t);
  return m;
}

DualGroup dual_group(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DomainError("dual_group: " + g.name() + " is not abelian");
  const std::size_t n = g.order();
  const std::size_t big_n = g.exponent();

  // Greedy generating set and a word (as exponent vector) for every element.
  std::vector<Index> gens;
  std::vector<std::vector<std::size_t>> word(n);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  word[0] = {};
  auto close = [&]() {
    std::queue<Index> todo;
    for (Index a = 0; a < n; ++a)
      if (reached[a]) todo.push(a);
    while (!todo.empty()) {
      const Index a = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Index b = g.mul(a, gens[i]);
        if (reached[b]) continue;
        reached[b] = true;
        word[b] = word[a];
        word[b].resize(gens.size(), 0);
        ++word[b][i];
        todo.push(b);
      }
    }
  };
  for (Index a = 1; a < n; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    for (auto& w : word) w.resize(gens.size(), 0);
    close();
  }
  for (auto& w : word) w.resize(gens.size(), 0);

  std::vector<std::size_t> gen_order;
  for (Index a : gens) gen_order.push_back(g.element_order(a));

  std::vector<std::vector<std::size_t>> characters;
  std::vector<std::size_t> e(gens.size(), 0);
  while (true) {
    std::vector<std::size_t> phase(n);
    for (Index t = 0; t < n; ++t) {
      std::size_t p = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) p += word[t][i] * e[i] * (big_n / gen_order[i]);
      phase[t] = p % big_n;
    }
    bool hom = true;
    for (Index a = 0; a < n && hom; ++a)
      for (Index b = 0; b < n && hom; ++b)
        hom = phase[g.mul(a, b)] == (phase[a] + phase[b]) % big_n;
    if (hom) characters.push_back(std::move(phase));
    if (gens.empty()) break;
    // next exponent tuple, last generator fastest
    std::size_t i = gens.size();
    bool carry = true;
    while (carry && i > 0) {
      --i;
      if (++e[i] < gen_order[i]) {
        carry = false;
      } else {
        e[i] = 0;
      }
    }
    if (carry) break;
  }
  if (characters.size() != n) {
    throw ConsistencyError("dual_group: found " + std::to_string(characters.size()) +
                           " characters for a group of order " + std::to_string(n));
  }
  return DualGroup(g, big_n, std::move(characters));
}

std::string DiscreteGroup::name() const {
  return is_finite() ? finite().name() : IntegerGroup::name();
}

std::int64_t DiscreteGroup::mul(std::int64_t a, std::int64_t b) const {
  if (!is_finite()) return IntegerGroup::mul(a, b);
  return static_cast<std::int64_t>(finite().mul(static_cast<Index>(a), static_cast<Index>(b)));
}

std::int64_t DiscreteGroup::inv(std::int64_t a) const {
  if (!is_finite()) return IntegerGroup::inv(a);
  return static_cast<std::int64_t>(finite().inv(static_cast<Index>(a)));
}

bool DiscreteGroup::contains(std::int64_t a) const {
  if (!is_finite()) return a > -IntegerGroup::kBound && a < IntegerGroup::kBound;
  return a >= 0 && static_cast<std::size_t>(a) < finite().order();
}

std::string DiscreteGroup::element_name(std::int64_t a) const {
  if (!is_finite()) return std::to_string(a);
  return finite().element_name(static_cast<Index>(a));
}

DiscreteGroup build_discrete_group(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::kInteger) return DiscreteGroup(IntegerGroup{});
  return DiscreteGroup(build_group(spec));
}

}  // namespace absdil
