#pragma once

// Finite groups as Cayley tables, the integer group Z, the left regular
// representation and character tables of finite abelian groups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absdil/matrix.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

using Index = std::size_t;

inline constexpr std::size_t kMaxGroupOrder = 1024;
inline constexpr int kMaxSymmetricDegree = 5;

/// A group given by its multiplication table over the indices 0..n-1.
/// The identity is always index 0.
class FiniteGroup {
 public:
  /// Validates closure, identity at 0, existence of inverses and (for
  /// n <= 24) associativity. Throws DomainError on a malformed table.
  FiniteGroup(std::string name, std::vector<std::string> element_names,
              std::vector<std::vector<Index>> cayley);

  const std::string& name() const { return name_; }
  std::size_t order() const { return names_.size(); }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return cayley_[a][b]; }
  Index inv(Index a) const { return inv_[a]; }
  const std::string& element_name(Index a) const { return names_[a]; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Index> find(std::string_view element_name) const;
  const std::vector<std::vector<Index>>& cayley() const { return cayley_; }
  const std::vector<Index>& inverses() const { return inv_; }

  bool is_abelian() const;
  bool is_associative() const;
  std::size_t element_order(Index a) const;
  /// Least common multiple of all element orders.
  std::size_t exponent() const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<Index>> cayley_;
  std::vector<Index> inv_;
};

/// The additive group of integers. Elements are plain int64 values; windows
/// over Z keep them within +-2^31.
struct IntegerGroup {
  static constexpr std::int64_t kBound = std::int64_t{1} << 31;
  static std::int64_t identity() { return 0; }
  static std::int64_t mul(std::int64_t a, std::int64_t b) { return a + b; }
  static std::int64_t inv(std::int64_t a) { return -a; }
  static std::string name() { return "Z"; }
};

/// Parsed form of group specifications such as "S3", "Z4", "Z2xZ2", "Z".
struct GroupSpec {
  enum class Kind { kCyclic, kSymmetric, kProduct, kInteger };
  Kind kind = Kind::kCyclic;
  int n = 1;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(int n) { return {Kind::kCyclic, n, {}}; }
  static GroupSpec symmetric(int n) { return {Kind::kSymmetric, n, {}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    return {Kind::kProduct, 0, {std::move(a), std::move(b)}};
  }
  static GroupSpec integers() { return {Kind::kInteger, 0, {}}; }

  std::string to_string() const;
};

/// "Zn", "Sn", "Z" and 'x'-separated products of the finite ones.
GroupSpec parse_group_spec(std::string_view text);

/// Builds a finite group. symmetric(3) uses the order
/// 1, (123), (132), (12), (23), (31); other symmetric groups list
/// permutations lexicographically in one-line notation. Products enumerate
/// pairs (g, h) with h varying fastest. Permutations compose right to left.
FiniteGroup build_group(const GroupSpec& spec);

/// Left regular representation: entry (p, q) is 1 iff p = s q.
IMatrix regular_representation(const FiniteGroup& g, Index s);

template <class T>
Matrix<T> cast_matrix(const IMatrix& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = T(static_cast<long>(m(i, j)));
  return r;
}

/// Character table of a finite abelian group. Character values are roots of
/// unity exp(2 pi i p / N) with N the group exponent; they are stored as the
/// integer phases p so that the group law on the dual is exact.
class DualGroup {
 public:
  DualGroup(FiniteGroup base, std::size_t exponent, std::vector<std::vector<std::size_t>> phases);

  const FiniteGroup& base() const { return base_; }
  std::size_t size() const { return phases_.size(); }
  std::size_t exponent() const { return exponent_; }
  std::size_t phase(Index chi, Index t) const { return phases_[chi][t]; }
  Complex value(Index chi, Index t) const;
  /// Available when every character value is a root of unity of order
  /// dividing 12.
  bool has_exact_values() const { return 12 % exponent_ == 0; }
  ExactScalar exact_value(Index chi, Index t) const;
  CMatrix table() const;

  /// Group law on the dual: pointwise product of characters.
  Index mul(Index a, Index b) const { return mul_[a][b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index identity() const { return 0; }

 private:
  FiniteGroup base_;
  std::size_t exponent_;
  std::vector<std::vector<std::size_t>> phases_;
  std::vector<std::vector<Index>> mul_;
  std::vector<Index> inv_;
};

/// Throws DomainError for non-abelian input. Character 0 is trivial.
DualGroup dual_group(const FiniteGroup& g);

/// Either a finite group or Z, with elements encoded as int64 (finite-group
/// elements by their index).
class DiscreteGroup {
 public:
  DiscreteGroup(FiniteGroup g) : group_(std::move(g)) {}  // NOLINT
  DiscreteGroup(IntegerGroup z) : group_(z) {}             // NOLINT

  bool is_finite() const { return std::holds_alternative<FiniteGroup>(group_); }
  const FiniteGroup& finite() const { return std::get<FiniteGroup>(group_); }
  std::string name() const;

  std::int64_t identity() const { return 0; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  bool contains(std::int64_t a) const;
  std::string element_name(std::int64_t a) const;

 private:
  std::variant<FiniteGroup, IntegerGroup> group_;
};

DiscreteGroup build_discrete_group(const GroupSpec& spec);

}  // namespace absdil
