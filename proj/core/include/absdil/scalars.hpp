#pragma once

// Scalars used throughout the library: exact elements of the number field
// Q(i, sqrt2, sqrt3) and double-precision complex numbers with a relative
// comparison tolerance.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace absdil {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Numerators and denominators of exact coefficients may not exceed this many
/// bits; larger values raise CapacityError.
inline constexpr std::size_t kMaxCoefficientBits = 1u << 16;

/// |x - y| <= tol * max(1, |x|, |y|).
bool approx_equal(Complex x, Complex y, double tol = kDefaultTol);
bool approx_equal(double x, double y, double tol = kDefaultTol);

/// Throws DomainError if either component is NaN or infinite.
Complex require_finite(Complex x);

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws DomainError
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q > 0 (integers print as "p/1").
std::string rational_to_string(const Rational& q);

/// Element of Q(i, sqrt2, sqrt3), stored as eight rationals: real and
/// imaginary coordinates on the basis {1, sqrt2, sqrt3, sqrt6}.
class ExactScalar {
 public:
  enum Basis : std::size_t { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };
  using Coords = std::array<Rational, 4>;

  ExactScalar() = default;
  ExactScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(const Rational& value);
  ExactScalar(Coords re, Coords im);

  static ExactScalar rational(long num, long den);
  static ExactScalar sqrt2();
  static ExactScalar sqrt3();
  static ExactScalar sqrt6();
  static ExactScalar imag_unit();
  /// exp(2*pi*i * num/den); requires den/gcd(num,den) to divide 12.
  static std::optional<ExactScalar> root_of_unity(long num, long den);

  const Coords& re() const { return re_; }
  const Coords& im() const { return im_; }

  bool is_zero() const;
  bool is_real() const;
  /// True when the value lies in Q (only the rational real coordinate is set).
  bool is_rational() const;

  ExactScalar conj() const;
  /// Multiplicative inverse via the product of Galois conjugates.
  /// Throws DivisionByZero for zero.
  ExactScalar inv() const;
  ExactScalar pow(unsigned k) const;

  /// The rational product of all eight Galois conjugates' pairings; used by
  /// inv(). Zero iff the element is zero.
  Rational norm() const;

  Complex to_float() const;
  std::string to_string() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(const ExactScalar& a);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b);

 private:
  void check_capacity() const;

  Coords re_{};
  Coords im_{};
};

inline ExactScalar conj(const ExactScalar& x) { return x.conj(); }
inline Complex to_float(const ExactScalar& x) { return x.to_float(); }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex{}; }

enum class ExactOp { kAdd, kSub, kMul, kConj, kNeg, kInv };

/// Dispatching form of the field operations; binary ops require y.
ExactScalar exact_arith(ExactOp op, const ExactScalar& x,
                        const std::optional<ExactScalar>& y = std::nullopt);

}  // namespace absdil
