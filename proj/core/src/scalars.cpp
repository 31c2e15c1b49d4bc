#include "absdil/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "absdil/errors.hpp"

namespace absdil {

namespace {

using Quad = ExactScalar::Coords;

// (a + b*sqrt2 + c*sqrt3 + d*sqrt6) * (a' + ...), reduced with
// sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
Quad quad_mul(const Quad& x, const Quad& y) {
  const auto& [a1, b1, c1, d1] = x;
  const auto& [a2, b2, c2, d2] = y;
  Quad r;
  r[0] = a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2;
  r[1] = a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2);
  r[2] = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
  r[3] = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
  return r;
}

Quad quad_add(const Quad& x, const Quad& y) {
  Quad r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = x[k] + y[k];
  return r;
}

Quad quad_sub(const Quad& x, const Quad& y) {
  Quad r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = x[k] - y[k];
  return r;
}

// sqrt2 -> -sqrt2 (so sqrt6 -> -sqrt6).
Quad flip_sqrt2(Quad x) {
  x[1] = -x[1];
  x[3] = -x[3];
  return x;
}

// sqrt3 -> -sqrt3 (so sqrt6 -> -sqrt6).
Quad flip_sqrt3(Quad x) {
  x[2] = -x[2];
  x[3] = -x[3];
  return x;
}

bool quad_zero(const Quad& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::size_t bits(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

long double quad_value(const Quad& x) {
  static const long double kS2 = std::sqrt(2.0L);
  static const long double kS3 = std::sqrt(3.0L);
  static const long double kS6 = std::sqrt(6.0L);
  auto ld = [](const Rational& q) {
    // Two-step conversion keeps ~64 bits for long double.
    const double hi = q.get_d();
    const Rational rest = q - Rational(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  };
  return ld(x[0]) + ld(x[1]) * kS2 + ld(x[2]) * kS3 + ld(x[3]) * kS6;
}

void append_quad(std::ostringstream& os, const Quad& x) {
  static constexpr const char* kNames[] = {"", "*sqrt2", "*sqrt3", "*sqrt6"};
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(x[k]) == 0) continue;
    if (!first) os << (sgn(x[k]) > 0 ? " + " : " - ");
    else if (sgn(x[k]) < 0) os << "-";
    os << Rational(abs(x[k])).get_str() << kNames[k];
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

bool approx_equal(Complex x, Complex y, double tol) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

bool approx_equal(double x, double y, double tol) {
  return approx_equal(Complex{x}, Complex{y}, tol);
}

Complex require_finite(Complex x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    throw DomainError("non-finite complex value");
  }
  return x;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    return !part.empty() &&
           std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(num.front() == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar::ExactScalar(long value) { re_[kOne] = value; }

ExactScalar::ExactScalar(const Rational& value) {
  re_[kOne] = value;
  re_[kOne].canonicalize();
}

ExactScalar::ExactScalar(Coords re, Coords im) : re_(std::move(re)), im_(std::move(im)) {
  for (auto& q : re_) q.canonicalize();
  for (auto& q : im_) q.canonicalize();
  check_capacity();
}

ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar ExactScalar::sqrt2() {
  ExactScalar x;
  x.re_[kSqrt2] = 1;
  return x;
}

ExactScalar ExactScalar::sqrt3() {
  ExactScalar x;
  x.re_[kSqrt3] = 1;
  return x;
}

ExactScalar ExactScalar::sqrt6() {
  ExactScalar x;
  x.re_[kSqrt6] = 1;
  return x;
}

ExactScalar ExactScalar::imag_unit() {
  ExactScalar x;
  x.im_[kOne] = 1;
  return x;
}

std::optional<ExactScalar> ExactScalar::root_of_unity(long num, long den) {
  if (den <= 0) throw DomainError("root_of_unity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const long g = std::gcd(num, den);
  const long order = den / g;
  if (12 % order != 0) return std::nullopt;
  // exp(2*pi*i*m/12) for m = 0..11: cos and sin lie in Q(sqrt3).
  const long m = num / g * (12 / order);
  static const std::array<std::pair<ExactScalar, ExactScalar>, 12> kTable = [] {
    const ExactScalar half = rational(1, 2);
    const ExactScalar h3 = sqrt3() * half;
    const ExactScalar z(0);
    const ExactScalar one(1);
    return std::array<std::pair<ExactScalar, ExactScalar>, 12>{{
        {one, z},   {h3, half},   {half, h3},   {z, one},   {-half, h3},  {-h3, half},
        {-one, z},  {-h3, -half}, {-half, -h3}, {z, -one},  {half, -h3},  {h3, -half},
    }};
  }();
  const auto& [c, s] = kTable[static_cast<std::size_t>(m)];
  return c + s * imag_unit();
}

bool ExactScalar::is_zero() const { return quad_zero(re_) && quad_zero(im_); }

bool ExactScalar::is_real() const { return quad_zero(im_); }

bool ExactScalar::is_rational() const {
  return is_real() && sgn(re_[1]) == 0 && sgn(re_[2]) == 0 && sgn(re_[3]) == 0;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  for (auto& q : r.im_) q = -q;
  return r;
}

Rational ExactScalar::norm() const {
  // |z|^2 lies in Q(sqrt2, sqrt3); two further conjugate pairings reach Q.
  const Quad n1 = quad_add(quad_mul(re_, re_), quad_mul(im_, im_));
  const Quad n2 = quad_mul(n1, flip_sqrt2(n1));
  const Quad n3 = quad_mul(n2, flip_sqrt3(n2));
  return n3[0];
}

ExactScalar ExactScalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(i, sqrt2, sqrt3)");
  const Quad n1 = quad_add(quad_mul(re_, re_), quad_mul(im_, im_));
  const Quad s1 = flip_sqrt2(n1);
  const Quad n2 = quad_mul(n1, s1);
  const Quad s2 = flip_sqrt3(n2);
  const Rational n = quad_mul(n2, s2)[0];
  // z^{-1} = conj(z) * s1 * s2 / n
  const Quad cof = quad_mul(s1, s2);
  ExactScalar r;
  r.re_ = quad_mul(re_, cof);
  r.im_ = quad_mul(im_, cof);
  for (auto& q : r.re_) q /= n;
  for (auto& q : r.im_) q = -q / n;
  r.check_capacity();
  return r;
}

ExactScalar ExactScalar::pow(unsigned k) const {
  ExactScalar result(1);
  ExactScalar base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Complex ExactScalar::to_float() const {
  return {static_cast<double>(quad_value(re_)), static_cast<double>(quad_value(im_))};
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  if (is_real()) {
    append_quad(os, re_);
  } else if (quad_zero(re_)) {
    os << "i*(";
    append_quad(os, im_);
    os << ")";
  } else {
    append_quad(os, re_);
    os << " + i*(";
    append_quad(os, im_);
    os << ")";
  }
  return os.str();
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ = quad_add(re_, o.re_);
  im_ = quad_add(im_, o.im_);
  check_capacity();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ = quad_sub(re_, o.re_);
  im_ = quad_sub(im_, o.im_);
  check_capacity();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const Quad re = quad_sub(quad_mul(re_, o.re_), quad_mul(im_, o.im_));
  const Quad im = quad_add(quad_mul(re_, o.im_), quad_mul(im_, o.re_));
  re_ = re;
  im_ = im;
  check_capacity();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inv(); }

ExactScalar operator-(const ExactScalar& a) {
  ExactScalar r = a;
  for (auto& q : r.re_) q = -q;
  for (auto& q : r.im_) q = -q;
  return r;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  return a.re_ == b.re_ && a.im_ == b.im_;
}

void ExactScalar::check_capacity() const {
  for (const auto* coords : {&re_, &im_}) {
    for (const auto& q : *coords) {
      if (bits(q) > kMaxCoefficientBits) {
        throw CapacityError("exact coefficient exceeds " + std::to_string(kMaxCoefficientBits) +
                            " bits");
      }
    }
  }
}

ExactScalar exact_arith(ExactOp op, const ExactScalar& x, const std::optional<ExactScalar>& y) {
  auto rhs = [&]() -> const ExactScalar& {
    if (!y) throw DomainError("exact_arith: binary operation requires a second operand");
    return *y;
  };
  switch (op) {
    case ExactOp::kAdd: return x + rhs();
    case ExactOp::kSub: return x - rhs();
    case ExactOp::kMul: return x * rhs();
    case ExactOp::kConj: return x.conj();
    case ExactOp::kNeg: return -x;
    case ExactOp::kInv: return x.inv();
  }
  throw DomainError("exact_arith: unknown operation");
}

}  // namespace absdil
