#include "absdil/s3_pipeline.hpp"

#include <algorithm>
#include <cstdio>

#include "absdil/errors.hpp"
#include "absdil/gram.hpp"
#include "absdil/groups.hpp"

namespace absdil {

namespace {

using Vec = std::vector<ExactScalar>;

ExactScalar q(long num, long den) { return ExactScalar::rational(num, den); }

Vec hadamard(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
  return r;
}

Vec scaled_vec(const ExactScalar& s, Vec x) {
  for (auto& v : x) v *= s;
  return x;
}

Vec conj_vec(const Vec& x) { return conj_vector<ExactScalar>(x); }

Vec axpy(const ExactScalar& alpha, const Vec& x, const Vec& y) {  // alpha x + y
  Vec r(y);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += alpha * x[i];
  return r;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class Checker {
 public:
  explicit Checker(std::vector<IdentityCheck>& log) : log_(log) {}
  void operator()(bool ok, std::string name, std::string detail = {}) {
    if (!ok) throw ConsistencyError("S3 identity failed: " + name + (detail.empty() ? "" : " (" + detail + ")"));
    log_.push_back({std::move(name), std::move(detail)});
  }

 private:
  std::vector<IdentityCheck>& log_;
};

}  // namespace

ExactScalar cube_root_of_unity() { return *ExactScalar::root_of_unity(1, 3); }

S3Constants s3_constants() {
  const ExactScalar i = ExactScalar::imag_unit();
  const ExactScalar s2 = ExactScalar::sqrt2();
  // i / (2 sqrt3) = i sqrt3 / 6
  const ExactScalar b = q(-1, 2) + i * ExactScalar::sqrt3() * q(1, 6);
  return {ExactScalar(1), b, b.conj(), -s2 * q(1, 3), s2 * q(2, 3), -s2 * q(1, 3)};
}

PeterWeylBlocks peter_weyl_blocks(const S3Constants& k) {
  const ExactScalar j = cube_root_of_unity();
  const ExactScalar j2 = j * j;
  PeterWeylBlocks blocks;
  blocks.trivial = k.a + k.b + k.c + k.d + k.e + k.f;
  blocks.sign = k.a + k.b + k.c - k.d - k.e - k.f;
  blocks.two_dim = XMatrix{
      {k.a + k.b * j + k.c * j2, k.d * j2 + k.e + k.f * j},
      {k.d * j + k.e + k.f * j2, k.a + k.b * j2 + k.c * j},
  };
  return blocks;
}

std::array<XMatrix, 5> standard_representation_matrices() {
  // One-line notation of (123), (132), (12), (23), (31).
  static constexpr int kPerms[5][3] = {{2, 3, 1}, {3, 1, 2}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
  const ExactScalar j = cube_root_of_unity();
  const ExactScalar j2 = j * j;
  const ExactScalar r = ExactScalar::sqrt3() * q(1, 3);  // 1/sqrt3
  const std::array<Vec, 2> basis = {Vec{r, r * j, r * j2}, Vec{r, r * j2, r * j}};
  std::array<XMatrix, 5> out;
  for (std::size_t p = 0; p < 5; ++p) {
    XMatrix m(2, 2);
    for (std::size_t col = 0; col < 2; ++col) {
      Vec image(3);  // (pi(sigma) x)_i = x_{sigma(i)}
      for (std::size_t i = 0; i < 3; ++i) image[i] = basis[col][static_cast<std::size_t>(kPerms[p][i] - 1)];
      for (std::size_t row = 0; row < 2; ++row) m(row, col) = inner<ExactScalar>(image, basis[row]);
    }
    out[p] = std::move(m);
  }
  return out;
}

S3Report run_s3_report() {
  S3Report rep;
  Checker check(rep.checks);

  const S3Constants k = s3_constants();
  rep.constants = k;
  const ExactScalar i = ExactScalar::imag_unit();
  const ExactScalar j = cube_root_of_unity();
  const ExactScalar j2 = j * j;
  const ExactScalar s2 = ExactScalar::sqrt2();
  const ExactScalar delta = s2 * q(1, 3);
  const ExactScalar& b = k.b;
  const ExactScalar bc = b.conj();

  // Constants solve the two linear systems.
  check(k.a == ExactScalar(1), "a = 1");
  check(k.a + k.b + k.c == ExactScalar{}, "a + b + c = 0");
  check(k.b + k.c == ExactScalar(-1), "b + c = -1");
  check(k.a + k.b * j + k.c * j2 == ExactScalar(1), "a + b j + c j^2 = 1");
  check(k.a + k.b * j2 + k.c * j == ExactScalar(2), "a + b j^2 + c j = 2");
  check(k.d + k.e + k.f == ExactScalar{}, "d + e + f = 0");
  check(k.d * j2 + k.e + k.f * j == s2, "d j^2 + e + f j = sqrt2");
  check(k.d * j + k.e + k.f * j2 == s2, "d j + e + f j^2 = sqrt2");
  check(b * bc == q(1, 3), "|b|^2 = 1/3");
  check(b * b == q(1, 6) - i * ExactScalar::sqrt3() * q(1, 6), "b^2 = 1/6 - i/(2 sqrt3)");
  check(delta * delta == q(2, 9), "delta^2 = 2/9");
  check(b * b - ExactScalar(3) * delta * delta == bc, "b^2 - 3 delta^2 = conj(b)");

  // Herz-Schur matrix.
  const FiniteGroup s3 = build_group(GroupSpec::symmetric(3));
  const auto values = k.values();
  rep.a = herz_schur_matrix<ExactScalar>(s3, values);
  const ExactScalar d2 = ExactScalar(2) * delta;
  const XMatrix displayed{
      {1, bc, b, -delta, d2, -delta},     {b, 1, bc, -delta, -delta, d2},
      {bc, b, 1, d2, -delta, -delta},     {-delta, -delta, d2, 1, b, bc},
      {d2, -delta, -delta, bc, 1, b},     {-delta, d2, -delta, b, bc, 1},
  };
  check(rep.a == displayed, "[u(s t^-1)] equals the displayed matrix A");
  check(is_hermitian(rep.a), "A is Hermitian");
  check(trace(rep.a) == ExactScalar(6), "trace(A) = 6");

  // Peter-Weyl blocks.
  rep.pi = standard_representation_matrices();
  const std::array<XMatrix, 5> pi_displayed = {
      XMatrix{{j, 0}, {0, j2}}, XMatrix{{j2, 0}, {0, j}}, XMatrix{{0, j2}, {j, 0}},
      XMatrix{{0, 1}, {1, 0}},  XMatrix{{0, j}, {j2, 0}},
  };
  for (std::size_t p = 0; p < 5; ++p) {
    check(rep.pi[p] == pi_displayed[p], "pi(" + s3.element_name(p + 1) + ") in the basis (xi, eta)");
  }
  rep.blocks = peter_weyl_blocks(k);
  XMatrix gamma = XMatrix::identity(2);
  for (std::size_t p = 0; p < 5; ++p) gamma = gamma + scaled(rep.pi[p], values[p + 1]);
  check(gamma == rep.blocks.two_dim, "sum_sigma u(sigma) pi(sigma) = B");
  check(rep.blocks.trivial == ExactScalar{}, "s1 = a+b+c+d+e+f = 0");
  check(rep.blocks.sign == ExactScalar{}, "s2 = a+b+c-d-e-f = 0");
  check(rep.blocks.two_dim == XMatrix{{1, s2}, {s2, 2}}, "B = [[1, sqrt2], [sqrt2, 2]]");

  // Spectrum via characteristic polynomials.
  rep.charpoly = characteristic_polynomial(rep.a);
  const auto char_b = characteristic_polynomial(rep.blocks.two_dim);
  const Vec lin1{-rep.blocks.trivial, ExactScalar(1)};
  const Vec lin2{-rep.blocks.sign, ExactScalar(1)};
  const Vec blocks_poly = poly_mul(poly_mul(lin1, lin2), poly_mul(char_b, char_b));
  check(rep.charpoly == blocks_poly, "charpoly(A) = (x - s1)(x - s2) charpoly(B)^2");
  check(char_b == Vec{0, -3, 1}, "charpoly(B) = x (x - 3)");
  const Vec diag_poly{0, 0, 0, 0, 9, -6, 1};  // x^4 (x - 3)^2
  check(rep.charpoly == diag_poly, "A ~ Diag{0,0,0,0,3,3}");
  rep.spectrum = {3, 3, 0, 0, 0, 0};

  // Eigenvectors.
  rep.phi = {1, b, bc, -delta, d2, -delta};
  rep.phi_prime = {bc, 1, b, -delta, -delta, d2};
  const Vec a_row0(rep.a.row(0).begin(), rep.a.row(0).end());
  check(a_row0 == conj_vec(rep.phi), "first row of A = conj(phi)");
  check(mat_vec<ExactScalar>(rep.a, rep.phi) == scaled_vec(ExactScalar(3), rep.phi), "A phi = 3 phi");
  check(mat_vec<ExactScalar>(rep.a, rep.phi_prime) == scaled_vec(ExactScalar(3), rep.phi_prime),
        "A phi' = 3 phi'");
  rep.norm_phi_sq = inner<ExactScalar>(rep.phi, rep.phi);
  rep.norm_phi_prime_sq = inner<ExactScalar>(rep.phi_prime, rep.phi_prime);
  check(rep.norm_phi_sq == ExactScalar(3), "||phi||^2 = 3");
  check(rep.norm_phi_prime_sq == ExactScalar(3), "||phi'||^2 = 3");
  rep.inner_phi_prime_phi = inner<ExactScalar>(rep.phi_prime, rep.phi);
  check(rep.inner_phi_prime_phi == ExactScalar(2) * bc + b * b - ExactScalar(3) * delta * delta,
        "<phi', phi> = 2 conj(b) + b^2 - 3 delta^2");
  check(rep.inner_phi_prime_phi == ExactScalar(3) * bc, "<phi', phi> = 3 conj(b)");
  rep.psi = axpy(-(rep.inner_phi_prime_phi / rep.norm_phi_sq), rep.phi, rep.phi_prime);
  check(rep.psi == axpy(-bc, rep.phi, rep.phi_prime), "psi = phi' - conj(b) phi");
  const Vec psi_displayed{0, ExactScalar(1) - b * bc, b - bc * bc, delta * (bc - ExactScalar(1)),
                          -delta * (ExactScalar(2) * bc + ExactScalar(1)), delta * (bc + ExactScalar(2))};
  check(rep.psi == psi_displayed, "psi coordinates");
  check(inner<ExactScalar>(rep.psi, rep.phi) == ExactScalar{}, "<psi, phi> = 0");
  rep.norm_psi_sq = inner<ExactScalar>(rep.psi, rep.psi);
  check(rep.norm_psi_sq == ExactScalar(2), "||psi||^2 = 2");
  check(mat_vec<ExactScalar>(rep.a, rep.psi) == scaled_vec(ExactScalar(3), rep.psi), "A psi = 3 psi");

  // Rank-two Gram decomposition. With (x (x) y)[i][j] = x_i y_j the Gram
  // vectors are conj(phi), conj(psi); the uncorrected orientation gives A^T.
  const Vec gphi = conj_vec(rep.phi);
  const Vec gpsi = conj_vec(rep.psi);
  const ExactScalar three_halves = q(3, 2);
  const XMatrix recon = outer<ExactScalar>(conj_vec(gphi), gphi) +
                        scaled(outer<ExactScalar>(conj_vec(gpsi), gpsi), three_halves);
  check(recon == rep.a, "A = conj(Phi) (x) Phi + 3/2 conj(Psi) (x) Psi with Phi = conj(phi), Psi = conj(psi)");
  const XMatrix literal = outer<ExactScalar>(conj_vec(rep.phi), rep.phi) +
                          scaled(outer<ExactScalar>(conj_vec(rep.psi), rep.psi), three_halves);
  check(literal == transpose(rep.a), "conj(phi) (x) phi + 3/2 conj(psi) (x) psi = A^T");

  // Hadamard quadruple and the matrix M.
  const Vec cphi = conj_vec(rep.phi);
  const Vec cpsi = conj_vec(rep.psi);
  rep.hadamard = {hadamard(cphi, rep.phi), hadamard(cphi, rep.psi), hadamard(cpsi, rep.phi),
                  hadamard(cpsi, rep.psi)};
  const ExactScalar one(1);
  const ExactScalar two(2);
  check(rep.hadamard[0] == Vec{1, q(1, 3), q(1, 3), q(2, 9), q(8, 9), q(2, 9)},
        "conj(phi).phi = (1, 1/3, 1/3, 2/9, 8/9, 2/9)");
  check(rep.hadamard[3] == Vec{0, q(4, 9), q(4, 9), q(14, 27), q(2, 27), q(14, 27)},
        "conj(psi).psi = (0, 4/9, 4/9, 14/27, 2/27, 14/27)");
  check(rep.hadamard[2] == Vec{0, q(2, 3) * b, bc * bc - b * q(1, 3), -q(2, 9) * (b - one),
                               -q(4, 9) * (two * b + one), -q(2, 9) * (b + two)},
        "conj(psi).phi coordinates");
  check(rep.hadamard[1] == Vec{0, q(2, 3) * bc, b * b - bc * q(1, 3), -q(2, 9) * (bc - one),
                               -q(4, 9) * (two * bc + one), -q(2, 9) * (bc + two)},
        "conj(phi).psi coordinates");
  rep.m = XMatrix(6, 3);
  for (std::size_t r = 0; r < 6; ++r) {
    rep.m(r, 0) = rep.hadamard[3][r];
    rep.m(r, 1) = rep.hadamard[2][r];
    rep.m(r, 2) = rep.hadamard[1][r];
  }
  XMatrix rows235(3, 3);
  const std::size_t picked[3] = {1, 2, 4};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) rows235(r, c) = rep.m(picked[r], c);
  rep.delta = determinant(rows235);
  check(rep.delta == ExactScalar::sqrt3() * i * q(8, 81), "Delta = 8 sqrt3 i / 81");
  rep.rank_m = rank_exact(rep.m);
  check(rep.rank_m == 3, "rk(M) = 3");
  XMatrix quad(4, 6);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 6; ++c) quad(r, c) = rep.hadamard[r][c];
  rep.rank_quadruple = rank_exact(quad);
  check(rep.rank_quadruple == 4, "Hadamard quadruple is linearly independent (rank 4)");

  // Float path.
  const CMatrix af = to_float(rep.a);
  const EigenResult eig = hermitian_eigen(af);
  rep.float_eigenvalues = eig.eigenvalues;
  const double expected[6] = {3, 3, 0, 0, 0, 0};
  double worst = 0.0;
  for (std::size_t r = 0; r < 6; ++r) worst = std::max(worst, std::abs(eig.eigenvalues[r] - expected[r]));
  check(worst <= 1e-10, "float eigenvalues within 1e-10 of (3,3,0,0,0,0)",
        "max deviation " + format_double(worst));
  rep.verdict = hm_verdict(af);
  check(rep.verdict.verdict == Verdict::kNotFactorizable && rep.verdict.d == 2 &&
            rep.verdict.hadamard_rank == 4,
        "hm_verdict(A) = NotFactorizable with d = 2, hadamard_rank = 4");
  return rep;
}

}  // namespace absdil
