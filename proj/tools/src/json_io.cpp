#include "json_io.hpp"

#include <cmath>

#include "absdil/errors.hpp"

namespace absdil::cli {

namespace {

// Strips negative zero so equal reports print identically.
double clean(double x) { return x + 0.0; }

struct ParsedReal {
  double value = 0.0;
  std::optional<Rational> exact;
};

ParsedReal parse_real(const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long>();
    return {static_cast<double>(v), Rational(v)};
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DomainError("non-finite number in input");
    return {v, std::nullopt};
  }
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    return {q.get_d(), q};
  }
  throw DomainError("expected a number or a \"p/q\" string, got " + j.dump());
}

ExactScalar::Coords parse_coords(const json& j) {
  if (!j.is_array() || j.size() != 4) throw DomainError("exact coordinates need 4 rational strings");
  ExactScalar::Coords c;
  for (std::size_t k = 0; k < 4; ++k) {
    const ParsedReal r = parse_real(j[k]);
    if (!r.exact) throw DomainError("exact coordinates must be integers or \"p/q\" strings");
    c[k] = *r.exact;
  }
  return c;
}

}  // namespace

json to_json(const Rational& q) { return rational_to_string(q); }

json to_json(const ExactScalar& x) {
  json re = json::array();
  json im = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    re.push_back(rational_to_string(x.re()[k]));
    im.push_back(rational_to_string(x.im()[k]));
  }
  return json{{"re", re}, {"im", im}};
}

json to_json(Complex z) { return json{{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

json real_to_json(double x) { return clean(x); }

template <class T>
static json matrix_json(const Matrix<T>& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const CMatrix& a) { return matrix_json(a); }
json matrix_to_json(const XMatrix& a) { return matrix_json(a); }

json matrix_to_json(const IMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    rows.push_back(std::vector<long long>(r.begin(), r.end()));
  }
  return rows;
}

json vector_to_json(const std::vector<ExactScalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json vector_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json cayley_to_json(const FiniteGroup& g) {
  return json{{"name", g.name()},
              {"order", g.order()},
              {"elements", g.element_names()},
              {"cayley", g.cayley()},
              {"inverses", g.inverses()}};
}

json to_json(const HmVerdict& v) {
  return json{{"verdict", std::string(to_string(v.verdict))},
              {"d", v.d},
              {"hadamard_rank", v.hadamard_rank},
              {"min_eigenvalue", real_to_json(v.min_eigenvalue)}};
}

json to_json(const CertificateResult& r) {
  json j{{"accepted", r.accepted}};
  j["reason"] = r.reason;
  j["orientation"] = r.orientation ? json(std::string(to_string(*r.orientation))) : json(nullptr);
  j["unitarity_defect"] = real_to_json(r.unitarity_defect);
  j["mismatch_standard"] = real_to_json(r.mismatch_standard);
  j["mismatch_transposed"] = real_to_json(r.mismatch_transposed);
  return j;
}

json to_json(const S3Report& r) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
  static const char* kPiNames[] = {"(123)", "(132)", "(12)", "(23)", "(31)"};
  json j;
  json constants;
  const auto values = r.constants.values();
  for (std::size_t k = 0; k < 6; ++k) constants[kNames[k]] = to_json(values[k]);
  j["constants"] = constants;
  j["A"] = matrix_to_json(r.a);
  j["blocks"] = json{{"s1", to_json(r.blocks.trivial)},
                     {"s2", to_json(r.blocks.sign)},
                     {"B", matrix_to_json(r.blocks.two_dim)}};
  json pi;
  for (std::size_t k = 0; k < 5; ++k) pi[kPiNames[k]] = matrix_to_json(r.pi[k]);
  j["pi"] = pi;
  j["charpoly"] = vector_to_json(r.charpoly);
  j["spectrum_multiset"] = r.spectrum;
  j["phi"] = vector_to_json(r.phi);
  j["phi_prime"] = vector_to_json(r.phi_prime);
  j["psi"] = vector_to_json(r.psi);
  j["norms_sq"] = json{{"phi", to_json(r.norm_phi_sq)},
                       {"phi_prime", to_json(r.norm_phi_prime_sq)},
                       {"psi", to_json(r.norm_psi_sq)}};
  j["inner_phi_prime_phi"] = to_json(r.inner_phi_prime_phi);
  j["hadamard"] = json{{"conj_phi_phi", vector_to_json(r.hadamard[0])},
                       {"conj_phi_psi", vector_to_json(r.hadamard[1])},
                       {"conj_psi_phi", vector_to_json(r.hadamard[2])},
                       {"conj_psi_psi", vector_to_json(r.hadamard[3])}};
  j["M"] = matrix_to_json(r.m);
  j["delta"] = json{{"exact", to_json(r.delta)}, {"float", to_json(r.delta.to_float())}};
  j["rank_M"] = r.rank_m;
  j["rank_hadamard_quadruple"] = r.rank_quadruple;
  json eig = json::array();
  for (double x : r.float_eigenvalues) eig.push_back(real_to_json(x));
  j["float_eigenvalues"] = eig;
  j["verdict"] = to_json(r.verdict);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(c.name);
  j["verified_identities"] = checks;
  return j;
}

ParsedScalar parse_scalar(const json& j) {
  if (j.is_object()) {
    if (!j.contains("re")) throw DomainError("scalar object needs a \"re\" field");
    const json& re = j.at("re");
    if (re.is_array()) {
      const ExactScalar x(parse_coords(re), j.contains("im") ? parse_coords(j.at("im")) : ExactScalar::Coords{});
      return {x.to_float(), x};
    }
    const ParsedReal r = parse_real(re);
    const ParsedReal i = j.contains("im") ? parse_real(j.at("im")) : ParsedReal{0.0, Rational(0)};
    ParsedScalar out{{r.value, i.value}, std::nullopt};
    if (r.exact && i.exact) out.exact = ExactScalar(*r.exact) + ExactScalar::imag_unit() * ExactScalar(*i.exact);
    return out;
  }
  if (j.is_array()) {
    if (j.size() != 2) throw DomainError("complex pair must be [re, im]");
    const ParsedReal r = parse_real(j[0]);
    const ParsedReal i = parse_real(j[1]);
    ParsedScalar out{{r.value, i.value}, std::nullopt};
    if (r.exact && i.exact) out.exact = ExactScalar(*r.exact) + ExactScalar::imag_unit() * ExactScalar(*i.exact);
    return out;
  }
  const ParsedReal r = parse_real(j);
  ParsedScalar out{{r.value, 0.0}, std::nullopt};
  if (r.exact) out.exact = ExactScalar(*r.exact);
  return out;
}

ExactScalar parse_exact(const json& j) {
  const ParsedScalar s = parse_scalar(j);
  if (!s.exact) throw DomainError("expected an exact value, got " + j.dump());
  return *s.exact;
}

ParsedFunction parse_function(const json& j) {
  ParsedFunction f;
  const json* values = &j;
  if (j.is_object()) {
    if (j.contains("group")) f.group = j.at("group").get<std::string>();
    if (!j.contains("values")) throw DomainError("function object needs a \"values\" array");
    values = &j.at("values");
  }
  if (!values->is_array() || values->empty()) throw DomainError("u must be a non-empty array of values");
  std::vector<ExactScalar> exact;
  bool all_exact = true;
  for (const auto& v : *values) {
    const ParsedScalar s = parse_scalar(v);
    f.values.push_back(s.value);
    if (s.exact) exact.push_back(*s.exact);
    else all_exact = false;
  }
  if (all_exact) f.exact = std::move(exact);
  return f;
}

CMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  CMatrix a(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw DimensionError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = parse_scalar(j[r][c]).value;
  }
  return a;
}

Certificate parse_certificate(const json& j) {
  if (!j.is_object() || !j.contains("unitaries")) throw DomainError("certificate needs a \"unitaries\" array");
  Certificate cert;
  for (const auto& u : j.at("unitaries")) cert.unitaries.push_back(parse_matrix(u));
  if (cert.unitaries.empty()) throw DomainError("certificate has no unitaries");
  cert.m = j.contains("m") ? j.at("m").get<std::size_t>() : cert.unitaries.front().rows();
  for (const auto& u : cert.unitaries) {
    if (u.rows() != cert.m || u.cols() != cert.m) throw DimensionError("certificate unitaries must be m x m");
  }
  if (j.contains("labels")) {
    cert.labels = j.at("labels").get<std::vector<std::string>>();
  } else {
    for (std::size_t k = 0; k < cert.unitaries.size(); ++k) cert.labels.push_back(std::to_string(k));
  }
  if (cert.labels.size() != cert.unitaries.size()) throw DimensionError("certificate labels and unitaries differ in count");
  return cert;
}

}  // namespace absdil::cli
