#pragma once

// JSON forms of scalars, matrices, group functions, certificates and reports.
//
//   exact scalar   {"re": ["p/q" x4], "im": ["p/q" x4]} on the basis {1, sqrt2, sqrt3, sqrt6}
//   float scalar   {"re": x, "im": y}, or [x, y], or a bare number
//   rational       "p/q" strings and JSON integers stay exact

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "absdil/groups.hpp"
#include "absdil/hm_criterion.hpp"
#include "absdil/matrix.hpp"
#include "absdil/s3_pipeline.hpp"
#include "absdil/scalars.hpp"

namespace absdil::cli {

using json = nlohmann::ordered_json;

json to_json(const ExactScalar& x);
json to_json(Complex z);
json to_json(const Rational& q);
json real_to_json(double x);

json matrix_to_json(const CMatrix& a);
json matrix_to_json(const XMatrix& a);
json matrix_to_json(const IMatrix& a);
json vector_to_json(const std::vector<ExactScalar>& v);
json vector_to_json(const std::vector<Complex>& v);

json cayley_to_json(const FiniteGroup& g);
json to_json(const HmVerdict& v);
json to_json(const CertificateResult& r);
json to_json(const S3Report& r);

/// A scalar read from JSON; exact is set when the input was exact.
struct ParsedScalar {
  Complex value;
  std::optional<ExactScalar> exact;
};

ParsedScalar parse_scalar(const json& j);
ExactScalar parse_exact(const json& j);

/// u as an array of values, or {"group": ..., "values": [...]}.
struct ParsedFunction {
  std::optional<std::string> group;
  std::vector<Complex> values;
  std::optional<std::vector<ExactScalar>> exact;  // only when every value was exact
};

ParsedFunction parse_function(const json& j);

CMatrix parse_matrix(const json& j);

/// {"m": 2, "labels": [...], "unitaries": [matrix, ...]}; m and labels are optional.
Certificate parse_certificate(const json& j);

}  // namespace absdil::cli
