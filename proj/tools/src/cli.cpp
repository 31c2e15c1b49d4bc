#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "absdil/abelian_dilation.hpp"
#include "absdil/errors.hpp"
#include "absdil/folner.hpp"
#include "absdil/gram.hpp"
#include "absdil/groups.hpp"
#include "absdil/hm_criterion.hpp"
#include "absdil/multipliers.hpp"
#include "absdil/s3_pipeline.hpp"
#include "absdil/version.hpp"
#include "json_io.hpp"

namespace absdil::cli {

namespace {

constexpr double kResidualTol = 1e-12;
constexpr double kEvaluatorTol = 1e-13;

// Bad user input (as opposed to a mathematical failure of valid input).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = kDefaultTol;
  bool exact = false;
  std::string in_path;
  std::optional<std::string> group, u, matrix, certificate, s, t, json_path;
  std::optional<long> depth, nmax;
  std::size_t cap = kDefaultStateCap;
};

struct Outcome {
  int code = kOk;
  json results = json::object();
};

json parse_json_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

// Values from --in fill in whatever was not given on the command line.
void merge_input_file(Options& o, json& inputs) {
  if (o.in_path.empty()) return;
  std::ifstream in(o.in_path);
  if (!in) throw InputError("cannot open " + o.in_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const json file = parse_json_text(buf.str(), o.in_path.c_str());
  if (!file.is_object()) throw InputError("--in file must hold a JSON object");
  inputs["in"] = o.in_path;
  auto take_text = [&](const char* key, std::optional<std::string>& slot) {
    if (slot || !file.contains(key)) return;
    const json& v = file.at(key);
    slot = v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto take_long = [&](const char* key, std::optional<long>& slot) {
    if (slot || !file.contains(key)) return;
    if (!file.at(key).is_number_integer()) throw InputError(std::string(key) + " must be an integer");
    slot = file.at(key).get<long>();
  };
  take_text("group", o.group);
  take_text("u", o.u);
  take_text("matrix", o.matrix);
  take_text("certificate", o.certificate);
  take_text("s", o.s);
  take_text("t", o.t);
  take_long("K", o.depth);
  take_long("nmax", o.nmax);
  if (file.contains("values") && !o.u) o.u = file.dump();
}

FiniteGroup finite_group(const std::string& spec) {
  GroupSpec parsed;
  try {
    parsed = parse_group_spec(spec);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (parsed.kind == GroupSpec::Kind::kInteger) throw InputError("this command needs a finite group, got Z");
  try {
    return build_group(parsed);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

GroupFunction read_function(const Options& o, json& inputs) {
  if (!o.u) throw InputError("missing --u");
  const json uj = parse_json_text(*o.u, "--u");
  ParsedFunction pf;
  try {
    pf = parse_function(uj);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (pf.group && o.group && *pf.group != *o.group) {
    throw InputError("--group " + *o.group + " disagrees with the group " + *pf.group + " named in u");
  }
  const std::optional<std::string> name = pf.group ? pf.group : o.group;
  if (!name) throw InputError("missing --group");
  const FiniteGroup g = finite_group(*name);
  if (pf.values.size() != g.order()) {
    throw InputError("u has " + std::to_string(pf.values.size()) + " values but " + g.name() + " has order " +
                     std::to_string(g.order()));
  }
  inputs["group"] = g.name();
  inputs["elements"] = g.element_names();
  inputs["u"] = uj;
  if (pf.exact) return GroupFunction(g, *pf.exact);
  return GroupFunction(g, pf.values);
}

CMatrix read_matrix(const Options& o, json& inputs) {
  if (o.matrix) {
    const json mj = parse_json_text(*o.matrix, "--matrix");
    inputs["matrix"] = mj;
    try {
      return parse_matrix(mj);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  return herz_schur_matrix(read_function(o, inputs));
}

Outcome cmd_check_ucp(const Options& o, json& inputs) {
  const GroupFunction u = read_function(o, inputs);
  if (o.exact && !u.is_exact()) throw InputError("--exact needs exact values of u");
  const UcpReport rep = check_ucp(u, o.tol);
  Outcome out;
  out.results["unital"] = rep.unital;
  out.results["hermitian"] = rep.hermitian;
  out.results["positive_definite"] = rep.positive_definite;
  out.results["min_eigenvalue"] = real_to_json(rep.min_eigenvalue);
  out.results["reason"] = rep.reason;
  out.results["ucp"] = rep.ucp();
  if (o.exact) {
    const XMatrix a = herz_schur_matrix_exact(u);
    out.results["exact"] = json{{"unital", u.exact_values()[0] == ExactScalar(1)},
                                {"hermitian", is_hermitian(a)},
                                {"charpoly", vector_to_json(characteristic_polynomial(a))}};
  }
  out.code = rep.ucp() ? kOk : kMathFailure;
  return out;
}

Outcome cmd_herz_schur(const Options& o, json& inputs) {
  const GroupFunction u = read_function(o, inputs);
  Outcome out;
  if (o.exact) {
    if (!u.is_exact()) throw InputError("--exact needs exact values of u");
    const XMatrix a = herz_schur_matrix_exact(u);
    out.results["hermitian"] = is_hermitian(a);
    out.results["matrix"] = matrix_to_json(a);
  } else {
    const CMatrix a = herz_schur_matrix(u);
    out.results["hermitian"] = hermitian_defect(a) <= o.tol * std::max(1.0, max_abs(a));
    out.results["matrix"] = matrix_to_json(a);
  }
  return out;
}

Outcome cmd_hm_test(const Options& o, json& inputs) {
  const CMatrix a = read_matrix(o, inputs);
  if (!a.is_square()) throw InputError("matrix must be square");
  Outcome out;
  out.results = to_json(hm_verdict(a, o.tol));
  return out;
}

Outcome cmd_certify(const Options& o, json& inputs) {
  const CMatrix a = read_matrix(o, inputs);
  if (!o.certificate) throw InputError("missing --cert");
  const json cj = parse_json_text(*o.certificate, "--cert");
  inputs["certificate"] = cj;
  Certificate cert;
  try {
    cert = parse_certificate(cj);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (!a.is_square() || cert.unitaries.size() != a.rows()) {
    throw InputError("certificate has " + std::to_string(cert.unitaries.size()) + " unitaries for a " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  const CertificateResult r = verify_certificate(a, cert, o.tol);
  Outcome out;
  out.results = to_json(r);
  out.code = r.accepted ? kOk : kMathFailure;
  return out;
}

Outcome cmd_abelian_dilate(const Options& o, json& inputs) {
  const GroupFunction u = read_function(o, inputs);
  if (!u.group().is_abelian()) throw InputError(u.group().name() + " is not abelian");
  const long depth = o.depth.value_or(4);
  if (depth < 1) throw InputError("--K must be at least 1");
  inputs["K"] = depth;
  const DilationModel model = build_dilation(u, static_cast<std::size_t>(depth), o.tol, o.cap);
  const DualGroup& dual = model.dual();
  const std::size_t n = dual.size();
  json weights = json::array();
  for (double w : model.measure().weights) weights.push_back(real_to_json(w));

  json table = json::array();
  double worst_residual = 0.0;
  double worst_gap = 0.0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(depth); ++k) {
    for (std::size_t chi = 0; chi < n; ++chi) {
      std::vector<Complex> f(n);
      f[chi] = 1.0;
      const double residual = dilation_residual(model, k, f);
      const auto materialized = model.dilate(f, k);
      const auto direct = direct_dilation_sum(dual, model.measure().weights, f, k);
      double gap = 0.0;
      for (std::size_t x = 0; x < n; ++x) gap = std::max(gap, std::abs(materialized[x] - direct[x]));
      worst_residual = std::max(worst_residual, residual);
      worst_gap = std::max(worst_gap, gap);
      table.push_back(json{{"k", k}, {"chi", chi}, {"residual", real_to_json(residual)},
                           {"direct_gap", real_to_json(gap)}});
    }
  }
  Outcome out;
  out.results["measure"] = weights;
  out.results["state_size"] = model.state_size();
  out.results["residuals"] = table;
  out.results["max_residual"] = real_to_json(worst_residual);
  out.results["max_direct_gap"] = real_to_json(worst_gap);
  const bool holds = worst_residual <= kResidualTol && worst_gap <= kEvaluatorTol;
  out.results["identity_holds"] = holds;
  out.code = holds ? kOk : kMathFailure;
  return out;
}

std::int64_t parse_element(const DiscreteGroup& g, const std::string& text) {
  if (!g.is_finite()) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      throw InputError("expected an integer element of Z, got " + text);
    }
    if (used != text.size() || !g.contains(v)) throw InputError("bad element of Z: " + text);
    return v;
  }
  if (auto idx = g.finite().find(text)) return static_cast<std::int64_t>(*idx);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size() && g.contains(v)) return v;
  } catch (const std::exception&) {
  }
  throw InputError("unknown element " + text + " of " + g.name());
}

Outcome cmd_folner(const Options& o, json& inputs) {
  const std::string spec = o.group.value_or("Z");
  DiscreteGroup g = [&] {
    try {
      return build_discrete_group(parse_group_spec(spec));
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }();
  const std::int64_t s = parse_element(g, o.s.value_or("-1"));
  const std::int64_t t = parse_element(g, o.t.value_or("1"));
  inputs["group"] = g.name();
  inputs["s"] = g.element_name(s);
  inputs["t"] = g.element_name(t);
  std::vector<FolnerWindow> windows;
  if (g.is_finite()) {
    windows = folner_sequence(g, FolnerKind::kWholeGroup);
  } else {
    const long nmax = o.nmax.value_or(64);
    if (nmax < 1 || nmax > 4096) throw InputError("--nmax must lie in 1..4096");
    inputs["nmax"] = nmax;
    windows = folner_sequence(g, FolnerKind::kIntervals, static_cast<std::size_t>(nmax));
  }
  json table = json::array();
  for (const auto& w : windows) {
    const CompressionReport r = mult_defect(w, s, t);
    table.push_back(json{{"n", w.size()},
                         {"defect_sq", to_json(r.defect_sq)},
                         {"bound", to_json(r.bound)},
                         {"intersect_ratio", to_json(r.intersect_ratio)}});
  }
  Outcome out;
  out.results["table"] = table;
  return out;
}

Outcome cmd_reproduce_s3(const Options& o, json& inputs, std::ostream& err) {
  const S3Report rep = run_s3_report();
  err << "S3 counterexample: verified identities\n";
  for (std::size_t k = 0; k < rep.checks.size(); ++k) {
    err << "  [" << (k + 1) << "] " << rep.checks[k].name;
    if (!rep.checks[k].detail.empty()) err << "  (" << rep.checks[k].detail << ")";
    err << "\n";
  }
  err << "verdict: " << to_string(rep.verdict.verdict) << ", d = " << rep.verdict.d
      << ", hadamard_rank = " << rep.verdict.hadamard_rank << "\n";
  Outcome out;
  out.results = to_json(rep);
  if (o.json_path) {
    inputs["json"] = *o.json_path;
    std::ofstream file(*o.json_path);
    if (!file) throw InputError("cannot write " + *o.json_path);
    file << out.results.dump(2) << "\n";
  }
  return out;
}

json envelope(const std::string& command, const Options& o, json inputs) {
  json report;
  report["command"] = command;
  report["version"] = std::string(kVersion);
  report["tolerance"] = json{{"tol", o.tol}, {"exact", o.exact}};
  report["inputs"] = std::move(inputs);
  return report;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier and Herz-Schur multipliers on discrete groups: positivity, dilations, factorizability", "absdil"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "comparison tolerance")->capture_default_str();
    sub->add_flag("--exact", o.exact, "exact arithmetic where supported");
    sub->add_option("--in", o.in_path, "read inputs from a JSON object file");
  };
  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "group spec: S3, Z4, Z2xZ2, ...");
    sub->add_option("--u", o.u, "values of u as JSON");
  };

  auto* check_ucp_cmd = app.add_subcommand("check-ucp", "decide unital complete positivity of M_u");
  add_function(check_ucp_cmd);
  auto* herz_schur_cmd = app.add_subcommand("herz-schur", "print the Herz-Schur matrix [u(s t^-1)]");
  add_function(herz_schur_cmd);
  auto* hm_cmd = app.add_subcommand("hm-test", "non-factorizability test on a unit-diagonal PSD matrix");
  add_function(hm_cmd);
  hm_cmd->add_option("--matrix", o.matrix, "matrix as JSON rows (instead of --group/--u)");
  auto* certify_cmd = app.add_subcommand("certify", "verify a unitary Gram certificate");
  add_function(certify_cmd);
  certify_cmd->add_option("--matrix", o.matrix, "matrix as JSON rows (instead of --group/--u)");
  certify_cmd->add_option("--cert", o.certificate, "certificate JSON");
  auto* dilate_cmd = app.add_subcommand("abelian-dilate", "check E_J U^k J = T^k on a finite abelian group");
  add_function(dilate_cmd);
  dilate_cmd->add_option("--K", o.depth, "truncation depth (default 4)");
  dilate_cmd->add_option("--cap", o.cap, "maximum state-array size")->capture_default_str();
  auto* folner_cmd = app.add_subcommand("folner", "compression defects on Folner windows");
  folner_cmd->add_option("--group", o.group, "Z (intervals) or a finite group (whole group)");
  folner_cmd->add_option("--s", o.s, "element s (default -1)");
  folner_cmd->add_option("--t", o.t, "element t (default 1)");
  folner_cmd->add_option("--nmax", o.nmax, "largest interval length for Z (default 64)");
  auto* s3_cmd = app.add_subcommand("reproduce-s3", "exact reproduction of the S3 counterexample");
  s3_cmd->add_option("--json", o.json_path, "also write the S3 report to this file");
  for (auto* sub : {check_ucp_cmd, herz_schur_cmd, hm_cmd, certify_cmd, dilate_cmd, folner_cmd, s3_cmd}) {
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    Options defaults;
    json report = envelope("", defaults, json::object());
    report["status"] = "error";
    report["results"] = json{{"error", e.what()}};
    out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json inputs = json::object();
  Outcome outcome;
  std::string status = "ok";
  try {
    merge_input_file(o, inputs);
    if (command == "check-ucp") outcome = cmd_check_ucp(o, inputs);
    else if (command == "herz-schur") outcome = cmd_herz_schur(o, inputs);
    else if (command == "hm-test") outcome = cmd_hm_test(o, inputs);
    else if (command == "certify") outcome = cmd_certify(o, inputs);
    else if (command == "abelian-dilate") outcome = cmd_abelian_dilate(o, inputs);
    else if (command == "folner") outcome = cmd_folner(o, inputs);
    else outcome = cmd_reproduce_s3(o, inputs, err);
    if (outcome.code == kMathFailure) status = "failure";
  } catch (const InputError& e) {
    outcome = {kUsageError, json{{"error", e.what()}}};
    status = "error";
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    outcome = {kMathFailure, json{{"error", e.what()}}};
    status = "failure";
    err << "failure: " << e.what() << "\n";
  }

  json report = envelope(command, o, std::move(inputs));
  report["status"] = status;
  report["results"] = std::move(outcome.results);
  out << report.dump(2) << "\n";
  return outcome.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"absdil"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace absdil::cli
