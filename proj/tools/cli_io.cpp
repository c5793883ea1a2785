#include "cli_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iforge/canonical.hpp"
#include "iforge/errors.hpp"

namespace iforge::cli {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("GF")) {
    return Field::prime_field(j.at("GF").get<std::uint64_t>());
  }
  throw InputError("field must be \"Q\" or {\"GF\": p}");
}

json field_to_json(const Field& field) {
  if (field.is_rationals()) return "Q";
  return json{{"GF", field.modulus()}};
}

Matrix matrix_from_json(const json& j, const Field& field) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array");
  std::size_t rows = j.size();
  std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw InputError("matrix rows must be nonempty arrays");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) {
      m.set(i, k, Scalar::parse(row.at(k).get<std::string>(), field));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  Field field = field_from_json(j.at("field"));
  Scalar alpha = Scalar::parse(j.at("alpha").get<std::string>(), field);
  Scalar beta = Scalar::parse(j.at("beta").get<std::string>(), field);
  if (alpha.is_zero() || beta.is_zero()) {
    throw InputError("alpha and beta must be nonzero");
  }
  Matrix m = matrix_from_json(j.at("matrix"), field);
  if (!m.is_square()) throw InputError("matrix must be square");
  return {field, alpha, beta, m};
}

std::string render_problem(const Problem& problem) {
  json j{{"field", field_to_json(problem.field)},
         {"alpha", problem.alpha.to_string()},
         {"beta", problem.beta.to_string()},
         {"matrix", matrix_to_json(problem.matrix)}};
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& json_text, const Problem& problem) {
  json j = parse_json(json_text);
  if (!j.is_object()) throw InputError("certificate file must be a JSON object");
  Matrix p = matrix_from_json(j.at("P"), problem.field);
  Matrix q = matrix_from_json(j.at("Q"), problem.field);
  return {p, q, problem.alpha, problem.beta};
}

std::string render_certificate(const Certificate& cert) {
  json j{{"P", matrix_to_json(cert.p)}, {"Q", matrix_to_json(cert.q)}};
  return j.dump(2) + "\n";
}

std::string render_decision(const Decision& decision) {
  json checks = json::array();
  for (const DecisionCheck& c : decision.checks) {
    checks.push_back(json{{"id", c.id},
                          {"passed", c.passed},
                          {"vacuous", c.vacuous},
                          {"detail", c.detail}});
  }
  json j{{"verdict", decision.verdict}, {"checks", checks}};
  return j.dump(2) + "\n";
}

Decision parse_decision(const std::string& json_text) {
  json j = parse_json(json_text);
  Decision d{j.at("verdict").get<bool>(), {}};
  for (const json& c : j.at("checks")) {
    d.checks.push_back({c.at("id").get<std::string>(), c.at("passed").get<bool>(),
                        c.at("vacuous").get<bool>(), c.at("detail").get<std::string>()});
  }
  return d;
}

std::string render_verify_report(const VerifyReport& report) {
  json failures = json::array();
  if (!report.p_idempotent) failures.push_back("P_idempotent");
  if (!report.q_idempotent) failures.push_back("Q_idempotent");
  if (!report.sum_matches) failures.push_back("sum");
  json j{{"valid", report.ok()}, {"failures", failures}};
  return j.dump(2) + "\n";
}

std::string render_canon_report(const Problem& problem) {
  const Matrix& a = problem.matrix;
  json j;
  j["minimal_polynomial"] = minimal_polynomial(a).to_string();
  json factors = json::array();
  for (const Polynomial& f : invariant_factors(a)) factors.push_back(f.to_string());
  j["invariant_factors"] = factors;

  json weyr = json::array();
  for (const Scalar& s : special_points(problem.alpha, problem.beta)) {
    json seq = json::array();
    for (std::size_t v : weyr_sequence(a, s).values) seq.push_back(v);
    weyr.push_back(json{{"point", s.to_string()}, {"sequence", seq}});
  }
  j["weyr"] = weyr;

  json parts = json::array();
  for (const SpectralPart& part : spectral_split(a, problem.alpha, problem.beta).parts) {
    parts.push_back(json{{"part", to_string(part.id)}, {"dimension", part.dim()}});
  }
  j["spectral_parts"] = parts;
  return j.dump(2) + "\n";
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("GF", 0) == 0) {
    std::string digits;
    for (char c : text.substr(2)) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
      else if (c != ':' && c != '(' && c != ')') digits.clear();
    }
    if (!digits.empty()) return Field::prime_field(std::stoull(digits));
  }
  throw InputError("unrecognized field '" + text + "' (expected Q or GF<p>)");
}

int run_fuzz(const FuzzOptions& options) {
  std::size_t failures = 0;
  std::size_t cases = 0;

  if (options.mode == OracleMode::Exhaustive) {
    MatrixEnumerator en(options.field, options.n);
    while (auto m = en.next()) {
      bool oracle = brute_force_decide(*m, options.alpha, options.beta);
      bool verdict = decide(*m, options.alpha, options.beta).verdict;
      if (oracle != verdict) {
        ++failures;
        std::cout << "case " << cases << ": MISMATCH oracle=" << oracle
                  << " decide=" << verdict << "\n"
                  << m->to_string() << "\n";
      }
      ++cases;
    }
  } else {
    for (std::size_t i = 0; i < options.samples; ++i) {
      std::uint64_t seed = options.seed + i;
      RandomComposite rc = random_composite(options.field, options.n, options.alpha,
                                            options.beta, seed);
      bool ok = true;
      std::string why;
      ConstructResult r = construct(rc.a, options.alpha, options.beta);
      if (!r.decision.verdict) {
        ok = false;
        why = "decide rejected a known composite";
      } else if (!verify(rc.a, *r.certificate)) {
        ok = false;
        why = "constructed certificate failed verification";
      } else if (!commutation_identity_holds(rc.a, *r.certificate)) {
        ok = false;
        why = "commutation identity failed";
      }
      if (!ok) {
        ++failures;
        std::cout << "case " << i << " (seed " << seed << "): " << why << "\n";
      }
      ++cases;
    }
  }

  json summary{{"mode", options.mode == OracleMode::Exhaustive ? "exhaustive" : "random"},
               {"field", options.field.to_string()},
               {"n", options.n},
               {"alpha", options.alpha.to_string()},
               {"beta", options.beta.to_string()},
               {"seed", options.seed},
               {"cases", cases},
               {"mismatches", failures}};
  std::cout << summary.dump(2) << "\n";
  return failures == 0 ? kExitOk : kExitNegative;
}

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("IDEMPOTENT_FORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("IDEMPOTENT_FORGE_SEED is not a valid integer");
    }
  }
  return kDefaultFuzzSeed;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact decision, construction and verification of weighted "
               "two-idempotent decompositions A = alpha P + beta Q"};
  app.require_subcommand(1);

  std::string input_path, output_path, cert_path;

  CLI::App* cmd_decide = app.add_subcommand(
      "decide", "Decide whether the matrix splits as alpha P + beta Q");
  cmd_decide->add_option("-i,--input", input_path, "problem JSON file")->required();

  CLI::App* cmd_construct = app.add_subcommand(
      "construct", "Produce an explicit certificate (P, Q) when one exists");
  cmd_construct->add_option("-i,--input", input_path, "problem JSON file")->required();
  cmd_construct->add_option("-o,--output", output_path, "write the certificate here");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Check a certificate exactly");
  cmd_verify->add_option("-i,--input", input_path, "problem JSON file")->required();
  cmd_verify->add_option("-c,--certificate", cert_path, "certificate JSON file")
      ->required();

  CLI::App* cmd_canon = app.add_subcommand(
      "canon", "Print similarity invariants and the spectral part dimensions");
  cmd_canon->add_option("-i,--input", input_path, "problem JSON file")->required();

  CLI::App* cmd_fuzz =
      app.add_subcommand("fuzz", "Compare the decision procedure against oracles");
  std::string field_flag, mode_flag = "exhaustive", alpha_flag, beta_flag;
  std::size_t n_flag = 2, samples = 100;
  std::uint64_t seed = 0;
  cmd_fuzz->add_option("--field", field_flag, "Q or GF<p>")->required();
  cmd_fuzz->add_option("--n", n_flag, "matrix dimension")->required();
  cmd_fuzz->add_option("--alpha", alpha_flag, "alpha, in the field syntax")->required();
  cmd_fuzz->add_option("--beta", beta_flag, "beta, in the field syntax")->required();
  cmd_fuzz->add_option("--mode", mode_flag, "exhaustive | random");
  CLI::Option* seed_opt = cmd_fuzz->add_option("--seed", seed, "random-mode base seed");
  cmd_fuzz->add_option("--samples", samples, "random-mode sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (*cmd_decide) {
    Problem problem = parse_problem(read_file(input_path));
    Decision d = decide(problem.matrix, problem.alpha, problem.beta);
    std::cout << render_decision(d);
    return d.verdict ? kExitOk : kExitNegative;
  }

  if (*cmd_construct) {
    Problem problem = parse_problem(read_file(input_path));
    ConstructResult r = construct(problem.matrix, problem.alpha, problem.beta);
    if (!r.certificate) {
      std::cout << render_decision(r.decision);
      return kExitNegative;
    }
    std::string text = render_certificate(*r.certificate);
    if (!output_path.empty()) write_file(output_path, text);
    std::cout << text;
    return kExitOk;
  }

  if (*cmd_verify) {
    Problem problem = parse_problem(read_file(input_path));
    Certificate cert = parse_certificate(read_file(cert_path), problem);
    VerifyReport report = verify_detailed(problem.matrix, cert);
    std::cout << render_verify_report(report);
    return report.ok() ? kExitOk : kExitNegative;
  }

  if (*cmd_canon) {
    Problem problem = parse_problem(read_file(input_path));
    std::cout << render_canon_report(problem);
    return kExitOk;
  }

  if (*cmd_fuzz) {
    FuzzOptions options{parse_field_flag(field_flag),
                        n_flag,
                        Scalar::zero(Field::rationals()),
                        Scalar::zero(Field::rationals()),
                        mode_flag == "random" ? OracleMode::Random
                                              : OracleMode::Exhaustive,
                        seed_opt->count() > 0 ? seed : default_seed(),
                        samples};
    if (mode_flag != "random" && mode_flag != "exhaustive") {
      throw InputError("mode must be 'exhaustive' or 'random'");
    }
    options.alpha = Scalar::parse(alpha_flag, options.field);
    options.beta = Scalar::parse(beta_flag, options.field);
    if (options.alpha.is_zero() || options.beta.is_zero()) {
      throw InputError("alpha and beta must be nonzero");
    }
    return run_fuzz(options);
  }

  return kExitBadInput;
}

}  // namespace

int run_cli(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const InputError& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return kExitBadInput;
  } catch (const InternalError& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return kExitInternal;
  }
}

}  // namespace iforge::cli
