#include "tiltkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "tiltkit/certificates.hpp"
#include "tiltkit/endo_verify.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/factorization.hpp"
#include "tiltkit/json_io.hpp"
#include "tiltkit/positivity.hpp"
#include "tiltkit/separation.hpp"
#include "tiltkit/tilting.hpp"

namespace tiltkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A positional input is a path if such a file exists, otherwise inline text.
std::string load(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string trimmed(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_json(const std::string& t) { return !t.empty() && (t[0] == '{' || t[0] == '[' || t[0] == '"'); }

Poly read_poly(const std::string& arg) {
  const std::string t = trimmed(load(arg));
  return looks_like_json(t) ? poly_from_json(parse_json(t)) : Poly::parse(t);
}

Rational flag_rational(const std::string& flag, const std::string& value) {
  try {
    return Rational::parse(value);
  } catch (const Error&) {
    throw UsageError(flag + ": expected a rational a/b, got '" + value + "'");
  }
}

double flag_real(const std::string& flag, const std::string& value) {
  if (value.find('/') != std::string::npos) return flag_rational(flag, value).to_double();
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a number, got '" + value + "'");
  }
}

std::string real_str(const Real& r) {
  return r.str(std::numeric_limits<Real>::max_digits10, std::ios_base::scientific);
}

json certificate_json(const PolyaCertificate& c) {
  return json{{"gamma", c.gamma.str()}, {"n", c.n}, {"product", poly_to_json(c.product)}};
}

json witness_json(const Poly& p, const Poly& pprime, const SeparationWitness& w) {
  return json{{"q", poly_to_json(w.q)},
              {"neg_index", w.neg_index},
              {"p_times_q", poly_to_json(normalize(p) * w.q)},
              {"pprime_times_q", poly_to_json(normalize(pprime) * w.q)}};
}

json factor_json(const FactorList& f, const std::string& precision) {
  json lin = json::array(), quad = json::array();
  for (const auto& l : f.linear) {
    json e{{"b", real_str(l.b)}, {"multiplicity", l.multiplicity}};
    if (l.exact_b) e["exact_b"] = l.exact_b->str();
    lin.push_back(std::move(e));
  }
  for (const auto& q : f.quadratic)
    quad.push_back({{"a", real_str(q.a)}, {"gamma", real_str(q.gamma)}, {"multiplicity", q.multiplicity}});
  return json{{"precision", precision},
              {"scalar", f.scalar.str()},
              {"monomial_power", f.monomial_power},
              {"linear", lin},
              {"quadratic", quad}};
}

json factorizations_json(const std::vector<PFactorization>& all) {
  json arr = json::array();
  for (const auto& fac : all) {
    json groups = json::array();
    for (const auto& g : fac.groups) {
      if (g.exact) {
        groups.push_back(poly_to_json(*g.exact));
      } else {
        json approx = json::array();
        for (const auto& c : g.approx) approx.push_back(real_str(c));
        groups.push_back({{"approx_coeffs", approx}});
      }
    }
    arr.push_back({{"monomial_power", fac.monomial_power}, {"groups", groups}});
  }
  return json{{"count", all.size()}, {"factorizations", arr}};
}

EndoTable read_table(const std::string& arg) {
  const json j = parse_json(load(arg));
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "table must be a JSON list of {\"from\", \"to\"}");
  EndoTable table;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to"))
      throw Error(ErrorCode::ParseError, "table entry needs \"from\" and \"to\"");
    table.insert(poly_from_json(e.at("from")), poly_from_json(e.at("to")));
  }
  return table;
}

std::vector<Poly> read_poly_list(const std::string& arg) {
  const json j = parse_json(load(arg));
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a JSON list of polynomials");
  std::vector<Poly> out;
  for (const auto& e : j) out.push_back(poly_from_json(e));
  return out;
}

json verdict_json(const TiltVerdict& v) {
  if (v.gamma) return json{{"tilting", true}, {"gamma", v.gamma->str()}};
  const auto& c = *v.counterexample;
  return json{{"tilting", false},
              {"constraint", std::string(constraint_name(c.constraint))},
              {"detail", c.detail},
              {"residual", c.residual.str()}};
}

const char* kTiltHelp =
    "Tilt a polynomial p(x) -> p(gamma x)/p(gamma), or a grid measure. On a grid Z/n "
    "the parameter acts per grid step, i.e. gamma = exp(-beta/n).";

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact arithmetic for exponential tilts of finitely supported measures"};
  app.require_subcommand(1);

  std::string input, in_path, gamma_text = "1", beta_text, precision_text = "1e-12";
  std::string second, generators_path, base_a = "1", base_b = "2";
  unsigned cap = 500;
  unsigned degree_cap = 12;
  unsigned long denom_cap = 0;
  long max_denom = 1000000;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "inline polynomial text/JSON or a file path");
    sub->add_option("--in", in_path, "read the input from this file");
  };

  auto* tilt_cmd = app.add_subcommand("tilt", kTiltHelp);
  add_input(tilt_cmd);
  tilt_cmd->add_option("--gamma", gamma_text, "tilt parameter a/b > 0 (per grid step for measures)");
  tilt_cmd->add_option("--beta", beta_text, "inverse temperature; converted to gamma = exp(-beta)");
  tilt_cmd->add_option("--max-denom", max_denom, "denominator bound for the --beta conversion");

  auto* member_cmd = app.add_subcommand("member", "Classify as P(N), M(N) or neither");
  add_input(member_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Minimal n with q(x)(x+gamma)^n >= 0 coefficientwise");
  add_input(certify_cmd);
  certify_cmd->add_option("--gamma", gamma_text, "base a/b > 0");
  certify_cmd->add_option("--cap", cap, "largest exponent tried");

  auto* separate_cmd = app.add_subcommand("separate", "Polynomial q in S_p but not in S_p'");
  separate_cmd->add_option("p", input, "p (file or inline)")->required();
  separate_cmd->add_option("pprime", second, "p' (file or inline)")->required();
  separate_cmd->add_option("--denom-cap", denom_cap, "bound witness denominators (dense witness)");

  auto* factor_cmd = app.add_subcommand("factor", "Real factorization into linear and quadratic factors");
  add_input(factor_cmd);
  factor_cmd->add_option("--precision", precision_text, "largest allowed reconstruction residual");

  auto* facts_cmd = app.add_subcommand("factorizations", "All factorizations into P(N)-irreducibles");
  add_input(facts_cmd);
  facts_cmd->add_option("--cap", degree_cap, "largest accepted degree");

  auto* verify_cmd = app.add_subcommand("verify", "Decide whether a table is an exponential tilt");
  verify_cmd->add_option("table", input, "table JSON: [{\"from\": poly, \"to\": poly}, ...]")->required();
  verify_cmd->add_option("--generators", generators_path, "JSON list of generator polynomials")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Steps of x -> x^2 - 2 until |x| <= 1");
  orbit_cmd->add_option("a", input, "start a/b in (-2, 2)")->required();

  auto* approx_cmd = app.add_subcommand("approx23", "2^m 3^n within relative eps of y");
  approx_cmd->add_option("y", input, "target > 0")->required();
  approx_cmd->add_option("eps", second, "relative tolerance > 0")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Extend a table to q via Phi[q r]/Phi[r]");
  extend_cmd->add_option("table", input, "table JSON")->required();
  extend_cmd->add_option("q", second, "polynomial q (file or inline)");
  extend_cmd->add_option("--in", in_path, "read q from this file");
  extend_cmd->add_option("--base-a", base_a, "first multiplier base");
  extend_cmd->add_option("--base-b", base_b, "second multiplier base");
  extend_cmd->add_option("--cap", cap, "largest exponent tried per base");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }

  auto single_input = [&]() -> std::string {
    if (!in_path.empty() && !input.empty()) throw UsageError("give either an inline input or --in, not both");
    if (!in_path.empty()) return in_path;
    if (input.empty()) throw UsageError("missing input polynomial");
    return input;
  };

  try {
    json result;
    if (tilt_cmd->parsed()) {
      Rational gamma = flag_rational("--gamma", gamma_text);
      if (!beta_text.empty()) gamma = gamma_from_beta(flag_real("--beta", beta_text), max_denom);
      const std::string text = trimmed(load(single_input()));
      const json j = looks_like_json(text) ? parse_json(text) : json(text);
      if (j.is_object() && (j.contains("denom") || j.contains("points"))) {
        result = measure_to_json(tilt_measure(measure_from_json(j), gamma));
      } else {
        result = poly_to_json(tilt(poly_from_json(j), gamma));
      }
    } else if (member_cmd->parsed()) {
      const Poly p = read_poly(single_input());
      const auto roots = positive_root_count(p);
      std::string cls = "neither";
      if (is_nonneg(p)) cls = "P(N)";
      else if (in_M(p) && p.sum().sign() > 0) cls = "M(N)";
      result = json{{"class", cls}, {"positive_roots", roots}};
    } else if (certify_cmd->parsed()) {
      result = certificate_json(polya_exponent(read_poly(single_input()), flag_rational("--gamma", gamma_text), cap));
    } else if (separate_cmd->parsed()) {
      const Poly p = read_poly(input), pp = read_poly(second);
      const SeparationWitness w = denom_cap > 0 ? separate_dense(p, pp, denom_cap) : separate(p, pp);
      result = witness_json(p, pp, w);
    } else if (factor_cmd->parsed()) {
      const double precision = flag_real("--precision", precision_text);
      if (!(precision > 0)) throw UsageError("--precision: must be positive");
      result = factor_json(factor_real(read_poly(single_input()), precision), precision_text);
    } else if (facts_cmd->parsed()) {
      result = factorizations_json(enumerate_P_factorizations(read_poly(single_input()), degree_cap));
    } else if (verify_cmd->parsed()) {
      result = verdict_json(verify_is_tilting(read_table(input), read_poly_list(generators_path)));
    } else if (orbit_cmd->parsed()) {
      const Rational a = flag_rational("a", input);
      result = json{{"a", a.str()}, {"steps", interval_orbit(a)}};
    } else if (approx_cmd->parsed()) {
      const double y = flag_real("y", input), eps = flag_real("eps", second);
      const auto [m, n] = approx_23(y, eps);
      result = json{{"m", m}, {"n", n}};
    } else if (extend_cmd->parsed()) {
      if (!in_path.empty() && !second.empty()) throw UsageError("give either q or --in, not both");
      const std::string q_arg = in_path.empty() ? second : in_path;
      if (q_arg.empty()) throw UsageError("missing polynomial q");
      ExtensionBases bases{flag_rational("--base-a", base_a), flag_rational("--base-b", base_b), cap};
      result = poly_to_json(extend_map(read_table(input), read_poly(q_arg), bases));
    }
    out << result.dump() << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    out << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    out << json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    out << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace tiltkit::cli
