/*
   Copyright 2026 The genjac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "genjac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "genjac/error.hpp"
#include "genjac/table_io.hpp"
#include "genjac/verify.hpp"

namespace genjac {

namespace {

using nlohmann::json;

const std::vector<JacobiParams>& default_grid() {
  static const std::vector<JacobiParams> grid{
      {Rational(0), Rational(0)},       {Rational(1), Rational(0)},
      {Rational(0), Rational(2)},       {Rational(1), Rational(3)},
      {Rational(1, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(3, 4)},
      {Rational(5), Rational(5)}};
  return grid;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json poly_array(const Poly& p) {
  return rational_array(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()));
}

struct Perturbation {
  Family family = Family::A;
  unsigned index = 1;
  Rational amount{1};
};

Perturbation parse_perturbation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "perturbation must be family:i[:value]");
  Perturbation out;
  out.family = parse_family(text.substr(0, colon));
  if (out.family == Family::BigB || out.family == Family::BigC)
    throw Error(ErrorKind::Parse, "only families a, b and c can be perturbed");
  const std::string rest = text.substr(colon + 1);
  const auto colon2 = rest.find(':');
  const Rational index = Rational::parse(rest.substr(0, colon2));
  if (!index.is_nonnegative_integer() || index.is_zero())
    throw Error(ErrorKind::Parse, "perturbation index must be a positive integer");
  out.index = static_cast<unsigned>(*index.to_long());
  if (colon2 != std::string::npos) out.amount = Rational::parse(rest.substr(colon2 + 1));
  return out;
}

int cmd_table(const std::string& family, const std::string& alpha, const std::string& beta,
              unsigned i_max, const std::string& format, const std::string& basis,
              std::ostream& out) {
  const JacobiParams params{Rational::parse(alpha), Rational::parse(beta)};
  const CoefficientTable table = build_coefficient_table(parse_family(family), params, i_max);
  const TableDocument doc = make_table_document(table, i_max, parse_basis(basis));
  out << (format == "csv" ? to_csv(doc) : to_json(doc));
  return 0;
}

int cmd_eigen(const std::string& alpha, const std::string& beta, unsigned n_max,
              const std::string& format, std::ostream& out) {
  const JacobiParams params{Rational::parse(alpha), Rational::parse(beta)};
  std::vector<Rational> a0, b0, c0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto [a, b, c] = eigen_coeffs(n, params);
    a0.push_back(a);
    b0.push_back(b);
    c0.push_back(c);
  }
  if (format == "csv") {
    out << "n,a0,b0,c0\n";
    for (unsigned n = 0; n <= n_max; ++n)
      out << n << ',' << a0[n].to_string() << ',' << b0[n].to_string() << ',' << c0[n].to_string()
          << '\n';
    return 0;
  }
  json doc = {{"meta", {{"alpha", params.alpha.to_string()},
                        {"beta", params.beta.to_string()},
                        {"n_max", n_max},
                        {"tool_version", GENJAC_VERSION}}},
              {"a0", rational_array(a0)},
              {"b0", rational_array(b0)},
              {"c0", rational_array(c0)}};
  out << doc.dump(2) << '\n';
  return 0;
}

int cmd_verify_de(const std::vector<JacobiParams>& grid, unsigned n_max,
                  const std::optional<Perturbation>& perturb, std::ostream& out) {
  bool all_zero = true;
  for (const auto& params : grid) {
    DeCoefficients coeffs = DeCoefficients::closed_form(params, n_max);
    if (perturb) {
      if (perturb->index > n_max)
        throw Error(ErrorKind::Parse, "perturbation index exceeds --nmax");
      auto& column = perturb->family == Family::A   ? coeffs.a
                     : perturb->family == Family::B ? coeffs.b
                                                    : coeffs.c;
      column[perturb->index] += perturb->amount;
    }
    for (unsigned n = 0; n <= n_max; ++n) {
      const BilinearResidual res = de_residual(n, coeffs, n);
      out << "alpha=" << params.alpha.to_string() << " beta=" << params.beta.to_string()
          << " n=" << n << ": ";
      const auto bad = res.nonzero_components();
      if (bad.empty()) {
        out << "zero\n";
        continue;
      }
      all_zero = false;
      out << "nonzero components";
      for (const auto& [p, q] : bad) out << " M^" << p << "N^" << q;
      out << '\n';
    }
  }
  out << (all_zero ? "all residuals vanish\n" : "residual check FAILED\n");
  return all_zero ? 0 : 1;
}

int cmd_identities(const std::vector<JacobiParams>& grid, const std::string& suite,
                   unsigned n_max, unsigned i_max, std::ostream& out) {
  const IdentityReport report = check_identity_suite(grid, n_max, i_max, parse_suite(suite));
  for (const auto& e : report.entries) {
    out << (e.passed() ? "PASS " : "FAIL ") << e.label << " cases=" << e.cases;
    if (!e.passed()) out << " failures=" << e.failures << " errors=" << e.errors << " first: " << e.first_problem;
    out << '\n';
  }
  out << (report.all_passed() ? "all identities hold\n" : "identity check FAILED\n");
  return report.all_passed() ? 0 : 1;
}

int cmd_limit(const std::string& alpha_text, unsigned i_max, unsigned n_max, std::ostream& out) {
  const Rational alpha = Rational::parse(alpha_text);
  bool ok = true;
  json entries = json::array();
  for (unsigned i = 1; i <= i_max; ++i) {
    const Poly limit = laguerre_limit_coeff(i, alpha);
    const Poly closed = laguerre_limit_closed(i, alpha);
    ok = ok && limit == closed;
    entries.push_back({{"i", i}, {"limit", poly_array(limit)}, {"closed_form", poly_array(closed)},
                       {"match", limit == closed}});
  }
  json eigen = json::array();
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational limit = eigen_limit(n, alpha);
    const Rational closed = eigen_limit_closed(n, alpha);
    ok = ok && limit == closed;
    eigen.push_back({{"n", n}, {"limit", limit.to_string()}, {"closed_form", closed.to_string()},
                     {"match", limit == closed}});
  }
  json doc = {{"meta", {{"alpha", alpha.to_string()}, {"i_max", i_max}, {"n_max", n_max},
                        {"tool_version", GENJAC_VERSION}}},
              {"entries", entries},
              {"eigen", eigen},
              {"all_match", ok}};
  out << doc.dump(2) << '\n';
  return ok ? 0 : 1;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::NonIntegerParams:
    case ErrorKind::TruncationTooSmall:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

std::vector<JacobiParams> parse_grid(const std::string& text) {
  std::vector<JacobiParams> grid;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw Error(ErrorKind::Parse, "grid line needs exactly two values: '" + line + "'");
    grid.push_back({Rational::parse(a), Rational::parse(b)});
  }
  return grid;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Jacobi differential-equation coefficients", "genjac"};
  app.set_version_flag("--version", std::string(GENJAC_VERSION));
  app.require_subcommand(1);

  std::string family, alpha = "0", beta = "0", format = "json", basis = "plain", suite = "all";
  std::string m_mass, n_mass, grid_file, perturb;
  unsigned i_max = 0, n_max = 0, probe = 0;

  auto* table = app.add_subcommand("table", "Emit a coefficient table");
  table->add_option("--family", family, "a, b, c, C or B")->required()
      ->check(CLI::IsMember({"a", "b", "c", "C", "B"}));
  table->add_option("--alpha", alpha)->required();
  table->add_option("--beta", beta)->required();
  table->add_option("--imax", i_max)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--basis", basis)->check(CLI::IsMember({"plain", "shifted"}));

  auto* eigen = app.add_subcommand("eigen", "Emit a0, b0, c0 for n = 0..nmax");
  eigen->add_option("--alpha", alpha)->required();
  eigen->add_option("--beta", beta)->required();
  eigen->add_option("--nmax", n_max)->required();
  eigen->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify-de", "Check the differential equation residual");
  verify->add_option("--alpha", alpha);
  verify->add_option("--beta", beta);
  verify->add_option("--nmax", n_max)->required();
  verify->add_option("--grid", grid_file, "file of 'alpha beta' lines");
  verify->add_option("--perturb", perturb, "family:i[:value], added to that coefficient");

  auto* order = app.add_subcommand("check-order", "Report the order of the equation");
  order->add_option("--alpha", alpha)->required();
  order->add_option("--beta", beta)->required();
  order->add_option("--m", m_mass)->required();
  order->add_option("--n", n_mass)->required();
  order->add_option("--probe", probe)->required()->check(CLI::PositiveNumber);

  unsigned suite_n = 8, suite_i = 8;
  auto* idents = app.add_subcommand("identities", "Run the identity suite");
  idents->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "hyper", "jacobi", "genjacobi", "coeffs", "inversion",
                             "symmetry", "de", "limit"}));
  idents->add_option("--nmax", suite_n);
  idents->add_option("--imax", suite_i);
  idents->add_option("--grid", grid_file, "file of 'alpha beta' lines");

  unsigned limit_n = 10;
  auto* limit = app.add_subcommand("limit-laguerre", "Laguerre limit of the b coefficients");
  limit->add_option("--alpha", alpha)->required();
  limit->add_option("--imax", i_max)->required();
  limit->add_option("--nmax", limit_n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(family, alpha, beta, i_max, format, basis, out);
    if (*eigen) return cmd_eigen(alpha, beta, n_max, format, out);
    if (*verify) {
      const auto grid = grid_file.empty()
                            ? std::vector<JacobiParams>{{Rational::parse(alpha), Rational::parse(beta)}}
                            : parse_grid(read_file(grid_file));
      std::optional<Perturbation> p;
      if (!perturb.empty()) p = parse_perturbation(perturb);
      return cmd_verify_de(grid, n_max, p, out);
    }
    if (*order) {
      const JacobiParams params{Rational::parse(alpha), Rational::parse(beta)};
      const MassParams masses{Rational::parse(m_mass), Rational::parse(n_mass)};
      if (!masses.admissible()) throw Error(ErrorKind::ParamOutOfRange, "masses must be nonnegative");
      out << differential_order(params, masses, probe).to_string() << '\n';
      return 0;
    }
    if (*idents) {
      const auto grid = grid_file.empty() ? default_grid() : parse_grid(read_file(grid_file));
      return cmd_identities(grid, suite, suite_n, suite_i, out);
    }
    if (*limit) return cmd_limit(alpha, i_max, limit_n, out);
  } catch (const Error& e) {
    err << "genjac: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "genjac: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace genjac
