// Copyright 2026 The modlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front-end. Exit codes: 0 success, 2 parse or validation
// failure, 3 illegal Renyi order, 4 faithfulness violation, 5 campaign
// with theorem-violation rows.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modlp/campaign.hpp"
#include "modlp/io.hpp"
#include "modlp/weighted_lp.hpp"

namespace {

double parse_extended_real(const std::string& text, const char* what) {
  if (text == "inf") return modlp::kInf;
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw modlp::ParseError(std::string(what) + ": cannot parse \"" + text +
                            "\" as a real number or \"inf\"");
  }
}

double parse_alpha(const std::string& text) {
  double alpha = parse_extended_real(text, "alpha");
  if (alpha == 1.0) {
    throw modlp::InvalidAlphaError("alpha = 1 is the pole of 1/(alpha - 1); the Renyi order "
                                   "must lie in [1/2, 1) or (1, inf]");
  }
  return alpha;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw modlp::ParseError("cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

modlp::CMat load_single_matrix(const std::string& path) {
  modlp::MatrixFile f = modlp::read_matrix_file(path);
  if (f.kind == modlp::FileKind::channel) {
    throw modlp::ParseError(path + ": expected a single-matrix kind, got \"channel\"");
  }
  return f.data[0];
}

modlp::PositiveFunctional load_functional(const std::string& path) {
  return modlp::PositiveFunctional(load_single_matrix(path));
}

struct DivergenceArgs {
  std::string psi_path;
  std::string phi_path;
  std::vector<std::string> alpha_texts;
  std::string route = "trace";
  bool bits = false;
};

int cmd_divergence(const DivergenceArgs& args) {
  std::vector<double> alphas;
  for (const std::string& text : args.alpha_texts) alphas.push_back(parse_alpha(text));
  modlp::PositiveFunctional psi = load_functional(args.psi_path);
  modlp::PositiveFunctional phi = load_functional(args.phi_path);
  auto report = [&args](double nats) { return args.bits ? modlp::nats_to_bits(nats) : nats; };
  if (args.route == "both") {
    std::cout << "alpha,trace_value,norm_value,abs_diff\n";
    for (double alpha : alphas) {
      double t = report(modlp::d_renyi(psi, phi, alpha).value);
      double n = report(modlp::d_renyi_norm_route(psi, phi, alpha).value);
      double diff = t == n ? 0.0 : std::abs(t - n);
      std::cout << modlp::format_double(alpha) << ',' << modlp::format_double(t) << ','
                << modlp::format_double(n) << ',' << modlp::format_double(diff) << '\n';
    }
    return 0;
  }
  std::cout << "alpha,value\n";
  for (double alpha : alphas) {
    double v = args.route == "norm" ? modlp::d_renyi_norm_route(psi, phi, alpha).value
                                    : modlp::d_renyi(psi, phi, alpha).value;
    std::cout << modlp::format_double(alpha) << ',' << modlp::format_double(report(v)) << '\n';
  }
  return 0;
}

struct NormArgs {
  std::string k_path;
  std::string phi_path;
  std::string p_text;
  std::string kind = "am";
  long variational_budget = 0;
  std::uint64_t seed = 1;
};

int cmd_norm(const NormArgs& args) {
  double p = parse_extended_real(args.p_text, "p");
  modlp::PositiveFunctional phi = load_functional(args.phi_path);
  std::optional<modlp::HSVector> k;
  double value;
  if (args.kind == "kosaki") {
    value = modlp::kosaki_norm(load_single_matrix(args.k_path), phi, p);
  } else {
    k.emplace(load_single_matrix(args.k_path));
    value = args.kind == "am" ? modlp::am_norm(*k, phi, p) : modlp::bst_norm(*k, phi, p);
  }
  std::cout << "value " << modlp::format_double(value) << '\n';
  if (args.variational_budget > 0) {
    if (args.kind != "am") {
      throw modlp::ParseError("norm: --variational-budget applies only to --kind am");
    }
    modlp::VariationalResult vr =
        modlp::am_norm_variational(*k, phi, p, args.variational_budget, args.seed);
    std::cout << "variational " << modlp::format_double(vr.value) << ' '
              << (vr.bound_kind == modlp::BoundKind::lower ? "lower" : "upper") << '\n';
  }
  return 0;
}

int cmd_campaign(const std::string& config_path, const std::string& out_path) {
  modlp::CampaignConfig config = modlp::parse_campaign_config(read_text_file(config_path));
  if (const char* env = std::getenv("MODLP_SEED")) {
    std::string text(env);
    try {
      std::size_t pos = 0;
      config.seed = std::stoull(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw modlp::ParseError("MODLP_SEED: cannot parse \"" + text + "\" as an unsigned integer");
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  modlp::CampaignResult result = modlp::run_campaign(config);
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
  std::string csv = modlp::campaign_csv(result);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw modlp::ParseError("cannot open file \"" + out_path + "\" for writing");
  out << csv;
  if (!out) throw modlp::ParseError("failed while writing \"" + out_path + "\"");
  std::cout << "rows " << result.rows.size() << '\n';
  std::cout << "min_gap " << modlp::format_double(result.min_gap) << '\n';
  std::cout << "violations " << result.violations << '\n';
  std::cout << "runtime_seconds " << modlp::format_double(elapsed.count()) << '\n';
  return result.violations > 0 ? 5 : 0;
}

struct PolarArgs {
  std::string k_path;
  std::string phi_path;
  std::string p_text;
  std::string out_u_path;
  std::string out_rho_path;
};

int cmd_polar(const PolarArgs& args) {
  double p = parse_extended_real(args.p_text, "p");
  modlp::HSVector k(load_single_matrix(args.k_path));
  modlp::PositiveFunctional phi = load_functional(args.phi_path);
  modlp::AmPolarDecomposition pd = modlp::am_polar(k, phi, p);
  std::string out = "{\"p\":";
  out += modlp::format_double(p);
  out += ",\"u\":";
  out += modlp::matrix_json(pd.u.matrix);
  out += ",\"rho\":";
  out += modlp::matrix_json(pd.rho.density());
  out += ",\"rho_trace\":";
  out += modlp::format_double(pd.rho.trace());
  out += ",\"norm\":";
  out += modlp::format_double(std::pow(pd.rho.trace(), 1.0 / p));
  out += "}\n";
  std::cout << out;
  int d = pd.rho.dim();
  if (!args.out_u_path.empty()) {
    modlp::write_matrix_file(args.out_u_path,
                             {modlp::FileKind::matrix, d, d, {pd.u.matrix}});
  }
  if (!args.out_rho_path.empty()) {
    modlp::write_matrix_file(args.out_rho_path,
                             {modlp::FileKind::functional, d, d, {pd.rho.density()}});
  }
  return 0;
}

struct WitnessArgs {
  std::string k_path;
  std::string phi_path;
  std::string p_text;
  std::vector<double> eps_grid;
};

int cmd_witness(const WitnessArgs& args) {
  double p = parse_extended_real(args.p_text, "p");
  modlp::HSVector k(load_single_matrix(args.k_path));
  modlp::PositiveFunctional phi = load_functional(args.phi_path);
  std::vector<double> grid = args.eps_grid;
  if (grid.empty()) {
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  }
  // Tr rho of the witness polar data, for the predicted scaling law.
  double tr_rho = std::pow(
      modlp::schatten_norm(k.matrix().adjoint() * phi.power(1.0 / p - 0.5), p), p);
  std::cout << "eps,value,predicted,rel_err\n";
  for (double eps : grid) {
    modlp::WitnessResult wr = modlp::sigma_eps_witness(k, phi, p, eps);
    double predicted = std::pow(tr_rho, 1.0 / p);
    if (wr.eps_active) predicted *= std::pow(eps, 0.5 - 1.0 / p);
    double rel = predicted > 0.0 ? std::abs(wr.value - predicted) / predicted
                                 : std::abs(wr.value - predicted);
    std::cout << modlp::format_double(eps) << ',' << modlp::format_double(wr.value) << ','
              << modlp::format_double(predicted) << ',' << modlp::format_double(rel) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted noncommutative Lp norms, sandwiched Renyi divergences, and "
               "channel-sufficiency probes on matrix algebras"};
  app.require_subcommand(1);

  DivergenceArgs div_args;
  CLI::App* div = app.add_subcommand(
      "divergence", "Sandwiched Renyi divergence between two functionals from files");
  div->add_option("psi", div_args.psi_path, "State file (JSON)")->required();
  div->add_option("phi", div_args.phi_path, "Reference functional file (JSON)")->required();
  div->add_option("--alpha", div_args.alpha_texts, "Renyi orders (reals or \"inf\")")
      ->required()
      ->expected(-1);
  div->add_flag("--bits", div_args.bits, "Report values in bits instead of nats");
  div->add_option("--route", div_args.route, "Evaluation route: trace, norm, or both")
      ->check(CLI::IsMember({"trace", "norm", "both"}));

  NormArgs norm_args;
  CLI::App* norm =
      app.add_subcommand("norm", "Weighted Lp norm of a vector or functional against a weight");
  norm->add_option("k", norm_args.k_path, "Vector file (JSON); the space element for kosaki")
      ->required();
  norm->add_option("phi", norm_args.phi_path, "Weight functional file (JSON)")->required();
  norm->add_option("--p", norm_args.p_text, "Exponent (real >= 1 or \"inf\")")->required();
  norm->add_option("--kind", norm_args.kind, "Norm family: am, bst, or kosaki")
      ->check(CLI::IsMember({"am", "bst", "kosaki"}));
  norm->add_option("--variational-budget", norm_args.variational_budget,
                   "Objective evaluations for the variational bound (am only)");
  norm->add_option("--seed", norm_args.seed, "Seed for the variational optimizer");

  std::string campaign_config_path;
  std::string campaign_out_path;
  CLI::App* campaign = app.add_subcommand(
      "campaign", "Randomized DPI / sufficiency campaign; writes a CSV report");
  campaign->add_option("config", campaign_config_path, "Campaign config file (JSON)")->required();
  campaign->add_option("out", campaign_out_path, "Output CSV path")->required();

  PolarArgs polar_args;
  CLI::App* polar =
      app.add_subcommand("polar", "Weighted polar decomposition of a vector against a weight");
  polar->add_option("k", polar_args.k_path, "Vector file (JSON)")->required();
  polar->add_option("phi", polar_args.phi_path, "Weight functional file (JSON)")->required();
  polar->add_option("--p", polar_args.p_text, "Exponent (real in [1, inf))")->required();
  polar->add_option("--out-u", polar_args.out_u_path, "Write the partial isometry here");
  polar->add_option("--out-rho", polar_args.out_rho_path, "Write the positive part here");

  WitnessArgs witness_args;
  CLI::App* witness = app.add_subcommand(
      "witness", "Near-optimal state sweep for the infimum-type weighted norm");
  witness->add_option("k", witness_args.k_path, "Vector file (JSON)")->required();
  witness->add_option("phi", witness_args.phi_path, "Weight functional file (JSON)")->required();
  witness->add_option("--p", witness_args.p_text, "Exponent (real in (1, 2])")->required();
  witness->add_option("--eps", witness_args.eps_grid,
                      "Mixing weights in (0, 1); default 0.05 to 0.95 in steps of 0.05")
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (div->parsed()) return cmd_divergence(div_args);
    if (norm->parsed()) return cmd_norm(norm_args);
    if (campaign->parsed()) return cmd_campaign(campaign_config_path, campaign_out_path);
    if (polar->parsed()) return cmd_polar(polar_args);
    if (witness->parsed()) return cmd_witness(witness_args);
  } catch (const modlp::InvalidAlphaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const modlp::NotFaithfulError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
