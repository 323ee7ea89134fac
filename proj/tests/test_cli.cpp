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

// End-to-end tests that drive the command-line binary (path injected by the
// build as MODLP_CLI_PATH) through a shell and check bytes and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "modlp/io.hpp"
#include "modlp/random.hpp"
#include "modlp/weighted_lp.hpp"
#include "test_support.hpp"

using namespace modlp;
using namespace modlp_test;

namespace {

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / ("modlp_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& tail, const std::string& env_prefix = "") {
  std::string out_path = path_of("stdout.txt");
  std::string err_path = path_of("stderr.txt");
  std::string cmd = env_prefix + "\"" + MODLP_CLI_PATH + "\" " + tail + " > \"" + out_path +
                    "\" 2> \"" + err_path + "\"";
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out_path), slurp(err_path)};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

void write_single(const std::string& name, FileKind kind, const CMat& m) {
  MatrixFile f;
  f.kind = kind;
  f.dim = static_cast<int>(m.rows());
  f.dim_out = f.dim;
  f.data = {m};
  write_matrix_file(path_of(name), f);
}

void write_text(const std::string& name, const std::string& text) {
  std::ofstream out(path_of(name), std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("divergence subcommand") {
  write_single("psi.json", FileKind::state, diag2(1.0, 0.0));
  write_single("phi.json", FileKind::functional, diag2(0.5, 0.5));
  std::string pair = "\"" + path_of("psi.json") + "\" \"" + path_of("phi.json") + "\"";

  RunResult r = run_cli("divergence " + pair + " --alpha 2 --alpha inf");
  CHECK(r.exit_code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "alpha,value");
  CHECK(close_rel(std::stod(fields_of(lines[1])[1]), std::log(2.0), 1e-12));
  CHECK(fields_of(lines[2])[0] == "inf");
  CHECK(close_rel(std::stod(fields_of(lines[2])[1]), std::log(2.0), 1e-12));

  RunResult bits = run_cli("divergence " + pair + " --alpha 2 --bits");
  CHECK(bits.exit_code == 0);
  CHECK(close_rel(std::stod(fields_of(lines_of(bits.out)[1])[1]), 1.0, 1e-12));

  RunResult both = run_cli("divergence " + pair + " --alpha 0.75 --alpha 3 --route both");
  CHECK(both.exit_code == 0);
  std::vector<std::string> blines = lines_of(both.out);
  REQUIRE(blines.size() == 3);
  CHECK(blines[0] == "alpha,trace_value,norm_value,abs_diff");
  for (std::size_t i = 1; i < blines.size(); ++i) {
    CHECK(std::stod(fields_of(blines[i])[3]) <= 1e-9);
  }

  CHECK(run_cli("divergence " + pair + " --alpha 1").exit_code == 3);
  CHECK(run_cli("divergence " + pair + " --alpha 0.2").exit_code == 3);
  CHECK(run_cli("divergence \"" + path_of("absent.json") + "\" \"" + path_of("phi.json") +
                "\" --alpha 2")
            .exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("norm subcommand") {
  Rng rng(7);
  CMat k = ginibre(2, 2, rng);
  write_single("k.json", FileKind::matrix, k);
  write_single("w.json", FileKind::functional, diag2(0.5, 0.5));
  write_single("thirds.json", FileKind::functional, diag2(1.0 / 3.0, 2.0 / 3.0));
  write_single("e11.json", FileKind::matrix, diag2(1.0, 0.0));
  std::string kw = "\"" + path_of("k.json") + "\" \"" + path_of("w.json") + "\"";

  RunResult am2 = run_cli("norm " + kw + " --p 2 --kind am");
  CHECK(am2.exit_code == 0);
  std::vector<std::string> lines = lines_of(am2.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].rfind("value ", 0) == 0);
  CHECK(close_rel(std::stod(lines[0].substr(6)), k.norm(), 1e-12));

  RunResult bst = run_cli("norm \"" + path_of("e11.json") + "\" \"" + path_of("thirds.json") +
                          "\" --p 1.3333333333333333 --kind bst");
  CHECK(bst.exit_code == 0);
  // The left-weighted norm of a self-adjoint vector agrees with the
  // right-weighted closed form evaluated on its adjoint.
  double expected = am_norm(HSVector(diag2(1.0, 0.0)),
                            PositiveFunctional(diag2(1.0 / 3.0, 2.0 / 3.0)),
                            1.3333333333333333);
  CHECK(close_rel(std::stod(lines_of(bst.out)[0].substr(6)), expected, 1e-12));

  write_single("h.json", FileKind::functional, diag2(0.5, 0.5));
  RunResult kos = run_cli("norm \"" + path_of("h.json") + "\" \"" + path_of("w.json") +
                          "\" --p 3 --kind kosaki");
  CHECK(kos.exit_code == 0);
  CHECK(close_rel(std::stod(lines_of(kos.out)[0].substr(6)), 1.0, 1e-12));

  write_single("singular.json", FileKind::functional, diag2(1.0, 0.0));
  CHECK(run_cli("norm " + kw.substr(0, kw.find(' ')) + " \"" + path_of("singular.json") +
                "\" --p 3 --kind am")
            .exit_code == 4);

  RunResult var = run_cli("norm " + kw + " --p 4 --kind am --variational-budget 2000 --seed 5");
  CHECK(var.exit_code == 0);
  std::vector<std::string> vlines = lines_of(var.out);
  REQUIRE(vlines.size() == 2);
  double closed = std::stod(vlines[0].substr(6));
  std::vector<std::string> parts;
  {
    std::istringstream in(vlines[1]);
    std::string tok;
    while (in >> tok) parts.push_back(tok);
  }
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "variational");
  CHECK(parts[2] == "lower");
  double bound = std::stod(parts[1]);
  CHECK(bound <= closed + 1e-8);
  CHECK(bound >= closed * (1.0 - 1e-3));
}

TEST_CASE("polar subcommand") {
  Rng rng(9);
  CMat k = ginibre(2, 2, rng);
  PositiveFunctional phi = random_state(2, rng);
  write_single("pk.json", FileKind::matrix, k);
  write_single("pphi.json", FileKind::functional, phi.density());

  RunResult r = run_cli("polar \"" + path_of("pk.json") + "\" \"" + path_of("pphi.json") +
                        "\" --p 3 --out-u \"" + path_of("u.json") + "\" --out-rho \"" +
                        path_of("rho.json") + "\"");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("p").get<double>() == 3.0);
  double tr = j.at("rho_trace").get<double>();
  CHECK(close_rel(j.at("norm").get<double>(), std::pow(tr, 1.0 / 3.0), 1e-12));
  CHECK(close_rel(tr, std::pow(am_norm(HSVector(k), phi, 3.0), 3.0), 1e-10));

  MatrixFile uf = read_matrix_file(path_of("u.json"));
  MatrixFile rf = read_matrix_file(path_of("rho.json"));
  CHECK(uf.kind == FileKind::matrix);
  CHECK(rf.kind == FileKind::functional);
  CMat rebuilt = uf.data[0] * frac_power(rf.data[0], 1.0 / 3.0) * phi.power(0.5 - 1.0 / 3.0);
  CHECK(mat_close(rebuilt, k, 1e-9 * std::max(1.0, k.norm())));
}

TEST_CASE("witness subcommand") {
  Rng rng(11);
  PositiveFunctional phi = random_state_of_rank(2, 1, rng);
  CMat k = ginibre(2, 2, rng);
  write_single("wk.json", FileKind::matrix, k);
  write_single("wphi.json", FileKind::functional, phi.density());

  RunResult r = run_cli("witness \"" + path_of("wk.json") + "\" \"" + path_of("wphi.json") +
                        "\" --p 1.5");
  CHECK(r.exit_code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 20);
  CHECK(lines[0] == "eps,value,predicted,rel_err");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::stod(fields_of(lines[i])[3]) <= 1e-10);
  }

  CHECK(run_cli("witness \"" + path_of("wk.json") + "\" \"" + path_of("wphi.json") +
                "\" --p 3 --eps 0.5")
            .exit_code == 2);
}

TEST_CASE("campaign subcommand") {
  write_text("config.json",
             R"({"seed":3,"trials":2,"dims":[2],"alpha_grid":[0.75],"channel_family":"unitary"})");
  std::string config = "\"" + path_of("config.json") + "\"";

  RunResult r1 = run_cli("campaign " + config + " \"" + path_of("out1.csv") + "\"");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("rows 2\n") != std::string::npos);
  CHECK(r1.out.find("violations 0\n") != std::string::npos);
  CHECK(r1.out.find("min_gap ") != std::string::npos);
  CHECK(r1.out.find("runtime_seconds ") != std::string::npos);

  RunResult r2 = run_cli("campaign " + config + " \"" + path_of("out2.csv") + "\"");
  CHECK(r2.exit_code == 0);
  CHECK(slurp(path_of("out1.csv")) == slurp(path_of("out2.csv")));
  CHECK(slurp(path_of("out1.csv")).rfind("trial,seed,d_in,d_out,family,alpha,d_in_div,"
                                         "d_out_div,gap,petz_err_psi,petz_err_phi,sufficient,"
                                         "violation\n",
                                         0) == 0);

  // The environment seed overrides the config seed.
  write_text("config99.json",
             R"({"seed":99,"trials":2,"dims":[2],"alpha_grid":[0.75],"channel_family":"unitary"})");
  RunResult renv = run_cli("campaign " + config + " \"" + path_of("out_env.csv") + "\"",
                           "MODLP_SEED=99 ");
  CHECK(renv.exit_code == 0);
  RunResult r99 = run_cli("campaign \"" + path_of("config99.json") + "\" \"" +
                          path_of("out99.csv") + "\"");
  CHECK(r99.exit_code == 0);
  CHECK(slurp(path_of("out_env.csv")) == slurp(path_of("out99.csv")));
  CHECK(slurp(path_of("out_env.csv")) != slurp(path_of("out1.csv")));

  CHECK(run_cli("campaign " + config + " \"" + path_of("bad_env.csv") + "\"",
                "MODLP_SEED=nope ")
            .exit_code == 2);

  write_text("bad_config.json", R"({"mystery":1})");
  CHECK(run_cli("campaign \"" + path_of("bad_config.json") + "\" \"" + path_of("bad.csv") + "\"")
            .exit_code == 2);
}
