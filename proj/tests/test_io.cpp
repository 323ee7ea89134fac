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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>

#include "doctest.h"
#include "modlp/campaign.hpp"
#include "modlp/io.hpp"
#include "modlp/random.hpp"
#include "test_support.hpp"

using namespace modlp;
using namespace modlp_test;

TEST_CASE("format_double renders round-trippable decimals") {
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(std::stod(format_double(std::log(2.0))) == std::log(2.0));
}

TEST_CASE("matrix file round trip is byte identical") {
  Rng rng(2);
  MatrixFile f;
  f.kind = FileKind::matrix;
  f.dim = 3;
  f.dim_out = 3;
  f.data = {ginibre(3, 3, rng)};
  std::string once = serialize_matrix_file(f);
  MatrixFile parsed = parse_matrix_file(once);
  CHECK(parsed.kind == FileKind::matrix);
  CHECK(parsed.dim == 3);
  CHECK(mat_close(parsed.data[0], f.data[0], 0.0));
  CHECK(serialize_matrix_file(parsed) == once);
}

TEST_CASE("channel files carry several kraus blocks") {
  KrausChannel dep = KrausChannel::depolarizing(2);
  MatrixFile f;
  f.kind = FileKind::channel;
  f.dim = 2;
  f.dim_out = 2;
  f.data = dep.kraus();
  std::string text = serialize_matrix_file(f);
  MatrixFile parsed = parse_matrix_file(text);
  CHECK(parsed.kind == FileKind::channel);
  CHECK(parsed.data.size() == dep.kraus().size());
  KrausChannel rebuilt(parsed.data, parsed.dim, parsed.dim_out);
  CHECK(mat_close(rebuilt.choi(), dep.choi(), 1e-14));
}

TEST_CASE("matrix_json encodes entries as re/im pairs") {
  CMat m(1, 2);
  m(0, 0) = Complex(1.0, 0.0);
  m(0, 1) = Complex(0.0, -0.5);
  CHECK(matrix_json(m) == "[[[1,0],[0,-0.5]]]");
}

TEST_CASE("parse failures carry ParseError") {
  CHECK_THROWS_AS(parse_matrix_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"widget","dim":1,"data":[[[1,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"matrix","data":[[[1,0]]]})"), ParseError);
  // Shape disagrees with dim.
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"matrix","dim":2,"data":[[[1,0]]]})"), ParseError);
  // Entry is not an [re, im] pair.
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"matrix","dim":1,"data":[[1]]})"), ParseError);
  // dim_out is only legal for channels.
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"matrix","dim":1,"dim_out":1,"data":[[[1,0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"channel","dim":1,"data":[[[[1,0]]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"channel","dim":1,"dim_out":1,"data":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"matrix","dim":1,"data":[[[1,0]]],"extra":1})"),
                  ParseError);
  // States must have unit trace.
  CHECK_THROWS_AS(parse_matrix_file(R"({"kind":"state","dim":1,"data":[[[0.9,0]]]})"),
                  NotAStateError);
  CHECK(parse_matrix_file(R"({"kind":"state","dim":1,"data":[[[1,0]]]})").kind == FileKind::state);
}

TEST_CASE("campaign config parsing") {
  CampaignConfig defaults = parse_campaign_config("{}");
  CHECK(defaults.seed == 1);
  CHECK(defaults.trials == 10);
  CHECK(defaults.dims == std::vector<int>{2, 3});
  CHECK(defaults.family == ChannelFamily::random_stinespring);
  CHECK(defaults.gap_tol == 1e-8);
  CHECK(defaults.recovery_tol == 1e-7);

  CampaignConfig full = parse_campaign_config(
      R"({"seed":7,"trials":3,"dims":[2],"alpha_grid":[0.6,"inf"],)"
      R"("channel_family":"unitary","tolerances":{"gap":1e-6,"recovery":1e-5}})");
  CHECK(full.seed == 7);
  CHECK(full.trials == 3);
  CHECK(full.dims == std::vector<int>{2});
  CHECK(full.alpha_grid.size() == 2);
  CHECK(full.alpha_grid[1] == kInf);
  CHECK(full.family == ChannelFamily::unitary);
  CHECK(full.gap_tol == 1e-6);
  CHECK(full.recovery_tol == 1e-5);

  CHECK_THROWS_AS(parse_campaign_config(R"({"mystery":1})"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config(R"({"tolerances":{"gaps":1e-8}})"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config(R"({"trials":0})"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config(R"({"dims":[]})"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config(R"({"alpha_grid":[1.0]})"), InvalidAlphaError);
  CHECK_THROWS_AS(parse_campaign_config(R"({"channel_family":"carrier"})"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config("[]"), ParseError);
}

TEST_CASE("campaign csv layout") {
  CampaignResult result;
  result.trials = 1;
  result.violations = 0;
  result.min_gap = 0.5;
  CampaignRow row{};
  row.trial = 0;
  row.seed = 42;
  row.d_in = 2;
  row.d_out = 3;
  row.family = ChannelFamily::unitary;
  row.alpha = 0.75;
  row.d_in_div = 0.5;
  row.d_out_div = 0.25;
  row.gap = 0.25;
  row.petz_err_psi = 0.0;
  row.petz_err_phi = kInf;
  row.sufficient = true;
  row.violation = false;
  result.rows = {row};
  CHECK(campaign_csv(result) ==
        "trial,seed,d_in,d_out,family,alpha,d_in_div,d_out_div,gap,"
        "petz_err_psi,petz_err_phi,sufficient,violation\n"
        "0,42,2,3,unitary,0.75,0.5,0.25,0.25,0,inf,1,0\n");
}

TEST_CASE("campaigns are reproducible byte for byte") {
  CampaignConfig config;
  config.seed = 11;
  config.trials = 2;
  config.dims = {2};
  config.alpha_grid = {0.75, 2.0};
  config.family = ChannelFamily::unitary;
  CampaignResult r1 = run_campaign(config);
  CampaignResult r2 = run_campaign(config);
  CHECK(campaign_csv(r1) == campaign_csv(r2));
  CHECK(r1.rows.size() == 4);
  CHECK(r1.violations == 0);

  config.seed = 12;
  CampaignResult r3 = run_campaign(config);
  CHECK(campaign_csv(r3) != campaign_csv(r1));
}

TEST_CASE("campaign families produce lawful rows") {
  for (ChannelFamily family :
       {ChannelFamily::random_stinespring, ChannelFamily::depolarizing, ChannelFamily::dephasing,
        ChannelFamily::partial_trace, ChannelFamily::unitary, ChannelFamily::ancilla_attach}) {
    CampaignConfig config;
    config.seed = 5;
    config.trials = 2;
    config.dims = {2};
    config.alpha_grid = {0.75, 2.0};
    config.family = family;
    CampaignResult r = run_campaign(config);
    CHECK(r.rows.size() == 4);
    CHECK(r.violations == 0);
    for (const CampaignRow& row : r.rows) {
      CHECK(row.gap >= -1e-8);
      CHECK_FALSE(row.violation);
    }
    CHECK(family_from_name(family_name(family)) == family);
  }
  CHECK_THROWS_AS(family_from_name("carrier"), ParseError);
}
