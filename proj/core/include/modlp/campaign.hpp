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

#ifndef MODLP_CAMPAIGN_HPP
#define MODLP_CAMPAIGN_HPP

#include <string>

#include "modlp/channels.hpp"

namespace modlp {

enum class ChannelFamily {
  random_stinespring,
  depolarizing,
  dephasing,
  partial_trace,
  unitary,
  ancilla_attach,
};

std::string family_name(ChannelFamily f);
ChannelFamily family_from_name(const std::string& name);

/// Randomized DPI / sufficiency campaign. Each trial draws a channel from
/// `family` and a faithful state pair from its own seed substream, sweeps the
/// alpha grid, and runs the Petz sufficiency test once. Deterministic: the
/// rows are a pure function of the config, byte for byte in CSV form.
struct CampaignConfig {
  std::uint64_t seed = 1;
  int trials = 10;
  std::vector<int> dims = {2, 3};  // d_in per trial, round-robin
  std::vector<double> alpha_grid = {0.6, 0.75, 0.9, 1.5, 2.0, 3.0};
  ChannelFamily family = ChannelFamily::random_stinespring;
  double gap_tol = 1e-8;
  double recovery_tol = 1e-7;
};

struct CampaignRow {
  int trial;
  std::uint64_t seed;  // the trial's derived substream seed
  int d_in;
  int d_out;
  ChannelFamily family;
  double alpha;
  double d_in_div;
  double d_out_div;
  double gap;
  double petz_err_psi;
  double petz_err_phi;
  bool sufficient;
  bool violation;
};

struct CampaignResult {
  std::vector<CampaignRow> rows;
  double min_gap;
  int violations;
  int trials;
};

CampaignResult run_campaign(const CampaignConfig& config);

/// Header "trial,seed,d_in,d_out,family,alpha,..." plus one row per
/// (trial, alpha); floats at 17 significant digits, infinities as "inf",
/// booleans as 0/1. Identical configs produce identical bytes.
std::string campaign_csv(const CampaignResult& result);

/// Parse a JSON config payload (all keys optional, defaults above):
/// {"seed":1,"trials":10,"dims":[2,3],"alpha_grid":[0.6,"inf"],
///  "channel_family":"unitary","tolerances":{"gap":1e-8,"recovery":1e-7}}
/// Alpha entries are numbers or the string "inf"; unknown keys are rejected.
CampaignConfig parse_campaign_config(const std::string& json_text);

}  // namespace modlp

#endif  // MODLP_CAMPAIGN_HPP
