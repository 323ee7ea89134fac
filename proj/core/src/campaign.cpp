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

#include "modlp/campaign.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"
#include "modlp/io.hpp"

namespace modlp {

std::string family_name(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::random_stinespring: return "random_stinespring";
    case ChannelFamily::depolarizing: return "depolarizing";
    case ChannelFamily::dephasing: return "dephasing";
    case ChannelFamily::partial_trace: return "partial_trace";
    case ChannelFamily::unitary: return "unitary";
    case ChannelFamily::ancilla_attach: return "ancilla_attach";
  }
  throw DomainViolationError("family_name: unknown family tag");
}

ChannelFamily family_from_name(const std::string& name) {
  if (name == "random_stinespring") return ChannelFamily::random_stinespring;
  if (name == "depolarizing") return ChannelFamily::depolarizing;
  if (name == "dephasing") return ChannelFamily::dephasing;
  if (name == "partial_trace") return ChannelFamily::partial_trace;
  if (name == "unitary") return ChannelFamily::unitary;
  if (name == "ancilla_attach") return ChannelFamily::ancilla_attach;
  throw ParseError("unknown channel family \"" + name + "\"");
}

namespace {

// Dimension conventions per family: partial_trace keeps d of a d x 2 input,
// ancilla_attach appends a random 2-dimensional state, everything else maps
// d to d. Families without randomness leave the generator untouched.
KrausChannel make_channel(ChannelFamily family, int d, Rng& rng) {
  switch (family) {
    case ChannelFamily::random_stinespring:
      return KrausChannel::random_stinespring(d, d, 2, rng);
    case ChannelFamily::depolarizing:
      return KrausChannel::depolarizing(d);
    case ChannelFamily::dephasing:
      return KrausChannel::dephasing(d);
    case ChannelFamily::partial_trace:
      return KrausChannel::partial_trace(d, 2);
    case ChannelFamily::unitary:
      return KrausChannel::unitary(random_unitary(d, rng));
    case ChannelFamily::ancilla_attach:
      return KrausChannel::ancilla_attach(d, random_state(2, rng));
  }
  throw DomainViolationError("make_channel: unknown family tag");
}

void validate_config(const CampaignConfig& config) {
  if (config.trials < 1) throw DomainViolationError("run_campaign: trials must be >= 1");
  if (config.dims.empty()) throw DomainViolationError("run_campaign: dims must be nonempty");
  for (int d : config.dims) {
    if (d < 1) throw DomainViolationError("run_campaign: dims entries must be >= 1");
  }
  for (double a : config.alpha_grid) {
    if (std::isnan(a) || !((a >= 0.5 && a < 1.0) || a > 1.0)) {
      throw InvalidAlphaError("run_campaign: alpha grid must lie in [1/2, 1) or (1, inf]");
    }
  }
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  validate_config(config);
  Rng root(config.seed);
  CampaignResult result{{}, kInf, 0, config.trials};
  for (int t = 0; t < config.trials; ++t) {
    // Substream layout is part of the determinism contract: trial t hashes to
    // substream(t); within a trial, index 1 feeds the channel draw and index 2
    // feeds the state pair, psi before phi.
    Rng trial = root.substream(static_cast<std::uint64_t>(t));
    Rng channel_rng = trial.substream(1);
    Rng state_rng = trial.substream(2);
    int d = config.dims[static_cast<std::size_t>(t) % config.dims.size()];
    KrausChannel ch = make_channel(config.family, d, channel_rng);
    PositiveFunctional psi = random_state(ch.d_in(), state_rng);
    PositiveFunctional phi = random_state(ch.d_in(), state_rng);
    SufficiencyReport suff = is_sufficient(ch, psi, phi, config.recovery_tol);
    PositiveFunctional out_psi = ch.apply(psi);
    PositiveFunctional out_phi = ch.apply(phi);
    for (double alpha : config.alpha_grid) {
      double div_in = d_renyi(psi, phi, alpha).value;
      double div_out = d_renyi(out_psi, out_phi, alpha).value;
      double gap;
      if (div_in == kInf && div_out == kInf) {
        throw IndeterminateGapError("run_campaign: both divergences are infinite");
      } else if (div_in == kInf) {
        gap = kInf;
      } else if (div_out == kInf) {
        gap = -kInf;
      } else {
        gap = div_in - div_out;
      }
      // The equality theorem speaks only for alpha strictly inside (1/2, 1);
      // rows outside that window never count as violations.
      bool in_window = alpha > 0.5 && alpha < 1.0;
      bool closes = gap <= config.gap_tol;
      bool violation =
          in_window && ((closes && !suff.sufficient) || (suff.sufficient && !closes));
      if (violation) ++result.violations;
      if (std::isfinite(gap) && gap < result.min_gap) result.min_gap = gap;
      result.rows.push_back({t, trial.seed(), ch.d_in(), ch.d_out(), config.family, alpha, div_in,
                             div_out, gap, suff.recovered_psi_error, suff.recovered_phi_error,
                             suff.sufficient, violation});
    }
  }
  return result;
}

std::string campaign_csv(const CampaignResult& result) {
  std::string out =
      "trial,seed,d_in,d_out,family,alpha,d_in_div,d_out_div,gap,"
      "petz_err_psi,petz_err_phi,sufficient,violation\n";
  for (const CampaignRow& r : result.rows) {
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.d_in);
    out += ',';
    out += std::to_string(r.d_out);
    out += ',';
    out += family_name(r.family);
    out += ',';
    out += format_double(r.alpha);
    out += ',';
    out += format_double(r.d_in_div);
    out += ',';
    out += format_double(r.d_out_div);
    out += ',';
    out += format_double(r.gap);
    out += ',';
    out += format_double(r.petz_err_psi);
    out += ',';
    out += format_double(r.petz_err_phi);
    out += ',';
    out += r.sufficient ? '1' : '0';
    out += ',';
    out += r.violation ? '1' : '0';
    out += '\n';
  }
  return out;
}

CampaignConfig parse_campaign_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("campaign config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("campaign config: top level must be an object");
  CampaignConfig cfg;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const nlohmann::json& v = item.value();
    try {
      if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "trials") {
        cfg.trials = v.get<int>();
      } else if (key == "dims") {
        cfg.dims = v.get<std::vector<int>>();
      } else if (key == "alpha_grid") {
        if (!v.is_array()) throw ParseError("campaign config: alpha_grid must be an array");
        cfg.alpha_grid.clear();
        for (const auto& a : v) {
          if (a.is_string() && a.get<std::string>() == "inf") {
            cfg.alpha_grid.push_back(kInf);
          } else if (a.is_number()) {
            cfg.alpha_grid.push_back(a.get<double>());
          } else {
            throw ParseError("campaign config: alpha entries must be numbers or \"inf\"");
          }
        }
      } else if (key == "channel_family") {
        cfg.family = family_from_name(v.get<std::string>());
      } else if (key == "tolerances") {
        if (!v.is_object()) throw ParseError("campaign config: tolerances must be an object");
        for (const auto& tol : v.items()) {
          if (tol.key() == "gap") {
            cfg.gap_tol = tol.value().get<double>();
          } else if (tol.key() == "recovery") {
            cfg.recovery_tol = tol.value().get<double>();
          } else {
            throw ParseError("campaign config: unknown tolerance \"" + tol.key() + "\"");
          }
        }
      } else {
        throw ParseError("campaign config: unknown key \"" + key + "\"");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("campaign config: key \"" + key + "\": " + e.what());
    }
  }
  if (cfg.trials < 1) throw ParseError("campaign config: trials must be >= 1");
  if (cfg.dims.empty()) throw ParseError("campaign config: dims must be nonempty");
  for (int d : cfg.dims) {
    if (d < 1) throw ParseError("campaign config: dims entries must be >= 1");
  }
  if (cfg.alpha_grid.empty()) throw ParseError("campaign config: alpha_grid must be nonempty");
  for (double a : cfg.alpha_grid) {
    if (std::isnan(a) || !((a >= 0.5 && a < 1.0) || a > 1.0)) {
      // InvalidAlpha rather than Parse so the front-end exit code (3)
      // distinguishes an illegal order from a malformed file.
      throw InvalidAlphaError("campaign config: alpha entries must lie in [1/2, 1) or (1, inf]");
    }
  }
  if (!(cfg.gap_tol > 0.0) || !(cfg.recovery_tol > 0.0)) {
    throw ParseError("campaign config: tolerances must be positive");
  }
  return cfg;
}

}  // namespace modlp
