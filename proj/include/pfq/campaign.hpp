#pragma once

#include <string>

#include "pfq/instances.hpp"

namespace pfq {

struct CampaignResult {
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::int64_t first_failure = -1;  // lowest failing trial index, -1 if none
  std::string report;               // deterministic summary text
  std::string counterexample;       // serialized first failing instance
  bool passed() const { return failures == 0; }
};

// Runs cfg.trials seeded instances and reports. The parallel path fans the
// trials out over OpenMP threads; per-trial seeds and index-ordered
// aggregation keep the report byte-identical to the serial reference.
CampaignResult run_campaign(const VerifyConfig& cfg);
CampaignResult run_campaign_serial(const VerifyConfig& cfg);

// Shared digest helper (FNV-1a over the per-trial residual lines).
std::uint64_t fnv1a(const std::string& data);

}  // namespace pfq
