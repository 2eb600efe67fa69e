#include "pfq/campaign.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfq {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct TrialOutcome {
  bool ok = true;
  std::string line;  // "trial <t> residuals <r1>[ <r2>]"
};

TrialOutcome run_trial(const VerifyConfig& cfg, std::int64_t t) {
  TrialOutcome out;
  std::ostringstream os;
  os << "trial " << t;
  // Exceptions may not escape the parallel region; a trial that cannot even
  // be built or evaluated counts as a failure with the reason in its line.
  try {
    Instance inst = make_instance(cfg, t);
    std::vector<Rational> rs = eval_instance(inst);
    os << " residuals";
    for (const Rational& r : rs) {
      if (r != 0) out.ok = false;
      os << ' ' << to_string(r);
    }
  } catch (const std::exception& e) {
    out.ok = false;
    os << " error " << e.what();
  }
  out.line = os.str();
  return out;
}

CampaignResult run_impl(const VerifyConfig& cfg, bool parallel) {
  validate_config(cfg);
  const std::int64_t trials = cfg.trials;
  std::vector<TrialOutcome> outcomes(static_cast<size_t>(trials));

#ifdef _OPENMP
  if (parallel) {
    const int threads =
        cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t t = 0; t < trials; ++t) {
      outcomes[static_cast<size_t>(t)] = run_trial(cfg, t);
    }
  } else
#else
  (void)parallel;
#endif
  {
    for (std::int64_t t = 0; t < trials; ++t) {
      outcomes[static_cast<size_t>(t)] = run_trial(cfg, t);
    }
  }

  CampaignResult result;
  result.trials = trials;
  std::string digest_input;
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto& o = outcomes[static_cast<size_t>(t)];
    digest_input += o.line;
    digest_input += '\n';
    if (!o.ok) {
      ++result.failures;
      if (result.first_failure < 0) result.first_failure = t;
    }
  }

  std::ostringstream report;
  report << "identity " << identity_name(cfg.id) << '\n'
         << "seed " << cfg.seed << '\n'
         << "trials " << trials << '\n'
         << "n " << cfg.n << '\n'
         << "k " << cfg.k << '\n'
         << "entry_bound " << cfg.entry_bound << '\n'
         << "failures " << result.failures << '\n'
         << "digest " << std::hex << fnv1a(digest_input) << std::dec << '\n'
         << "result " << (result.failures == 0 ? "PASS" : "FAIL") << '\n';
  result.report = report.str();

  if (result.first_failure >= 0) {
    std::ostringstream ce;
    try {
      Instance inst = make_instance(cfg, result.first_failure);
      write_instance(ce, inst, eval_instance(inst));
    } catch (const std::exception& e) {
      ce << "trial " << result.first_failure << " error " << e.what() << '\n';
    }
    result.counterexample = ce.str();
  }
  return result;
}

}  // namespace

CampaignResult run_campaign(const VerifyConfig& cfg) {
  return run_impl(cfg, true);
}

CampaignResult run_campaign_serial(const VerifyConfig& cfg) {
  return run_impl(cfg, false);
}

}  // namespace pfq
