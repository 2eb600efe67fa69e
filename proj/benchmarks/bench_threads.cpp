// Serial vs OpenMP comparison for the two parallel kernels: verification
// campaigns (trial-parallel) and the fraction-free determinant (row-parallel).
// Prints a small CSV; not part of the test suite.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfq/campaign.hpp"
#include "pfq/instances.hpp"

using namespace pfq;

namespace {

template <typename F>
long long ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "# OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "# built without OpenMP; both columns run serially\n";
#endif
  std::cout << "kernel,workload,serial_ms,parallel_ms,match\n";

  {
    VerifyConfig cfg;
    cfg.id = Identity::thm31;
    cfg.n = 10;
    cfg.k = 3;
    cfg.trials = 400;
    cfg.seed = 20240817;
    CampaignResult serial, parallel;
    const long long ts = ms([&] { serial = run_campaign_serial(cfg); });
    const long long tp = ms([&] { parallel = run_campaign(cfg); });
    std::cout << "campaign,thm31 n=10 k=3 x400," << ts << ',' << tp << ','
              << (serial.report == parallel.report ? "yes" : "NO") << "\n";
  }
  {
    VerifyConfig cfg;
    cfg.id = Identity::edge_condensation;
    cfg.n = 16;
    cfg.k = 2;
    cfg.trials = 60;
    cfg.seed = 20240817;
    CampaignResult serial, parallel;
    const long long ts = ms([&] { serial = run_campaign_serial(cfg); });
    const long long tp = ms([&] { parallel = run_campaign(cfg); });
    std::cout << "campaign,edge_condensation x60," << ts << ',' << tp << ','
              << (serial.report == parallel.report ? "yes" : "NO") << "\n";
  }
  {
    Rng rng(99);
    Matrix m = random_matrix(rng, 140, 9);
    Rational a, b;
    const long long ts = ms([&] { a = det_serial(m); });
    const long long tp = ms([&] { b = det(m); });
    std::cout << "bareiss,det 140x140," << ts << ',' << tp << ','
              << (a == b ? "yes" : "NO") << "\n";
  }
  return 0;
}
