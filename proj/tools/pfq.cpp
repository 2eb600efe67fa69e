// Command line front end: exact Pfaffian/determinant evaluation, identity
// verification campaigns, matching counts, and a method benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfq/campaign.hpp"
#include "pfq/instances.hpp"
#include "pfq/matching.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int cmd_pf(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  pfq::SkewMatrix a = pfq::read_skew_matrix(in);
  pfq::Rational p = pfq::pf(a);
  pfq::Rational d = pfq::det(a.as_matrix());
  std::cout << "Pf = " << pfq::to_string(p) << ", det = " << pfq::to_string(d)
            << "\n";
  if (d == p * p) {
    std::cout << "cayley: ok\n";
    return kExitPass;
  }
  std::cout << "cayley: VIOLATION\n";
  return kExitViolation;
}

int cmd_verify_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  pfq::Instance inst = pfq::read_instance(in);
  std::vector<pfq::Rational> rs = pfq::eval_instance(inst);
  bool ok = true;
  std::cout << "identity " << pfq::identity_name(inst.id) << "\n";
  for (const auto& r : rs) {
    std::cout << "residual " << pfq::to_string(r) << "\n";
    if (r != 0) ok = false;
  }
  std::cout << "result " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitPass : kExitViolation;
}

int cmd_verify(const pfq::VerifyConfig& cfg, bool serial) {
  pfq::CampaignResult res =
      serial ? pfq::run_campaign_serial(cfg) : pfq::run_campaign(cfg);
  std::cout << res.report;
  if (!res.passed()) {
    std::cout << res.counterexample;
    return kExitViolation;
  }
  return kExitPass;
}

struct CountSource {
  std::string file;
  std::vector<int> grid;
  int aztec = 0;

  pfq::PlaneGraph load() const {
    int sources = (!file.empty()) + (!grid.empty()) + (aztec > 0);
    if (sources != 1) {
      throw std::invalid_argument(
          "exactly one of FILE, --grid, --aztec required");
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      return pfq::read_plane_graph(in);
    }
    if (!grid.empty()) return pfq::grid_graph(grid[0], grid[1]);
    return pfq::aztec_diamond(aztec);
  }
};

int cmd_count(const CountSource& src, const std::string& method,
              const std::string& format) {
  pfq::PlaneGraph g = src.load();
  const bool csv = format == "csv";
  if (csv) std::cout << "method,count\n";
  auto emit = [&](const std::string& name, const pfq::Rational& v) {
    if (csv) {
      std::cout << name << ',' << pfq::to_string(v) << "\n";
    } else {
      std::cout << name << ' ' << pfq::to_string(v) << "\n";
    }
  };

  if (method == "oracle") {
    emit("oracle", pfq::matching_sum(g));
    return kExitPass;
  }
  if (method == "pfaffian") {
    emit("pfaffian", pfq::count_via_pfaffian(g));
    return kExitPass;
  }
  if (method == "condense") {
    auto r = pfq::condense_count(g);
    emit("condense", r.value);
    if (!csv && r.fallbacks > 0) {
      std::cout << "fallbacks " << r.fallbacks << "\n";
    }
    return kExitPass;
  }
  if (method == "all") {
    std::vector<std::pair<std::string, pfq::Rational>> results;
    if (g.vertex_count() <= pfq::kOracleVertexCap) {
      results.emplace_back("oracle", pfq::matching_sum(g));
    }
    results.emplace_back("pfaffian", pfq::count_via_pfaffian(g));
    auto r = pfq::condense_count(g);
    results.emplace_back("condense", r.value);
    for (const auto& [name, v] : results) emit(name, v);
    if (!csv && r.fallbacks > 0) {
      std::cout << "fallbacks " << r.fallbacks << "\n";
    }
    for (size_t i = 1; i < results.size(); ++i) {
      if (results[i].second != results[0].second) {
        std::cout << "MISMATCH between " << results[0].first << " and "
                  << results[i].first << "\n";
        return kExitViolation;
      }
    }
    if (!csv) std::cout << "agree yes\n";
    return kExitPass;
  }
  throw std::invalid_argument("unknown method: " + method);
}

int cmd_bench(const std::string& family, int max_size) {
  std::cout << "family,size,method,time_ns,count\n";
  for (int size = 1; size <= max_size; ++size) {
    pfq::PlaneGraph g = family == "grid" ? pfq::grid_graph(size, size)
                                         : pfq::aztec_diamond(size);
    auto timed = [&](const std::string& name, auto&& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      pfq::Rational v = fn();
      const auto t1 = std::chrono::steady_clock::now();
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      std::cout << family << ',' << size << ',' << name << ',' << ns << ','
                << pfq::to_string(v) << "\n";
    };
    if (g.vertex_count() <= pfq::kOracleVertexCap) {
      timed("oracle", [&] { return pfq::matching_sum(g); });
    }
    timed("pfaffian", [&] { return pfq::count_via_pfaffian(g); });
    timed("condense", [&] { return pfq::condense_count(g).value; });
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Pfaffians, determinant/Pfaffian identity checks, and "
               "perfect matching counts on plane graphs"};
  app.require_subcommand(1);

  // pf
  auto* pf_cmd = app.add_subcommand("pf", "Pfaffian and determinant of a skew matrix file");
  std::string pf_file;
  pf_cmd->add_option("file", pf_file, "matrix file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an identity verification campaign");
  std::string identity;
  pfq::VerifyConfig cfg;
  bool serial = false;
  std::string replay_file;
  verify_cmd->add_option("identity", identity, "identity name");
  verify_cmd->add_option("--n", cfg.n, "matrix/graph size");
  verify_cmd->add_option("--k", cfg.k, "mask size");
  verify_cmd->add_option("--trials", cfg.trials, "number of seeded instances");
  verify_cmd->add_option("--seed", cfg.seed, "root seed");
  verify_cmd->add_option("--entry-bound", cfg.entry_bound, "max |entry|");
  verify_cmd->add_option("--threads", cfg.threads, "worker threads (0 = default)");
  verify_cmd->add_flag("--serial", serial, "single-threaded reference path");
  verify_cmd->add_option("--replay", replay_file, "re-run a serialized instance");

  // count
  auto* count_cmd = app.add_subcommand("count", "count weighted perfect matchings");
  CountSource src;
  std::string method = "all";
  std::string format = "text";
  count_cmd->add_option("file", src.file, "plane graph file");
  count_cmd->add_option("--grid", src.grid, "rows cols")->expected(2);
  count_cmd->add_option("--aztec", src.aztec, "aztec diamond order");
  count_cmd->add_option("--method", method, "oracle|pfaffian|condense|all");
  count_cmd->add_option("--format", format, "text|csv");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "method timing CSV per family size");
  std::string family = "grid";
  int max_size = 0;
  bench_cmd->add_option("--family", family, "grid|aztec")
      ->check(CLI::IsMember({"grid", "aztec"}));
  bench_cmd->add_option("--max-size", max_size, "largest size (0 = header only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pf_cmd->parsed()) return cmd_pf(pf_file);
    if (verify_cmd->parsed()) {
      if (!replay_file.empty()) return cmd_verify_replay(replay_file);
      auto id = pfq::identity_from_name(identity);
      if (!id) {
        std::cerr << "unknown identity: '" << identity << "'\navailable:";
        for (auto x : pfq::identity_catalogue()) {
          std::cerr << ' ' << pfq::identity_name(x);
        }
        std::cerr << "\n";
        return kExitUsage;
      }
      cfg.id = *id;
      return cmd_verify(cfg, serial);
    }
    if (count_cmd->parsed()) return cmd_count(src, method, format);
    if (bench_cmd->parsed()) return cmd_bench(family, max_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
