#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfq/identities.hpp"
#include "pfq/matching.hpp"
#include "pfq/rng.hpp"

namespace pfq {

// The residual catalogue exposed by the command line.
enum class Identity {
  wenzel,
  expansion,
  plucker4,
  dodgson,
  godsil,
  thm31,
  cor32,
  cor33,
  thm42,
  thm43,
  cor44,
  lemma24,
  propp,
  kuo,
  kenyon,
  yyz,
  edge_condensation,
  same_sign,
};

const std::vector<Identity>& identity_catalogue();
std::string identity_name(Identity id);
std::optional<Identity> identity_from_name(const std::string& name);

// A fully materialized check instance. Only the fields the identity needs
// are populated; everything an evaluation requires is in here, so a
// serialized instance replays without regenerating.
struct Instance {
  Identity id{};
  std::uint64_t seed = 0;
  std::int64_t trial = 0;

  std::optional<SkewMatrix> skew;
  std::optional<Matrix> mat;
  std::optional<PlaneGraph> graph;
  std::optional<PairSet> pairs;
  std::optional<IndexSet> set1;  // first index set (or the kept even set)
  std::optional<IndexSet> set2;  // second index set (or the expansion block)
  std::vector<int> verts;        // face vertices, a-side then b-side for yyz
  std::vector<int> edge_ids;     // condensation edge set

  int p = 0;     // distinguished pair
  int s = 0;     // expansion anchor position
  int j = 0;     // distinguished edge / a-side index
  int kase = 0;  // sub-case selector
};

struct VerifyConfig {
  Identity id{};
  int n = 8;
  int k = 2;
  std::int64_t trials = 100;
  std::uint64_t seed = 1;
  int entry_bound = 9;
  int threads = 0;  // 0 = runtime default
};

// Throws std::invalid_argument when n/k cannot host the identity (parity,
// room for k pairs, ...).
void validate_config(const VerifyConfig& cfg);

// Deterministic function of (cfg, trial).
Instance make_instance(const VerifyConfig& cfg, std::int64_t trial);

// Residual vector of the instance; all-zero means the identity held.
// same_sign maps to {0} on success, {1} on a sign disagreement.
std::vector<Rational> eval_instance(const Instance& inst);

void write_instance(std::ostream& out, const Instance& inst,
                    const std::vector<Rational>& residuals);
Instance read_instance(std::istream& in);

// --- shared random builders (also used by the test suites) ---

SkewMatrix random_skew(Rng& rng, int n, int bound);
Matrix random_matrix(Rng& rng, int n, int bound);
// Connected plane graph with at most max_vertices vertices and random
// nonnegative rational weights; assembled from a generator family plus
// connectivity-preserving edge thinning.
PlaneGraph random_plane_graph(Rng& rng, int max_vertices);

}  // namespace pfq
