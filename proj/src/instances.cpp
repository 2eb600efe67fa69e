#include "pfq/instances.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pfq {

// ---------- catalogue ----------

namespace {

const std::map<Identity, std::string> kNames = {
    {Identity::wenzel, "wenzel"},
    {Identity::expansion, "expansion"},
    {Identity::plucker4, "plucker4"},
    {Identity::dodgson, "dodgson"},
    {Identity::godsil, "godsil"},
    {Identity::thm31, "thm31"},
    {Identity::cor32, "cor32"},
    {Identity::cor33, "cor33"},
    {Identity::thm42, "thm42"},
    {Identity::thm43, "thm43"},
    {Identity::cor44, "cor44"},
    {Identity::lemma24, "lemma24"},
    {Identity::propp, "propp"},
    {Identity::kuo, "kuo"},
    {Identity::kenyon, "kenyon"},
    {Identity::yyz, "yyz"},
    {Identity::edge_condensation, "edge_condensation"},
    {Identity::same_sign, "same_sign"},
};

}  // namespace

const std::vector<Identity>& identity_catalogue() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> v;
    for (const auto& [id, name] : kNames) v.push_back(id);
    return v;
  }();
  return all;
}

std::string identity_name(Identity id) { return kNames.at(id); }

std::optional<Identity> identity_from_name(const std::string& name) {
  for (const auto& [id, n] : kNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

// ---------- random builders ----------

SkewMatrix random_skew(Rng& rng, int n, int bound) {
  std::vector<std::tuple<int, int, Rational>> upper;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) upper.emplace_back(i, j, rng.entry(bound));
  }
  return SkewMatrix::from_upper(n, upper);
}

Matrix random_matrix(Rng& rng, int n, int bound) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m.set(i, j, rng.entry(bound));
  }
  return m;
}

namespace {

// Skew matrix with prescribed nonzero positions.
SkewMatrix random_skew_nonzero_at(Rng& rng, int n, int bound,
                                  const PairSet& pairs, bool force_nonzero) {
  std::set<std::pair<int, int>> marked(pairs.pairs().begin(),
                                       pairs.pairs().end());
  std::vector<std::tuple<int, int, Rational>> upper;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool hot = marked.count({i, j}) > 0;
      upper.emplace_back(i, j, (hot && force_nonzero) ? rng.nonzero_entry(bound)
                                                      : rng.entry(bound));
    }
  }
  return SkewMatrix::from_upper(n, upper);
}

Matrix random_matrix_nonzero_at(Rng& rng, int n, int bound,
                                const PairSet& pairs, bool force_nonzero) {
  std::set<std::pair<int, int>> marked(pairs.pairs().begin(),
                                       pairs.pairs().end());
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool hot = marked.count({i, j}) > 0;
      m.set(i, j, (hot && force_nonzero) ? rng.nonzero_entry(bound)
                                         : rng.entry(bound));
    }
  }
  return m;
}

PairSet random_skew_pairs(Rng& rng, int n, int k) {
  if (k > n * (n - 1) / 2) throw std::invalid_argument("k too large for n");
  std::set<std::pair<int, int>> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    const int i = rng.uniform_int(1, n - 1);
    const int j = rng.uniform_int(i + 1, n);
    chosen.insert({i, j});
  }
  return PairSet::skew_mask({chosen.begin(), chosen.end()});
}

PairSet random_general_pairs(Rng& rng, int n, int k) {
  if (k > n * n) throw std::invalid_argument("k too large for n");
  std::set<std::pair<int, int>> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    chosen.insert({rng.uniform_int(1, n), rng.uniform_int(1, n)});
  }
  return PairSet::general_mask({chosen.begin(), chosen.end()});
}

// Interleaved pairs i1<j1<i2<j2<... with all index sums of one parity, so
// the sign-free specialization applies.
PairSet random_interleaved_pairs(Rng& rng, int n, int k) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<int> vals;
    while (static_cast<int>(vals.size()) < 2 * k) {
      vals.insert(rng.uniform_int(1, n));
    }
    std::vector<int> v(vals.begin(), vals.end());
    bool ok = true;
    const int parity = (v[0] + v[1]) % 2;
    std::vector<PairSet::Pair> pairs;
    for (int l = 0; l < k; ++l) {
      const int i = v[static_cast<size_t>(2 * l)];
      const int j = v[static_cast<size_t>(2 * l + 1)];
      if ((i + j) % 2 != parity) {
        ok = false;
        break;
      }
      pairs.emplace_back(i, j);
    }
    if (ok) return PairSet::skew_mask(std::move(pairs));
  }
  // Adjacent-index pairs always qualify.
  std::vector<PairSet::Pair> pairs;
  const int stride = std::max(2, n / k);
  for (int l = 0; l < k; ++l) pairs.emplace_back(l * stride + 1, l * stride + 2);
  return PairSet::skew_mask(std::move(pairs));
}

IndexSet random_subset_of_size(Rng& rng, int n, int size) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < size) {
    chosen.insert(rng.uniform_int(1, n));
  }
  return IndexSet(std::vector<int>(chosen.begin(), chosen.end()));
}

IndexSet random_subset_from(Rng& rng, const std::vector<int>& pool, int size) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < size) {
    chosen.insert(pool[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int>(pool.size()) - 1))]);
  }
  return IndexSet(std::vector<int>(chosen.begin(), chosen.end()));
}

// ---------- random plane graphs ----------

PlaneGraph with_random_weights(const PlaneGraph& g, Rng& rng, int bound,
                               bool allow_zero) {
  std::vector<GraphEdge> edges = g.edges();
  for (auto& e : edges) {
    const int num = (allow_zero && rng.chance(1, 10))
                        ? 0
                        : rng.uniform_int(1, std::max(1, bound));
    e.w = rat(num, rng.uniform_int(1, 4));
  }
  std::vector<std::vector<int>> rot;
  for (int v = 1; v <= g.vertex_count(); ++v) rot.push_back(g.rotation(v));
  return PlaneGraph(g.vertex_count(), std::move(edges), std::move(rot),
                    g.declared_outer_face());
}

// Connectivity-preserving random edge removal.
PlaneGraph thin_edges(const PlaneGraph& g, Rng& rng, int percent,
                      const std::set<int>& keep) {
  std::vector<int> order(static_cast<size_t>(g.edge_count()));
  for (int e = 1; e <= g.edge_count(); ++e) order[static_cast<size_t>(e) - 1] = e;
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1],
              order[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
  }
  PlaneGraph cur = g;
  std::vector<int> alive(static_cast<size_t>(g.edge_count()) + 1);
  for (int e = 1; e <= g.edge_count(); ++e) alive[static_cast<size_t>(e)] = e;
  for (int e : order) {
    if (keep.count(e) || !rng.chance(percent, 100)) continue;
    const int live = alive[static_cast<size_t>(e)];
    if (live == 0) continue;
    PlaneGraph trial = remove_edges(cur, {live});
    if (!is_connected(trial)) continue;
    cur = std::move(trial);
    // Edge ids above the removed one shift down by one.
    for (int x = 1; x <= g.edge_count(); ++x) {
      if (alive[static_cast<size_t>(x)] > live) --alive[static_cast<size_t>(x)];
    }
    alive[static_cast<size_t>(e)] = 0;
  }
  return cur;
}

PlaneGraph bipartite_base(Rng& rng, int max_vertices) {
  static const std::vector<std::pair<int, int>> shapes = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 4}, {2, 7}, {4, 5}, {3, 6}};
  std::vector<std::pair<int, int>> fits;
  for (auto s : shapes) {
    if (s.first * s.second <= max_vertices && s.first * s.second % 2 == 0) {
      fits.push_back(s);
    }
  }
  auto [m, n] = fits[static_cast<size_t>(
      rng.uniform_int(0, static_cast<int>(fits.size()) - 1))];
  return grid_graph(m, n);
}

PlaneGraph any_base(Rng& rng, int max_vertices) {
  const int roll = rng.uniform_int(0, 5);
  if (roll <= 1) return bipartite_base(rng, max_vertices);
  if (roll == 2) {
    const int n = 2 * rng.uniform_int(3, std::max(3, max_vertices / 2));
    return cycle_graph(std::min(n, max_vertices - max_vertices % 2));
  }
  if (roll == 3 && max_vertices >= 12) return aztec_diamond(rng.chance(1, 2) ? 1 : 2);
  // triangular patches: the non-bipartite family
  static const std::vector<std::pair<int, int>> shapes = {
      {2, 3}, {2, 4}, {3, 3}, {3, 4}, {2, 5}, {2, 7}, {3, 5}};
  std::vector<std::pair<int, int>> fits;
  for (auto s : shapes) {
    if (s.first * s.second <= max_vertices) fits.push_back(s);
  }
  if (fits.empty()) return bipartite_base(rng, max_vertices);
  auto [m, n] = fits[static_cast<size_t>(
      rng.uniform_int(0, static_cast<int>(fits.size()) - 1))];
  return triangular_patch(m, n);
}

// Distinct vertices along the designated outer walk, in walk order.
std::vector<int> outer_cycle_vertices(const PlaneGraph& g) {
  FaceSet faces = trace_faces(g);
  const auto& walk = faces.walks[static_cast<size_t>(faces.outer) - 1];
  std::vector<int> uniq;
  std::set<int> seen;
  for (const Dart& d : walk) {
    if (seen.insert(d.tail).second) uniq.push_back(d.tail);
  }
  return uniq;
}

std::vector<int> pick_sorted_positions(Rng& rng, int n, int count) {
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < count) {
    chosen.insert(rng.uniform_int(0, n - 1));
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

PlaneGraph random_plane_graph(Rng& rng, int max_vertices) {
  PlaneGraph base = any_base(rng, max_vertices);
  PlaneGraph thinned = thin_edges(base, rng, 20, {});
  return with_random_weights(thinned, rng, 5, /*allow_zero=*/true);
}

// ---------- config validation ----------

void validate_config(const VerifyConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.entry_bound < 1) throw std::invalid_argument("entry bound must be >= 1");
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = cfg.n;
  switch (cfg.id) {
    case Identity::wenzel:
    case Identity::expansion:
    case Identity::thm31:
    case Identity::cor32:
    case Identity::lemma24:
      if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("identity needs even n >= 2");
      }
      break;
    case Identity::cor33:
      if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("identity needs even n >= 2");
      }
      if (2 * cfg.k > n) throw std::invalid_argument("needs 2k <= n");
      break;
    case Identity::plucker4:
      if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("identity needs even n >= 4");
      }
      break;
    case Identity::dodgson:
    case Identity::thm42:
    case Identity::thm43:
    case Identity::cor44:
      if (n < 2) throw std::invalid_argument("identity needs n >= 2");
      break;
    case Identity::godsil:
      if (n < 1) throw std::invalid_argument("identity needs n >= 1");
      break;
    case Identity::yyz:
    case Identity::edge_condensation:
      if (cfg.k < 2) throw std::invalid_argument("identity needs k >= 2");
      break;
    default:
      break;
  }
}

// ---------- per-identity generators ----------

namespace {

Instance base_instance(const VerifyConfig& cfg, std::int64_t trial) {
  Instance inst;
  inst.id = cfg.id;
  inst.seed = cfg.seed;
  inst.trial = trial;
  return inst;
}

int cycled(std::int64_t trial, int k) { return static_cast<int>(trial % k) + 1; }

Instance gen_wenzel(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.skew = random_skew(rng, cfg.n, cfg.entry_bound);
  auto odd_size = [&](Rng& r) {
    const int cap = cfg.n % 2 == 0 ? cfg.n - 1 : cfg.n;
    std::vector<int> sizes;
    for (int s = 1; s <= std::min(5, cap); s += 2) sizes.push_back(s);
    return sizes[static_cast<size_t>(
        r.uniform_int(0, static_cast<int>(sizes.size()) - 1))];
  };
  inst.set1 = random_subset_of_size(rng, cfg.n, odd_size(rng));
  inst.set2 = random_subset_of_size(rng, cfg.n, odd_size(rng));
  return inst;
}

Instance gen_expansion(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.skew = random_skew(rng, cfg.n, cfg.entry_bound);
  const int max_alpha = std::min(4, cfg.n - 2);
  const int alpha_size = 2 * rng.uniform_int(0, max_alpha / 2);
  inst.set1 = random_subset_of_size(rng, cfg.n, alpha_size);
  const int room = (cfg.n - alpha_size) / 2;
  const int p = rng.uniform_int(1, std::min(std::max(cfg.k, 1), room));
  std::vector<int> pool;
  for (int v = 1; v <= cfg.n; ++v) {
    if (!inst.set1->contains(v)) pool.push_back(v);
  }
  inst.set2 = random_subset_from(rng, pool, 2 * p);
  inst.s = rng.uniform_int(1, 2 * p);
  return inst;
}

Instance gen_plucker4(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.skew = random_skew(rng, cfg.n, cfg.entry_bound);
  inst.verts = random_subset_of_size(rng, cfg.n, 4).indices();
  return inst;
}

Instance gen_dodgson(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.mat = random_matrix(rng, cfg.n, cfg.entry_bound);
  return inst;
}

Instance gen_godsil(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.mat = random_matrix(rng, cfg.n, cfg.entry_bound);
  return inst;
}

Instance gen_masked_pf(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int k = std::min(cfg.k, cfg.n * (cfg.n - 1) / 2);
  PairSet pairs = random_skew_pairs(rng, cfg.n, k);
  // Mostly honor the nonzero-masked-entry hypothesis, but keep exercising
  // zero entries too; the identity is polynomial either way.
  const bool force = trial % 8 != 7;
  inst.skew = random_skew_nonzero_at(rng, cfg.n, cfg.entry_bound, pairs, force);
  inst.pairs = pairs;
  inst.p = cycled(trial, k);
  return inst;
}

Instance gen_cor33(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int k = std::min(cfg.k, cfg.n / 2);
  PairSet pairs = random_interleaved_pairs(rng, cfg.n, k);
  inst.skew = random_skew_nonzero_at(rng, cfg.n, cfg.entry_bound, pairs,
                                     trial % 8 != 7);
  inst.pairs = pairs;
  return inst;
}

Instance gen_masked_det(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int k = std::min(cfg.k, cfg.n * cfg.n);
  PairSet pairs = random_general_pairs(rng, cfg.n, k);
  inst.mat = random_matrix_nonzero_at(rng, cfg.n, cfg.entry_bound, pairs,
                                      trial % 8 != 7);
  inst.pairs = pairs;
  inst.p = cycled(trial, k);
  return inst;
}

Instance gen_lemma24(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int k = std::min(cfg.k, cfg.n * (cfg.n - 1) / 2);
  PairSet pairs = random_skew_pairs(rng, cfg.n, k);
  inst.skew = random_skew_nonzero_at(rng, cfg.n, cfg.entry_bound, pairs,
                                     trial % 4 != 3);
  inst.pairs = pairs;
  return inst;
}

Instance gen_propp(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  PlaneGraph base = bipartite_base(rng, 20);
  PlaneGraph g = thin_edges(base, rng, 15, {});
  auto four_faces = [](const PlaneGraph& h) {
    FaceSet faces = trace_faces(h);
    std::vector<std::vector<int>> out;
    for (int f = 1; f <= faces.count(); ++f) {
      if (f == faces.outer) continue;
      const auto& walk = faces.walks[static_cast<size_t>(f) - 1];
      if (walk.size() != 4) continue;
      std::vector<int> vs;
      for (const Dart& d : walk) vs.push_back(d.tail);
      std::set<int> uniq(vs.begin(), vs.end());
      if (uniq.size() == 4) out.push_back(vs);
    }
    return out;
  };
  auto faces4 = four_faces(g);
  if (faces4.empty()) {
    g = base;
    faces4 = four_faces(g);
  }
  const auto& cycle = faces4[static_cast<size_t>(
      rng.uniform_int(0, static_cast<int>(faces4.size()) - 1))];
  const int r = rng.uniform_int(0, 3);
  for (int i = 0; i < 4; ++i) {
    inst.verts.push_back(cycle[static_cast<size_t>((r + i) % 4)]);
  }
  inst.graph = with_random_weights(g, rng, 5, true);
  return inst;
}

Instance gen_kuo(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  inst.kase = static_cast<int>(trial % 2) + 1;
  for (int attempt = 0; attempt < 40; ++attempt) {
    PlaneGraph base = bipartite_base(rng, 20);
    PlaneGraph g = attempt < 20 ? thin_edges(base, rng, 12, {}) : base;
    auto cyc = outer_cycle_vertices(g);
    if (cyc.size() < 6) continue;
    auto color = *bipartition(g);
    auto col = [&](int v) { return color[static_cast<size_t>(v) - 1]; };
    for (int tries = 0; tries < 60; ++tries) {
      auto pos = pick_sorted_positions(rng, static_cast<int>(cyc.size()), 4);
      const int a = cyc[static_cast<size_t>(pos[0])];
      const int b = cyc[static_cast<size_t>(pos[1])];
      const int c = cyc[static_cast<size_t>(pos[2])];
      const int d = cyc[static_cast<size_t>(pos[3])];
      const bool fits =
          inst.kase == 1
              ? (col(a) == col(c) && col(b) == col(d) && col(a) != col(b))
              : (col(a) == col(b) && col(c) == col(d) && col(a) != col(c));
      if (fits) {
        inst.verts = {a, b, c, d};
        inst.graph = with_random_weights(g, rng, 5, true);
        return inst;
      }
    }
  }
  // Guaranteed construction: any grid boundary alternates colors.
  PlaneGraph g = grid_graph(2, 4);
  auto cyc = outer_cycle_vertices(g);
  const std::vector<int> pos =
      inst.kase == 1 ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{0, 2, 3, 5};
  for (int i : pos) inst.verts.push_back(cyc[static_cast<size_t>(i)]);
  inst.graph = with_random_weights(g, rng, 5, true);
  return inst;
}

Instance gen_kenyon(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  for (int attempt = 0; attempt < 40; ++attempt) {
    // Alternate bipartite and triangulated bases; the identity holds for
    // arbitrary plane graphs.
    PlaneGraph base = (trial % 2 == 0) ? any_base(rng, 20)
                                       : triangular_patch(2 + static_cast<int>(trial / 2 % 2),
                                                          3 + static_cast<int>(trial % 3));
    PlaneGraph g = thin_edges(base, rng, 12, {});
    auto cyc = outer_cycle_vertices(g);
    if (cyc.size() < 4) continue;
    auto pos = pick_sorted_positions(rng, static_cast<int>(cyc.size()), 4);
    inst.verts = {cyc[static_cast<size_t>(pos[0])], cyc[static_cast<size_t>(pos[1])],
                  cyc[static_cast<size_t>(pos[2])], cyc[static_cast<size_t>(pos[3])]};
    inst.graph = with_random_weights(g, rng, 5, true);
    return inst;
  }
  PlaneGraph g = triangular_patch(2, 4);
  auto cyc = outer_cycle_vertices(g);
  inst.verts = {cyc[0], cyc[1], cyc[2], cyc[3]};
  inst.graph = with_random_weights(g, rng, 5, true);
  return inst;
}

Instance gen_yyz(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int k = std::clamp(cfg.k, 2, 6);
  for (int attempt = 0; attempt < 40; ++attempt) {
    PlaneGraph base = any_base(rng, 20);
    if (base.vertex_count() % 2 != 0) continue;
    PlaneGraph g = thin_edges(base, rng, 10, {});
    auto cyc = outer_cycle_vertices(g);
    if (static_cast<int>(cyc.size()) < 2 * k) continue;
    auto pos = pick_sorted_positions(rng, static_cast<int>(cyc.size()), 2 * k);
    std::vector<int> a_side, b_side;
    for (int i = 0; i < 2 * k; ++i) {
      const int v = cyc[static_cast<size_t>(pos[static_cast<size_t>(i)])];
      (i % 2 == 0 ? a_side : b_side).push_back(v);
    }
    inst.verts = a_side;
    inst.verts.insert(inst.verts.end(), b_side.begin(), b_side.end());
    inst.j = cycled(trial, k);
    inst.graph = with_random_weights(g, rng, 5, true);
    return inst;
  }
  PlaneGraph g = grid_graph(4, 4);
  auto cyc = outer_cycle_vertices(g);
  std::vector<int> a_side, b_side;
  for (int i = 0; i < 2 * k; ++i) {
    (i % 2 == 0 ? a_side : b_side).push_back(cyc[static_cast<size_t>(i)]);
  }
  inst.verts = a_side;
  inst.verts.insert(inst.verts.end(), b_side.begin(), b_side.end());
  inst.j = cycled(trial, k);
  inst.graph = with_random_weights(g, rng, 5, true);
  return inst;
}

Instance gen_edge_condensation(const VerifyConfig& cfg, std::int64_t trial,
                               Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  const int cols = 4 + static_cast<int>(trial % 3);
  PlaneGraph g = with_random_weights(grid_graph(4, cols), rng, 5, true);
  const int k = std::clamp(cfg.k, 2, 3);

  FaceSet faces = trace_faces(g);
  const auto& walk = faces.walks[static_cast<size_t>(faces.outer) - 1];
  const int start = rng.uniform_int(0, static_cast<int>(walk.size()) - 1);
  std::set<int> used_vertices;
  for (size_t off = 0; off < walk.size(); ++off) {
    const Dart& d = walk[(static_cast<size_t>(start) + off) % walk.size()];
    const int u = d.tail;
    const int v = g.head(d);
    if (used_vertices.count(u) || used_vertices.count(v)) continue;
    inst.edge_ids.push_back(d.edge);
    used_vertices.insert(u);
    used_vertices.insert(v);
    if (static_cast<int>(inst.edge_ids.size()) == k) break;
  }
  if (static_cast<int>(inst.edge_ids.size()) != k) {
    throw std::logic_error("edge_condensation instance generation failed");
  }
  inst.j = cycled(trial, k);
  inst.graph = std::move(g);
  return inst;
}

Instance gen_same_sign(const VerifyConfig& cfg, std::int64_t trial, Rng& rng) {
  Instance inst = base_instance(cfg, trial);
  for (int attempt = 0; attempt < 40; ++attempt) {
    PlaneGraph g = thin_edges(any_base(rng, 20), rng, 10, {});
    auto cyc = outer_cycle_vertices(g);
    if (cyc.size() < 4) continue;
    auto pos = pick_sorted_positions(rng, static_cast<int>(cyc.size()), 4);
    inst.verts = {cyc[static_cast<size_t>(pos[0])], cyc[static_cast<size_t>(pos[1])],
                  cyc[static_cast<size_t>(pos[2])], cyc[static_cast<size_t>(pos[3])]};
    inst.graph = with_random_weights(g, rng, 5, false);
    return inst;
  }
  PlaneGraph g = grid_graph(2, 4);
  auto cyc = outer_cycle_vertices(g);
  inst.verts = {cyc[0], cyc[1], cyc[2], cyc[3]};
  inst.graph = with_random_weights(g, rng, 5, false);
  return inst;
}

}  // namespace

Instance make_instance(const VerifyConfig& cfg, std::int64_t trial) {
  validate_config(cfg);
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
  switch (cfg.id) {
    case Identity::wenzel: return gen_wenzel(cfg, trial, rng);
    case Identity::expansion: return gen_expansion(cfg, trial, rng);
    case Identity::plucker4: return gen_plucker4(cfg, trial, rng);
    case Identity::dodgson: return gen_dodgson(cfg, trial, rng);
    case Identity::godsil: return gen_godsil(cfg, trial, rng);
    case Identity::thm31:
    case Identity::cor32: return gen_masked_pf(cfg, trial, rng);
    case Identity::cor33: return gen_cor33(cfg, trial, rng);
    case Identity::thm42:
    case Identity::thm43:
    case Identity::cor44: return gen_masked_det(cfg, trial, rng);
    case Identity::lemma24: return gen_lemma24(cfg, trial, rng);
    case Identity::propp: return gen_propp(cfg, trial, rng);
    case Identity::kuo: return gen_kuo(cfg, trial, rng);
    case Identity::kenyon: return gen_kenyon(cfg, trial, rng);
    case Identity::yyz: return gen_yyz(cfg, trial, rng);
    case Identity::edge_condensation: return gen_edge_condensation(cfg, trial, rng);
    case Identity::same_sign: return gen_same_sign(cfg, trial, rng);
  }
  throw std::logic_error("unknown identity");
}

// ---------- evaluation ----------

std::vector<Rational> eval_instance(const Instance& inst) {
  switch (inst.id) {
    case Identity::wenzel:
      return {residual_wenzel(*inst.skew, *inst.set1, *inst.set2)};
    case Identity::expansion:
      return {residual_expansion(*inst.skew, *inst.set1, *inst.set2, inst.s)};
    case Identity::plucker4:
      return {residual_plucker4(*inst.skew, inst.verts[0], inst.verts[1],
                                inst.verts[2], inst.verts[3])};
    case Identity::dodgson:
      return {residual_dodgson(*inst.mat)};
    case Identity::godsil:
      return {residual_godsil(*inst.mat)};
    case Identity::thm31:
      return {residual_thm31(*inst.skew, *inst.pairs, inst.p)};
    case Identity::cor32:
      return {residual_cor32(*inst.skew, *inst.pairs, inst.p)};
    case Identity::cor33: {
      auto [r1, r2] = residual_cor33(*inst.skew, *inst.pairs);
      return {r1, r2};
    }
    case Identity::thm42:
      return {residual_thm42(*inst.mat, *inst.pairs, inst.p)};
    case Identity::thm43:
      return {residual_thm43(*inst.mat, *inst.pairs, inst.p)};
    case Identity::cor44:
      return {residual_cor44(*inst.mat, *inst.pairs, inst.p)};
    case Identity::lemma24: {
      SkewMatrix widened = bar_expand(*inst.skew, *inst.pairs);
      Rational r1 = pf(widened) - pf(*inst.skew);
      Rational r2 = pf_minor(widened, IndexSet::full(inst.skew->order())) -
                    pf(mask_skew(*inst.skew, *inst.pairs));
      return {r1, r2};
    }
    case Identity::propp:
      return {residual_propp(*inst.graph, inst.verts[0], inst.verts[1],
                             inst.verts[2], inst.verts[3])};
    case Identity::kuo:
      return {residual_kuo(*inst.graph, inst.verts[0], inst.verts[1],
                           inst.verts[2], inst.verts[3], inst.kase)};
    case Identity::kenyon:
      return {residual_kenyon(*inst.graph, inst.verts[0], inst.verts[1],
                              inst.verts[2], inst.verts[3])};
    case Identity::yyz: {
      const size_t k = inst.verts.size() / 2;
      std::vector<int> a_side(inst.verts.begin(),
                              inst.verts.begin() + static_cast<long>(k));
      std::vector<int> b_side(inst.verts.begin() + static_cast<long>(k),
                              inst.verts.end());
      return {residual_yyz(*inst.graph, a_side, b_side, inst.j)};
    }
    case Identity::edge_condensation:
      return {residual_edge_condensation(*inst.graph, inst.edge_ids, inst.j)};
    case Identity::same_sign:
      return {same_sign_check(*inst.graph, inst.verts[0], inst.verts[1],
                              inst.verts[2], inst.verts[3])
                  ? rat(0)
                  : rat(1)};
  }
  throw std::logic_error("unknown identity");
}

// ---------- serialization ----------

namespace {

void write_int_list(std::ostream& out, const std::string& tag,
                    const std::vector<int>& xs) {
  out << tag << ' ' << xs.size();
  for (int x : xs) out << ' ' << x;
  out << '\n';
}

std::vector<int> read_int_list(std::istringstream& ls) {
  size_t count = 0;
  ls >> count;
  std::vector<int> xs(count);
  for (auto& x : xs) {
    if (!(ls >> x)) throw std::invalid_argument("short integer list");
  }
  return xs;
}

}  // namespace

void write_instance(std::ostream& out, const Instance& inst,
                    const std::vector<Rational>& residuals) {
  out << "identity " << identity_name(inst.id) << '\n';
  out << "seed " << inst.seed << '\n';
  out << "trial " << inst.trial << '\n';
  if (inst.p) out << "p " << inst.p << '\n';
  if (inst.s) out << "s " << inst.s << '\n';
  if (inst.j) out << "j " << inst.j << '\n';
  if (inst.kase) out << "case " << inst.kase << '\n';
  if (inst.skew) {
    out << "skew\n";
    write_matrix(out, inst.skew->as_matrix());
  }
  if (inst.mat) {
    out << "mat\n";
    write_matrix(out, *inst.mat);
  }
  if (inst.pairs) {
    out << "pairs " << inst.pairs->size() << ' '
        << (inst.pairs->skew_valid() ? "skew" : "general") << '\n';
    write_pairs(out, *inst.pairs);
  }
  if (inst.set1) write_int_list(out, "set1", inst.set1->indices());
  if (inst.set2) write_int_list(out, "set2", inst.set2->indices());
  if (!inst.verts.empty()) write_int_list(out, "verts", inst.verts);
  if (!inst.edge_ids.empty()) write_int_list(out, "edgeids", inst.edge_ids);
  if (inst.graph) {
    out << "graph\n";
    write_plane_graph(out, *inst.graph);
    out << "endgraph\n";
  }
  for (const Rational& r : residuals) {
    out << "residual " << to_string(r) << '\n';
  }
  out << "end\n";
}

Instance read_instance(std::istream& in) {
  Instance inst;
  bool have_identity = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "identity") {
      std::string name;
      ls >> name;
      auto id = identity_from_name(name);
      if (!id) throw std::invalid_argument("unknown identity: " + name);
      inst.id = *id;
      have_identity = true;
    } else if (tag == "seed") {
      ls >> inst.seed;
    } else if (tag == "trial") {
      ls >> inst.trial;
    } else if (tag == "p") {
      ls >> inst.p;
    } else if (tag == "s") {
      ls >> inst.s;
    } else if (tag == "j") {
      ls >> inst.j;
    } else if (tag == "case") {
      ls >> inst.kase;
    } else if (tag == "skew") {
      inst.skew = read_skew_matrix(in);
    } else if (tag == "mat") {
      inst.mat = read_matrix(in);
    } else if (tag == "pairs") {
      int count = 0;
      std::string kind;
      ls >> count >> kind;
      std::vector<PairSet::Pair> pairs;
      for (int i = 0; i < count; ++i) {
        std::string pl;
        if (!std::getline(in, pl)) throw std::invalid_argument("short pair list");
        std::istringstream ps(pl);
        int a = 0, b = 0;
        if (!(ps >> a >> b)) throw std::invalid_argument("bad pair line");
        pairs.emplace_back(a, b);
      }
      inst.pairs = kind == "skew" ? PairSet::skew_mask(std::move(pairs))
                                  : PairSet::general_mask(std::move(pairs));
    } else if (tag == "set1") {
      inst.set1 = IndexSet(read_int_list(ls));
    } else if (tag == "set2") {
      inst.set2 = IndexSet(read_int_list(ls));
    } else if (tag == "verts") {
      inst.verts = read_int_list(ls);
    } else if (tag == "edgeids") {
      inst.edge_ids = read_int_list(ls);
    } else if (tag == "graph") {
      inst.graph = read_plane_graph(in);
    } else if (tag == "residual") {
      // informational; replay recomputes
    } else if (tag == "end") {
      break;
    } else {
      throw std::invalid_argument("unknown instance tag: " + tag);
    }
  }
  if (!have_identity) throw std::invalid_argument("instance missing identity");
  return inst;
}

}  // namespace pfq
