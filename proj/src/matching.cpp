#include "pfq/matching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pfq {

// ---------- brute-force oracle ----------

namespace {

void check_oracle_cap(const PlaneGraph& g) {
  if (g.vertex_count() > kOracleVertexCap) {
    throw std::invalid_argument("matching oracle capped at " +
                                std::to_string(kOracleVertexCap) + " vertices");
  }
}

struct IncidenceList {
  // per vertex: (neighbor, edge id)
  std::vector<std::vector<std::pair<int, int>>> inc;
  explicit IncidenceList(const PlaneGraph& g)
      : inc(static_cast<size_t>(g.vertex_count()) + 1) {
    for (int e = 1; e <= g.edge_count(); ++e) {
      inc[static_cast<size_t>(g.edge(e).u)].emplace_back(g.edge(e).v, e);
      inc[static_cast<size_t>(g.edge(e).v)].emplace_back(g.edge(e).u, e);
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const PlaneGraph& g) {
  check_oracle_cap(g);
  const int n = g.vertex_count();
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  IncidenceList inc(g);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  Matching current;
  auto rec = [&](auto&& self, int lo) -> void {
    while (lo <= n && used[static_cast<size_t>(lo)]) ++lo;
    if (lo > n) {
      out.push_back(current);
      return;
    }
    used[static_cast<size_t>(lo)] = true;
    for (const auto& [y, e] : inc.inc[static_cast<size_t>(lo)]) {
      if (used[static_cast<size_t>(y)]) continue;
      used[static_cast<size_t>(y)] = true;
      current.push_back(e);
      self(self, lo + 1);
      current.pop_back();
      used[static_cast<size_t>(y)] = false;
    }
    used[static_cast<size_t>(lo)] = false;
  };
  rec(rec, 1);
  return out;
}

Rational matching_sum(const PlaneGraph& g) {
  check_oracle_cap(g);
  const int n = g.vertex_count();
  if (n % 2 != 0) return rat(0);
  if (n == 0) return rat(1);
  IncidenceList inc(g);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int lo) -> Rational {
    while (lo <= n && used[static_cast<size_t>(lo)]) ++lo;
    if (lo > n) return rat(1);
    used[static_cast<size_t>(lo)] = true;
    Rational total = 0;
    for (const auto& [y, e] : inc.inc[static_cast<size_t>(lo)]) {
      if (used[static_cast<size_t>(y)] || g.edge(e).w == 0) continue;
      used[static_cast<size_t>(y)] = true;
      total += g.edge(e).w * self(self, lo + 1);
      used[static_cast<size_t>(y)] = false;
    }
    used[static_cast<size_t>(lo)] = false;
    return total;
  };
  return rec(rec, 1);
}

// ---------- skew adjacency and Kasteleyn orientations ----------

SkewMatrix skew_adjacency(const PlaneGraph& g, const Orientation& o) {
  std::vector<std::tuple<int, int, Rational>> upper;
  for (int e = 1; e <= g.edge_count(); ++e) {
    const int t = o.arc_tail(g, e);
    const int h = o.arc_head(g, e);
    if (t < h) {
      upper.emplace_back(t, h, g.edge(e).w);
    } else {
      upper.emplace_back(h, t, -g.edge(e).w);
    }
  }
  return SkewMatrix::from_upper(g.vertex_count(), upper);
}

namespace {

// Clockwise boundary edges of a face are the ones whose direction opposes
// the traced walk (bounded walks come out counterclockwise).
int clockwise_count(const PlaneGraph& g, const Orientation& o,
                    const std::vector<Dart>& walk) {
  int cw = 0;
  for (const Dart& d : walk) {
    if (o.arc_tail(g, d.edge) != d.tail) ++cw;
  }
  return cw;
}

Orientation kasteleyn_from_tree(const PlaneGraph& g,
                                std::vector<bool> in_tree,
                                std::vector<bool> forward) {
  FaceSet faces = trace_faces(g);
  const int m = g.edge_count();

  // Non-tree edges, read as dual edges, span the face set; fixing them
  // leaves-first meets each face with exactly one undecided boundary edge.
  std::vector<std::vector<std::pair<int, int>>> dual(
      static_cast<size_t>(faces.count()) + 1);
  for (int e = 1; e <= m; ++e) {
    if (in_tree[static_cast<size_t>(e)]) continue;
    const int f1 = faces.face_of(Dart{e, g.edge(e).u});
    const int f2 = faces.face_of(Dart{e, g.edge(e).v});
    dual[static_cast<size_t>(f1)].emplace_back(f2, e);
    dual[static_cast<size_t>(f2)].emplace_back(f1, e);
  }
  std::vector<int> parent_edge(static_cast<size_t>(faces.count()) + 1, -1);
  std::vector<int> order;
  std::vector<bool> seen(static_cast<size_t>(faces.count()) + 1, false);
  seen[static_cast<size_t>(faces.outer)] = true;
  order.push_back(faces.outer);
  for (size_t q = 0; q < order.size(); ++q) {
    for (const auto& [f2, e] : dual[static_cast<size_t>(order[q])]) {
      if (!seen[static_cast<size_t>(f2)]) {
        seen[static_cast<size_t>(f2)] = true;
        parent_edge[static_cast<size_t>(f2)] = e;
        order.push_back(f2);
      }
    }
  }
  if (static_cast<int>(order.size()) != faces.count()) {
    throw std::logic_error("dual spanning tree did not reach every face");
  }

  Orientation o(forward);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    if (f == faces.outer) continue;
    const int pe = parent_edge[static_cast<size_t>(f)];
    const auto& walk = faces.walks[static_cast<size_t>(f) - 1];
    int cw = 0;
    Dart pd{0, 0};
    for (const Dart& d : walk) {
      if (d.edge == pe) {
        pd = d;
      } else if (o.arc_tail(g, d.edge) != d.tail) {
        ++cw;
      }
    }
    // Point the parent edge with the walk when the rest is already odd,
    // against it otherwise.
    forward[static_cast<size_t>(pe) - 1] =
        (cw % 2 == 1) ? (g.edge(pe).u == pd.tail) : (g.edge(pe).u != pd.tail);
    o = Orientation(forward);
  }
  return o;
}

}  // namespace

Orientation kasteleyn_orient(const PlaneGraph& g) {
  return kasteleyn_orient_extending(g, {});
}

Orientation kasteleyn_orient_extending(
    const PlaneGraph& g, const std::vector<std::pair<int, int>>& fixed_arcs) {
  if (!is_connected(g)) {
    throw std::invalid_argument("orientation needs a connected graph");
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<bool> in_tree(static_cast<size_t>(m) + 1, false);
  std::vector<bool> forward(static_cast<size_t>(m), true);

  // Union-find so the pinned edges seed the spanning tree.
  std::vector<int> up(static_cast<size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) up[static_cast<size_t>(v)] = v;
  auto find = [&](int v) {
    while (up[static_cast<size_t>(v)] != v) {
      up[static_cast<size_t>(v)] = up[static_cast<size_t>(up[static_cast<size_t>(v)])];
      v = up[static_cast<size_t>(v)];
    }
    return v;
  };
  std::set<int> fixed_vertices;
  for (const auto& [tail, head] : fixed_arcs) {
    auto e = g.edge_between(tail, head);
    if (!e) throw std::invalid_argument("pinned arc is not an edge");
    if (!fixed_vertices.insert(tail).second || !fixed_vertices.insert(head).second) {
      throw std::invalid_argument("pinned edges must be pairwise independent");
    }
    in_tree[static_cast<size_t>(*e)] = true;
    forward[static_cast<size_t>(*e) - 1] = (g.edge(*e).u == tail);
    up[static_cast<size_t>(find(tail))] = find(head);
  }
  for (int e = 1; e <= m; ++e) {
    if (in_tree[static_cast<size_t>(e)]) continue;
    const int ru = find(g.edge(e).u);
    const int rv = find(g.edge(e).v);
    if (ru != rv) {
      up[static_cast<size_t>(ru)] = rv;
      in_tree[static_cast<size_t>(e)] = true;
    }
  }
  return kasteleyn_from_tree(g, std::move(in_tree), std::move(forward));
}

bool kasteleyn_valid(const PlaneGraph& g, const Orientation& o) {
  FaceSet faces = trace_faces(g);
  for (int f = 1; f <= faces.count(); ++f) {
    if (f == faces.outer) continue;
    if (clockwise_count(g, o, faces.walks[static_cast<size_t>(f) - 1]) % 2 == 0) {
      return false;
    }
  }
  return true;
}

Rational count_via_pfaffian(const PlaneGraph& g) {
  if (g.vertex_count() == 0) return rat(1);
  if (!is_connected(g)) {
    throw std::invalid_argument("count_via_pfaffian needs a connected graph");
  }
  for (const auto& e : g.edges()) {
    if (e.w < 0) {
      throw std::invalid_argument("count_via_pfaffian needs nonnegative weights");
    }
  }
  if (g.vertex_count() % 2 != 0) return rat(0);
  return abs(pf(skew_adjacency(g, kasteleyn_orient(g))));
}

// ---------- the three-arc gadget ----------

std::pair<PlaneGraph, Orientation> bar_construction(const PlaneGraph& g,
                                                    const Orientation& o,
                                                    int edge_id) {
  const GraphEdge& ed = g.edge(edge_id);
  if (ed.w < 0) throw std::invalid_argument("gadget expects a nonnegative weight");
  const int a = o.arc_tail(g, edge_id);
  const int b = o.arc_head(g, edge_id);
  const int n = g.vertex_count();
  const int x = n + 1, y = n + 2;

  std::vector<GraphEdge> edges;
  std::vector<int> remap(static_cast<size_t>(g.edge_count()) + 1, 0);
  std::vector<bool> fwd;
  for (int e = 1; e <= g.edge_count(); ++e) {
    if (e == edge_id) continue;
    edges.push_back(g.edge(e));
    remap[static_cast<size_t>(e)] = static_cast<int>(edges.size());
    fwd.push_back(o.forward(e));
  }
  edges.push_back(GraphEdge{a, x, ed.w});
  const int e_ax = static_cast<int>(edges.size());
  fwd.push_back(true);
  edges.push_back(GraphEdge{x, y, rat(1)});
  const int e_xy = static_cast<int>(edges.size());
  fwd.push_back(true);
  edges.push_back(GraphEdge{y, b, rat(1)});
  const int e_yb = static_cast<int>(edges.size());
  fwd.push_back(true);

  // The path takes over the old edge's rotation slots at both endpoints.
  std::vector<std::vector<int>> rot(static_cast<size_t>(n) + 2);
  for (int v = 1; v <= n; ++v) {
    for (int e : g.rotation(v)) {
      int id = 0;
      if (e == edge_id) {
        id = (v == a) ? e_ax : e_yb;
      } else {
        id = remap[static_cast<size_t>(e)];
      }
      rot[static_cast<size_t>(v) - 1].push_back(id);
    }
  }
  rot[static_cast<size_t>(x) - 1] = {e_ax, e_xy};
  rot[static_cast<size_t>(y) - 1] = {e_xy, e_yb};

  return {PlaneGraph(n + 2, std::move(edges), std::move(rot)),
          Orientation(std::move(fwd))};
}

SkewMatrix bar_expand(const SkewMatrix& a, const PairSet& e) {
  if (!e.skew_valid()) throw std::invalid_argument("skew mask required");
  const int n = a.order();
  if (e.max_index() > n) throw std::out_of_range("mask index > n");
  const int k = e.size();
  Matrix g(n + 2 * k, n + 2 * k);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) g.set(i, j, a.at(i, j));
  }
  auto put = [&](int i, int j, const Rational& v) {
    g.set(i, j, v);
    g.set(j, i, -v);
  };
  for (int l = 1; l <= k; ++l) {
    const auto [il, jl] = e.pair(l);
    const int x = n + 2 * l - 1, y = n + 2 * l;
    const Rational w = a.at(il, jl);
    put(il, jl, rat(0));
    put(x, y, rat(1));
    if (w >= 0) {
      // arcs il -> x, x -> y, y -> jl with weights (w, 1, 1)
      put(il, x, w);
      put(jl, y, rat(-1));
    } else {
      // arcs jl -> x, x -> y, y -> il with weights (-w, 1, 1)
      put(jl, x, -w);
      put(il, y, rat(-1));
    }
  }
  return SkewMatrix::from_matrix(g);
}

// ---------- face/cycle hypothesis validation ----------

namespace {

std::vector<int> walk_vertices(const PlaneGraph& g, const std::vector<Dart>& walk) {
  std::vector<int> seq;
  seq.reserve(walk.size());
  for (const Dart& d : walk) seq.push_back(d.tail);
  (void)g;
  return seq;
}

// True when `target` (distinct vertices) appears as a subsequence of some
// rotation of the closed walk `seq`.
bool cyclic_subsequence(const std::vector<int>& seq,
                        const std::vector<int>& target) {
  const size_t len = seq.size();
  if (target.empty()) return true;
  if (len == 0) return false;
  for (size_t start = 0; start < len; ++start) {
    if (seq[start] != target[0]) continue;
    size_t t = 1;
    for (size_t off = 1; off < len && t < target.size(); ++off) {
      if (seq[(start + off) % len] == target[t]) ++t;
    }
    if (t == target.size()) return true;
  }
  return false;
}

// Face (id) whose boundary walk carries the given vertices in cyclic order.
std::optional<int> face_with_cycle(const PlaneGraph& g, const FaceSet& faces,
                                   const std::vector<int>& verts) {
  std::set<int> uniq(verts.begin(), verts.end());
  if (uniq.size() != verts.size()) return std::nullopt;
  for (int f = 1; f <= faces.count(); ++f) {
    const auto seq = walk_vertices(g, faces.walks[static_cast<size_t>(f) - 1]);
    if (cyclic_subsequence(seq, verts)) return f;
  }
  return std::nullopt;
}

Rational oracle_minus(const PlaneGraph& g, const std::vector<int>& verts) {
  return matching_sum(remove_vertices(g, verts));
}

std::vector<int> require_bipartition_balanced(const PlaneGraph& g) {
  auto col = bipartition(g);
  if (!col) throw std::invalid_argument("graph is not bipartite");
  int u = static_cast<int>(std::count(col->begin(), col->end(), 0));
  if (2 * u != g.vertex_count()) {
    throw std::invalid_argument("color classes must have equal size");
  }
  return *col;
}

}  // namespace

Rational residual_propp(const PlaneGraph& g, int a, int b, int c, int d) {
  auto col = require_bipartition_balanced(g);
  auto color = [&](int v) { return col[static_cast<size_t>(v) - 1]; };
  if (!(color(a) == color(c) && color(b) == color(d) && color(a) != color(b))) {
    throw std::invalid_argument("need a, c in one class and b, d in the other");
  }
  FaceSet faces = trace_faces(g);
  bool found = false;
  for (const auto& walk : faces.walks) {
    if (walk.size() != 4) continue;
    const auto seq = walk_vertices(g, walk);
    if (std::set<int>(seq.begin(), seq.end()) == std::set<int>{a, b, c, d} &&
        cyclic_subsequence(seq, {a, b, c, d})) {
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("vertices do not bound a 4-cycle face");
  return matching_sum(g) * oracle_minus(g, {a, b, c, d}) -
         oracle_minus(g, {a, b}) * oracle_minus(g, {c, d}) -
         oracle_minus(g, {a, d}) * oracle_minus(g, {b, c});
}

Rational residual_kuo(const PlaneGraph& g, int a, int b, int c, int d,
                      int kase) {
  auto col = require_bipartition_balanced(g);
  auto color = [&](int v) { return col[static_cast<size_t>(v) - 1]; };
  FaceSet faces = trace_faces(g);
  if (!face_with_cycle(g, faces, {a, b, c, d})) {
    throw std::invalid_argument("vertices not in cyclic order on one face");
  }
  if (kase == 1) {
    if (!(color(a) == color(c) && color(b) == color(d) && color(a) != color(b))) {
      throw std::invalid_argument("case 1 needs a, c in one class, b, d in the other");
    }
    return matching_sum(g) * oracle_minus(g, {a, b, c, d}) -
           oracle_minus(g, {a, b}) * oracle_minus(g, {c, d}) -
           oracle_minus(g, {a, d}) * oracle_minus(g, {b, c});
  }
  if (kase == 2) {
    if (!(color(a) == color(b) && color(c) == color(d) && color(a) != color(c))) {
      throw std::invalid_argument("case 2 needs a, b in one class, c, d in the other");
    }
    return oracle_minus(g, {a, d}) * oracle_minus(g, {b, c}) -
           matching_sum(g) * oracle_minus(g, {a, b, c, d}) -
           oracle_minus(g, {a, c}) * oracle_minus(g, {b, d});
  }
  throw std::invalid_argument("case must be 1 or 2");
}

Rational residual_kenyon(const PlaneGraph& g, int a, int b, int c, int d) {
  FaceSet faces = trace_faces(g);
  if (!face_with_cycle(g, faces, {a, b, c, d})) {
    throw std::invalid_argument("vertices not in cyclic order on one face");
  }
  return matching_sum(g) * oracle_minus(g, {a, b, c, d}) +
         oracle_minus(g, {a, c}) * oracle_minus(g, {b, d}) -
         oracle_minus(g, {a, b}) * oracle_minus(g, {c, d}) -
         oracle_minus(g, {a, d}) * oracle_minus(g, {b, c});
}

Rational residual_yyz(const PlaneGraph& g, const std::vector<int>& a_set,
                      const std::vector<int>& b_set, int j) {
  const int k = static_cast<int>(a_set.size());
  if (k < 2 || static_cast<int>(b_set.size()) != k) {
    throw std::invalid_argument("need k >= 2 vertices on each side");
  }
  if (k > 6) throw std::invalid_argument("subset sums capped at k = 6");
  if (j < 1 || j > k) throw std::out_of_range("j outside [k]");
  if (g.vertex_count() % 2 != 0) {
    throw std::invalid_argument("even vertex count required");
  }
  std::vector<int> interleaved;
  for (int i = 0; i < k; ++i) {
    interleaved.push_back(a_set[static_cast<size_t>(i)]);
    interleaved.push_back(b_set[static_cast<size_t>(i)]);
  }
  FaceSet faces = trace_faces(g);
  if (!face_with_cycle(g, faces, interleaved)) {
    throw std::invalid_argument("vertices not in cyclic order on one face");
  }

  Rational odd_sum = 0, even_sum = 0;
  const int aj = a_set[static_cast<size_t>(j) - 1];
  std::vector<int> a_rest;
  for (int v : a_set) {
    if (v != aj) a_rest.push_back(v);
  }
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> y, ybar;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        y.push_back(b_set[static_cast<size_t>(i)]);
      } else {
        ybar.push_back(b_set[static_cast<size_t>(i)]);
      }
    }
    if (y.size() % 2 == 1) {
      std::vector<int> left = y;
      left.push_back(aj);
      std::vector<int> right = a_rest;
      right.insert(right.end(), ybar.begin(), ybar.end());
      odd_sum += oracle_minus(g, left) * oracle_minus(g, right);
    } else {
      std::vector<int> right = a_set;
      right.insert(right.end(), ybar.begin(), ybar.end());
      even_sum += oracle_minus(g, y) * oracle_minus(g, right);
    }
  }
  return odd_sum - even_sum;
}

Rational residual_edge_condensation(const PlaneGraph& g,
                                    const std::vector<int>& x_edges, int j) {
  const int k = static_cast<int>(x_edges.size());
  if (k < 2) throw std::invalid_argument("need at least two edges");
  if (j < 1 || j > k) throw std::out_of_range("j outside [k]");
  if (g.vertex_count() % 2 != 0) {
    throw std::invalid_argument("even vertex count required");
  }
  std::set<int> endpoint_check;
  for (int e : x_edges) {
    if (!endpoint_check.insert(g.edge(e).u).second ||
        !endpoint_check.insert(g.edge(e).v).second) {
      throw std::invalid_argument("edges must be pairwise independent");
    }
  }

  // Find the face whose walk visits the edges in the given cyclic order and
  // read off the (tail, head) labels there.
  FaceSet faces = trace_faces(g);
  std::vector<std::pair<int, int>> labels;
  bool found = false;
  for (const auto& walk : faces.walks) {
    std::vector<int> edge_seq;
    std::map<int, std::pair<int, int>> label_of;
    for (const Dart& d : walk) {
      if (std::find(x_edges.begin(), x_edges.end(), d.edge) != x_edges.end()) {
        edge_seq.push_back(d.edge);
        label_of[d.edge] = {d.tail, g.head(d)};
      }
    }
    if (static_cast<int>(edge_seq.size()) != k) continue;
    // edge_seq must be a rotation of x_edges
    for (int r = 0; r < k; ++r) {
      bool match = true;
      for (int i = 0; i < k; ++i) {
        if (edge_seq[static_cast<size_t>((r + i) % k)] !=
            x_edges[static_cast<size_t>(i)]) {
          match = false;
          break;
        }
      }
      if (match) {
        found = true;
        break;
      }
    }
    if (found) {
      for (int e : x_edges) labels.push_back(label_of.at(e));
      break;
    }
  }
  if (!found) {
    throw std::invalid_argument(
        "edges do not lie in cyclic order on a common face");
  }

  const auto [aj, bj] = labels[static_cast<size_t>(j) - 1];
  const Rational wj = g.edge(x_edges[static_cast<size_t>(j) - 1]).w;
  PlaneGraph g_minus_x = remove_edges(g, x_edges);
  std::vector<int> x_without_j;
  for (int i = 1; i <= k; ++i) {
    if (i != j) x_without_j.push_back(x_edges[static_cast<size_t>(i) - 1]);
  }

  Rational lhs = matching_sum(g) * matching_sum(g_minus_x);
  Rational split =
      matching_sum(remove_edges(g, {x_edges[static_cast<size_t>(j) - 1]})) *
      matching_sum(remove_edges(g, x_without_j));
  Rational sum = 0;
  for (int i = 1; i <= k; ++i) {
    if (i == j) continue;
    const auto [ai, bi] = labels[static_cast<size_t>(i) - 1];
    const Rational wi = g.edge(x_edges[static_cast<size_t>(i) - 1]).w;
    Rational t1 = oracle_minus(g, {bj, ai}) *
                  matching_sum(remove_vertices(g_minus_x, {aj, bi}));
    Rational t2 = oracle_minus(g, {bj, bi}) *
                  matching_sum(remove_vertices(g_minus_x, {aj, ai}));
    sum += wi * (t1 - t2);
  }
  return lhs - split - wj * sum;
}

bool same_sign_check(const PlaneGraph& g, int a, int b, int c, int d) {
  FaceSet faces = trace_faces(g);
  std::optional<int> face = face_with_cycle(g, faces, {a, b, c, d});
  if (!face) {
    throw std::invalid_argument("vertices not in cyclic order on one face");
  }
  // Re-embed with that face unbounded, then orient.
  PlaneGraph h = g.with_outer_face(*face);
  SkewMatrix adj = skew_adjacency(h, kasteleyn_orient(h));
  auto pf_del = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    return pf(remove_rows_cols(adj, IndexSet(std::move(verts))));
  };
  const Rational products[4] = {
      pf_del({a, b, c, d}) * pf(adj),
      pf_del({a, b}) * pf_del({c, d}),
      pf_del({a, c}) * pf_del({b, d}),
      pf_del({a, d}) * pf_del({b, c}),
  };
  int seen_sign = 0;
  for (const Rational& p : products) {
    const int s = sgn(p);
    if (s == 0) continue;
    if (seen_sign == 0) {
      seen_sign = s;
    } else if (s != seen_sign) {
      return false;
    }
  }
  return true;
}

// ---------- condensation-driven counting ----------

namespace {

struct Condenser {
  std::unordered_map<std::string, Rational> memo;
  int fallbacks = 0;

  static std::string key(const PlaneGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ';';
    std::vector<std::string> items;
    for (const auto& e : g.edges()) {
      items.push_back(std::to_string(e.u) + ',' + std::to_string(e.v) + ',' +
                      to_string(e.w));
    }
    std::sort(items.begin(), items.end());
    for (const auto& s : items) os << s << ';';
    return os.str();
  }

  Rational count(const PlaneGraph& g) {
    if (g.vertex_count() == 0) return rat(1);
    if (g.vertex_count() % 2 != 0) return rat(0);

    auto comps = components(g);
    if (comps.size() > 1) {
      Rational total = 1;
      for (const auto& comp : comps) {
        total *= count(induced_subgraph(g, comp));
        if (total == 0) break;
      }
      return total;
    }

    // Degree-based reductions: an isolated vertex kills every matching, a
    // pendant edge is forced.
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (const auto& e : g.edges()) {
      ++deg[static_cast<size_t>(e.u)];
      ++deg[static_cast<size_t>(e.v)];
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
      if (deg[static_cast<size_t>(v)] == 0) return rat(0);
      if (deg[static_cast<size_t>(v)] == 1) {
        for (const auto& e : g.edges()) {
          if (e.u == v || e.v == v) {
            const int u = (e.u == v) ? e.v : e.u;
            if (e.w == 0) return rat(0);
            return e.w * count(remove_vertices(g, {v, u}));
          }
        }
      }
    }

    if (g.vertex_count() <= 6) return matching_sum(g);

    const std::string k = key(g);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    Rational result = step(g);
    memo.emplace(k, result);
    return result;
  }

  Rational fallback(const PlaneGraph& g) {
    ++fallbacks;
    return count_via_pfaffian(g);
  }

  Rational step(const PlaneGraph& g) {
    // Two independent edges along the widest face, endpoints distinct and
    // visited once; the quadratic identity then yields M(G) by division.
    FaceSet faces = trace_faces(g);
    const auto& walk = faces.walks[static_cast<size_t>(faces.outer) - 1];
    std::vector<int> visits(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (const Dart& d : walk) ++visits[static_cast<size_t>(d.tail)];

    int e1 = 0, a1 = 0, b1 = 0, e2 = 0, a2 = 0, b2 = 0;
    for (size_t s = 0; s < walk.size() && e2 == 0; ++s) {
      const Dart& d1 = walk[s];
      a1 = d1.tail;
      b1 = g.head(d1);
      if (visits[static_cast<size_t>(a1)] != 1 ||
          visits[static_cast<size_t>(b1)] != 1) {
        continue;
      }
      e1 = d1.edge;
      for (size_t t = s + 1; t < walk.size(); ++t) {
        const Dart& d2 = walk[t];
        a2 = d2.tail;
        b2 = g.head(d2);
        if (d2.edge == e1 || a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) {
          continue;
        }
        if (visits[static_cast<size_t>(a2)] != 1 ||
            visits[static_cast<size_t>(b2)] != 1) {
          continue;
        }
        e2 = d2.edge;
        break;
      }
    }
    if (e2 == 0) return fallback(g);

    Rational m_x = count(remove_edges(g, {e1, e2}));
    if (m_x == 0) return fallback(g);
    const Rational w1 = g.edge(e1).w;
    const Rational w2 = g.edge(e2).w;
    Rational m_e1 = count(remove_edges(g, {e1}));
    Rational m_e2 = count(remove_edges(g, {e2}));
    Rational t1 = count(remove_vertices(g, {b1, a2})) *
                  count(remove_vertices(g, {a1, b2}));
    Rational t2 = count(remove_vertices(g, {b1, b2})) *
                  count(remove_vertices(g, {a1, a2}));
    return (m_e1 * m_e2 + w1 * w2 * (t1 - t2)) / m_x;
  }
};

}  // namespace

CondenseResult condense_count(const PlaneGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.w < 0) {
      throw std::invalid_argument("condense_count needs nonnegative weights");
    }
  }
  Condenser c;
  Rational v = c.count(g);
  return CondenseResult{std::move(v), c.fallbacks};
}

}  // namespace pfq
