#include "pfq/plane_graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pfq {

PlaneGraph::PlaneGraph(int n, std::vector<GraphEdge> edges,
                       std::vector<std::vector<int>> rotation, int outer_face)
    : n_(n), edges_(std::move(edges)), rotation_(std::move(rotation)),
      outer_face_(outer_face) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(rotation_.size()) != n) {
    throw std::invalid_argument("rotation must list every vertex");
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> incident(static_cast<size_t>(n) + 1);
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v, w] = edges_[e];
    if (u < 1 || u > n || v < 1 || v > n) throw std::out_of_range("edge endpoint");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("multi-edges are not allowed");
    }
    incident[static_cast<size_t>(u)].push_back(static_cast<int>(e) + 1);
    incident[static_cast<size_t>(v)].push_back(static_cast<int>(e) + 1);
  }
  for (int v = 1; v <= n; ++v) {
    auto rot = rotation_[static_cast<size_t>(v) - 1];
    auto inc = incident[static_cast<size_t>(v)];
    std::sort(rot.begin(), rot.end());
    std::sort(inc.begin(), inc.end());
    if (rot != inc) {
      throw std::invalid_argument(
          "rotation of a vertex must order exactly its incident edges");
    }
  }
}

const GraphEdge& PlaneGraph::edge(int e) const {
  if (e < 1 || e > edge_count()) throw std::out_of_range("edge id");
  return edges_[static_cast<size_t>(e) - 1];
}

const std::vector<int>& PlaneGraph::rotation(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex id");
  return rotation_[static_cast<size_t>(v) - 1];
}

int PlaneGraph::opposite(int e, int v) const {
  const auto& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

std::optional<int> PlaneGraph::edge_between(int u, int v) const {
  for (int e : rotation(u)) {
    if (opposite(e, u) == v) return e;
  }
  return std::nullopt;
}

PlaneGraph PlaneGraph::with_outer_face(int face_id) const {
  PlaneGraph g = *this;
  g.outer_face_ = face_id;
  return g;
}

// ---------- face tracing ----------

int FaceSet::face_of(const Dart& d) const {
  for (size_t f = 0; f < walks.size(); ++f) {
    for (const Dart& x : walks[f]) {
      if (x == d) return static_cast<int>(f) + 1;
    }
  }
  throw std::invalid_argument("dart not found in any face");
}

FaceSet trace_faces(const PlaneGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("face tracing needs a connected graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();

  FaceSet out;
  if (m == 0) {
    // A single vertex still bounds the one unbounded face.
    out.walks.push_back({});
    out.outer = 1;
    return out;
  }

  // position of edge e in the rotation of vertex v
  std::map<std::pair<int, int>, int> pos;
  for (int v = 1; v <= n; ++v) {
    const auto& rot = g.rotation(v);
    for (size_t i = 0; i < rot.size(); ++i) {
      pos[{v, rot[i]}] = static_cast<int>(i);
    }
  }

  auto dart_index = [m](const Dart& d, const PlaneGraph& gg) {
    return 2 * (d.edge - 1) + (gg.edge(d.edge).u == d.tail ? 0 : 1);
  };
  std::vector<int> face_of_dart(static_cast<size_t>(2 * m), 0);

  for (int e = 1; e <= m; ++e) {
    for (int side = 0; side < 2; ++side) {
      Dart start{e, side == 0 ? g.edge(e).u : g.edge(e).v};
      if (face_of_dart[static_cast<size_t>(dart_index(start, g))] != 0) continue;
      std::vector<Dart> walk;
      Dart d = start;
      const int fid = static_cast<int>(out.walks.size()) + 1;
      do {
        face_of_dart[static_cast<size_t>(dart_index(d, g))] = fid;
        walk.push_back(d);
        const int h = g.head(d);
        const auto& rot = g.rotation(h);
        const int i = pos.at({h, d.edge});
        const int e2 = rot[(static_cast<size_t>(i) + 1) % rot.size()];
        d = Dart{e2, h};
      } while (!(d == start));
      out.walks.push_back(std::move(walk));
    }
  }

  const int f = out.count();
  if (n - m + f != 2) {
    throw std::invalid_argument(
        "rotation system does not describe a planar embedding (Euler check)");
  }

  if (g.declared_outer_face() != PlaneGraph::kAutoOuter) {
    if (g.declared_outer_face() < 1 || g.declared_outer_face() > f) {
      throw std::out_of_range("declared outer face id");
    }
    out.outer = g.declared_outer_face();
  } else {
    int best = 1;
    for (int i = 2; i <= f; ++i) {
      if (out.walks[static_cast<size_t>(i) - 1].size() >
          out.walks[static_cast<size_t>(best) - 1].size()) {
        best = i;
      }
    }
    out.outer = best;
  }
  return out;
}

// ---------- Orientation ----------

int Orientation::arc_tail(const PlaneGraph& g, int e) const {
  return forward(e) ? g.edge(e).u : g.edge(e).v;
}

int Orientation::arc_head(const PlaneGraph& g, int e) const {
  return forward(e) ? g.edge(e).v : g.edge(e).u;
}

Orientation Orientation::reversed() const {
  std::vector<bool> f = forward_;
  f.flip();
  return Orientation(std::move(f));
}

// ---------- utilities ----------

static std::vector<std::vector<int>> adjacency(const PlaneGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()) + 1);
  for (int e = 1; e <= g.edge_count(); ++e) {
    adj[static_cast<size_t>(g.edge(e).u)].push_back(g.edge(e).v);
    adj[static_cast<size_t>(g.edge(e).v)].push_back(g.edge(e).u);
  }
  return adj;
}

std::vector<std::vector<int>> components(const PlaneGraph& g) {
  auto adj = adjacency(g);
  std::vector<bool> seen(static_cast<size_t>(g.vertex_count()) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp, stack{s};
    seen[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[static_cast<size_t>(x)]) {
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const PlaneGraph& g) {
  return g.vertex_count() == 0 || components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const PlaneGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> color(static_cast<size_t>(g.vertex_count()) + 1, -1);
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<size_t>(x)]) {
        if (color[static_cast<size_t>(y)] == -1) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          stack.push_back(y);
        } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  color.erase(color.begin());
  return color;
}

PlaneGraph remove_edges(const PlaneGraph& g, const std::vector<int>& edge_ids) {
  std::set<int> drop(edge_ids.begin(), edge_ids.end());
  for (int e : drop) {
    if (e < 1 || e > g.edge_count()) throw std::out_of_range("edge id");
  }
  std::vector<GraphEdge> edges;
  std::vector<int> remap(static_cast<size_t>(g.edge_count()) + 1, 0);
  for (int e = 1; e <= g.edge_count(); ++e) {
    if (drop.count(e)) continue;
    edges.push_back(g.edge(e));
    remap[static_cast<size_t>(e)] = static_cast<int>(edges.size());
  }
  std::vector<std::vector<int>> rot(static_cast<size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (int e : g.rotation(v)) {
      if (remap[static_cast<size_t>(e)]) {
        rot[static_cast<size_t>(v) - 1].push_back(remap[static_cast<size_t>(e)]);
      }
    }
  }
  return PlaneGraph(g.vertex_count(), std::move(edges), std::move(rot));
}

PlaneGraph remove_vertices(const PlaneGraph& g, const std::vector<int>& verts) {
  std::set<int> drop(verts.begin(), verts.end());
  for (int v : drop) {
    if (v < 1 || v > g.vertex_count()) throw std::out_of_range("vertex id");
  }
  std::vector<int> vmap(static_cast<size_t>(g.vertex_count()) + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!drop.count(v)) vmap[static_cast<size_t>(v)] = ++next;
  }
  std::vector<GraphEdge> edges;
  std::vector<int> emap(static_cast<size_t>(g.edge_count()) + 1, 0);
  for (int e = 1; e <= g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (drop.count(ed.u) || drop.count(ed.v)) continue;
    edges.push_back(GraphEdge{vmap[static_cast<size_t>(ed.u)],
                              vmap[static_cast<size_t>(ed.v)], ed.w});
    emap[static_cast<size_t>(e)] = static_cast<int>(edges.size());
  }
  std::vector<std::vector<int>> rot(static_cast<size_t>(next));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (drop.count(v)) continue;
    for (int e : g.rotation(v)) {
      if (emap[static_cast<size_t>(e)]) {
        rot[static_cast<size_t>(vmap[static_cast<size_t>(v)]) - 1].push_back(
            emap[static_cast<size_t>(e)]);
      }
    }
  }
  return PlaneGraph(next, std::move(edges), std::move(rot));
}

PlaneGraph induced_subgraph(const PlaneGraph& g, const std::vector<int>& verts) {
  std::set<int> keep(verts.begin(), verts.end());
  std::vector<int> drop;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!keep.count(v)) drop.push_back(v);
  }
  return remove_vertices(g, drop);
}

// ---------- generators ----------
// All generators place vertices on an integer lattice and emit rotations in
// clockwise order as drawn (y axis pointing up).

namespace {

struct Builder {
  int n = 0;
  std::vector<GraphEdge> edges;
  std::map<std::pair<int, int>, int> eid;  // (min,max) endpoint -> id

  int add_edge(int u, int v, Rational w = Rational(1)) {
    edges.push_back(GraphEdge{u, v, std::move(w)});
    eid[std::minmax(u, v)] = static_cast<int>(edges.size());
    return static_cast<int>(edges.size());
  }
  int id(int u, int v) const { return eid.at(std::minmax(u, v)); }
};

}  // namespace

PlaneGraph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
  Builder b;
  b.n = rows * cols;
  auto vid = [cols](int i, int j) { return (i - 1) * cols + j; };
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j < cols) b.add_edge(vid(i, j), vid(i, j + 1));
      if (i < rows) b.add_edge(vid(i, j), vid(i + 1, j));
    }
  }
  // Row 1 is drawn on top; clockwise around a vertex = N, E, S, W.
  std::vector<std::vector<int>> rot(static_cast<size_t>(b.n));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      auto& r = rot[static_cast<size_t>(vid(i, j)) - 1];
      if (i > 1) r.push_back(b.id(vid(i - 1, j), vid(i, j)));
      if (j < cols) r.push_back(b.id(vid(i, j), vid(i, j + 1)));
      if (i < rows) r.push_back(b.id(vid(i, j), vid(i + 1, j)));
      if (j > 1) r.push_back(b.id(vid(i, j - 1), vid(i, j)));
    }
  }
  return PlaneGraph(b.n, std::move(b.edges), std::move(rot));
}

PlaneGraph aztec_diamond(int order) {
  if (order < 1) throw std::invalid_argument("aztec diamond order >= 1");
  // Unit cells of the staircase region, row widths 2, 4, ..., 2n, ..., 4, 2.
  std::map<std::pair<int, int>, int> cell;
  int next = 0;
  auto row_halfwidth = [order](int r) { return std::min(r, 2 * order + 1 - r); };
  for (int r = 1; r <= 2 * order; ++r) {
    const int hw = row_halfwidth(r);
    const int off = order - hw;
    for (int c = off + 1; c <= off + 2 * hw; ++c) cell[{r, c}] = ++next;
  }
  Builder b;
  b.n = next;
  for (const auto& [rc, v] : cell) {
    const auto [r, c] = rc;
    if (cell.count({r, c + 1})) b.add_edge(v, cell.at({r, c + 1}));
    if (cell.count({r + 1, c})) b.add_edge(v, cell.at({r + 1, c}));
  }
  std::vector<std::vector<int>> rot(static_cast<size_t>(b.n));
  for (const auto& [rc, v] : cell) {
    const auto [r, c] = rc;
    auto& rv = rot[static_cast<size_t>(v) - 1];
    if (cell.count({r - 1, c})) rv.push_back(b.id(v, cell.at({r - 1, c})));
    if (cell.count({r, c + 1})) rv.push_back(b.id(v, cell.at({r, c + 1})));
    if (cell.count({r + 1, c})) rv.push_back(b.id(v, cell.at({r + 1, c})));
    if (cell.count({r, c - 1})) rv.push_back(b.id(v, cell.at({r, c - 1})));
  }
  return PlaneGraph(b.n, std::move(b.edges), std::move(rot));
}

PlaneGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Builder b;
  b.n = n;
  for (int v = 1; v <= n; ++v) b.add_edge(v, v % n + 1);
  std::vector<std::vector<int>> rot(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const int prev = (v + n - 2) % n + 1;
    rot[static_cast<size_t>(v) - 1] = {b.id(prev, v), b.id(v, v % n + 1)};
  }
  return PlaneGraph(n, std::move(b.edges), std::move(rot));
}

PlaneGraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Builder b;
  b.n = n;
  for (int v = 1; v + 1 <= n; ++v) b.add_edge(v, v + 1);
  std::vector<std::vector<int>> rot(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) {
    auto& r = rot[static_cast<size_t>(v) - 1];
    if (v > 1) r.push_back(b.id(v - 1, v));
    if (v < n) r.push_back(b.id(v, v + 1));
  }
  return PlaneGraph(n, std::move(b.edges), std::move(rot));
}

PlaneGraph triangular_patch(int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("triangular patch needs rows, cols >= 2");
  }
  Builder b;
  b.n = rows * cols;
  auto vid = [cols](int i, int j) { return (i - 1) * cols + j; };
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j < cols) b.add_edge(vid(i, j), vid(i, j + 1));
      if (i < rows) b.add_edge(vid(i, j), vid(i + 1, j));
      if (i < rows && j < cols) b.add_edge(vid(i, j), vid(i + 1, j + 1));
    }
  }
  // Clockwise: N, E, SE, S, W, NW.
  std::vector<std::vector<int>> rot(static_cast<size_t>(b.n));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      auto& r = rot[static_cast<size_t>(vid(i, j)) - 1];
      if (i > 1) r.push_back(b.id(vid(i - 1, j), vid(i, j)));
      if (j < cols) r.push_back(b.id(vid(i, j), vid(i, j + 1)));
      if (i < rows && j < cols) r.push_back(b.id(vid(i, j), vid(i + 1, j + 1)));
      if (i < rows) r.push_back(b.id(vid(i, j), vid(i + 1, j)));
      if (j > 1) r.push_back(b.id(vid(i, j - 1), vid(i, j)));
      if (i > 1 && j > 1) r.push_back(b.id(vid(i - 1, j - 1), vid(i, j)));
    }
  }
  return PlaneGraph(b.n, std::move(b.edges), std::move(rot));
}

// ---------- text format ----------

PlaneGraph read_plane_graph(std::istream& in) {
  int n = -1;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> rot;
  int outer = PlaneGraph::kAutoOuter;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      if (!(ls >> n) || n < 0) throw std::invalid_argument("bad v line");
      rot.assign(static_cast<size_t>(n), {});
    } else if (tag == "e") {
      int u = 0, v = 0;
      std::string w;
      if (!(ls >> u >> v >> w)) throw std::invalid_argument("bad e line");
      edges.push_back(GraphEdge{u, v, parse_rational(w)});
    } else if (tag == "r") {
      int v = 0;
      if (!(ls >> v) || v < 1 || v > n) throw std::invalid_argument("bad r line");
      int e = 0;
      auto& r = rot[static_cast<size_t>(v) - 1];
      r.clear();
      while (ls >> e) r.push_back(e);
    } else if (tag == "outer") {
      if (!(ls >> outer)) throw std::invalid_argument("bad outer line");
    } else if (tag == "endgraph") {
      break;
    } else {
      throw std::invalid_argument("unknown graph line tag: " + tag);
    }
  }
  if (n < 0) throw std::invalid_argument("graph text missing v line");
  return PlaneGraph(n, std::move(edges), std::move(rot), outer);
}

void write_plane_graph(std::ostream& out, const PlaneGraph& g) {
  out << "v " << g.vertex_count() << '\n';
  for (int e = 1; e <= g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    out << "e " << ed.u << ' ' << ed.v << ' ' << to_string(ed.w) << '\n';
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out << "r " << v;
    for (int e : g.rotation(v)) out << ' ' << e;
    out << '\n';
  }
  if (g.declared_outer_face() != PlaneGraph::kAutoOuter) {
    out << "outer " << g.declared_outer_face() << '\n';
  }
}

}  // namespace pfq
