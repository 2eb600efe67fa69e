#pragma once

#include <utility>
#include <vector>

#include "pfq/pfaffian.hpp"
#include "pfq/plane_graph.hpp"

namespace pfq {

// A matching as a list of 1-based edge ids.
using Matching = std::vector<int>;

// Vertex budget for the brute-force enumerators.
inline constexpr int kOracleVertexCap = 24;

// All perfect matchings by backtracking on the lowest uncovered vertex.
// Throws above kOracleVertexCap.
std::vector<Matching> enumerate_matchings(const PlaneGraph& g);

// Sum over perfect matchings of the product of edge weights. 1 for the
// empty graph, 0 for odd vertex count. Same vertex cap as the enumerator.
Rational matching_sum(const PlaneGraph& g);

// Skew adjacency matrix of an orientation: +w on arcs, -w opposite, 0 when
// no edge.
SkewMatrix skew_adjacency(const PlaneGraph& g, const Orientation& o);

// Orientation making every bounded face have an odd number of clockwise
// boundary edges. Spanning-tree construction: tree edges keep their stored
// direction, non-tree edges are fixed walking the dual tree leaves-first.
Orientation kasteleyn_orient(const PlaneGraph& g);

// Same, but the given arcs (tail, head) are pinned; their edges must be
// pairwise independent (they are forced into the spanning tree).
Orientation kasteleyn_orient_extending(
    const PlaneGraph& g, const std::vector<std::pair<int, int>>& fixed_arcs);

// Structural check: odd clockwise count on every bounded face.
bool kasteleyn_valid(const PlaneGraph& g, const Orientation& o);

// |Pf(A(G^e))| for a Kasteleyn orientation = the weighted perfect matching
// count. Connected input, nonnegative weights.
Rational count_via_pfaffian(const PlaneGraph& g);

// Replaces the arc (a -> b) of `edge_id` by a three-arc path
// a -> x -> y -> b on two new vertices with weights (w, 1, 1); the Pfaffian
// of the skew adjacency is unchanged. Exact-rational variant of the
// square-root subdivision.
std::pair<PlaneGraph, Orientation> bar_construction(const PlaneGraph& g,
                                                    const Orientation& o,
                                                    int edge_id);

// Matrix-level analogue: expands every masked pair of a skew matrix into the
// same three-arc gadget, giving an order n+2k matrix whose Pfaffian equals
// Pf(A) and whose leading n x n block is the masked matrix.
SkewMatrix bar_expand(const SkewMatrix& a, const PairSet& e);

// --- quadratic matching-count identities (all counts by the brute-force
// oracle; zero residual on every valid input) ---

// Bipartite, a/b/c/d a 4-cycle face with a, c in one class.
Rational residual_propp(const PlaneGraph& g, int a, int b, int c, int d);
// Bipartite, cyclic on a face; kase 1: a,c same class; kase 2: a,b same.
Rational residual_kuo(const PlaneGraph& g, int a, int b, int c, int d,
                      int kase);
// Any plane graph, four vertices in cyclic order on one face.
Rational residual_kenyon(const PlaneGraph& g, int a, int b, int c, int d);
// a_1,b_1,...,a_k,b_k in cyclic order on one face; alternating subset sums
// over the b-side. k <= 6.
Rational residual_yyz(const PlaneGraph& g, const std::vector<int>& a_set,
                      const std::vector<int>& b_set, int j);
// k >= 2 pairwise independent edges whose endpoints lie in cyclic order
// a_1,b_1,...,a_k,b_k on a common face; j is the distinguished edge.
Rational residual_edge_condensation(const PlaneGraph& g,
                                    const std::vector<int>& x_edges, int j);

// Four outer-face vertices in cyclic order: the four Pfaffian minor products
// never disagree in sign under a Kasteleyn orientation.
bool same_sign_check(const PlaneGraph& g, int a, int b, int c, int d);

struct CondenseResult {
  Rational value;
  int fallbacks = 0;  // subproblems solved via count_via_pfaffian instead
};

// Weighted matching count driven by the edge-condensation identity:
// pick two independent boundary edges X on a face, solve the quadratic
// relation for M(G), recurse on the edge- and vertex-deleted subgraphs.
// Components multiply, pendant edges are forced, graphs of <= 6 vertices go
// to the oracle, and everything is memoized on the exact labeled subgraph.
// Nonnegative weights required.
CondenseResult condense_count(const PlaneGraph& g);

}  // namespace pfq
