#pragma once

#include <random>
#include <vector>

#include "twistcov/covering.hpp"
#include "twistcov/graph.hpp"
#include "twistcov/homotopy.hpp"
#include "twistcov/representation.hpp"
#include "twistcov/theorems.hpp"

namespace fixtures {

using namespace twistcov;

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_undirected(n, edges);
}

inline Graph c3() { return cycle(3); }
inline Graph q4() { return cycle(4); }
inline Graph k2() { return Graph::from_undirected(2, {{0, 1}}); }

/// One vertex with two loops a (edges 0,1) and b (edges 2,3).
inline Graph b2() {
  Graph g(1);
  g.add_edge_pair(0, 0);
  g.add_edge_pair(0, 0);
  return g;
}

inline Graph k4() { return Graph::from_undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Cyclic ℤ/d cover: each generator shifts the fiber by the given amount.
inline CoveringMap cyclic_cover(const Graph& g, int d, const std::vector<int>& shifts) {
  Pi1Presentation pres = make_presentation(g, 0);
  VoltageAssignment v{d, {}};
  for (int s : shifts) {
    Permutation p(d);
    for (int i = 0; i < d; ++i) p[i] = ((i + s) % d + d) % d;
    v.perms.push_back(p);
  }
  return build_cover(pres, v);
}

inline CoveringMap c6_over_c3() { return cyclic_cover(c3(), 2, {1}); }

/// ℤ/4 cover of B2: a ↦ +1, b ↦ +2.
inline CoveringMap z4_tower() { return cyclic_cover(b2(), 4, {1, 2}); }

/// Triangle a,b,c (0,1,2) with a pendant p (3) attached to a.
inline Graph dimer_base() { return Graph::from_undirected(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }

inline RotationSystem dimer_rotation(const Graph& g) {
  RotationSystem r;
  for (Vertex v = 0; v < g.num_vertices(); ++v) r.order.push_back(g.out_edges(v));
  return r;
}

/// ℤ/3 shift on the generator bc.
inline CoveringMap dimer_cover() { return cyclic_cover(dimer_base(), 3, {1}); }

inline RotationSystem q4_rotation(const Graph& g) { return dimer_rotation(g); }

/// a ↦ (1,0), b ↦ (0,1) on B2.
inline TorusVoltage b2_torus_voltage() { return TorusVoltage{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}; }

}  // namespace fixtures
