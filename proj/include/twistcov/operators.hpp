#pragma once

// The twisted weighted adjacency operator and the graphs it is applied to:
// Laplacians (directly or through the loop-augmented digraph), Kasteleyn
// skew-adjacency weightings and the non-backtracking line digraph.

#include <optional>
#include <vector>

#include "twistcov/graph.hpp"
#include "twistcov/matrix.hpp"
#include "twistcov/representation.hpp"

namespace twistcov {

/// Block (v,w) = Σ_{e: v→w} x_e·φ_e, with m×m blocks; vertex v occupies rows v·m..v·m+m-1.
template <class S, class T>
Matrix<S> twisted_adjacency(const DirectedGraph& g, const std::vector<S>& x, const Connection<T>& c) {
  if (static_cast<int>(x.size()) != g.num_edges()) throw Error(Errc::MissingWeight, "a weight is required on every edge");
  if (static_cast<int>(c.phi.size()) != g.num_edges())
    throw Error(Errc::MissingConnectionEntry, "the connection must be defined on every edge");
  const int m = c.degree;
  Matrix<S> a = zeros<S>(g.num_vertices() * m, g.num_vertices() * m);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (ScalarTraits<S>::is_zero(x[e])) continue;
    const Matrix<T>& phi = c.phi[e];
    if (phi.rows() != m || phi.cols() != m)
      throw Error(Errc::MissingConnectionEntry, "connection matrix of the wrong size");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!ScalarTraits<T>::is_zero(phi(i, j))) a(g.src(e) * m + i, g.tgt(e) * m + j) += x[e] * S(phi(i, j));
  }
  return a;
}

template <class S, class T>
Matrix<S> twisted_adjacency(const Graph& g, const EdgeWeights<S>& x, const Connection<T>& c) {
  return twisted_adjacency(g.digraph(), x.values, c);
}

template <class S>
Matrix<S> adjacency(const Graph& g, const EdgeWeights<S>& x) {
  return twisted_adjacency(g, x, trivial_connection<S>(g));
}

/// Δ^φ f(v) = Σ_{e∈D_v} x_e (f(v) − φ_e f(t(e))), assembled directly.
template <class S, class T>
Matrix<S> twisted_laplacian(const Graph& g, const EdgeWeights<S>& x, const Connection<T>& c) {
  if (static_cast<int>(x.values.size()) != g.num_edges()) throw Error(Errc::MissingWeight, "a weight is required on every edge");
  if (!validate_weights(g, EdgeWeights<S>{x.values, WeightSymmetry::Symmetric}).ok())
    throw Error(Errc::WeightsNotSymmetric, "Laplacian weights must be symmetric");
  Matrix<S> a = twisted_adjacency(g.digraph(), x.values, c);
  const int m = c.degree;
  Matrix<S> lap = zeros<S>(a.rows(), a.cols());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (int i = 0; i < m; ++i) lap(g.src(e) * m + i, g.src(e) * m + i) += x[e];
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) lap(i, j) -= a(i, j);
  return lap;
}

template <class S>
Matrix<S> laplacian(const Graph& g, const EdgeWeights<S>& x) {
  return twisted_laplacian(g, x, trivial_connection<S>(g));
}

/// The digraph obtained by adding a loop at every vertex, weighted by −Σ x_e, whose
/// adjacency operator is −Δ. `origin[e]` is the edge of G behind e, or -1 for an
/// added loop (mapped to the trivial word).
template <class S>
struct LaplacianExtension {
  DirectedGraph digraph;
  std::vector<S> weights;
  std::vector<EdgeId> origin;
};

template <class S>
LaplacianExtension<S> laplacian_extension(const Graph& g, const EdgeWeights<S>& x) {
  if (!validate_weights(g, EdgeWeights<S>{x.values, WeightSymmetry::Symmetric}).ok())
    throw Error(Errc::WeightsNotSymmetric, "Laplacian weights must be symmetric");
  LaplacianExtension<S> ext;
  ext.digraph = g.digraph();
  ext.weights = x.values;
  ext.origin.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) ext.origin[e] = e;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    S total(0);
    for (EdgeId e : g.out_edges(v)) total += x[e];
    ext.digraph.add_edge(v, v);
    ext.weights.push_back(S(0) - total);
    ext.origin.push_back(-1);
  }
  return ext;
}

/// Pulls a connection on G back along `origin` (identity on added loops / unmapped edges).
template <class T>
Connection<T> pullback_connection(const std::vector<EdgeId>& origin, const Connection<T>& c) {
  Connection<T> out{c.degree, {}};
  for (EdgeId e : origin) out.phi.push_back(e < 0 ? identity<T>(c.degree) : c.phi.at(e));
  return out;
}

// ---------------------------------------------------------------------------
// Kasteleyn orientations

/// Chosen directed representative of each unoriented edge (indexed by unoriented index).
struct Orientation {
  std::vector<EdgeId> chosen;
};

struct FaceParity {
  int face = 0;
  int length = 0;
  int clockwise = 0;  // edges traversed along their chosen orientation
  bool bounded = true;
  bool odd() const { return clockwise % 2 == 1; }
};

struct KasteleynReport {
  std::vector<FaceParity> faces;
  int outer_face = 0;
  int euler_characteristic = 0;
  bool pass = false;
};

/// Index of the default outer face: the longest walk (first one on ties).
int default_outer_face(const FaceStructure& fs);

KasteleynReport check_clockwise_odd(const Graph& g, const RotationSystem& rot, const Orientation& orient,
                                    std::optional<int> outer_face = std::nullopt);

/// Spanning tree oriented canonically, then non-tree edges fixed face by face along
/// the dual tree from the leaves inward. Throws NotPlanar / NotConnected.
Orientation kasteleyn_orientation(const Graph& g, const RotationSystem& rot,
                                  std::optional<int> outer_face = std::nullopt);

Orientation canonical_orientation(const Graph& g);

template <class S>
EdgeWeights<S> kasteleyn_weights(const Graph& g, const Orientation& orient, const EdgeWeights<S>& x) {
  EdgeWeights<S> out;
  out.symmetry = WeightSymmetry::Antisymmetric;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool along = orient.chosen.at(g.unoriented_index(e)) == e;
    out.values.push_back(along ? x[e] : S(0) - x[e]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Line digraph

struct LineDigraph {
  DirectedGraph digraph;  // vertex k is directed edge k of G
  std::vector<std::pair<EdgeId, EdgeId>> arcs;
  /// α: arc (e,e') ↦ e.
  std::vector<EdgeId> origin;
};

LineDigraph line_digraph(const Graph& g);

/// x_{(e,e')} = x_e.
template <class S>
std::vector<S> line_weights(const LineDigraph& ld, const EdgeWeights<S>& x) {
  std::vector<S> w;
  w.reserve(ld.arcs.size());
  for (EdgeId e : ld.origin) w.push_back(x[e]);
  return w;
}

}  // namespace twistcov
