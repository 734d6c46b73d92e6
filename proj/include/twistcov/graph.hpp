#pragma once

// Directed graphs, graphs with a fixed-point-free edge involution, paths,
// rotation systems and edge weights.
//
// Vertices and directed edges are dense indices. Multiple edges and loops are
// allowed; an edge is identified by its index, never by its endpoints.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcov/error.hpp"
#include "twistcov/poly.hpp"
#include "twistcov/scalar.hpp"

namespace twistcov {

using Vertex = int;
using EdgeId = int;

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string issue) { issues.push_back(std::move(issue)); }
};

class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int num_vertices) : num_vertices_(num_vertices) {}

  EdgeId add_edge(Vertex source, Vertex target);
  int add_vertex() { return num_vertices_++; }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(src_.size()); }
  Vertex src(EdgeId e) const { return src_[e]; }
  Vertex tgt(EdgeId e) const { return tgt_[e]; }

  /// D_v: edges with source v, in index order.
  std::vector<EdgeId> out_edges(Vertex v) const;
  /// D^v: edges with target v, in index order.
  std::vector<EdgeId> in_edges(Vertex v) const;

 private:
  int num_vertices_ = 0;
  std::vector<Vertex> src_;
  std::vector<Vertex> tgt_;
};

/// A directed graph together with an edge involution e ↦ ē. The constructor does
/// not validate; use validate_graph() on untrusted input.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices) : digraph_(num_vertices) {}
  Graph(DirectedGraph digraph, std::vector<EdgeId> inverse);

  /// Adds the pair e: s→t, ē: t→s and returns e (ē = e+1).
  EdgeId add_edge_pair(Vertex s, Vertex t);
  static Graph from_undirected(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  const DirectedGraph& digraph() const { return digraph_; }
  int num_vertices() const { return digraph_.num_vertices(); }
  int num_edges() const { return digraph_.num_edges(); }
  Vertex src(EdgeId e) const { return digraph_.src(e); }
  Vertex tgt(EdgeId e) const { return digraph_.tgt(e); }
  EdgeId inv(EdgeId e) const { return inverse_[e]; }
  std::vector<EdgeId> out_edges(Vertex v) const { return digraph_.out_edges(v); }
  std::vector<EdgeId> in_edges(Vertex v) const { return digraph_.in_edges(v); }

  /// Number of unoriented edges |E| = |D|/2.
  int num_unoriented() const;
  /// Canonical representative (lower index) of each unoriented edge, ascending.
  std::vector<EdgeId> unoriented_edges() const;
  /// Index of the unoriented edge containing e, in the order of unoriented_edges().
  int unoriented_index(EdgeId e) const;
  /// True when e is the canonical (lower index) representative of its pair.
  bool is_canonical(EdgeId e) const { return e <= inverse_[e]; }

 private:
  void rebuild_unoriented_index() const;

  DirectedGraph digraph_;
  std::vector<EdgeId> inverse_;
  mutable std::vector<int> unoriented_index_;
};

ValidationReport validate_graph(const Graph& g);

/// Strong connectivity of a digraph (every ordered pair joined by a directed path).
bool is_connected(const DirectedGraph& g);
/// Connectivity of a graph with involution (undirected reachability).
bool is_connected(const Graph& g);
/// Connected component label of every vertex (undirected reachability).
std::vector<int> connected_components(const Graph& g);

struct Path {
  Vertex base = 0;  // source of the path; the only datum when the path is empty
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }
};

Path constant_path(Vertex v);
Vertex path_source(const Path& p);
Vertex path_target(const Graph& g, const Path& p);
/// Checks consecutive edges chain (tgt(e_i) = src(e_{i+1})) and the base vertex.
bool is_valid_path(const Graph& g, const Path& p);
bool is_loop(const Graph& g, const Path& p);
Path concat(const Graph& g, const Path& a, const Path& b);
Path reverse_path(const Graph& g, const Path& p);

/// Per-vertex cyclic order of the edges with source at that vertex.
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;
};

struct FaceStructure {
  std::vector<std::vector<EdgeId>> walks;
  int euler_characteristic = 0;
};

/// Face boundary walks: after e, continue with the rotation successor of ē at t(e).
FaceStructure faces(const Graph& g, const RotationSystem& rot);
void check_rotation(const Graph& g, const RotationSystem& rot);

enum class WeightSymmetry { None, Symmetric, Antisymmetric };

/// Weight per directed edge with a declared symmetry constraint.
template <class S>
struct EdgeWeights {
  std::vector<S> values;
  WeightSymmetry symmetry = WeightSymmetry::None;

  const S& operator[](EdgeId e) const { return values[e]; }
};

template <class S>
ValidationReport validate_weights(const Graph& g, const EdgeWeights<S>& w) {
  ValidationReport r;
  if (static_cast<int>(w.values.size()) != g.num_edges()) {
    r.add("weight count " + std::to_string(w.values.size()) + " differs from edge count " +
          std::to_string(g.num_edges()));
    return r;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!g.is_canonical(e)) continue;
    const S& a = w.values[e];
    const S& b = w.values[g.inv(e)];
    if (w.symmetry == WeightSymmetry::Symmetric && !(a == b))
      r.add("weight of edge " + std::to_string(e) + " differs from its inverse");
    if (w.symmetry == WeightSymmetry::Antisymmetric && !(a == S(0) - b))
      r.add("weight of edge " + std::to_string(e) + " is not the negative of its inverse");
  }
  return r;
}

/// Registry with one variable x_i per unoriented edge i of g.
RegistryPtr edge_registry(const Graph& g);

/// Symmetric symbolic weights x_e = x_{unoriented index of e}.
template <class C = Rational>
EdgeWeights<Poly<C>> symbolic_weights(const Graph& g, const RegistryPtr& reg = nullptr) {
  RegistryPtr r = reg ? reg : edge_registry(g);
  EdgeWeights<Poly<C>> w;
  w.symmetry = WeightSymmetry::Symmetric;
  w.values.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) w.values.push_back(Poly<C>::variable(r, g.unoriented_index(e)));
  return w;
}

template <class S>
EdgeWeights<S> constant_weights(const Graph& g, const S& value) {
  return EdgeWeights<S>{std::vector<S>(g.num_edges(), value), WeightSymmetry::Symmetric};
}

/// Symmetric weights from one value per unoriented edge.
template <class S>
EdgeWeights<S> weights_from_unoriented(const Graph& g, const std::vector<S>& per_edge) {
  if (static_cast<int>(per_edge.size()) != g.num_unoriented())
    throw Error(Errc::MissingWeight, "expected one weight per unoriented edge");
  EdgeWeights<S> w;
  w.symmetry = WeightSymmetry::Symmetric;
  for (EdgeId e = 0; e < g.num_edges(); ++e) w.values.push_back(per_edge[g.unoriented_index(e)]);
  return w;
}

}  // namespace twistcov
