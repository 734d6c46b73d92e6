#include "twistcov/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace twistcov {

EdgeId DirectedGraph::add_edge(Vertex source, Vertex target) {
  if (source < 0 || target < 0 || source >= num_vertices_ || target >= num_vertices_)
    throw Error(Errc::SemanticError, "edge endpoint out of range");
  src_.push_back(source);
  tgt_.push_back(target);
  return static_cast<EdgeId>(src_.size() - 1);
}

std::vector<EdgeId> DirectedGraph::out_edges(Vertex v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (src_[e] == v) out.push_back(e);
  return out;
}

std::vector<EdgeId> DirectedGraph::in_edges(Vertex v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (tgt_[e] == v) out.push_back(e);
  return out;
}

Graph::Graph(DirectedGraph digraph, std::vector<EdgeId> inverse)
    : digraph_(std::move(digraph)), inverse_(std::move(inverse)) {
  if (static_cast<int>(inverse_.size()) != digraph_.num_edges())
    throw Error(Errc::SemanticError, "involution size differs from edge count");
  for (EdgeId e : inverse_)
    if (e < 0 || e >= digraph_.num_edges()) throw Error(Errc::SemanticError, "involution image out of range");
}

EdgeId Graph::add_edge_pair(Vertex s, Vertex t) {
  EdgeId e = digraph_.add_edge(s, t);
  EdgeId f = digraph_.add_edge(t, s);
  inverse_.push_back(f);
  inverse_.push_back(e);
  unoriented_index_.clear();
  return e;
}

Graph Graph::from_undirected(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(num_vertices);
  for (auto [s, t] : edges) g.add_edge_pair(s, t);
  return g;
}

int Graph::num_unoriented() const {
  int n = 0;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (inverse_[e] > e) ++n;
  return n;
}

std::vector<EdgeId> Graph::unoriented_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (inverse_[e] > e) out.push_back(e);
  return out;
}

void Graph::rebuild_unoriented_index() const {
  unoriented_index_.assign(num_edges(), -1);
  int k = 0;
  for (EdgeId e = 0; e < num_edges(); ++e)
    if (inverse_[e] > e) {
      unoriented_index_[e] = k;
      unoriented_index_[inverse_[e]] = k;
      ++k;
    }
}

int Graph::unoriented_index(EdgeId e) const {
  if (static_cast<int>(unoriented_index_.size()) != num_edges()) rebuild_unoriented_index();
  return unoriented_index_[e];
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport r;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EdgeId f = g.inv(e);
    if (f == e) {
      r.add("fixed-point involution at e" + std::to_string(e));
      continue;
    }
    if (g.inv(f) != e) r.add("involution is not an involution at e" + std::to_string(e));
    if (g.src(f) != g.tgt(e) || g.tgt(f) != g.src(e))
      r.add("involution breaks source/target swap at e" + std::to_string(e));
  }
  return r;
}

namespace {

std::vector<char> reachable(int n, const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(n, 0);
  if (n == 0) return seen;
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return seen;
}

}  // namespace

bool is_connected(const DirectedGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    fwd[g.src(e)].push_back(g.tgt(e));
    bwd[g.tgt(e)].push_back(g.src(e));
  }
  auto a = reachable(n, fwd, 0);
  auto b = reachable(n, bwd, 0);
  return std::all_of(a.begin(), a.end(), [](char c) { return c; }) &&
         std::all_of(b.begin(), b.end(), [](char c) { return c; });
}

std::vector<int> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    adj[g.src(e)].push_back(g.tgt(e));
    adj[g.tgt(e)].push_back(g.src(e));
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (label[v] >= 0) continue;
    auto seen = reachable(n, adj, v);
    for (int w = 0; w < n; ++w)
      if (seen[w]) label[w] = next;
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

Path constant_path(Vertex v) { return Path{v, {}}; }

Vertex path_source(const Path& p) { return p.base; }

Vertex path_target(const Graph& g, const Path& p) { return p.empty() ? p.base : g.tgt(p.edges.back()); }

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.base < 0 || p.base >= g.num_vertices()) return false;
  Vertex at = p.base;
  for (EdgeId e : p.edges) {
    if (e < 0 || e >= g.num_edges() || g.src(e) != at) return false;
    at = g.tgt(e);
  }
  return true;
}

bool is_loop(const Graph& g, const Path& p) { return path_source(p) == path_target(g, p); }

Path concat(const Graph& g, const Path& a, const Path& b) {
  if (path_target(g, a) != b.base) throw Error(Errc::SemanticError, "paths do not chain");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

Path reverse_path(const Graph& g, const Path& p) {
  Path out{path_target(g, p), {}};
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) out.edges.push_back(g.inv(*it));
  return out;
}

void check_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.num_vertices())
    throw Error(Errc::InvalidRotation, "rotation system must list every vertex");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> expected = g.out_edges(v);
    std::vector<EdgeId> given = rot.order[v];
    std::sort(given.begin(), given.end());
    if (given != expected)
      throw Error(Errc::InvalidRotation, "cyclic order at vertex " + std::to_string(v) +
                                             " is not a permutation of its outgoing edges");
  }
}

FaceStructure faces(const Graph& g, const RotationSystem& rot) {
  check_rotation(g, rot);
  std::vector<EdgeId> successor(g.num_edges(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& cyc = rot.order[v];
    for (std::size_t k = 0; k < cyc.size(); ++k) successor[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  FaceStructure fs;
  std::vector<char> used(g.num_edges(), 0);
  for (EdgeId start = 0; start < g.num_edges(); ++start) {
    if (used[start]) continue;
    std::vector<EdgeId> walk;
    EdgeId e = start;
    while (!used[e]) {
      used[e] = 1;
      walk.push_back(e);
      e = successor[g.inv(e)];
    }
    fs.walks.push_back(std::move(walk));
  }
  fs.euler_characteristic = g.num_vertices() - g.num_unoriented() + static_cast<int>(fs.walks.size());
  return fs;
}

RegistryPtr edge_registry(const Graph& g) { return make_indexed_registry("x", g.num_unoriented()); }

}  // namespace twistcov
