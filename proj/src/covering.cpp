#include "twistcov/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace twistcov {

bool is_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_transitive(const std::vector<Permutation>& gens, int degree) {
  if (degree <= 1) return true;
  std::vector<char> seen(degree, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const auto& g : gens) {
      for (int y : {g[x], invert(g)[x]}) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          q.push(y);
        }
      }
    }
  }
  return count == degree;
}

VoltageAssignment identity_voltage(int rank, int degree) {
  return VoltageAssignment{degree, std::vector<Permutation>(rank, identity_permutation(degree))};
}

Permutation evaluate_voltage(const VoltageAssignment& v, const FreeWord& w) {
  Permutation s = identity_permutation(v.degree);
  for (const Letter& l : w.letters) {
    const Permutation& g = v.perms.at(l.gen);
    s = compose(l.exp > 0 ? g : invert(g), s);
  }
  return s;
}

std::vector<Vertex> CoveringMap::fiber(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < static_cast<Vertex>(vertex_map.size()); ++u)
    if (vertex_map[u] == v) out.push_back(u);
  return out;
}

CoveringMap build_cover(const Pi1Presentation& base, const VoltageAssignment& volt) {
  const Graph& g = base.graph;
  if (!is_connected(g)) throw Error(Errc::NotConnected, "base graph is not connected");
  const int d = volt.degree;
  if (d < 1) throw Error(Errc::SemanticError, "cover degree must be positive");
  if (static_cast<int>(volt.perms.size()) != base.rank())
    throw Error(Errc::SemanticError, "voltage needs one permutation per generator");
  for (const auto& p : volt.perms)
    if (!is_permutation(p, d)) throw Error(Errc::SemanticError, "voltage is not a permutation");

  DirectedGraph dg(g.num_vertices() * d);
  std::vector<EdgeId> inverse(static_cast<std::size_t>(g.num_edges()) * d);
  std::vector<Vertex> vmap(static_cast<std::size_t>(g.num_vertices()) * d);
  std::vector<EdgeId> emap(inverse.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < d; ++i) vmap[v * d + i] = v;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Permutation s = evaluate_voltage(volt, edge_class(base, e));
    for (int i = 0; i < d; ++i) {
      dg.add_edge(g.src(e) * d + i, g.tgt(e) * d + s[i]);
      emap[e * d + i] = e;
      inverse[e * d + i] = g.inv(e) * d + s[i];
    }
  }
  CoveringMap p;
  p.cover = Graph(std::move(dg), std::move(inverse));
  p.base = base;
  p.vertex_map = std::move(vmap);
  p.edge_map = std::move(emap);
  p.degree = d;
  p.lifted_base = base.base() * d;
  return p;
}

CoveringMap make_covering(Graph cover, Pi1Presentation base, std::vector<Vertex> vertex_map,
                          std::vector<EdgeId> edge_map, Vertex lifted_base) {
  CoveringMap p;
  p.cover = std::move(cover);
  p.base = std::move(base);
  p.vertex_map = std::move(vertex_map);
  p.edge_map = std::move(edge_map);
  p.lifted_base = lifted_base;
  p.degree = static_cast<int>(p.fiber(p.base_vertex()).size());
  return p;
}

ValidationReport validate_covering(const CoveringMap& p) {
  ValidationReport r;
  const Graph& c = p.cover;
  const Graph& b = p.base_graph();
  if (static_cast<int>(p.vertex_map.size()) != c.num_vertices() ||
      static_cast<int>(p.edge_map.size()) != c.num_edges()) {
    r.add("map sizes differ from the cover graph");
    return r;
  }
  for (Vertex v : p.vertex_map)
    if (v < 0 || v >= b.num_vertices()) {
      r.add("vertex map leaves the base graph");
      return r;
    }
  for (EdgeId e : p.edge_map)
    if (e < 0 || e >= b.num_edges()) {
      r.add("edge map leaves the base graph");
      return r;
    }
  std::vector<int> fiber_size(b.num_vertices(), 0);
  for (Vertex v : p.vertex_map) ++fiber_size[v];
  for (Vertex v = 0; v < b.num_vertices(); ++v)
    if (fiber_size[v] == 0) r.add("vertex map is not surjective at v" + std::to_string(v));
  for (Vertex v = 0; v < b.num_vertices(); ++v)
    if (fiber_size[v] != fiber_size[0]) {
      r.add("fiber size mismatch at v" + std::to_string(v));
      break;
    }
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    EdgeId f = p.edge_map[e];
    if (b.src(f) != p.vertex_map[c.src(e)]) r.add("edge map does not commute with source at e" + std::to_string(e));
    if (b.tgt(f) != p.vertex_map[c.tgt(e)]) r.add("edge map does not commute with target at e" + std::to_string(e));
    if (p.edge_map[c.inv(e)] != b.inv(f)) r.add("edge map does not commute with involution at e" + std::to_string(e));
  }
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    for (bool outgoing : {true, false}) {
      std::vector<EdgeId> up = outgoing ? c.out_edges(v) : c.in_edges(v);
      std::vector<EdgeId> down = outgoing ? b.out_edges(p.vertex_map[v]) : b.in_edges(p.vertex_map[v]);
      std::vector<EdgeId> image;
      for (EdgeId e : up) image.push_back(p.edge_map[e]);
      std::sort(image.begin(), image.end());
      if (image != down) {
        r.add("local bijection fails at v" + std::to_string(v));
        break;
      }
    }
  }
  if (p.lifted_base < 0 || p.lifted_base >= c.num_vertices() || p.vertex_map[p.lifted_base] != p.base_vertex())
    r.add("lifted base vertex is not over the base vertex");
  return r;
}

bool is_cover_connected(const CoveringMap& p) { return is_connected(p.cover); }

void require_connected_cover(const CoveringMap& p) {
  if (!is_cover_connected(p)) throw Error(Errc::CoverNotConnected, "covering graph is not connected");
}

Path project_path(const CoveringMap& p, const Path& path) {
  Path out{p.vertex_map.at(path.base), {}};
  for (EdgeId e : path.edges) out.edges.push_back(p.edge_map[e]);
  return out;
}

Path lift_path(const CoveringMap& p, const Path& path, Vertex start) {
  if (start < 0 || start >= p.cover.num_vertices() || p.vertex_map[start] != path.base)
    throw Error(Errc::StartNotInFiber, "start vertex is not over the source of the path");
  Path lift{start, {}};
  Vertex at = start;
  for (EdgeId e : path.edges) {
    EdgeId found = -1;
    for (EdgeId f : p.cover.out_edges(at))
      if (p.edge_map[f] == e) {
        found = f;
        break;
      }
    if (found < 0) throw Error(Errc::StartNotInFiber, "path leaves the image of the covering");
    lift.edges.push_back(found);
    at = p.cover.tgt(found);
  }
  return lift;
}

Vertex fiber_action(const CoveringMap& p, const FreeWord& w, Vertex v) {
  if (v < 0 || v >= p.cover.num_vertices() || p.vertex_map[v] != p.base_vertex())
    throw Error(Errc::VertexNotInBaseFiber, "vertex is not over the base vertex");
  return path_target(p.cover, lift_path(p, word_to_loop(p.base, w), v));
}

Vertex left_action(const CoveringMap& p, const FreeWord& w, Vertex v) {
  return fiber_action(p, inverse_word(w), v);
}

std::vector<Permutation> monodromy_permutations(const CoveringMap& p) {
  const auto fib = p.fiber(p.base_vertex());
  std::map<Vertex, int> pos;
  for (std::size_t k = 0; k < fib.size(); ++k) pos[fib[k]] = static_cast<int>(k);
  std::vector<Permutation> out;
  for (int g = 0; g < p.base.rank(); ++g) {
    Permutation perm(fib.size());
    for (std::size_t k = 0; k < fib.size(); ++k) perm[k] = pos.at(fiber_action(p, generator_word(g), fib[k]));
    out.push_back(std::move(perm));
  }
  return out;
}

namespace {

// Fiber positions acted on by a word through precomputed generator permutations.
int act(const std::vector<Permutation>& perms, const std::vector<Permutation>& inverses, const FreeWord& w, int k) {
  for (const Letter& l : w.letters) k = l.exp > 0 ? perms[l.gen][k] : inverses[l.gen][k];
  return k;
}

}  // namespace

bool GaloisGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

int GaloisGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (table[a][b] == identity) return b;
  throw Error(Errc::InternalCosetError, "group element without inverse");
}

int GaloisGroup::power(int a, int k) const {
  int r = identity;
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = table[r][a];
  return r;
}

int GaloisGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity; x = table[x][a]) ++k;
  return k;
}

NormalityResult is_normal(const CoveringMap& p) {
  require_connected_cover(p);
  const int d = p.degree;
  auto perms = monodromy_permutations(p);
  // Closure of the monodromy group, abandoned once it exceeds d elements.
  std::set<Permutation> group{identity_permutation(d)};
  std::queue<Permutation> frontier;
  frontier.push(identity_permutation(d));
  while (!frontier.empty() && static_cast<int>(group.size()) <= d) {
    Permutation x = frontier.front();
    frontier.pop();
    for (const auto& g : perms) {
      Permutation y = compose(g, x);
      if (group.insert(y).second) frontier.push(y);
    }
  }
  NormalityResult res;
  res.normal = static_cast<int>(group.size()) == d;
  if (!res.normal) return res;

  GaloisGroup G;
  G.fiber = p.fiber(p.base_vertex());
  const int n = static_cast<int>(G.fiber.size());
  G.identity = static_cast<int>(std::find(G.fiber.begin(), G.fiber.end(), p.lifted_base) - G.fiber.begin());
  std::vector<Permutation> inverses;
  for (const auto& g : perms) inverses.push_back(invert(g));
  // Schreier words: alpha[k] moves ṽ₀ to fiber[k] under fiber_action.
  std::vector<std::optional<FreeWord>> alpha(n);
  alpha[G.identity] = FreeWord{};
  std::queue<int> q;
  q.push(G.identity);
  while (!q.empty()) {
    int k = q.front();
    q.pop();
    for (int g = 0; g < p.base.rank(); ++g)
      for (int e : {1, -1}) {
        int j = e > 0 ? perms[g][k] : inverses[g][k];
        if (alpha[j]) continue;
        FreeWord w = *alpha[k];
        w.letters.push_back({g, e});
        alpha[j] = reduce_word(w);
        q.push(j);
      }
  }
  G.deck.assign(n, Permutation(n));
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) G.deck[a][k] = act(perms, inverses, *alpha[k], a);
  G.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[a][b] = G.deck[a][b];
  for (int g = 0; g < p.base.rank(); ++g) G.generator_images.push_back(perms[g][G.identity]);
  res.group = std::move(G);
  return res;
}

GaloisGroup galois_group(const CoveringMap& p) {
  auto res = is_normal(p);
  if (!res.normal) throw Error(Errc::NotNormal, "covering is not normal");
  return *res.group;
}

int project_to_galois(const CoveringMap& p, const GaloisGroup& g, const FreeWord& w) {
  Vertex end = fiber_action(p, w, p.lifted_base);
  return static_cast<int>(std::find(g.fiber.begin(), g.fiber.end(), end) - g.fiber.begin());
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

CosetData coset_data(const CoveringMap& p) {
  require_connected_cover(p);
  const Graph& c = p.cover;
  const Graph& b = p.base_graph();
  UnionFind uf(c.num_vertices());
  std::vector<EdgeId> tree_edges;
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    if (!c.is_canonical(e) || !p.base.tree.in_tree[p.edge_map[e]]) continue;
    if (!uf.unite(c.src(e), c.tgt(e)))
      throw Error(Errc::TransversalCheckFailed, "lifted base tree contains a circuit");
    tree_edges.push_back(e);
  }
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    if (!c.is_canonical(e) || p.base.tree.in_tree[p.edge_map[e]]) continue;
    if (uf.unite(c.src(e), c.tgt(e))) tree_edges.push_back(e);
  }
  CosetData cd;
  cd.cover_presentation = make_presentation(c, spanning_tree_from_edges(c, p.lifted_base, tree_edges));
  const SpanningTree& T = cd.cover_presentation.tree;
  cd.coset_word.resize(c.num_vertices());
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    Path down = tree_path(b, p.base.tree, p.vertex_map[v]);
    Path back = project_path(p, reverse_path(c, tree_path(c, T, v)));
    cd.coset_word[v] = loop_to_word(p.base, concat(b, down, back));
  }
  cd.fiber = p.fiber(p.base_vertex());
  for (std::size_t r = 0; r < cd.fiber.size(); ++r) {
    cd.transversal.push_back(cd.coset_word[cd.fiber[r]]);
    if (cd.fiber[r] == p.lifted_base) cd.identity_coset = static_cast<int>(r);
  }
  if (!cd.coset_word[p.lifted_base].empty())
    throw Error(Errc::TransversalCheckFailed, "coset word of the lifted base vertex is not trivial");
  for (std::size_t r = 0; r < cd.fiber.size(); ++r)
    if (left_action(p, cd.transversal[r], p.lifted_base) != cd.fiber[r])
      throw Error(Errc::TransversalCheckFailed, "coset words do not form a transversal");
  return cd;
}

int coset_of(const CoveringMap& p, const CosetData& cd, const FreeWord& w) {
  Vertex v = left_action(p, w, p.lifted_base);
  auto it = std::find(cd.fiber.begin(), cd.fiber.end(), v);
  if (it == cd.fiber.end()) throw Error(Errc::InternalCosetError, "fiber point outside the base fiber");
  return static_cast<int>(it - cd.fiber.begin());
}

FreeWord express_in_subgroup(const CoveringMap& p, const CosetData& cd, const FreeWord& h) {
  Path lift = lift_path(p, word_to_loop(p.base, h), p.lifted_base);
  if (path_target(p.cover, lift) != p.lifted_base)
    throw Error(Errc::NotInSubgroup, "word " + to_string(h) + " does not lift to a loop");
  return loop_to_word(cd.cover_presentation, lift);
}

FreeWord project_word(const CoveringMap& p, const CosetData& cd, const FreeWord& cover_word) {
  return loop_to_word(p.base, project_path(p, word_to_loop(cd.cover_presentation, cover_word)));
}

}  // namespace twistcov
