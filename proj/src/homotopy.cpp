#include "twistcov/homotopy.hpp"

#include <algorithm>
#include <queue>

namespace twistcov {

int SpanningTree::num_tree_edges() const {
  int n = 0;
  for (EdgeId p : parent)
    if (p >= 0) ++n;
  return n;
}

SpanningTree spanning_tree(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw Error(Errc::NotConnected, "root vertex out of range");
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  t.in_tree.assign(g.num_edges(), 0);
  t.depth[root] = 0;
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) out[g.src(e)].push_back(e);
  std::queue<Vertex> q;
  q.push(root);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (EdgeId e : out[u]) {
      Vertex w = g.tgt(e);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[u] + 1;
      t.parent[w] = g.inv(e);
      t.in_tree[e] = 1;
      t.in_tree[g.inv(e)] = 1;
      q.push(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (t.depth[v] < 0) throw Error(Errc::NotConnected, "graph is not connected");
  return t;
}

SpanningTree spanning_tree_from_edges(const Graph& g, Vertex root, const std::vector<EdgeId>& tree_edges) {
  const int n = g.num_vertices();
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  t.in_tree.assign(g.num_edges(), 0);
  for (EdgeId e : tree_edges) {
    t.in_tree[e] = 1;
    t.in_tree[g.inv(e)] = 1;
  }
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (t.in_tree[e]) out[g.src(e)].push_back(e);
  t.depth[root] = 0;
  std::queue<Vertex> q;
  q.push(root);
  int reached = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (EdgeId e : out[u]) {
      Vertex w = g.tgt(e);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[u] + 1;
      t.parent[w] = g.inv(e);
      ++reached;
      q.push(w);
    }
  }
  if (reached != n || static_cast<int>(tree_edges.size()) != n - 1)
    throw Error(Errc::NotConnected, "edges do not span the graph as a tree");
  return t;
}

Path tree_path(const Graph& g, const SpanningTree& t, Vertex v) {
  std::vector<EdgeId> up;
  for (Vertex at = v; at != t.root; at = g.tgt(t.parent[at])) up.push_back(t.parent[at]);
  Path p{t.root, {}};
  for (auto it = up.rbegin(); it != up.rend(); ++it) p.edges.push_back(g.inv(*it));
  return p;
}

FreeWord reduce_word(const FreeWord& w) {
  FreeWord out;
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen && out.letters.back().exp == -l.exp) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

FreeWord inverse_word(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->gen, -it->exp});
  return out;
}

FreeWord multiply_words(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return reduce_word(out);
}

FreeWord generator_word(int gen, int exp) { return FreeWord{{Letter{gen, exp}}}; }

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += " ";
    s += "g" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

Pi1Presentation make_presentation(const Graph& g, const SpanningTree& t) {
  Pi1Presentation p;
  p.graph = g;
  p.tree = t;
  p.gen_of_edge.assign(g.num_edges(), -1);
  p.sign_of_edge.assign(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.in_tree[e] || !g.is_canonical(e)) continue;
    const int gen = static_cast<int>(p.generators.size());
    p.generators.push_back(e);
    p.gen_of_edge[e] = gen;
    p.gen_of_edge[g.inv(e)] = gen;
    p.sign_of_edge[e] = 1;
    p.sign_of_edge[g.inv(e)] = -1;
  }
  return p;
}

Pi1Presentation make_presentation(const Graph& g, Vertex root) {
  return make_presentation(g, spanning_tree(g, root));
}

FreeWord loop_to_word(const Pi1Presentation& p, const Path& loop) {
  if (!is_loop(p.graph, loop)) throw Error(Errc::NotALoop, "path is not a loop");
  FreeWord w;
  for (EdgeId e : loop.edges)
    if (p.gen_of_edge[e] >= 0) w.letters.push_back({p.gen_of_edge[e], p.sign_of_edge[e]});
  return reduce_word(w);
}

FreeWord edge_class(const Pi1Presentation& p, EdgeId e) {
  if (p.gen_of_edge[e] < 0) return {};
  return generator_word(p.gen_of_edge[e], p.sign_of_edge[e]);
}

Path word_to_loop(const Pi1Presentation& p, const FreeWord& w) {
  const Graph& g = p.graph;
  Path loop{p.base(), {}};
  for (const Letter& l : w.letters) {
    EdgeId e = p.generators.at(l.gen);
    if (l.exp < 0) e = g.inv(e);
    Path there = tree_path(g, p.tree, g.src(e));
    Path back = reverse_path(g, tree_path(g, p.tree, g.tgt(e)));
    loop.edges.insert(loop.edges.end(), there.edges.begin(), there.edges.end());
    loop.edges.push_back(e);
    loop.edges.insert(loop.edges.end(), back.edges.begin(), back.edges.end());
  }
  return loop;
}

}  // namespace twistcov
