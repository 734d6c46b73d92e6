#pragma once

// Brute-force ground truth by exhaustive enumeration. Nothing here uses the
// determinant, Laplacian or covering code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "twistcov/graph.hpp"
#include "twistcov/matrix.hpp"

namespace twistcov {

namespace oracle_detail {

struct Dsu {
  std::vector<int> up;
  std::vector<int> size;
  explicit Dsu(int n) : up(n), size(n, 1) { std::iota(up.begin(), up.end(), 0); }
  int root(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool join(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    up[b] = a;
    size[a] += size[b];
    return true;
  }
};

struct SimpleEdge {
  int u, v;
};

inline std::vector<SimpleEdge> edge_list(const Graph& g) {
  std::vector<SimpleEdge> out;
  for (EdgeId e : g.unoriented_edges()) out.push_back({g.src(e), g.tgt(e)});
  return out;
}

}  // namespace oracle_detail

template <class S>
struct TreeEnumeration {
  long long count = 0;
  S partition{};
};

/// Σ over spanning trees of the product of the (unoriented) edge weights.
template <class S>
TreeEnumeration<S> enum_spanning_trees(const Graph& g, const std::vector<S>& weight_per_edge) {
  auto edges = oracle_detail::edge_list(g);
  const int n = g.num_vertices();
  const int ne = static_cast<int>(edges.size());
  if (ne > 24) throw Error(Errc::BudgetExceeded, "spanning tree enumeration limited to 24 edges");
  TreeEnumeration<S> res;
  res.partition = S(0);
  const int k = n - 1;
  if (k > ne) return res;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    oracle_detail::Dsu dsu(n);
    bool acyclic = true;
    for (int i : pick)
      if (!dsu.join(edges[i].u, edges[i].v)) {
        acyclic = false;
        break;
      }
    if (acyclic) {
      ++res.count;
      S term(1);
      for (int i : pick) term = term * weight_per_edge[i];
      res.partition = res.partition + term;
    }
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == ne - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return res;
}

template <class S>
struct ForestEnumeration {
  S rsf{};                   // Σ_F φ(F) Π x, φ(F) = product of tree sizes
  std::vector<S> by_components;  // index i: forests with exactly i trees
};

/// Rooted spanning forests, tallied by number of components.
template <class S>
ForestEnumeration<S> enum_rooted_forests(const Graph& g, const std::vector<S>& weight_per_edge) {
  auto edges = oracle_detail::edge_list(g);
  const int n = g.num_vertices();
  const int ne = static_cast<int>(edges.size());
  if (ne > 20) throw Error(Errc::BudgetExceeded, "forest enumeration limited to 20 edges");
  ForestEnumeration<S> res;
  res.rsf = S(0);
  res.by_components.assign(n + 1, S(0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << ne); ++mask) {
    oracle_detail::Dsu dsu(n);
    bool acyclic = true;
    S term(1);
    for (int i = 0; i < ne && acyclic; ++i) {
      if (!(mask >> i & 1u)) continue;
      acyclic = dsu.join(edges[i].u, edges[i].v);
      term = term * weight_per_edge[i];
    }
    if (!acyclic) continue;
    long long phi = 1;
    int components = 0;
    for (int v = 0; v < n; ++v)
      if (dsu.root(v) == v) {
        phi *= dsu.size[v];
        ++components;
      }
    S weighted = term * S(static_cast<long>(phi));
    res.rsf = res.rsf + weighted;
    res.by_components[components] = res.by_components[components] + weighted;
  }
  return res;
}

template <class S>
struct MatchingEnumeration {
  long long count = 0;
  S partition{};
};

/// Perfect matchings by backtracking on the lowest unmatched vertex.
template <class S>
MatchingEnumeration<S> enum_perfect_matchings(const Graph& g, const std::vector<S>& weight_per_edge) {
  auto edges = oracle_detail::edge_list(g);
  const int n = g.num_vertices();
  if (n > 20) throw Error(Errc::BudgetExceeded, "matching enumeration limited to 20 vertices");
  MatchingEnumeration<S> res;
  res.partition = S(0);
  if (n % 2 == 1) return res;
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].u == edges[i].v) continue;
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<char> matched(n, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      ++res.count;
      S term(1);
      for (int i : chosen) term = term * weight_per_edge[i];
      res.partition = res.partition + term;
      return;
    }
    matched[v] = 1;
    for (int i : incident[v]) {
      const int w = edges[i].u == v ? edges[i].v : edges[i].u;
      if (matched[w]) continue;
      matched[w] = 1;
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
      matched[w] = 0;
    }
    matched[v] = 0;
  };
  rec(rec);
  return res;
}

/// Σ over permutations of signed products; n ≤ 7.
template <class S>
S det_leibniz(const Matrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "Leibniz determinant of a non-square matrix");
  if (n > 7) throw Error(Errc::TooLarge, "Leibniz determinant limited to n <= 7");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  S total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    S term(1);
    for (int i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Weights per unoriented edge read off symmetric directed-edge weights.
template <class S>
std::vector<S> unoriented_weights(const Graph& g, const EdgeWeights<S>& x) {
  std::vector<S> out;
  for (EdgeId e : g.unoriented_edges()) out.push_back(x[e]);
  return out;
}

}  // namespace twistcov
