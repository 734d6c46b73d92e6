#pragma once

// Spanning trees, reduced words in free groups, and the presentation of the
// fundamental group π₁(Γ,T) whose generators are the non-tree unoriented edges.

#include <string>
#include <vector>

#include "twistcov/graph.hpp"

namespace twistcov {

struct SpanningTree {
  Vertex root = 0;
  /// Directed edge from v toward its parent (source v); -1 at the root.
  std::vector<EdgeId> parent;
  std::vector<int> depth;
  /// Per directed edge: whether its unoriented edge lies in the tree.
  std::vector<char> in_tree;

  int num_tree_edges() const;
};

/// BFS tree from root, scanning outgoing edges in index order.
SpanningTree spanning_tree(const Graph& g, Vertex root);

/// Tree spanned by the given unoriented edges (one directed representative each).
/// Throws NotConnected if they do not form a spanning tree.
SpanningTree spanning_tree_from_edges(const Graph& g, Vertex root, const std::vector<EdgeId>& tree_edges);

/// The unique reduced path in T from the root to v.
Path tree_path(const Graph& g, const SpanningTree& t, Vertex v);

struct Letter {
  int gen = 0;
  int exp = 1;  // ±1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct FreeWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord reduce_word(const FreeWord& w);
FreeWord inverse_word(const FreeWord& w);
/// Reduced product a·b.
FreeWord multiply_words(const FreeWord& a, const FreeWord& b);
FreeWord generator_word(int gen, int exp = 1);
/// "g0 g1^-1 ..." or "1" for the empty word.
std::string to_string(const FreeWord& w);

struct Pi1Presentation {
  Graph graph;
  SpanningTree tree;
  /// Preferred directed edge of each generator, ascending.
  std::vector<EdgeId> generators;
  /// Per directed edge: generator index or -1 for tree edges.
  std::vector<int> gen_of_edge;
  /// Per directed edge: +1 along the preferred orientation, -1 against.
  std::vector<int> sign_of_edge;

  int rank() const { return static_cast<int>(generators.size()); }
  Vertex base() const { return tree.root; }
};

Pi1Presentation make_presentation(const Graph& g, const SpanningTree& t);
/// Presentation with the BFS tree rooted at `root`; throws NotConnected.
Pi1Presentation make_presentation(const Graph& g, Vertex root = 0);

FreeWord loop_to_word(const Pi1Presentation& p, const Path& loop);
/// Word of γ_{s(e)} · e · γ̄_{t(e)}.
FreeWord edge_class(const Pi1Presentation& p, EdgeId e);
/// A loop at the base vertex representing w.
Path word_to_loop(const Pi1Presentation& p, const FreeWord& w);

}  // namespace twistcov
