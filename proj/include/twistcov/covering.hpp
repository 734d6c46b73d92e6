#pragma once

// Finite coverings of graphs: permutation-voltage construction, validation,
// path lifting, the monodromy action on the base fiber, normality and the
// coset data g_ṽ built from a spanning tree of the cover.
//
// Action conventions. fiber_action(w, ṽ) is the endpoint of the lift of a loop
// representing w that starts at ṽ. With paths concatenated left to right this
// is a right action: fiber_action(w1·w2, ṽ) = fiber_action(w2, fiber_action(w1, ṽ)).
// left_action(w, ṽ) = fiber_action(w⁻¹, ṽ) is the corresponding left action;
// the coset words satisfy left_action(g_ṽ, ṽ₀) = ṽ.

#include <optional>
#include <vector>

#include "twistcov/graph.hpp"
#include "twistcov/homotopy.hpp"

namespace twistcov {

using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p, int degree);
Permutation identity_permutation(int degree);
/// (a∘b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
/// Whether the group generated by `gens` acts transitively on {0..d-1}.
bool is_transitive(const std::vector<Permutation>& gens, int degree);

struct VoltageAssignment {
  int degree = 1;
  std::vector<Permutation> perms;  // one per generator of the base presentation
};

VoltageAssignment identity_voltage(int rank, int degree);
/// σ_w: letters applied left to right, σ_{w1 w2} = σ_{w2}∘σ_{w1}.
Permutation evaluate_voltage(const VoltageAssignment& v, const FreeWord& w);

struct CoveringMap {
  Graph cover;
  Pi1Presentation base;  // base graph, its tree and base vertex v₀ = base.base()
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
  int degree = 1;
  Vertex lifted_base = 0;

  const Graph& base_graph() const { return base.graph; }
  Vertex base_vertex() const { return base.base(); }
  /// Vertices over v, ascending.
  std::vector<Vertex> fiber(Vertex v) const;
};

/// Ṽ = V×{0..d-1} with (v,i) ↦ v·d+i; edge (e,i) ↦ e·d+i runs from (s(e),i) to (t(e),σ(i)).
CoveringMap build_cover(const Pi1Presentation& base, const VoltageAssignment& volt);

/// Wraps user supplied maps; the degree is the fiber size over v₀. Call
/// validate_covering() before relying on the result.
CoveringMap make_covering(Graph cover, Pi1Presentation base, std::vector<Vertex> vertex_map,
                          std::vector<EdgeId> edge_map, Vertex lifted_base);

ValidationReport validate_covering(const CoveringMap& p);
bool is_cover_connected(const CoveringMap& p);
/// Throws CoverNotConnected unless the cover is connected.
void require_connected_cover(const CoveringMap& p);

Path project_path(const CoveringMap& p, const Path& path);
Path lift_path(const CoveringMap& p, const Path& path, Vertex start);

Vertex fiber_action(const CoveringMap& p, const FreeWord& w, Vertex v);
Vertex left_action(const CoveringMap& p, const FreeWord& w, Vertex v);

/// Permutation of fiber positions (index into fiber(v₀)) induced by each generator
/// under fiber_action.
std::vector<Permutation> monodromy_permutations(const CoveringMap& p);

struct GaloisGroup {
  /// fiber(v₀); element a is the deck transformation τ_a with τ_a(ṽ₀) = fiber[a].
  std::vector<Vertex> fiber;
  int identity = 0;
  /// table[a][b] = c with τ_a∘τ_b = τ_c.
  std::vector<std::vector<int>> table;
  /// pr(generator) for each base generator.
  std::vector<int> generator_images;
  /// deck[a][k] = position of τ_a(fiber[k]).
  std::vector<Permutation> deck;

  int order() const { return static_cast<int>(fiber.size()); }
  bool is_abelian() const;
  int multiply(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  int power(int a, int k) const;
  int element_order(int a) const;
};

struct NormalityResult {
  bool normal = false;
  std::optional<GaloisGroup> group;
};

NormalityResult is_normal(const CoveringMap& p);
/// Throws NotNormal for non-normal covers.
GaloisGroup galois_group(const CoveringMap& p);
/// The surjection pr: π₁(Γ) → G; pr(w) is the element moving ṽ₀ to fiber_action(w, ṽ₀).
int project_to_galois(const CoveringMap& p, const GaloisGroup& g, const FreeWord& w);

struct CosetData {
  Pi1Presentation cover_presentation;  // rooted at ṽ₀, tree T̃ ⊇ p⁻¹(T)
  std::vector<FreeWord> coset_word;    // g_ṽ for every cover vertex
  std::vector<Vertex> fiber;           // fiber(v₀); coset r corresponds to fiber[r]
  std::vector<FreeWord> transversal;   // R: transversal[r] = g_{fiber[r]}
  int identity_coset = 0;              // r₀ with fiber[r₀] = ṽ₀

  int num_cosets() const { return static_cast<int>(fiber.size()); }
};

CosetData coset_data(const CoveringMap& p);
/// Coset r with left_action(w, ṽ₀) = fiber[r].
int coset_of(const CoveringMap& p, const CosetData& cd, const FreeWord& w);
/// Rewrites h ∈ p_*(π₁(Γ̃,ṽ₀)) in the cover generators; throws NotInSubgroup otherwise.
FreeWord express_in_subgroup(const CoveringMap& p, const CosetData& cd, const FreeWord& h);
/// Word of the projection p(loop) of a cover word, in the base presentation.
FreeWord project_word(const CoveringMap& p, const CosetData& cd, const FreeWord& cover_word);

}  // namespace twistcov
