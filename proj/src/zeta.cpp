#include "twistcov/zeta.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twistcov/homotopy.hpp"
#include "twistcov/theorems.hpp"

namespace twistcov {

namespace {

bool strictly_least_rotation(const std::vector<EdgeId>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeId a = w[(i + r) % n];
      if (a < w[i]) return false;
      if (a > w[i]) goto next;
    }
    return false;  // equal rotation: a proper power
  next:;
  }
  return true;
}

template <class S>
S trace(const Matrix<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class S>
S power(const S& a, int k) {
  S out(1);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace

std::vector<PrimeCycle> prime_cycles(const Graph& g, int max_length) {
  std::vector<PrimeCycle> out;
  if (max_length < 1) return out;
  std::vector<EdgeId> walk;
  auto extend = [&](auto&& self) -> void {
    const EdgeId first = walk.front();
    const EdgeId last = walk.back();
    if (g.tgt(last) == g.src(first) && first != g.inv(last) && strictly_least_rotation(walk))
      out.push_back(PrimeCycle{walk});
    if (static_cast<int>(walk.size()) == max_length) return;
    for (EdgeId f : g.out_edges(g.tgt(last))) {
      if (f < first || f == g.inv(last)) continue;
      walk.push_back(f);
      self(self);
      walk.pop_back();
    }
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    walk.assign(1, e);
    extend(extend);
  }
  std::sort(out.begin(), out.end(), [](const PrimeCycle& a, const PrimeCycle& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.edges < b.edges;
  });
  return out;
}

bool line_digraph_is_cover(const CoveringMap& p) {
  LineDigraph top = line_digraph(p.cover);
  LineDigraph bottom = line_digraph(p.base_graph());
  std::map<std::pair<EdgeId, EdgeId>, int> arc_index;
  for (int a = 0; a < static_cast<int>(bottom.arcs.size()); ++a) arc_index[bottom.arcs[a]] = a;
  // Every lifted arc is an arc downstairs, and out-arcs at ẽ biject onto out-arcs at p(ẽ).
  for (EdgeId e = 0; e < p.cover.num_edges(); ++e) {
    std::vector<int> images;
    for (EdgeId a : top.digraph.out_edges(e)) {
      auto [x, y] = top.arcs[a];
      auto it = arc_index.find({p.edge_map[x], p.edge_map[y]});
      if (it == arc_index.end()) return false;
      images.push_back(it->second);
    }
    std::vector<int> expected;
    for (EdgeId a : bottom.digraph.out_edges(p.edge_map[e])) expected.push_back(a);
    std::sort(images.begin(), images.end());
    if (images != expected) return false;
  }
  return true;
}

template <class S>
AmitsurReport<S> amitsur_check(const Graph& g, const EdgeWeights<S>& x, const Pi1Presentation& pres,
                               const Representation<S>& rho, int max_length) {
  if (max_length > 12) throw Error(Errc::BudgetExceeded, "prime cycle enumeration limited to length 12");
  const int L = std::max(max_length, 0);
  AmitsurReport<S> rep;
  rep.trace_side.assign(L + 1, S(0));
  rep.cycle_side.assign(L + 1, S(0));
  rep.log_det_side.assign(L + 1, S(0));

  Matrix<S> m = line_operator(g, x, pres, rho);
  Matrix<S> mk = identity<S>(m.rows());
  for (int k = 1; k <= L; ++k) {
    mk = multiply(mk, m);
    rep.trace_side[k] = ScalarTraits<S>::exact_div(trace(mk), S(k));
  }

  std::vector<PrimeCycle> cycles = prime_cycles(g, L);
  rep.num_prime_cycles = static_cast<int>(cycles.size());
  for (const PrimeCycle& c : cycles) {
    const S w = cycle_weight(c, x);
    const Matrix<S> r = rep_of_word(rho, loop_to_word(pres, Path{g.src(c.edges.front()), c.edges}));
    Matrix<S> rj = identity<S>(rho.degree);
    for (int j = 1; j * c.length() <= L; ++j) {
      rj = multiply(rj, r);
      rep.cycle_side[j * c.length()] += ScalarTraits<S>::exact_div(power(w, j) * trace(rj), S(j));
    }
  }

  // det(I − uM) as a polynomial in u, then the log series through the recurrence
  // k·l_k = k·d_k − Σ_{i<k} i·l_i·d_{k−i}.
  RegistryPtr u_reg = make_registry({"u"});
  const Poly<S> u = Poly<S>::variable(u_reg, 0);
  Matrix<Poly<S>> im = zeros<Poly<S>>(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      im(i, j) = Poly<S>(S(0)) - u * Poly<S>(m(i, j));
      if (i == j) im(i, j) += Poly<S>(S(1));
    }
  const Poly<S> d = det(im);
  std::vector<S> dc(L + 1, S(0));
  for (int k = 0; k <= L; ++k) dc[k] = d.coefficient_of(0, k).constant_term();
  std::vector<S> l(L + 1, S(0));
  for (int k = 1; k <= L; ++k) {
    S acc = S(k) * dc[k];
    for (int i = 1; i < k; ++i) acc -= S(i) * l[i] * dc[k - i];
    l[k] = ScalarTraits<S>::exact_div(acc, S(k));
    rep.log_det_side[k] = S(0) - l[k];
  }

  rep.pass = true;
  for (int k = 0; k <= L; ++k)
    if (!(rep.trace_side[k] == rep.cycle_side[k]) || !(rep.trace_side[k] == rep.log_det_side[k])) rep.pass = false;
  return rep;
}

template AmitsurReport<Rational> amitsur_check(const Graph&, const EdgeWeights<Rational>&, const Pi1Presentation&,
                                               const Representation<Rational>&, int);
template AmitsurReport<Gaussian> amitsur_check(const Graph&, const EdgeWeights<Gaussian>&, const Pi1Presentation&,
                                               const Representation<Gaussian>&, int);

// ---------------------------------------------------------------------------

namespace {

struct DeckAction {
  std::vector<Vertex> vertex;
  std::vector<EdgeId> edge;
};

DeckAction deck_action(const CoveringMap& p, Vertex image_of_base) {
  SpanningTree t = spanning_tree(p.cover, p.lifted_base);
  DeckAction a;
  a.vertex.resize(p.cover.num_vertices());
  for (Vertex v = 0; v < p.cover.num_vertices(); ++v) {
    Path down = project_path(p, tree_path(p.cover, t, v));
    a.vertex[v] = path_target(p.cover, lift_path(p, down, image_of_base));
  }
  a.edge.resize(p.cover.num_edges());
  for (EdgeId e = 0; e < p.cover.num_edges(); ++e) {
    Path step{p.vertex_map[p.cover.src(e)], {p.edge_map[e]}};
    a.edge[e] = lift_path(p, step, a.vertex[p.cover.src(e)]).edges.front();
  }
  return a;
}

RegistryPtr registry_of(const EdgeWeights<RatPoly>& x) {
  RegistryPtr reg;
  for (const auto& w : x.values) reg = merge_registries(reg, w.registry());
  return reg;
}

EdgeWeights<GaussPoly> gaussian_weights(const EdgeWeights<RatPoly>& x) {
  EdgeWeights<GaussPoly> out{{}, x.symmetry};
  for (const auto& w : x.values) out.values.push_back(GaussPoly(w));
  return out;
}

Gaussian exact_value(const Rational& angle) {
  auto v = character_value_exact(angle);
  if (!v) throw Error(Errc::DomainMismatch, "character value is not a fourth root of unity");
  return *v;
}

}  // namespace

Tower make_tower(const CoveringMap& p, std::vector<int> subgroup) {
  Tower t;
  t.top = p;
  t.galois = galois_group(p);
  if (!t.galois.is_abelian()) throw Error(Errc::NotAbelian, "the tower check needs an abelian Galois group");
  const GaloisGroup& g = t.galois;
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  const std::set<int> h(subgroup.begin(), subgroup.end());
  if (h.empty() || !h.count(g.identity)) throw Error(Errc::HNotSubgroup, "H must contain the identity");
  for (int a : h) {
    if (a < 0 || a >= g.order()) throw Error(Errc::HNotSubgroup, "element " + std::to_string(a) + " is not in G");
    for (int b : h)
      if (!h.count(g.multiply(a, b))) throw Error(Errc::HNotSubgroup, "H is not closed under multiplication");
  }
  t.subgroup = subgroup;

  const int nv = p.cover.num_vertices();
  const int ne = p.cover.num_edges();
  std::vector<int> vorbit(nv, -1), eorbit(ne, -1);
  std::vector<DeckAction> actions;
  for (int a : subgroup) actions.push_back(deck_action(p, g.fiber[a]));
  int nvo = 0, neo = 0;
  std::vector<Vertex> orbit_rep_v;
  std::vector<EdgeId> orbit_rep_e;
  for (Vertex v = 0; v < nv; ++v) {
    if (vorbit[v] >= 0) continue;
    for (const auto& act : actions) vorbit[act.vertex[v]] = nvo;
    orbit_rep_v.push_back(v);
    ++nvo;
  }
  for (EdgeId e = 0; e < ne; ++e) {
    if (eorbit[e] >= 0) continue;
    for (const auto& act : actions) {
      if (eorbit[act.edge[e]] >= 0) throw Error(Errc::QuotientConstructionFailed, "H does not act freely on edges");
      eorbit[act.edge[e]] = neo;
    }
    orbit_rep_e.push_back(e);
    ++neo;
  }

  DirectedGraph dg(nvo);
  std::vector<EdgeId> inverse(neo);
  std::vector<EdgeId> lower_emap(neo);
  for (int o = 0; o < neo; ++o) {
    const EdgeId e = orbit_rep_e[o];
    dg.add_edge(vorbit[p.cover.src(e)], vorbit[p.cover.tgt(e)]);
    inverse[o] = eorbit[p.cover.inv(e)];
    lower_emap[o] = p.edge_map[e];
  }
  std::vector<Vertex> lower_vmap(nvo);
  for (int o = 0; o < nvo; ++o) lower_vmap[o] = p.vertex_map[orbit_rep_v[o]];
  Graph quotient(std::move(dg), std::move(inverse));
  if (!validate_graph(quotient).ok())
    throw Error(Errc::QuotientConstructionFailed, "orbit graph is not a graph with involution");

  const Vertex bar_base = vorbit[p.lifted_base];
  t.lower = make_covering(quotient, p.base, lower_vmap, lower_emap, bar_base);
  if (!validate_covering(t.lower).ok()) throw Error(Errc::QuotientConstructionFailed, "H\\cover does not cover the base");
  t.upper = make_covering(p.cover, make_presentation(quotient, bar_base), vorbit, eorbit, p.lifted_base);
  if (!validate_covering(t.upper).ok()) throw Error(Errc::QuotientConstructionFailed, "cover does not cover H\\cover");
  return t;
}

bool ArtinReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

bool ArtinReport::axiom_passes(int axiom) const {
  bool seen = false;
  for (const auto& c : checks)
    if (c.axiom == axiom) {
      if (!c.pass) return false;
      seen = true;
    }
  return seen;
}

ArtinReport artin_axioms(const Tower& t, const EdgeWeights<RatPoly>& x) {
  ArtinReport report;
  const GaloisGroup& g = t.galois;
  const Graph& base = t.top.base_graph();
  RegistryPtr reg = registry_of(x);
  const EdgeWeights<GaussPoly> xg = gaussian_weights(x);
  auto charpoly_on_base = [&](const Representation<Gaussian>& r) {
    return charpoly(twisted_adjacency(base, xg, connection_from_rep(t.top.base, r)), reg);
  };

  // 1. Trivial representation gives the untwisted operator, on all three levels.
  auto check_trivial = [&](const std::string& name, const Pi1Presentation& pres, const EdgeWeights<GaussPoly>& w) {
    auto twisted = twisted_adjacency(pres.graph, w, connection_from_rep(pres, trivial_representation<Gaussian>(pres.rank())));
    auto plain = adjacency(pres.graph, w);
    const bool ok = matrix_eq<GaussPoly>(twisted, plain) && charpoly(twisted, reg) == charpoly(plain, reg);
    report.checks.push_back({1, ok, "trivial twist on the " + name + " graph"});
  };
  check_trivial("base", t.top.base, xg);
  check_trivial("quotient", make_presentation(t.lower.cover, t.lower.lifted_base), lift_weights(t.lower, xg));
  check_trivial("cover", make_presentation(t.top.cover, t.top.lifted_base), lift_weights(t.top, xg));

  const std::vector<Character> chars = characters_of(g);
  std::vector<Representation<Gaussian>> reps;
  for (const auto& chi : chars) reps.push_back(character_representation_exact(t.top, g, chi));

  // 2. Direct sums multiply characteristic polynomials.
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a; b < reps.size(); ++b) {
      const bool ok = charpoly_on_base(direct_sum(reps[a], reps[b])) == charpoly_on_base(reps[a]) * charpoly_on_base(reps[b]);
      report.checks.push_back({2, ok, "chi" + std::to_string(a) + " + chi" + std::to_string(b)});
    }

  // 3. Inflation: characters of G trivial on H against characters of Gal(Γ̄/Γ).
  {
    std::vector<std::string> through_g, through_quotient;
    for (std::size_t a = 0; a < chars.size(); ++a) {
      bool trivial_on_h = true;
      for (int h : t.subgroup) trivial_on_h = trivial_on_h && chars[a].angle[h] == 0;
      if (trivial_on_h) through_g.push_back(charpoly_on_base(reps[a]).to_string());
    }
    const GaloisGroup gq = galois_group(t.lower);
    for (const auto& chi : characters_of(gq))
      through_quotient.push_back(charpoly_on_base(character_representation_exact(t.lower, gq, chi)).to_string());
    std::sort(through_g.begin(), through_g.end());
    std::sort(through_quotient.begin(), through_quotient.end());
    report.checks.push_back({3, through_g == through_quotient && !through_g.empty(),
                             std::to_string(through_g.size()) + " inflated characters"});
  }

  // 4. Induction from Γ̄: characters ψ of H through Gal(Γ̃/Γ̄), restricted from G.
  {
    CosetData cd = coset_data(t.lower);
    const Pi1Presentation& bar = cd.cover_presentation;
    std::vector<int> gen_element;
    for (int k = 0; k < bar.rank(); ++k) {
      Path loop = word_to_loop(bar, generator_word(k));
      const Vertex end = path_target(t.top.cover, lift_path(t.upper, loop, t.top.lifted_base));
      auto it = std::find(g.fiber.begin(), g.fiber.end(), end);
      const int a = it == g.fiber.end() ? -1 : static_cast<int>(it - g.fiber.begin());
      if (a < 0 || !std::binary_search(t.subgroup.begin(), t.subgroup.end(), a))
        throw Error(Errc::QuotientConstructionFailed, "loop of H\\cover does not lift into the H-orbit");
      gen_element.push_back(a);
    }
    std::set<std::vector<Rational>> restricted;
    for (const auto& chi : chars) {
      std::vector<Rational> psi;
      for (int h : t.subgroup) psi.push_back(chi.angle[h]);
      restricted.insert(psi);
    }
    const EdgeWeights<GaussPoly> xbar = lift_weights(t.lower, xg);
    int index = 0;
    for (const auto& psi : restricted) {
      std::vector<Matrix<Gaussian>> gens;
      for (int a : gen_element) {
        const auto pos = std::lower_bound(t.subgroup.begin(), t.subgroup.end(), a) - t.subgroup.begin();
        gens.push_back(Matrix<Gaussian>::Constant(1, 1, exact_value(psi[pos])));
      }
      Representation<Gaussian> rho = make_representation(1, std::move(gens));
      const auto upstairs = charpoly(twisted_adjacency(t.lower.cover, xbar, connection_from_rep(bar, rho)), reg);
      const auto downstairs = charpoly_on_base(induce(t.lower, cd, rho).rep);
      report.checks.push_back({4, upstairs == downstairs, "psi" + std::to_string(index++) + " induced from H"});
    }
  }
  return report;
}

}  // namespace twistcov
