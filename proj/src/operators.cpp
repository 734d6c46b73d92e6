#include "twistcov/operators.hpp"

#include <set>

#include "twistcov/homotopy.hpp"

namespace twistcov {

int default_outer_face(const FaceStructure& fs) {
  int best = 0;
  for (int f = 1; f < static_cast<int>(fs.walks.size()); ++f)
    if (fs.walks[f].size() > fs.walks[best].size()) best = f;
  return best;
}

Orientation canonical_orientation(const Graph& g) { return Orientation{g.unoriented_edges()}; }

KasteleynReport check_clockwise_odd(const Graph& g, const RotationSystem& rot, const Orientation& orient,
                                    std::optional<int> outer_face) {
  FaceStructure fs = faces(g, rot);
  KasteleynReport rep;
  rep.euler_characteristic = fs.euler_characteristic;
  rep.outer_face = outer_face.value_or(default_outer_face(fs));
  rep.pass = true;
  for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
    FaceParity fp;
    fp.face = f;
    fp.length = static_cast<int>(fs.walks[f].size());
    fp.bounded = f != rep.outer_face;
    for (EdgeId e : fs.walks[f])
      if (orient.chosen.at(g.unoriented_index(e)) == e) ++fp.clockwise;
    if (fp.bounded && !fp.odd()) rep.pass = false;
    rep.faces.push_back(fp);
  }
  return rep;
}

Orientation kasteleyn_orientation(const Graph& g, const RotationSystem& rot, std::optional<int> outer_face) {
  if (!is_connected(g)) throw Error(Errc::NotConnected, "Kasteleyn orientation needs a connected graph");
  FaceStructure fs = faces(g, rot);
  if (fs.euler_characteristic != 2) throw Error(Errc::NotPlanar, "rotation system is not planar");
  const int outer = outer_face.value_or(default_outer_face(fs));
  const int ne = g.num_unoriented();
  Orientation orient;
  orient.chosen.assign(ne, -1);
  SpanningTree t = spanning_tree(g, 0);
  for (EdgeId e : g.unoriented_edges())
    if (t.in_tree[e]) orient.chosen[g.unoriented_index(e)] = e;

  std::vector<char> done(fs.walks.size(), 0);
  done[outer] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f) {
      if (done[f]) continue;
      std::set<int> open;
      for (EdgeId e : fs.walks[f])
        if (orient.chosen[g.unoriented_index(e)] < 0) open.insert(g.unoriented_index(e));
      if (open.size() > 1) continue;
      if (open.size() == 1) {
        const int u = *open.begin();
        EdgeId along = -1;
        int count = 0;
        for (EdgeId e : fs.walks[f]) {
          const int ue = g.unoriented_index(e);
          if (ue == u) along = e;
          else if (orient.chosen[ue] == e) ++count;
        }
        orient.chosen[u] = count % 2 == 0 ? along : g.inv(along);
      }
      done[f] = 1;
      progress = true;
    }
  }
  for (EdgeId c : orient.chosen)
    if (c < 0) throw Error(Errc::NotPlanar, "could not complete the orientation along the dual tree");
  return orient;
}

LineDigraph line_digraph(const Graph& g) {
  LineDigraph ld;
  ld.digraph = DirectedGraph(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (EdgeId f = 0; f < g.num_edges(); ++f) {
      if (g.tgt(e) != g.src(f) || f == g.inv(e)) continue;
      ld.digraph.add_edge(e, f);
      ld.arcs.emplace_back(e, f);
      ld.origin.push_back(e);
    }
  return ld;
}

}  // namespace twistcov
