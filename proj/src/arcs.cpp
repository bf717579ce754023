#include "netslope/arcs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace netslope {

namespace {

// ---- class bookkeeping --------------------------------------------------------------

/// Canonical representative of the lift-edge class of [y, y + step]: the
/// lexicographic minimum of the two orientation representatives modulo
/// doubled-lattice translation.
Vec2 canonical_edge(const Presentation& pres, const Vec2& y, const Vec2& step) {
  const Vec2 fwd = canonical_mod_double(pres, y);
  const Vec2 rev = canonical_mod_double(pres, Vec2{-y.x - step.x, -y.y - step.y});
  return std::min(fwd, rev);
}

struct Indexer {
  std::map<Vec2, int> vertex_of;
  std::map<Vec2, int> edge_of;

  int vertex(const Presentation& pres, const Vec2& x) const {
    const auto it = vertex_of.find(canonical_mod_involution(pres, x));
    if (it == vertex_of.end())
      throw std::logic_error("preimage graph: point class missing from the vertex table");
    return it->second;
  }

  int edge(const Presentation& pres, const Vec2& y, const Vec2& step) const {
    const auto it = edge_of.find(canonical_edge(pres, y, step));
    if (it == edge_of.end())
      throw std::logic_error("preimage graph: lift class missing from the edge table");
    return it->second;
  }
};

}  // namespace

// ---- construction -------------------------------------------------------------------

PreimageGraph arc_preimage_graph(const Presentation& pres, const Slope& s,
                                 int side) {
  require_valid(pres);
  if (side != 0 && side != 1)
    throw Error(Errc::BadParameter, "side must be 0 or 1");

  const Vec2 step = s.direction();
  const Vec2 nrm = s.normal();
  const Int deg = degree(pres);
  const Int d = direction_order(pres, s);

  PreimageGraph graph{s, side, d, {}, {}, {}};
  Indexer index;

  // Vertices: integer classes under x ↦ ±x + 2λ.  Corners are the classes
  // of lattice members; every other class is critical.
  for (const Vec2& rep : point_classes_mod_involution(pres)) {
    const bool corner = in_lattice(pres, rep);
    index.vertex_of.emplace(rep, static_cast<int>(graph.vertices.size()));
    graph.vertices.push_back(GraphVertex{rep, corner, !corner, -1, corner ? 1 : 2});
  }
  for (int m = 0; m < 4; ++m) {
    const int v = index.vertex(pres, pres.marked_rep(m));
    if (graph.vertices[v].marked_idx >= 0)
      throw std::logic_error("preimage graph: two marked points share a class");
    graph.vertices[v].marked_idx = m;
  }

  // Edges: lift classes y mod (2Λ₁, y ↦ −y−step), tagged by the parity of
  // ⟨y, normal⟩ relative to the chosen side.
  for (const Vec2& res : residues_mod_double(pres)) {
    const Vec2 rep = canonical_edge(pres, res, step);
    if (index.edge_of.count(rep)) continue;
    const int tail = index.vertex(pres, rep);
    const int head = index.vertex(pres, Vec2{rep.x + step.x, rep.y + step.y});
    if (tail == head)
      throw std::logic_error("preimage graph: a lift edge closed into a loop");
    const int parity = mod_floor(dot(rep, nrm), Int(2)).convert_to<int>();
    index.edge_of.emplace(rep, static_cast<int>(graph.edges.size()));
    graph.edges.push_back(GraphEdge{rep, tail, head, parity ^ side});
  }
  if (Int(graph.edges.size()) != 2 * deg)
    throw std::logic_error("preimage graph: wrong number of lift classes");

  // Components.  Arcs develop from corner classes stepping by the direction;
  // each ends at the first corner class reached, after exactly d edges.
  std::vector<bool> edge_used(graph.edges.size(), false);
  std::vector<bool> corner_visited(graph.vertices.size(), false);

  const auto walk_edge = [&](const Vec2& x) {
    const int eid = index.edge(pres, x, step);
    if (edge_used[eid])
      throw std::logic_error("preimage graph: component walk revisited a lift class");
    edge_used[eid] = true;
    return eid;
  };

  for (int v0 = 0; v0 < static_cast<int>(graph.vertices.size()); ++v0) {
    if (!graph.vertices[v0].corner || corner_visited[v0]) continue;
    corner_visited[v0] = true;
    GraphComponent comp{true, graph.vertices[v0].rep, {}, {}};
    comp.vertices.push_back(v0);
    Vec2 x = comp.dev_start;
    while (true) {
      comp.edges.push_back(walk_edge(x));
      x = Vec2{x.x + step.x, x.y + step.y};
      const int v = index.vertex(pres, x);
      comp.vertices.push_back(v);
      if (graph.vertices[v].corner) {
        if (corner_visited[v])
          throw std::logic_error("preimage graph: arc ends collided at one corner class");
        corner_visited[v] = true;
        break;
      }
    }
    if (Int(comp.edges.size()) != d)
      throw std::logic_error("preimage graph: arc component has the wrong length");
    graph.components.push_back(std::move(comp));
  }
  if (graph.components.size() != 2)
    throw std::logic_error("preimage graph: expected exactly two arc components");

  // Remaining lifts close into circles of 2d edges under translation.
  for (int e0 = 0; e0 < static_cast<int>(graph.edges.size()); ++e0) {
    if (edge_used[e0]) continue;
    GraphComponent comp{false, graph.edges[e0].rep, {}, {}};
    Vec2 x = comp.dev_start;
    while (true) {
      comp.vertices.push_back(index.vertex(pres, x));
      comp.edges.push_back(walk_edge(x));
      x = Vec2{x.x + step.x, x.y + step.y};
      const int next = index.edge(pres, x, step);
      if (edge_used[next]) {
        if (next != e0)
          throw std::logic_error("preimage graph: circle walk closed onto a foreign lift");
        break;
      }
    }
    if (Int(comp.edges.size()) != 2 * d ||
        index.vertex(pres, x) != comp.vertices.front())
      throw std::logic_error("preimage graph: circle component failed to close one turn");
    graph.components.push_back(std::move(comp));
  }

  Int total(0);
  for (const GraphComponent& comp : graph.components) total += Int(comp.edges.size());
  if (total != 2 * deg || Int(graph.components.size()) != 1 + deg / d)
    throw std::logic_error("preimage graph: component census mismatch");
  return graph;
}

// ---- marked chains ------------------------------------------------------------------

std::vector<CoreChain> marked_chains(const PreimageGraph& graph) {
  std::vector<CoreChain> chains;
  const Vec2 step = graph.s.direction();

  const auto position = [&](const GraphComponent& comp, const Int& i) {
    return Vec2{comp.dev_start.x + i * step.x, comp.dev_start.y + i * step.y};
  };

  for (int ci = 0; ci < static_cast<int>(graph.components.size()); ++ci) {
    const GraphComponent& comp = graph.components[ci];
    std::vector<int> marked_pos;
    for (int i = 0; i < static_cast<int>(comp.vertices.size()); ++i)
      if (graph.vertices[comp.vertices[i]].marked_idx >= 0) marked_pos.push_back(i);

    const int n = static_cast<int>(comp.edges.size());
    const auto path_vertex = [&](int i) {
      return comp.vertices[comp.is_arc ? i : i % n];
    };
    const auto cut = [&](int a, int b) {
      // Subpath from path position a to b (b may exceed one turn on circles).
      CoreChain chain{ci, position(comp, Int(a)), Int(b - a),
                      graph.vertices[path_vertex(a)].marked_idx,
                      graph.vertices[path_vertex(b)].marked_idx,
                      {}};
      for (int k = a; k < b; ++k) chain.edges.push_back(comp.edges[k % n]);
      chains.push_back(std::move(chain));
    };

    if (comp.is_arc) {
      for (size_t k = 0; k + 1 < marked_pos.size(); ++k)
        cut(marked_pos[k], marked_pos[k + 1]);
    } else if (marked_pos.size() >= 2) {
      for (size_t k = 0; k < marked_pos.size(); ++k) {
        const int a = marked_pos[k];
        const int b = (k + 1 < marked_pos.size()) ? marked_pos[k + 1]
                                                  : marked_pos[0] + n;
        cut(a, b);
      }
    }
    // A circle with a single marked class only bounds a closed loop chain,
    // which has no distinct endpoints to attach; it is deliberately skipped.
  }
  return chains;
}

// ---- chain slopes -------------------------------------------------------------------

namespace {

/// Developed position of the marked point attached at chain endpoint x: the
/// corner of the marked class, carried by the unique symmetry taking the
/// class representative to x.
Vec2 attach_corner(const Presentation& pres, const Vec2& x, int marked_idx) {
  const Vec2 z = pres.marked_rep(marked_idx);
  const Vec2 c = pres.corner(marked_idx);
  if (in_double_lattice(pres, Vec2{x.x - z.x, x.y - z.y}))
    return Vec2{c.x + (x.x - z.x), c.y + (x.y - z.y)};
  if (in_double_lattice(pres, Vec2{x.x + z.x, x.y + z.y}))
    return Vec2{(x.x + z.x) - c.x, (x.y + z.y) - c.y};
  throw std::logic_error("chain endpoint does not lie in its marked class");
}

Vec2 exact_integer(const Rat2& r) {
  if (!is_integer(r.x) || !is_integer(r.y))
    throw std::logic_error("folded attachment left the integer lattice");
  return Vec2{num(r.x), num(r.y)};
}

}  // namespace

std::optional<Slope> arc_slope(const Presentation& pres,
                               const PreimageGraph& graph,
                               const CoreChain& chain) {
  require_valid(pres);
  if (chain.start_marked < 0 || chain.end_marked < 0)
    throw Error(Errc::NotACoreArc,
                "chain endpoints must both be marked classes");
  if (chain.length <= 0)
    throw Error(Errc::BadParameter, "chain must contain at least one edge");

  const Vec2 step = graph.s.direction();
  const Vec2 dev_end{chain.dev_start.x + chain.length * step.x,
                     chain.dev_start.y + chain.length * step.y};

  const std::vector<Crossing> crossings =
      open_segment_crossings(pres, chain.dev_start, step, chain.length);

  const Vec2 start_attach = attach_corner(pres, chain.dev_start, chain.start_marked);
  const Vec2 end_attach = attach_corner(pres, dev_end, chain.end_marked);
  const Vec2 folded = exact_integer(fold_point(crossings, to_rat2(end_attach)));

  const Vec2 disp{folded.x - start_attach.x, folded.y - start_attach.y};
  const auto coords = lattice_coords(pres, disp);
  if (!coords)
    throw std::logic_error("chain displacement left the presentation lattice");
  if (coords->x == 0 && coords->y == 0) return std::nullopt;
  return Slope::make(coords->y, coords->x);
}

std::optional<Slope> component_arc_slope(const Presentation& pres,
                                         const PreimageGraph& graph,
                                         int component_index) {
  if (component_index < 0 ||
      component_index >= static_cast<int>(graph.components.size()))
    throw Error(Errc::BadParameter, "component index out of range");
  const GraphComponent& comp = graph.components[component_index];
  if (!comp.is_arc)
    throw Error(Errc::BadParameter, "circle components do not define an arc slope");

  CoreChain chain{component_index, comp.dev_start, Int(comp.edges.size()),
                  graph.vertices[comp.vertices.front()].marked_idx,
                  graph.vertices[comp.vertices.back()].marked_idx, comp.edges};
  return arc_slope(pres, graph, chain);
}

// ---- degree-one self-lifts ----------------------------------------------------------

std::optional<SelfLiftWitness> degree_one_self_lift(const Presentation& pres,
                                                    const Slope& s) {
  const PreimageGraph graph = arc_preimage_graph(pres, s, 0);
  for (const CoreChain& chain : marked_chains(graph)) {
    if (chain.length != 1) continue;
    const auto slope = arc_slope(pres, graph, chain);
    if (slope && *slope == s)
      return SelfLiftWitness{chain.dev_start, chain.start_marked,
                             chain.end_marked, *slope};
  }
  return std::nullopt;
}

}  // namespace netslope
