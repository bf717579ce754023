#ifndef NETSLOPE_ARCS_HPP
#define NETSLOPE_ARCS_HPP

/**
 * @file arcs.hpp
 * @brief The preimage graph of the two disjoint core arcs of a slope: its
 *        vertices (integer classes), tagged lift edges, arc/circle
 *        components, the marked-to-marked chains cut from them, chain
 *        slopes, and the search for a degree-one self-lift.
 *
 * Downstairs, the two core arcs of slope p/q are [z₀, z₀+(q,p)] and
 * [z₁, z₁+(q,p)] where z₀, z₁ represent the two pairs of marked classes
 * (points of ℤ² mod {2μ ± x}) grouped by the parity of ⟨z, (p,−q)⟩.
 * Upstairs, their preimages form a graph whose combinatorics are computed
 * exactly, with no tracing: edges are integer classes modulo doubled-lattice
 * translation and the reversal y ↦ −y−(q,p); vertices are integer classes
 * modulo the full isometry group.
 */

#include "netslope/lattice.hpp"
#include "netslope/numbers.hpp"
#include "netslope/presentation.hpp"
#include "netslope/slope.hpp"
#include "netslope/trace.hpp"

#include <optional>
#include <vector>

namespace netslope {

// ---- the graph ----------------------------------------------------------------------

/// A vertex: one class of integer points under x ↦ ±x + 2λ.
struct GraphVertex {
  Vec2 rep;        ///< canonical class representative
  bool corner;     ///< class of a lattice member (four of these)
  bool critical;   ///< covering is branched here; all non-corner vertices
  int marked_idx;  ///< 0..3 when the class carries that marked point, else −1
  int valence;     ///< 1 at corners, 2 elsewhere
};

/// An edge: one lift class of a core arc, developed as [rep, rep + (q,p)].
struct GraphEdge {
  Vec2 rep;  ///< canonical developed start point of the lift
  int tail;  ///< vertex index of [rep]
  int head;  ///< vertex index of [rep + (q,p)]
  int tag;   ///< 0 = lift of the first downstairs arc, 1 = of the second
};

/// A connected component, developed along the direction.  An arc runs from
/// one corner class to another; `vertices` lists the path classes in order
/// (edges+1 of them).  A circle closes up by translation; `vertices` lists
/// one turn (edges of them, the closing repeat omitted).
struct GraphComponent {
  bool is_arc;
  Vec2 dev_start;          ///< developed start; position i is dev_start + i·(q,p)
  std::vector<int> edges;
  std::vector<int> vertices;
};

/// The full preimage graph of the two core arcs of slope s.
struct PreimageGraph {
  Slope s;
  int side;  ///< 0 or 1: which parity pair is tagged as the first arc
  Int d;     ///< direction order of s
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<GraphComponent> components;
};

/**
 * Builds the preimage graph.  Structure is forced: two components are arcs
 * of d edges each, running between distinct corner classes; the remaining
 * degree/d − 1 components are circles of 2d edges; the total is 2·degree
 * edges and 2·degree + 2 vertices of which exactly the four corners are
 * non-critical.  These counts are verified and violations abort.
 *
 * `side` flips which downstairs parity pair carries tag 0; the graph is
 * otherwise identical.
 */
PreimageGraph arc_preimage_graph(const Presentation& pres, const Slope& s,
                                 int side);

// ---- marked chains ------------------------------------------------------------------

/**
 * A maximal subpath whose two endpoint vertices are marked classes and whose
 * interior vertices are not.  Developed as [dev_start, dev_start +
 * length·(q,p)]; circle chains may wrap, in which case the developed end
 * continues past one turn.
 */
struct CoreChain {
  int component;
  Vec2 dev_start;
  Int length;             ///< number of edges
  int start_marked;       ///< marked index of the start class
  int end_marked;         ///< marked index of the end class
  std::vector<int> edges; ///< global edge ids in path order
};

/**
 * Cuts every component at its marked vertices.  Arc components yield the
 * subpaths between consecutive marked vertices (unmarked stubs at corner
 * ends are dropped); circle components yield cyclic cuts when they carry at
 * least two marked vertices.  A circle through exactly one marked class has
 * no embedded marked-to-marked subpath and contributes nothing.
 */
std::vector<CoreChain> marked_chains(const PreimageGraph& graph);

// ---- chain slopes -------------------------------------------------------------------

/**
 * The slope of the doubled chain: both marked endpoints are attached to
 * their corner, the developed open segment is crossed against the reflector
 * family, and the composite fold is applied to the far attachment.  The
 * lattice displacement D′ between the attachments determines the slope (the
 * reduced b/a of its basis coordinates); a zero displacement has no slope
 * (nullopt).
 *
 * Throws NotACoreArc when a chain endpoint is not a marked class, and
 * DegenerateArcModel when the developed segment meets the reflector family
 * non-transversally (impossible for chains of a valid presentation; kept as
 * a hard check).
 */
std::optional<Slope> arc_slope(const Presentation& pres,
                               const PreimageGraph& graph,
                               const CoreChain& chain);

/**
 * The slope of a whole arc component, when both of its corner endpoints are
 * marked classes.  Throws BadParameter for circle components and NotACoreArc
 * when an endpoint class is unmarked.
 */
std::optional<Slope> component_arc_slope(const Presentation& pres,
                                         const PreimageGraph& graph,
                                         int component_index);

// ---- degree-one self-lifts ----------------------------------------------------------

/// A single lift edge joining two marked classes whose chain slope equals
/// the downstairs slope: it maps to its image arc with degree 1.
struct SelfLiftWitness {
  Vec2 edge_start;  ///< developed start of the witness edge
  int start_marked;
  int end_marked;
  Slope slope;
};

/**
 * Searches the preimage graph of slope s for a one-edge marked-to-marked
 * chain of slope s.  Returns the first witness in deterministic component /
 * position order, or nothing.
 */
std::optional<SelfLiftWitness> degree_one_self_lift(const Presentation& pres,
                                                    const Slope& s);

}  // namespace netslope

#endif  // NETSLOPE_ARCS_HPP
