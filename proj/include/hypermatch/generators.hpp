#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Necklace on n cyclically ordered vertices: edges are windows of k
// consecutive vertices advancing by k - overlap, so consecutive edges share
// exactly `overlap` vertices. overlap = k-1 is the tight cycle.
Hypergraph gen_overlap_cycle(int n, int k, int overlap);

// Tight-cycle enrichment: all k-subsets of the edges of the (k+1)-uniform
// tight-overlap cycle on n vertices; (k+1)n/2 edges, 3-comb-free.
Hypergraph gen_enriched_tight_cycle(int n, int k);

// Binomial k-uniform hypergraph: every k-subset appears independently with
// probability p. Deterministic for a fixed seed (one draw per candidate in
// lexicographic order).
Hypergraph gen_random_kgraph(int n, int k, double p, std::uint64_t seed);

// Binomial graph, the 2-uniform convenience case.
Hypergraph gen_random_graph(int n, double p, std::uint64_t seed);

// One 3-edge per triangle of the simple graph g (2-uniform input), triangles
// in lexicographic vertex order.
Hypergraph gen_triangle_3graph(const Hypergraph& g);

// Four triangles: a hub plus three pairwise vertex-disjoint blades, each blade
// meeting the hub. Exists in g exactly when the triangle 3-graph of g has a
// 3-comb; the witness spans 9 vertices and 12 graph edges.
struct Windmill {
    std::array<std::array<Vertex, 3>, 3> blades;
    std::array<Vertex, 3> hub;
};

std::optional<Windmill> find_windmill(const Hypergraph& g);

// Subdivision blow-up of a 3-uniform h: edge e gains nu[e] private vertices,
// and is replaced by the 3 nu[e] triples {v_i, v_j, w} over pairs of original
// vertices and private w. Always 3-comb-free.
Hypergraph gen_subdivided(const Hypergraph& h3, const std::vector<int>& nu);

// Rooted blow-up: parts of the given sizes, each with a distinguished root;
// for every pair of parts, all k-subsets of their union containing both roots.
Hypergraph gen_rooted_blowup(const std::vector<int>& sizes, int k);

// Hexagonal-lattice patch of rows x cols cells in brick-wall form, as a
// 2-uniform graph with open boundary.
Hypergraph gen_brick_wall(int rows, int cols);

// The brick-wall patch with every graph edge subdivided into a 3-edge:
// 3-comb-free with intersection-graph degree at most 4.
Hypergraph gen_hex_3graph(int rows, int cols);

// Decorated square-lattice patch: every lattice edge gains a midpoint, and the
// 3-edges are the collinear triples centered at the lattice points (pendant
// midpoints complete the boundary triples). Contains a 3-comb whenever the
// patch has at least two rows or two columns of cells.
Hypergraph gen_heilmann_lattice(int rows, int cols);

// Degree-preserving reduction from a simple graph to a k-uniform hypergraph:
// edge (u,v) becomes {u, k-2 private vertices, v}. Matchings correspond
// one-to-one; the output is always 3-comb-free.
Hypergraph reduce_graph_to_kgraph(const Hypergraph& g, int k);

} // namespace hypermatch
