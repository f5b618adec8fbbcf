#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/error.hpp"

namespace hypermatch {

using Vertex = int;    // 1-based vertex identifier
using EdgeIndex = int; // 0-based index into Hypergraph::edges; the edge's identity

// A matching is a sorted, duplicate-free set of edge indices.
using Matching = std::vector<EdgeIndex>;

struct Hypergraph {
    int n = 0; // vertices are 1..n
    int k = 2;
    std::vector<std::vector<Vertex>> edges; // each sorted, exactly k distinct vertices

    int m() const { return static_cast<int>(edges.size()); }

    const std::vector<Vertex>& edge(EdgeIndex i) const {
        require(i >= 0 && i < m(), ErrorCode::IndexOutOfRange,
                "edge index " + std::to_string(i) + " out of range [0," + std::to_string(m()) + ")");
        return edges[static_cast<size_t>(i)];
    }
};

// Builds a Hypergraph from raw edges, sorting each edge and enforcing the type
// invariants (k distinct in-range vertices per edge, pairwise distinct edges).
Hypergraph validate(std::vector<std::vector<Vertex>> raw_edges, int n, int k);

struct IntersectionGraph {
    // adjacency[i] = sorted indices j != i with edge(i) and edge(j) sharing >= 1 vertex
    std::vector<std::vector<EdgeIndex>> adjacency;

    int node_count() const { return static_cast<int>(adjacency.size()); }
    bool adjacent(EdgeIndex i, EdgeIndex j) const;
};

IntersectionGraph intersection_graph(const Hypergraph& h);

bool edges_intersect(const Hypergraph& h, EdgeIndex i, EdgeIndex j);

bool is_matching(const Hypergraph& h, const Matching& edge_indices);

// Throws NotAMatching unless `edge_indices` is sorted, duplicate-free, in range,
// and pairwise disjoint.
void require_matching(const Hypergraph& h, const Matching& edge_indices, const char* label);

// A 3-comb: edges [0],[1],[2] pairwise disjoint, each meeting edge [3].
using ThreeComb = std::array<EdgeIndex, 4>;

// Finds a 3-comb if one exists. None iff the intersection graph is claw-free.
std::optional<ThreeComb> find_three_comb(const Hypergraph& h);

// Throws NotCombFree (message names the witness edges) when H contains a 3-comb.
void require_comb_free(const Hypergraph& h);

} // namespace hypermatch
