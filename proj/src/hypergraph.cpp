#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hypermatch/util.hpp"

namespace hypermatch {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::WrongEdgeSize: return "WrongEdgeSize";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotAMatching: return "NotAMatching";
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
        case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case ErrorCode::NotCombFree: return "NotCombFree";
        case ErrorCode::TransitionNotOnPath: return "TransitionNotOnPath";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::ZeroRatio: return "ZeroRatio";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "UnknownError";
}

namespace {

std::string edge_to_string(const std::vector<Vertex>& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "]";
}

} // namespace

Hypergraph validate(std::vector<std::vector<Vertex>> raw_edges, int n, int k) {
    require(n >= 0, ErrorCode::BadParameters, "vertex count must be non-negative");
    require(k >= 2, ErrorCode::BadParameters, "uniformity k must be >= 2");
    std::map<std::vector<Vertex>, size_t> seen;
    for (size_t idx = 0; idx < raw_edges.size(); ++idx) {
        auto& e = raw_edges[idx];
        require(static_cast<int>(e.size()) == k, ErrorCode::WrongEdgeSize,
                "edge " + std::to_string(idx) + " has " + std::to_string(e.size()) +
                    " vertices, expected " + std::to_string(k));
        std::sort(e.begin(), e.end());
        for (Vertex v : e)
            require(v >= 1 && v <= n, ErrorCode::VertexOutOfRange,
                    "edge " + std::to_string(idx) + " contains vertex " + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
        require(std::adjacent_find(e.begin(), e.end()) == e.end(), ErrorCode::DuplicateVertexInEdge,
                "edge " + std::to_string(idx) + " repeats a vertex: " + edge_to_string(e));
        auto [it, inserted] = seen.emplace(e, idx);
        require(inserted, ErrorCode::DuplicateEdge,
                "edges " + std::to_string(it->second) + " and " + std::to_string(idx) +
                    " are the same set " + edge_to_string(e));
    }
    return Hypergraph{n, k, std::move(raw_edges)};
}

bool IntersectionGraph::adjacent(EdgeIndex i, EdgeIndex j) const {
    if (i < 0 || j < 0 || i >= node_count() || j >= node_count()) return false;
    return sorted_contains(adjacency[static_cast<size_t>(i)], j);
}

IntersectionGraph intersection_graph(const Hypergraph& h) {
    IntersectionGraph g;
    g.adjacency.assign(static_cast<size_t>(h.m()), {});
    // vertex -> incident edge indices (ascending, since edges scanned in order)
    std::vector<std::vector<EdgeIndex>> incident(static_cast<size_t>(h.n) + 1);
    for (EdgeIndex i = 0; i < h.m(); ++i)
        for (Vertex v : h.edges[static_cast<size_t>(i)]) incident[static_cast<size_t>(v)].push_back(i);
    for (const auto& at_vertex : incident) {
        for (size_t a = 0; a < at_vertex.size(); ++a)
            for (size_t b = a + 1; b < at_vertex.size(); ++b) {
                g.adjacency[static_cast<size_t>(at_vertex[a])].push_back(at_vertex[b]);
                g.adjacency[static_cast<size_t>(at_vertex[b])].push_back(at_vertex[a]);
            }
    }
    for (auto& nbrs : g.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

bool edges_intersect(const Hypergraph& h, EdgeIndex i, EdgeIndex j) {
    return sets_intersect(h.edge(i), h.edge(j));
}

bool is_matching(const Hypergraph& h, const Matching& edge_indices) {
    std::vector<char> used(static_cast<size_t>(h.n) + 1, 0);
    EdgeIndex previous = -1;
    for (EdgeIndex i : edge_indices) {
        if (i <= previous || i >= h.m()) return false;
        previous = i;
        for (Vertex v : h.edges[static_cast<size_t>(i)]) {
            if (used[static_cast<size_t>(v)]) return false;
            used[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

void require_matching(const Hypergraph& h, const Matching& edge_indices, const char* label) {
    for (size_t i = 0; i + 1 < edge_indices.size(); ++i)
        require(edge_indices[i] < edge_indices[i + 1], ErrorCode::NotAMatching,
                std::string(label) + " is not a sorted duplicate-free index set");
    for (EdgeIndex i : edge_indices)
        require(i >= 0 && i < h.m(), ErrorCode::NotAMatching,
                std::string(label) + " references edge " + std::to_string(i) + " outside the instance");
    require(is_matching(h, edge_indices), ErrorCode::NotAMatching,
            std::string(label) + " has intersecting edges");
}

std::optional<ThreeComb> find_three_comb(const Hypergraph& h) {
    IntersectionGraph g = intersection_graph(h);
    // For each candidate center e4, look for three pairwise-disjoint neighbors.
    for (EdgeIndex center = 0; center < h.m(); ++center) {
        const auto& nbrs = g.adjacency[static_cast<size_t>(center)];
        size_t d = nbrs.size();
        if (d < 3) continue;
        for (size_t a = 0; a < d; ++a) {
            for (size_t b = a + 1; b < d; ++b) {
                if (g.adjacent(nbrs[a], nbrs[b])) continue;
                for (size_t c = b + 1; c < d; ++c) {
                    if (g.adjacent(nbrs[a], nbrs[c]) || g.adjacent(nbrs[b], nbrs[c])) continue;
                    return ThreeComb{nbrs[a], nbrs[b], nbrs[c], center};
                }
            }
        }
    }
    return std::nullopt;
}

void require_comb_free(const Hypergraph& h) {
    if (auto comb = find_three_comb(h)) {
        raise(ErrorCode::NotCombFree,
              "3-comb witness: disjoint edges " + std::to_string((*comb)[0]) + "," +
                  std::to_string((*comb)[1]) + "," + std::to_string((*comb)[2]) +
                  " all meet edge " + std::to_string((*comb)[3]));
    }
}

} // namespace hypermatch
