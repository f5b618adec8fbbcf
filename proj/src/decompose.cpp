#include "hypermatch/decompose.hpp"

#include <algorithm>
#include <map>

#include "hypermatch/util.hpp"

namespace hypermatch {

const char* component_kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::EvenPath: return "EvenPath";
        case ComponentKind::OddPath: return "OddPath";
        case ComponentKind::Cycle: return "Cycle";
    }
    return "UnknownKind";
}

namespace {

struct ComponentGraph {
    std::vector<EdgeIndex> edges;                 // the underlying set, sorted
    std::vector<std::vector<int>> neighbors;      // positions into `edges`
    bool degree_ok = true;                        // every edge meets <= 2 others
    bool vertex_ok = true;                        // every vertex lies in <= 2 edges
};

ComponentGraph restricted_intersection(const Hypergraph& h, std::vector<EdgeIndex> d) {
    ComponentGraph g;
    g.edges = std::move(d);
    g.neighbors.assign(g.edges.size(), {});
    std::map<Vertex, std::vector<int>> at_vertex;
    for (size_t pos = 0; pos < g.edges.size(); ++pos)
        for (Vertex v : h.edge(g.edges[pos])) at_vertex[v].push_back(static_cast<int>(pos));
    for (const auto& [v, positions] : at_vertex) {
        if (positions.size() > 2) g.vertex_ok = false;
        for (size_t a = 0; a < positions.size(); ++a)
            for (size_t b = a + 1; b < positions.size(); ++b) {
                g.neighbors[static_cast<size_t>(positions[a])].push_back(positions[b]);
                g.neighbors[static_cast<size_t>(positions[b])].push_back(positions[a]);
            }
    }
    for (auto& nbrs : g.neighbors) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (nbrs.size() > 2) g.degree_ok = false;
    }
    return g;
}

Vertex edge_min_vertex(const Hypergraph& h, EdgeIndex i) { return h.edge(i).front(); }

// Walks one component deterministically. Assumes all degrees <= 2.
// Paths start at the endpoint with the smaller (min vertex, index); cycles start
// at the edge containing the component's min vertex (smaller index on a tie) and
// proceed toward the smaller-index neighbor.
RawComponent walk_component(const Hypergraph& h, const ComponentGraph& g,
                            const std::vector<int>& member_positions, std::vector<char>& visited) {
    RawComponent out;
    Vertex comp_min = 0;
    for (int pos : member_positions) {
        Vertex mv = edge_min_vertex(h, g.edges[static_cast<size_t>(pos)]);
        if (comp_min == 0 || mv < comp_min) comp_min = mv;
    }
    out.min_vertex = comp_min;

    std::vector<int> endpoints;
    for (int pos : member_positions)
        if (g.neighbors[static_cast<size_t>(pos)].size() <= 1) endpoints.push_back(pos);

    int start;
    bool cycle = endpoints.empty();
    if (cycle) {
        start = -1;
        for (int pos : member_positions) {
            const auto& e = h.edge(g.edges[static_cast<size_t>(pos)]);
            if (!sorted_contains(e, comp_min)) continue;
            if (start == -1 || g.edges[static_cast<size_t>(pos)] < g.edges[static_cast<size_t>(start)])
                start = pos;
        }
    } else {
        auto better = [&](int a, int b) {
            Vertex ma = edge_min_vertex(h, g.edges[static_cast<size_t>(a)]);
            Vertex mb = edge_min_vertex(h, g.edges[static_cast<size_t>(b)]);
            if (ma != mb) return ma < mb;
            return g.edges[static_cast<size_t>(a)] < g.edges[static_cast<size_t>(b)];
        };
        start = endpoints.front();
        for (int pos : endpoints)
            if (better(pos, start)) start = pos;
    }

    int prev = -1;
    int cur = start;
    while (true) {
        visited[static_cast<size_t>(cur)] = 1;
        out.edges.push_back(g.edges[static_cast<size_t>(cur)]);
        int next = -1;
        for (int nbr : g.neighbors[static_cast<size_t>(cur)]) {
            if (nbr == prev || visited[static_cast<size_t>(nbr)]) continue;
            if (next == -1 || g.edges[static_cast<size_t>(nbr)] < g.edges[static_cast<size_t>(next)])
                next = nbr;
        }
        if (next == -1) break;
        prev = cur;
        cur = next;
    }

    size_t s = out.edges.size();
    out.kind = cycle ? ComponentKind::Cycle
                     : (s % 2 == 0 ? ComponentKind::EvenPath : ComponentKind::OddPath);
    return out;
}

std::vector<RawComponent> split_components(const Hypergraph& h, const ComponentGraph& g) {
    std::vector<char> seen(g.edges.size(), 0);
    std::vector<char> visited(g.edges.size(), 0);
    std::vector<RawComponent> out;
    for (size_t root = 0; root < g.edges.size(); ++root) {
        if (seen[root]) continue;
        std::vector<int> members;
        std::vector<int> stack{static_cast<int>(root)};
        seen[root] = 1;
        while (!stack.empty()) {
            int pos = stack.back();
            stack.pop_back();
            members.push_back(pos);
            for (int nbr : g.neighbors[static_cast<size_t>(pos)])
                if (!seen[static_cast<size_t>(nbr)]) {
                    seen[static_cast<size_t>(nbr)] = 1;
                    stack.push_back(nbr);
                }
        }
        out.push_back(walk_component(h, g, members, visited));
    }
    std::sort(out.begin(), out.end(),
              [](const RawComponent& a, const RawComponent& b) { return a.min_vertex < b.min_vertex; });
    return out;
}

} // namespace

ComponentDecomposition decompose(const Hypergraph& h, const Matching& i_matching,
                                 const Matching& f_matching) {
    require_matching(h, i_matching, "I");
    require_matching(h, f_matching, "F");

    ComponentDecomposition out;
    out.difference = sorted_symmetric_difference(i_matching, f_matching);
    ComponentGraph g = restricted_intersection(h, out.difference);
    require(g.degree_ok, ErrorCode::DegreeViolation,
            "an edge of I xor F intersects >= 3 others; the loose path/cycle structure fails");
    require(g.vertex_ok, ErrorCode::Internal, "vertex covered three times by two matchings");

    for (RawComponent& raw : split_components(h, g)) {
        Component c;
        c.edges = std::move(raw.edges);
        c.kind = raw.kind;
        c.min_vertex = raw.min_vertex;
        c.owners.reserve(c.edges.size());
        for (EdgeIndex e : c.edges)
            c.owners.push_back(sorted_contains(i_matching, e) ? Owner::I : Owner::F);
        for (size_t j = 0; j + 1 < c.owners.size(); ++j)
            require(c.owners[j] != c.owners[j + 1], ErrorCode::Internal,
                    "owners fail to alternate along a component");
        if (c.kind == ComponentKind::Cycle)
            require(c.edges.size() >= 4 && c.edges.size() % 2 == 0, ErrorCode::Internal,
                    "cycle component with odd or short length from a matching pair");
        out.components.push_back(std::move(c));
    }
    return out;
}

std::optional<std::vector<RawComponent>> decompose_edge_set(const Hypergraph& h,
                                                            std::vector<EdgeIndex> difference) {
    std::sort(difference.begin(), difference.end());
    difference.erase(std::unique(difference.begin(), difference.end()), difference.end());
    for (EdgeIndex e : difference)
        if (e < 0 || e >= h.m()) return std::nullopt;

    ComponentGraph g = restricted_intersection(h, std::move(difference));
    if (!g.degree_ok || !g.vertex_ok) return std::nullopt;
    std::vector<RawComponent> components = split_components(h, g);
    for (const RawComponent& c : components)
        if (c.kind == ComponentKind::Cycle && c.edges.size() % 2 != 0) return std::nullopt;
    return components;
}

} // namespace hypermatch
