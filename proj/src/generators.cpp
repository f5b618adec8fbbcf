#include "hypermatch/generators.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "hypermatch/rng.hpp"

namespace hypermatch {

namespace {

// Advances a lexicographic k-combination over {0,..,n-1}; false when done.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

void require_graph(const Hypergraph& g, const char* who) {
    require(g.k == 2, ErrorCode::BadParameters, std::string(who) + " expects a 2-uniform input");
}

} // namespace

Hypergraph gen_overlap_cycle(int n, int k, int overlap) {
    require(k >= 2, ErrorCode::BadParameters, "k must be at least 2");
    require(overlap >= 1 && overlap <= k - 1, ErrorCode::BadParameters,
            "overlap must lie in [1, k-1]");
    const int stride = k - overlap;
    require(n % stride == 0, ErrorCode::BadParameters, "k - overlap must divide n");
    require(n / stride >= 3, ErrorCode::BadParameters, "cycle needs at least 3 edges");
    require(n >= k + 1, ErrorCode::BadParameters, "n must exceed k");
    std::vector<std::vector<Vertex>> edges;
    const int count = n / stride;
    edges.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<Vertex> e;
        e.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) e.push_back((i * stride + j) % n + 1);
        edges.push_back(std::move(e));
    }
    return validate(std::move(edges), n, k);
}

Hypergraph gen_enriched_tight_cycle(int n, int k) {
    require(k >= 3, ErrorCode::BadParameters, "k must be at least 3");
    require(n % 2 == 0, ErrorCode::BadParameters, "n must be even");
    require(n >= 2 * (k + 1), ErrorCode::BadParameters, "n must be at least 2(k+1)");
    const Hypergraph cycle = gen_overlap_cycle(n, k + 1, k - 1);
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(static_cast<std::size_t>((k + 1) * n / 2));
    for (const auto& big : cycle.edges) {
        std::vector<std::vector<Vertex>> local;
        for (std::size_t drop = 0; drop < big.size(); ++drop) {
            std::vector<Vertex> e;
            e.reserve(static_cast<std::size_t>(k));
            for (std::size_t j = 0; j < big.size(); ++j) {
                if (j != drop) e.push_back(big[j]);
            }
            local.push_back(std::move(e));
        }
        std::sort(local.begin(), local.end());
        for (auto& e : local) edges.push_back(std::move(e));
    }
    return validate(std::move(edges), n, k);
}

Hypergraph gen_random_kgraph(int n, int k, double p, std::uint64_t seed) {
    require(k >= 2 && n >= k, ErrorCode::BadParameters, "need n >= k >= 2");
    require(p >= 0.0 && p <= 1.0, ErrorCode::BadParameters, "p must lie in [0,1]");
    constexpr unsigned long long kCandidateCap = 20'000'000ULL;
    require(binomial_capped(n, k, kCandidateCap) <= kCandidateCap, ErrorCode::BadParameters,
            "too many candidate edges for direct enumeration");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> edges;
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
        const double u = rng.next_unit();
        if (u < p) {
            std::vector<Vertex> e;
            e.reserve(static_cast<std::size_t>(k));
            for (int v : comb) e.push_back(v + 1);
            edges.push_back(std::move(e));
        }
    } while (next_combination(comb, n));
    return validate(std::move(edges), n, k);
}

Hypergraph gen_random_graph(int n, double p, std::uint64_t seed) {
    return gen_random_kgraph(n, 2, p, seed);
}

Hypergraph gen_triangle_3graph(const Hypergraph& g) {
    require_graph(g, "triangle 3-graph");
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(g.n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(g.n) + 1, 0));
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
        adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
    }
    std::vector<std::vector<Vertex>> edges;
    for (Vertex u = 1; u <= g.n; ++u) {
        for (Vertex v = u + 1; v <= g.n; ++v) {
            if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            for (Vertex w = v + 1; w <= g.n; ++w) {
                if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
                    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
                    edges.push_back({u, v, w});
                }
            }
        }
    }
    return validate(std::move(edges), g.n, 3);
}

std::optional<Windmill> find_windmill(const Hypergraph& g) {
    require_graph(g, "windmill search");
    const Hypergraph t = gen_triangle_3graph(g);
    const auto comb = find_three_comb(t);
    if (!comb) return std::nullopt;
    Windmill w;
    for (int i = 0; i < 3; ++i) {
        const auto& e = t.edge((*comb)[static_cast<std::size_t>(i)]);
        w.blades[static_cast<std::size_t>(i)] = {e[0], e[1], e[2]};
    }
    const auto& hub = t.edge((*comb)[3]);
    w.hub = {hub[0], hub[1], hub[2]};
    return w;
}

Hypergraph gen_subdivided(const Hypergraph& h3, const std::vector<int>& nu) {
    require(h3.k == 3, ErrorCode::BadParameters, "subdivision expects a 3-uniform input");
    require(static_cast<int>(nu.size()) == h3.m(), ErrorCode::BadParameters,
            "one multiplicity per edge required");
    for (int v : nu) require(v >= 1, ErrorCode::BadParameters, "multiplicities must be positive");
    std::vector<std::vector<Vertex>> edges;
    Vertex next = h3.n;
    for (int i = 0; i < h3.m(); ++i) {
        const auto& e = h3.edges[static_cast<std::size_t>(i)];
        for (int rep = 0; rep < nu[static_cast<std::size_t>(i)]; ++rep) {
            const Vertex w = ++next;
            edges.push_back({e[0], e[1], w});
            edges.push_back({e[0], e[2], w});
            edges.push_back({e[1], e[2], w});
        }
    }
    return validate(std::move(edges), next, 3);
}

Hypergraph gen_rooted_blowup(const std::vector<int>& sizes, int k) {
    require(k >= 2, ErrorCode::BadParameters, "k must be at least 2");
    require(sizes.size() >= 2, ErrorCode::BadParameters, "need at least two parts");
    for (int s : sizes) require(s >= 1, ErrorCode::BadParameters, "part sizes must be positive");
    std::vector<Vertex> first(sizes.size()); // first vertex of each part; also its root
    Vertex next = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        first[i] = next + 1;
        next += sizes[i];
    }
    const int n = next;
    std::vector<std::vector<Vertex>> edges;
    bool any_pair = false;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (std::size_t j = i + 1; j < sizes.size(); ++j) {
            const int pool_size = sizes[i] + sizes[j] - 2;
            if (pool_size < k - 2) continue;
            any_pair = true;
            std::vector<Vertex> pool; // the two parts minus their roots
            for (int a = 1; a < sizes[i]; ++a) pool.push_back(first[i] + a);
            for (int a = 1; a < sizes[j]; ++a) pool.push_back(first[j] + a);
            if (k == 2) {
                edges.push_back({first[i], first[j]});
                continue;
            }
            std::vector<int> comb(static_cast<std::size_t>(k - 2));
            for (int a = 0; a < k - 2; ++a) comb[static_cast<std::size_t>(a)] = a;
            std::vector<std::vector<Vertex>> local;
            do {
                std::vector<Vertex> e{first[i], first[j]};
                for (int idx : comb) e.push_back(pool[static_cast<std::size_t>(idx)]);
                std::sort(e.begin(), e.end());
                local.push_back(std::move(e));
            } while (next_combination(comb, pool_size));
            std::sort(local.begin(), local.end());
            for (auto& e : local) edges.push_back(std::move(e));
        }
    }
    require(any_pair, ErrorCode::BadParameters, "no pair of parts can host a k-edge");
    return validate(std::move(edges), n, k);
}

Hypergraph gen_brick_wall(int rows, int cols) {
    require(rows >= 1 && cols >= 1, ErrorCode::BadParameters, "patch must be at least 1x1");
    const int width = 2 * cols + 1;
    auto id = [&](int r, int c) { return r * width + c + 1; };
    std::vector<std::vector<Vertex>> edges;
    for (int r = 0; r <= rows; ++r) {
        for (int c = 0; c + 1 < width; ++c) {
            edges.push_back({id(r, c), id(r, c + 1)});
        }
    }
    // Verticals alternate per band, which opens the hexagonal faces.
    for (int r = 0; r < rows; ++r) {
        for (int c = r % 2; c < width; c += 2) {
            edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return validate(std::move(edges), (rows + 1) * width, 2);
}

Hypergraph gen_hex_3graph(int rows, int cols) {
    return reduce_graph_to_kgraph(gen_brick_wall(rows, cols), 3);
}

Hypergraph gen_heilmann_lattice(int rows, int cols) {
    require(rows >= 1 && cols >= 1, ErrorCode::BadParameters, "patch must be at least 1x1");
    const int pr = rows + 1; // lattice points per column
    const int pc = cols + 1; // lattice points per row
    auto point = [&](int r, int c) { return r * pc + c + 1; };
    Vertex next = pr * pc;
    // Midpoint of each lattice edge; pendant midpoints stand in at the
    // boundary so every lattice point centers one triple per axis.
    std::map<std::pair<int, int>, Vertex> horizontal; // key (r, c): midpoint of (r,c)-(r,c+1)
    std::map<std::pair<int, int>, Vertex> vertical;   // key (r, c): midpoint of (r,c)-(r+1,c)
    for (int r = 0; r < pr; ++r) {
        for (int c = 0; c < cols; ++c) horizontal[{r, c}] = ++next;
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < pc; ++c) vertical[{r, c}] = ++next;
    }
    auto mid = [&](std::map<std::pair<int, int>, Vertex>& store, int r, int c) {
        auto it = store.find({r, c});
        if (it != store.end()) return it->second;
        const Vertex v = ++next;
        store.emplace(std::make_pair(r, c), v);
        return v;
    };
    std::vector<std::vector<Vertex>> edges;
    for (int r = 0; r < pr; ++r) {
        for (int c = 0; c < pc; ++c) {
            edges.push_back({mid(horizontal, r, c - 1), point(r, c), mid(horizontal, r, c)});
            edges.push_back({mid(vertical, r - 1, c), point(r, c), mid(vertical, r, c)});
        }
    }
    return validate(std::move(edges), next, 3);
}

Hypergraph reduce_graph_to_kgraph(const Hypergraph& g, int k) {
    require_graph(g, "graph reduction");
    require(k >= 3, ErrorCode::BadParameters, "k must be at least 3");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(g.m()));
    Vertex next = g.n;
    for (const auto& e : g.edges) {
        std::vector<Vertex> out{e[0], e[1]};
        for (int j = 0; j < k - 2; ++j) out.push_back(++next);
        edges.push_back(std::move(out));
    }
    return validate(std::move(edges), next, k);
}

} // namespace hypermatch
