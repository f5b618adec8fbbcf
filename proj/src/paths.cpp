#include "hypermatch/paths.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hypermatch/counting.hpp"
#include "hypermatch/rng.hpp"
#include "hypermatch/util.hpp"

namespace hypermatch {

namespace {

// First common vertex of two sorted edges; consecutive component edges always
// share at least one.
Vertex min_shared(const Hypergraph& h, EdgeIndex a, EdgeIndex b) {
    const auto& ea = h.edge(a);
    const auto& eb = h.edge(b);
    auto ia = ea.begin();
    auto ib = eb.begin();
    while (ia != ea.end() && ib != eb.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return *ia;
    }
    raise(ErrorCode::Internal, "component edges " + std::to_string(a) + " and " +
                                   std::to_string(b) + " do not intersect");
}

void reverse_component(Component& c) {
    std::reverse(c.edges.begin(), c.edges.end());
    std::reverse(c.owners.begin(), c.owners.end());
}

// Rotates/reflects the cycle per the traversal rules: starts at the unique
// I-edge covering the minimum I-covered vertex, directed so the connector of
// the second and third edges beats the connector of the last two.
void orient_cycle(const Hypergraph& h, Component& c) {
    const int s = static_cast<int>(c.edges.size());
    Vertex min_i_vertex = -1;
    for (int p = 0; p < s; ++p) {
        if (c.owners[static_cast<std::size_t>(p)] != Owner::I) continue;
        const Vertex front = h.edge(c.edges[static_cast<std::size_t>(p)]).front();
        if (min_i_vertex < 0 || front < min_i_vertex) min_i_vertex = front;
    }
    require(min_i_vertex >= 0, ErrorCode::Internal, "cycle without edges on the initial side");
    int start = -1;
    for (int p = 0; p < s; ++p) {
        if (c.owners[static_cast<std::size_t>(p)] == Owner::I &&
            h.edge(c.edges[static_cast<std::size_t>(p)]).front() == min_i_vertex) {
            start = p;
            break;
        }
    }
    require(start >= 0, ErrorCode::Internal, "cycle start edge not found");

    auto rotated = [&](bool forward) {
        Component out;
        out.kind = c.kind;
        out.min_vertex = c.min_vertex;
        out.edges.reserve(static_cast<std::size_t>(s));
        out.owners.reserve(static_cast<std::size_t>(s));
        for (int q = 0; q < s; ++q) {
            const int p = forward ? (start + q) % s : (start - q % s + s) % s;
            out.edges.push_back(c.edges[static_cast<std::size_t>(p)]);
            out.owners.push_back(c.owners[static_cast<std::size_t>(p)]);
        }
        return out;
    };
    auto direction_ok = [&](const Component& cand) {
        const Vertex head = min_shared(h, cand.edges[1], cand.edges[2]);
        const Vertex tail = min_shared(h, cand.edges[static_cast<std::size_t>(s - 2)],
                                       cand.edges[static_cast<std::size_t>(s - 1)]);
        return head > tail;
    };
    Component fwd = rotated(true);
    Component bwd = rotated(false);
    const bool f_ok = direction_ok(fwd);
    const bool b_ok = direction_ok(bwd);
    require(f_ok != b_ok, ErrorCode::Internal, "cycle direction rule did not discriminate");
    c = f_ok ? std::move(fwd) : std::move(bwd);
}

void orient_component(const Hypergraph& h, Component& c) {
    const int s = static_cast<int>(c.edges.size());
    switch (c.kind) {
        case ComponentKind::EvenPath:
            if (c.owners.front() != Owner::F) reverse_component(c);
            require(c.owners.front() == Owner::F, ErrorCode::Internal,
                    "even path lacks an initial final-side edge");
            break;
        case ComponentKind::OddPath: {
            if (s == 1) break;
            const Vertex head = min_shared(h, c.edges[0], c.edges[1]);
            const Vertex tail = min_shared(h, c.edges[static_cast<std::size_t>(s - 2)],
                                           c.edges[static_cast<std::size_t>(s - 1)]);
            require(head != tail, ErrorCode::Internal, "odd path connectors coincide");
            if (head > tail) reverse_component(c);
            break;
        }
        case ComponentKind::Cycle:
            orient_cycle(h, c);
            break;
    }
}

struct Emitter {
    const Hypergraph& h;
    CanonicalPath& path;
    Matching cur;

    void emit(TransitionKind kind, EdgeIndex added, EdgeIndex removed, int venue) {
        if (removed >= 0) {
            require(sorted_contains(cur, removed), ErrorCode::Internal,
                    "path step removes absent edge " + std::to_string(removed));
            erase_sorted(cur, removed);
        }
        if (added >= 0) insert_sorted(cur, added);
        path.steps.push_back(PathStep{kind, added, removed, venue});
        path.matchings.push_back(cur);
    }

    void traverse(const Component& c, int venue) {
        const auto& e = c.edges;
        const int s = static_cast<int>(e.size());
        switch (c.kind) {
            case ComponentKind::EvenPath:
                for (int j = 0; j + 1 < s; j += 2) {
                    emit(TransitionKind::Swap, e[static_cast<std::size_t>(j)],
                         e[static_cast<std::size_t>(j + 1)], venue);
                }
                break;
            case ComponentKind::OddPath:
                if (c.owners.front() == Owner::I) {
                    emit(TransitionKind::Remove, -1, e.front(), venue);
                    for (int j = 1; j + 1 < s; j += 2) {
                        emit(TransitionKind::Swap, e[static_cast<std::size_t>(j)],
                             e[static_cast<std::size_t>(j + 1)], venue);
                    }
                } else {
                    for (int j = 0; j + 2 < s; j += 2) {
                        emit(TransitionKind::Swap, e[static_cast<std::size_t>(j)],
                             e[static_cast<std::size_t>(j + 1)], venue);
                    }
                    emit(TransitionKind::Add, e.back(), -1, venue);
                }
                break;
            case ComponentKind::Cycle:
                emit(TransitionKind::Remove, -1, e.front(), venue);
                for (int j = 1; j + 2 < s; j += 2) {
                    emit(TransitionKind::Swap, e[static_cast<std::size_t>(j)],
                         e[static_cast<std::size_t>(j + 1)], venue);
                }
                emit(TransitionKind::Add, e.back(), -1, venue);
                break;
        }
    }
};

// Body of canonical_path without the comb-freeness check, so bulk callers can
// verify it once.
CanonicalPath build_path(const Hypergraph& h, const Matching& i_matching,
                         const Matching& f_matching) {
    CanonicalPath path;
    path.decomposition = decompose(h, i_matching, f_matching);
    for (auto& c : path.decomposition.components) orient_component(h, c);
    path.matchings.push_back(i_matching);
    Emitter em{h, path, i_matching};
    for (std::size_t r = 0; r < path.decomposition.components.size(); ++r) {
        em.traverse(path.decomposition.components[r], static_cast<int>(r));
    }
    require(path.matchings.back() == f_matching, ErrorCode::Internal,
            "canonical path did not terminate at the target matching");
    return path;
}

EncodingImage image_at(const Matching& i_matching, const Matching& f_matching, const Matching& m,
                       const Matching& m_prime) {
    return sorted_symmetric_difference(sorted_symmetric_difference(i_matching, f_matching),
                                       sorted_union(m, m_prime));
}

int find_transition(const CanonicalPath& path, const Matching& m, const Matching& m_prime) {
    for (int j = 0; j + 1 < static_cast<int>(path.matchings.size()); ++j) {
        if (path.matchings[static_cast<std::size_t>(j)] == m &&
            path.matchings[static_cast<std::size_t>(j + 1)] == m_prime) {
            return j;
        }
    }
    return -1;
}

} // namespace

CanonicalPath canonical_path(const Hypergraph& h, const Matching& i_matching,
                             const Matching& f_matching) {
    require_comb_free(h);
    return build_path(h, i_matching, f_matching);
}

EncodingImage eta(const Hypergraph& h, const Matching& i_matching, const Matching& f_matching,
                  const Matching& m, const Matching& m_prime) {
    const CanonicalPath path = canonical_path(h, i_matching, f_matching);
    require(find_transition(path, m, m_prime) >= 0, ErrorCode::TransitionNotOnPath,
            "(M, M') is not a transition of this canonical path");
    return image_at(i_matching, f_matching, m, m_prime);
}

std::optional<std::pair<Matching, Matching>> decode(const Hypergraph& h, const Matching& m,
                                                    const Matching& m_prime,
                                                    const EncodingImage& image) {
    if (!is_matching(h, m) || !is_matching(h, m_prime)) return std::nullopt;
    for (EdgeIndex e : image) {
        if (e < 0 || e >= h.m()) return std::nullopt;
    }
    EncodingImage img = image;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;

    const Matching moved = sorted_symmetric_difference(m, m_prime);
    if (moved.empty() || moved.size() > 2) return std::nullopt;
    const Matching united = sorted_union(m, m_prime);

    // I xor F = img xor (M union M'); its components are recovered ownerless.
    const std::vector<EdgeIndex> difference = sorted_symmetric_difference(img, united);
    for (EdgeIndex e : moved) {
        if (!sorted_contains(difference, e)) return std::nullopt;
    }
    auto raw = decompose_edge_set(h, difference);
    if (!raw) return std::nullopt;

    // Venue: the unique component containing M xor M'.
    int venue = -1;
    for (std::size_t r = 0; r < raw->size(); ++r) {
        const auto& edges = (*raw)[r].edges;
        bool all = true;
        for (EdgeIndex e : moved) {
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) all = false;
        }
        if (all) {
            venue = static_cast<int>(r);
            break;
        }
    }
    if (venue < 0) return std::nullopt;

    // Components before the venue are already switched (their M-part belongs
    // to F); components after it are untouched (their M-part belongs to I).
    Matching i_side;
    Matching f_side;
    for (std::size_t r = 0; r < raw->size(); ++r) {
        if (static_cast<int>(r) == venue) continue;
        for (EdgeIndex e : (*raw)[r].edges) {
            const bool in_m = sorted_contains(m, e);
            const bool to_f = static_cast<int>(r) < venue ? in_m : !in_m;
            (to_f ? f_side : i_side).push_back(e);
        }
    }

    // Venue seed: a removed edge came from I; a pure addition came from F.
    const Matching removed_set = sorted_difference(m, m_prime);
    EdgeIndex seed = -1;
    Owner seed_owner = Owner::I;
    if (removed_set.size() == 1) {
        seed = removed_set.front();
        seed_owner = Owner::I;
    } else if (removed_set.empty()) {
        const Matching added_set = sorted_difference(m_prime, m);
        if (added_set.size() != 1) return std::nullopt;
        seed = added_set.front();
        seed_owner = Owner::F;
    } else {
        return std::nullopt;
    }
    const auto& venue_edges = (*raw)[static_cast<std::size_t>(venue)].edges;
    const auto seed_it = std::find(venue_edges.begin(), venue_edges.end(), seed);
    if (seed_it == venue_edges.end()) return std::nullopt;
    const int seed_pos = static_cast<int>(seed_it - venue_edges.begin());
    for (int p = 0; p < static_cast<int>(venue_edges.size()); ++p) {
        const bool same = (p - seed_pos) % 2 == 0;
        const Owner owner = same == (seed_owner == Owner::I) ? Owner::I : Owner::F;
        (owner == Owner::I ? i_side : f_side).push_back(venue_edges[static_cast<std::size_t>(p)]);
    }

    std::sort(i_side.begin(), i_side.end());
    std::sort(f_side.begin(), f_side.end());
    const Matching common = sorted_difference(m, difference);
    const Matching i_matching = sorted_union(i_side, common);
    const Matching f_matching = sorted_union(f_side, common);
    if (!is_matching(h, i_matching) || !is_matching(h, f_matching)) return std::nullopt;

    // A candidate only counts if re-encoding it reproduces the query exactly.
    try {
        const CanonicalPath path = canonical_path(h, i_matching, f_matching);
        if (find_transition(path, m, m_prime) < 0) return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    if (image_at(i_matching, f_matching, m, m_prime) != img) return std::nullopt;
    return std::make_pair(i_matching, f_matching);
}

CongestionReport congestion_report(const Hypergraph& h, long long state_cap, int cut_samples,
                                   std::uint64_t seed) {
    require_comb_free(h);
    CongestionReport report;
    report.states = enumerate_matchings(h, state_cap, ErrorCode::StateSpaceTooLarge);
    const int count = static_cast<int>(report.states.size());

    auto state_index = [&](const Matching& m) {
        auto it = std::lower_bound(report.states.begin(), report.states.end(), m,
                                   [](const Matching& a, const Matching& b) {
                                       if (a.size() != b.size()) return a.size() < b.size();
                                       return a < b;
                                   });
        require(it != report.states.end() && *it == m, ErrorCode::Internal,
                "path state missing from the enumerated state space");
        return static_cast<int>(it - report.states.begin());
    };

    // Directed transition-graph edges, found by applying every proposal.
    std::vector<std::pair<int, int>> transitions;
    for (int i = 0; i < count; ++i) {
        for (EdgeIndex e = 0; e < h.m(); ++e) {
            const auto [next, kind] = apply_edge(h, report.states[static_cast<std::size_t>(i)], e);
            if (kind == TransitionKind::Null || next == report.states[static_cast<std::size_t>(i)])
                continue;
            transitions.emplace_back(i, state_index(next));
        }
    }
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    std::vector<long long> load(transitions.size(), 0);
    auto bump = [&](int from, int to) {
        auto it = std::lower_bound(transitions.begin(), transitions.end(), std::make_pair(from, to));
        require(it != transitions.end() && *it == std::make_pair(from, to), ErrorCode::Internal,
                "canonical path used a pair that is not a transition");
        ++load[static_cast<std::size_t>(it - transitions.begin())];
    };

    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            const CanonicalPath path = build_path(h, report.states[static_cast<std::size_t>(a)],
                                                  report.states[static_cast<std::size_t>(b)]);
            for (std::size_t j = 0; j + 1 < path.matchings.size(); ++j) {
                bump(state_index(path.matchings[j]), state_index(path.matchings[j + 1]));
            }
        }
    }

    report.loads.reserve(transitions.size());
    for (std::size_t t = 0; t < transitions.size(); ++t) {
        report.loads.push_back(TransitionLoad{transitions[t].first, transitions[t].second, load[t]});
        report.max_load = std::max(report.max_load, load[t]);
    }

    std::set<Matching> augmented;
    augmented.insert(Matching{});
    for (const auto& state : report.states) {
        for (EdgeIndex e = 0; e < h.m(); ++e) {
            augmented.insert(sorted_union(state, Matching{e}));
        }
    }
    report.omega_prime_size = static_cast<long long>(augmented.size());
    BigInt poly = 1;
    for (int i = 0; i < h.k; ++i) poly *= h.n;
    report.certificate_bound = poly * count;
    report.loads_within_certificate = BigInt(report.max_load) <= report.omega_prime_size;
    report.omega_prime_within_bound = report.omega_prime_size <= report.certificate_bound;

    report.cuts_ok = true;
    if (count >= 2 && cut_samples > 0) {
        Rng rng(seed);
        for (int c = 0; c < cut_samples; ++c) {
            std::vector<char> in_s(static_cast<std::size_t>(count), 0);
            long long size = 0;
            while (size == 0 || size == count) {
                size = 0;
                for (int i = 0; i < count; ++i) {
                    in_s[static_cast<std::size_t>(i)] = rng.next_coin() ? 1 : 0;
                    size += in_s[static_cast<std::size_t>(i)];
                }
            }
            long long cut = 0;
            for (const auto& [from, to] : transitions) {
                if (from < to && in_s[static_cast<std::size_t>(from)] != in_s[static_cast<std::size_t>(to)])
                    ++cut;
            }
            CutCheck check;
            check.subset_size = size;
            check.cut_edges = cut;
            check.ok = BigInt(cut) * poly * count >= BigInt(size) * (count - size);
            report.cuts_ok = report.cuts_ok && check.ok;
            report.cut_checks.push_back(check);
        }
    }
    return report;
}

} // namespace hypermatch
