// Acceptance gate: one line of output per criterion, nonzero exit on any
// failure. Every tolerance and sample size is pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypermatch/chain.hpp"
#include "hypermatch/counting.hpp"
#include "hypermatch/decompose.hpp"
#include "hypermatch/generators.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/paths.hpp"
#include "hypermatch/rng.hpp"
#include "hypermatch/util.hpp"

#include "../oracles.hpp"

using namespace hypermatch;

namespace {

struct Named {
    std::string label;
    Hypergraph h;
};

Hypergraph loose_cycle(int q) { return gen_overlap_cycle(2 * q, 3, 1); }

Hypergraph loose_path(int q) { return oracles::loose_path3(q); }

Hypergraph two_disjoint() { return validate({{1, 2, 3}, {4, 5, 6}}, 6, 3); }

Hypergraph two_intersecting() { return validate({{1, 2, 3}, {3, 4, 5}}, 5, 3); }

Hypergraph single_edge() { return validate({{1, 2, 3}}, 3, 3); }

BigInt int_pow(BigInt base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

bool matrix_irreducible(const TransitionMatrix& t) {
    const int n = t.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (!seen[static_cast<size_t>(j)] && j != at &&
                t.numerators[static_cast<size_t>(at)][static_cast<size_t>(j)] > 0) {
                seen[static_cast<size_t>(j)] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == n;
}

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        pass = false;
        detail << " [" << why << "]";
    }
};

// ---------------------------------------------------------------------------
// 1. Exact chain law on at least twenty small instances.
Criterion criterion_1() {
    Criterion c;
    std::vector<Named> pool;
    for (int q = 4; q <= 8; ++q) pool.push_back({"loose-cycle-" + std::to_string(q), loose_cycle(q)});
    for (int n = 8; n <= 10; ++n) pool.push_back({"tight-cycle-" + std::to_string(n), gen_overlap_cycle(n, 3, 2)});
    pool.push_back({"overlap-8-4-2", gen_overlap_cycle(8, 4, 2)});
    pool.push_back({"overlap-12-4-2", gen_overlap_cycle(12, 4, 2)});
    pool.push_back({"overlap-12-5-2", gen_overlap_cycle(12, 5, 2)});
    pool.push_back({"enriched-12-3", gen_enriched_tight_cycle(12, 3)});
    pool.push_back({"hex-1x1", gen_hex_3graph(1, 1)});
    pool.push_back({"hex-1x2", gen_hex_3graph(1, 2)});
    pool.push_back({"hex-2x2", gen_hex_3graph(2, 2)});
    pool.push_back({"heilmann-1x1", gen_heilmann_lattice(1, 1)});
    pool.push_back({"blowup-222", gen_rooted_blowup({2, 2, 2}, 3)});
    pool.push_back({"blowup-322", gen_rooted_blowup({3, 2, 2}, 3)});
    pool.push_back({"blowup-33-4", gen_rooted_blowup({3, 3}, 4)});
    pool.push_back({"subdivided-edge-2", gen_subdivided(single_edge(), {2})});
    pool.push_back({"subdivided-cycle", gen_subdivided(loose_cycle(4), {1, 2, 1, 2})});
    for (int q = 4; q <= 6; ++q) pool.push_back({"loose-path-" + std::to_string(q), loose_path(q)});
    pool.push_back({"reduce-k4-4", reduce_graph_to_kgraph(
                                       validate({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 4, 2), 4)});
    pool.push_back({"reduce-rnd-5", reduce_graph_to_kgraph(gen_random_graph(8, 0.4, 11), 5)});

    int used = 0;
    for (const auto& [label, h] : pool) {
        if (find_three_comb(h).has_value()) {
            c.fail(label + " not in the family");
            continue;
        }
        const BigInt count = count_exact(h);
        if (count > 500) continue; // pool slack, quorum below enforces coverage
        ++used;
        const TransitionMatrix t = build_transition_matrix(h, 500);
        if (BigInt(t.size()) != count) c.fail(label + " state enumeration mismatch");
        bool symmetric = true;
        bool stochastic = true;
        bool lazy = true;
        for (int i = 0; i < t.size(); ++i) {
            long long row = 0;
            long long col = 0;
            for (int j = 0; j < t.size(); ++j) {
                row += t.numerators[static_cast<size_t>(i)][static_cast<size_t>(j)];
                col += t.numerators[static_cast<size_t>(j)][static_cast<size_t>(i)];
                symmetric = symmetric && t.numerators[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                                             t.numerators[static_cast<size_t>(j)][static_cast<size_t>(i)];
            }
            // exact-rational stationarity of the uniform law: each column of
            // numerators sums to the common denominator
            stochastic = stochastic && row == t.denominator && col == t.denominator;
            lazy = lazy && 2 * t.numerators[static_cast<size_t>(i)][static_cast<size_t>(i)] >= t.denominator;
        }
        if (!symmetric) c.fail(label + " not symmetric");
        if (!stochastic) c.fail(label + " not doubly stochastic");
        if (!lazy) c.fail(label + " diagonal below 1/2 (aperiodicity)");
        if (!matrix_irreducible(t)) c.fail(label + " not irreducible");
    }
    if (used < 20) c.fail("only " + std::to_string(used) + " instances qualified");
    c.detail << " " << used << " instances, exact rational checks";
    return c;
}

// ---------------------------------------------------------------------------
// 2. Encoding injectivity and congestion over every ordered pair.
Criterion criterion_2() {
    Criterion c;
    std::vector<Named> pool;
    for (int q = 4; q <= 7; ++q) pool.push_back({"loose-cycle-" + std::to_string(q), loose_cycle(q)});
    pool.push_back({"tight-cycle-8", gen_overlap_cycle(8, 3, 2)});
    pool.push_back({"hex-1x1", gen_hex_3graph(1, 1)});
    pool.push_back({"blowup-222", gen_rooted_blowup({2, 2, 2}, 3)});
    pool.push_back({"subdivided-edge-2", gen_subdivided(single_edge(), {2})});
    pool.push_back({"heilmann-1x1", gen_heilmann_lattice(1, 1)});
    pool.push_back({"loose-path-5", loose_path(5)});
    pool.push_back({"two-intersecting", two_intersecting()});
    pool.push_back({"reduce-rnd-3", reduce_graph_to_kgraph(gen_random_graph(7, 0.4, 4), 3)});

    int used = 0;
    long long transitions_checked = 0;
    for (const auto& [label, h] : pool) {
        if (count_exact(h) > 200) continue;
        const auto states = enumerate_matchings(h, 200, ErrorCode::StateSpaceTooLarge);
        ++used;

        std::set<std::vector<EdgeIndex>> augmented;
        augmented.insert({});
        for (const Matching& m : states) {
            augmented.insert(m);
            for (EdgeIndex e = 0; e < h.m(); ++e) {
                Matching with = m;
                if (!sorted_contains(with, e)) insert_sorted(with, e);
                augmented.insert(with);
            }
        }
        const BigInt omega_prime = BigInt(augmented.size());
        const BigInt poly_bound = int_pow(h.n, h.k) * BigInt(states.size());
        if (omega_prime > poly_bound) c.fail(label + " augmented space exceeds n^k |Omega|");

        std::map<std::pair<Matching, Matching>, long long> load;
        bool image_ok = true;
        bool decode_ok = true;
        for (const Matching& i_m : states)
            for (const Matching& f_m : states) {
                const CanonicalPath path = canonical_path(h, i_m, f_m);
                for (int j = 0; j < path.length(); ++j) {
                    const Matching& from = path.matchings[static_cast<size_t>(j)];
                    const Matching& to = path.matchings[static_cast<size_t>(j) + 1];
                    ++transitions_checked;
                    const EncodingImage img = eta(h, i_m, f_m, from, to);
                    image_ok = image_ok && augmented.count(img) == 1;
                    const auto back = decode(h, from, to, img);
                    decode_ok = decode_ok && back.has_value() && back->first == i_m && back->second == f_m;
                    ++load[{from, to}];
                }
            }
        if (!image_ok) c.fail(label + " encoding image left the augmented space");
        if (!decode_ok) c.fail(label + " decoding failed to invert the encoding");
        for (const auto& [transition, paths] : load)
            if (BigInt(paths) > omega_prime) {
                c.fail(label + " a transition carries more paths than |Omega'|");
                break;
            }
    }
    if (used < 10) c.fail("only " + std::to_string(used) + " instances qualified");
    c.detail << " " << used << " instances, " << transitions_checked << " routed transitions, zero violations";
    return c;
}

// ---------------------------------------------------------------------------
// 3. Convergence envelope and the mixing-time guarantee.
Criterion criterion_3() {
    Criterion c;
    std::vector<Named> pool;
    pool.push_back({"single-edge", single_edge()});
    pool.push_back({"two-disjoint", two_disjoint()});
    pool.push_back({"two-intersecting", two_intersecting()});
    pool.push_back({"loose-path-3", loose_path(3)});
    pool.push_back({"loose-path-5", loose_path(5)});
    pool.push_back({"loose-cycle-4", loose_cycle(4)});
    pool.push_back({"loose-cycle-5", loose_cycle(5)});
    pool.push_back({"loose-cycle-6", loose_cycle(6)});
    pool.push_back({"hex-1x1", gen_hex_3graph(1, 1)});
    pool.push_back({"tight-cycle-8", gen_overlap_cycle(8, 3, 2)});
    pool.push_back({"blowup-22", gen_rooted_blowup({2, 2}, 3)});
    pool.push_back({"subdivided-edge-2", gen_subdivided(single_edge(), {2})});

    const long long t_max = 10000;
    const double epsilon = 0.25;
    int used = 0;
    for (const auto& [label, h] : pool) {
        const TransitionMatrix t = build_transition_matrix(h, 24);
        ++used;
        const ChainAnalysis a = analyze(t, epsilon, t_max);
        if (!a.conductance.has_value()) {
            c.fail(label + " missing exact conductance");
            continue;
        }
        const double phi = a.conductance->to_double();
        const double states = static_cast<double>(t.size());
        double envelope = states * states;
        const double decay = 1.0 - phi * phi / 2.0;
        bool inside = a.tv_curve.size() == static_cast<size_t>(t_max) + 1;
        for (size_t step = 0; step < a.tv_curve.size(); ++step) {
            inside = inside && a.tv_curve[step] <= envelope * (1.0 + 1e-9) + 1e-12;
            envelope *= decay;
        }
        if (!inside) c.fail(label + " violated the geometric envelope");
        if (!a.t_mix_exact.has_value()) {
            c.fail(label + " did not reach epsilon within the horizon");
            continue;
        }
        if (BigInt(*a.t_mix_exact) > theoretical_mixing_bound(h, epsilon))
            c.fail(label + " measured mixing time exceeded the guarantee");
    }
    c.detail << " " << used << " instances, horizon " << t_max << ", epsilon " << epsilon;
    return c;
}

// ---------------------------------------------------------------------------
// 4. Estimator accuracy across meta-trials, burn-in calibrated per family.
struct Family {
    std::string label;
    std::vector<Hypergraph> smaller; // two calibration members, ascending size
    Hypergraph target;
};

long long calibrated_burn_in(const Family& fam, double tv_target, Criterion& c) {
    // Mixing times to tv_target on the two smaller members, then a power-law
    // extrapolation in the edge count with 1.5x headroom, floored at 16.
    std::vector<std::pair<double, double>> points; // (m, t)
    for (const Hypergraph& h : fam.smaller) {
        const TransitionMatrix t = build_transition_matrix(h, 2000);
        const ChainAnalysis a = analyze(t, tv_target, 20000);
        if (!a.t_mix_exact.has_value()) {
            c.fail(fam.label + " calibration member failed to mix");
            return 16;
        }
        points.emplace_back(static_cast<double>(h.m()),
                            std::max(1.0, static_cast<double>(*a.t_mix_exact)));
    }
    const auto [m1, t1] = points[0];
    const auto [m2, t2] = points[1];
    double exponent = 0.0;
    if (t2 > t1 && m2 > m1) exponent = std::log(t2 / t1) / std::log(m2 / m1);
    const double target_m = static_cast<double>(fam.target.m());
    const double extrapolated = t2 * std::pow(target_m / m2, exponent);
    return std::max<long long>(16, static_cast<long long>(std::ceil(1.5 * extrapolated)));
}

Criterion criterion_4() {
    Criterion c;
    std::vector<Family> families;
    families.push_back({"loose-cycle-5", {loose_cycle(3), loose_cycle(4)}, loose_cycle(5)});
    families.push_back({"loose-cycle-6", {loose_cycle(4), loose_cycle(5)}, loose_cycle(6)});
    families.push_back({"loose-cycle-7", {loose_cycle(5), loose_cycle(6)}, loose_cycle(7)});
    families.push_back({"loose-path-6", {loose_path(3), loose_path(4)}, loose_path(6)});
    families.push_back({"loose-path-7", {loose_path(4), loose_path(5)}, loose_path(7)});
    families.push_back({"tight-cycle-8", {gen_overlap_cycle(6, 3, 2), gen_overlap_cycle(7, 3, 2)},
                        gen_overlap_cycle(8, 3, 2)});
    families.push_back({"tight-cycle-9", {gen_overlap_cycle(7, 3, 2), gen_overlap_cycle(8, 3, 2)},
                        gen_overlap_cycle(9, 3, 2)});
    families.push_back({"blowup-322", {gen_rooted_blowup({2, 2}, 3), gen_rooted_blowup({3, 2}, 3)},
                        gen_rooted_blowup({3, 2, 2}, 3)});
    families.push_back({"subdivided-edge-3",
                        {gen_subdivided(single_edge(), {1}), gen_subdivided(single_edge(), {2})},
                        gen_subdivided(single_edge(), {3})});
    families.push_back({"reduce-random-7",
                        {reduce_graph_to_kgraph(gen_random_graph(5, 0.4, 2), 3),
                         reduce_graph_to_kgraph(gen_random_graph(6, 0.4, 2), 3)},
                        reduce_graph_to_kgraph(gen_random_graph(7, 0.4, 2), 3)});

    const double epsilon = 0.2;
    const double delta = 0.1;
    const int trials = 100;
    const int needed = 85;
    int used = 0;
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const Family& fam = families[fi];
        if (find_three_comb(fam.target).has_value()) {
            c.fail(fam.label + " target not in the family");
            continue;
        }
        const BigInt count = count_exact(fam.target);
        if (count > 1000000) {
            c.fail(fam.label + " target not oracle-countable");
            continue;
        }
        if (fam.target.m() > 10) {
            c.fail(fam.label + " target exceeds the trial budget");
            continue;
        }
        ++used;
        const double exact = count.convert_to<double>();
        const double tv_target = epsilon / (8.0 * static_cast<double>(fam.target.m()));
        const long long burn_in = calibrated_burn_in(fam, tv_target, c);
        int hits = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t seed =
                derive_stream(0xACCE5501u, static_cast<std::uint64_t>(fi) * 1000 + static_cast<std::uint64_t>(trial));
            const EstimateResult r =
                estimate_count(fam.target, epsilon, delta, SampleMode::EmpiricalBurnIn, burn_in, seed);
            if (std::abs(r.estimate - exact) <= epsilon * exact) ++hits;
        }
        c.detail << " " << fam.label << "=" << hits << "/" << trials << "(t*=" << burn_in << ")";
        if (hits < needed) c.fail(fam.label + " only " + std::to_string(hits) + " hits");
    }
    if (used < 10) c.fail("only " + std::to_string(used) + " instances qualified");
    return c;
}

// ---------------------------------------------------------------------------
// 5. Goodness of fit of the approximate sampler against enumerated uniformity.
Criterion criterion_5() {
    Criterion c;
    std::vector<Named> pool;
    for (int q = 4; q <= 8; ++q) pool.push_back({"loose-cycle-" + std::to_string(q), loose_cycle(q)});
    for (int q = 4; q <= 7; ++q) pool.push_back({"loose-path-" + std::to_string(q), loose_path(q)});
    pool.push_back({"hex-1x1", gen_hex_3graph(1, 1)});
    pool.push_back({"tight-cycle-8", gen_overlap_cycle(8, 3, 2)});
    pool.push_back({"subdivided-edge-2", gen_subdivided(single_edge(), {2})});

    const long long draws = 100000;
    const double significance = 1e-3;
    int used = 0;
    for (size_t pi = 0; pi < pool.size(); ++pi) {
        const auto& [label, h] = pool[pi];
        const auto states = enumerate_matchings(h, 100, ErrorCode::StateSpaceTooLarge);
        ++used;
        // burn-in from the exact curve: first step with d_TV at most 1e-4
        const TransitionMatrix t = build_transition_matrix(h, 100);
        const ChainAnalysis a = analyze(t, 1e-4, 5000);
        if (!a.t_mix_exact.has_value()) {
            c.fail(label + " no finite burn-in found");
            continue;
        }
        const long long burn_in = *a.t_mix_exact;

        std::map<Matching, int> index;
        for (size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
        std::vector<long long> observed(states.size(), 0);
        ChainRunner runner(h, derive_stream(0xACCE5505u, static_cast<std::uint64_t>(pi)));
        for (long long d = 0; d < draws; ++d) {
            runner.reset();
            runner.run(burn_in);
            ++observed[static_cast<size_t>(index.at(runner.current()))];
        }
        const std::vector<double> uniform(states.size(), 1.0 / static_cast<double>(states.size()));
        const double stat = oracles::chi_square_stat(observed, uniform, draws);
        const double threshold = oracles::chi_square_threshold(static_cast<int>(states.size()) - 1, significance);
        if (stat >= threshold) {
            std::ostringstream why;
            why << label << " chi-square " << stat << " >= " << threshold;
            c.fail(why.str());
        }
    }
    if (used < 10) c.fail("only " + std::to_string(used) + " instances qualified");
    c.detail << " " << used << " instances, " << draws << " draws each, significance " << significance;
    return c;
}

// ---------------------------------------------------------------------------
// 6. Graph-matching reductions counted exactly for k in {3,4,5}.
Criterion criterion_6() {
    Criterion c;
    std::vector<Hypergraph> graphs;
    for (std::uint64_t seed = 1; graphs.size() < 20 && seed <= 60; ++seed) {
        const Hypergraph g = gen_random_graph(8, 0.35, seed);
        if (g.m() >= 1 && g.m() <= 14) graphs.push_back(g);
    }
    if (graphs.size() < 20) c.fail("only " + std::to_string(graphs.size()) + " graphs qualified");
    long long checked = 0;
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Hypergraph& g = graphs[gi];
        const BigInt expected = oracles::count_graph_matchings(g);
        for (int k = 3; k <= 5; ++k) {
            const Hypergraph r = reduce_graph_to_kgraph(g, k);
            ++checked;
            const std::string label = "graph-" + std::to_string(gi) + "-k" + std::to_string(k);
            if (r.n != g.n + (k - 2) * g.m()) c.fail(label + " wrong vertex count");
            if (find_three_comb(r).has_value()) c.fail(label + " reduction has a comb");
            if (count_exact(r) != expected) c.fail(label + " count mismatch");
        }
    }
    c.detail << " " << graphs.size() << " graphs x 3 uniformities, " << checked << " reductions";
    return c;
}

// ---------------------------------------------------------------------------
// 7. Family constructions: membership and edge-count identities.
Criterion criterion_7() {
    Criterion c;
    int positives = 0;
    const auto positive = [&](const std::string& label, const Hypergraph& h, int expected_m) {
        ++positives;
        if (expected_m >= 0 && h.m() != expected_m) c.fail(label + " edge-count formula broke");
        if (find_three_comb(h).has_value()) c.fail(label + " contains a comb");
    };

    for (int k = 3; k <= 5; ++k)
        for (int overlap = 1; overlap < k; ++overlap) {
            const int stride = k - overlap;
            for (int q = 3; q <= 6; ++q) {
                const int n = stride * (k + q);
                positive("cycle-" + std::to_string(n) + "-" + std::to_string(k) + "-" + std::to_string(overlap),
                         gen_overlap_cycle(n, k, overlap), n / stride);
            }
        }
    for (int n = 8; n <= 16; n += 2)
        positive("enriched-" + std::to_string(n) + "-3", gen_enriched_tight_cycle(n, 3), (3 + 1) * n / 2);
    for (int n = 10; n <= 14; n += 2)
        positive("enriched-" + std::to_string(n) + "-4", gen_enriched_tight_cycle(n, 4), (4 + 1) * n / 2);

    {
        const std::vector<int> nu{1, 2, 3, 1};
        int total = 0;
        for (int v : nu) total += v;
        positive("subdivided-cycle", gen_subdivided(loose_cycle(4), nu), 3 * total);
        const Hypergraph comby = gen_heilmann_lattice(2, 2); // input with a comb
        std::vector<int> nu2(static_cast<size_t>(comby.m()), 2);
        positive("subdivided-heilmann", gen_subdivided(comby, nu2), 3 * 2 * comby.m());
    }

    for (const auto& sizes : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2}, {3, 3, 3}, {1, 2, 3}, {4, 2}})
        for (int k = 3; k <= 4; ++k) {
            long long expected = 0;
            bool feasible = false;
            for (size_t i = 0; i < sizes.size(); ++i)
                for (size_t j = i + 1; j < sizes.size(); ++j) {
                    const int pool = sizes[i] + sizes[j] - 2;
                    if (pool >= k - 2) {
                        feasible = true;
                        long long ways = 1;
                        for (int x = 0; x < k - 2; ++x) ways = ways * (pool - x) / (x + 1);
                        expected += ways;
                    }
                }
            if (!feasible) continue;
            std::string label = "blowup-k" + std::to_string(k) + "-";
            for (int s : sizes) label += std::to_string(s);
            positive(label, gen_rooted_blowup(sizes, k), static_cast<int>(expected));
        }

    for (int r = 1; r <= 3; ++r)
        for (int col = 1; col <= 3; ++col)
            positive("hex-" + std::to_string(r) + "x" + std::to_string(col), gen_hex_3graph(r, col),
                     gen_brick_wall(r, col).m());

    positive("heilmann-1x1", gen_heilmann_lattice(1, 1), 8);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Hypergraph g = gen_random_graph(8, 0.4, seed);
        if (!find_windmill(g).has_value())
            positive("triangle-" + std::to_string(seed), gen_triangle_3graph(g), -1);
        for (int k = 3; k <= 5; ++k)
            positive("reduce-" + std::to_string(seed) + "-k" + std::to_string(k),
                     reduce_graph_to_kgraph(g, k), g.m());
    }

    // decorated lattices beyond one cell must contain a comb
    for (auto [r, col] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        const Hypergraph h = gen_heilmann_lattice(r, col);
        if (h.m() != 2 * (r + 1) * (col + 1))
            c.fail("heilmann-" + std::to_string(r) + "x" + std::to_string(col) + " edge count");
        if (!find_three_comb(h).has_value())
            c.fail("heilmann-" + std::to_string(r) + "x" + std::to_string(col) + " lost its comb");
    }

    c.detail << " " << positives << " constructions, all edge counts exact";
    return c;
}

// ---------------------------------------------------------------------------
// 8. Comb detection equals an independent claw search on the line graph.
Criterion criterion_8() {
    Criterion c;
    std::vector<Named> pool;
    for (int q = 4; q <= 7; ++q) pool.push_back({"loose-cycle-" + std::to_string(q), loose_cycle(q)});
    for (int n = 8; n <= 10; ++n) pool.push_back({"tight-cycle-" + std::to_string(n), gen_overlap_cycle(n, 3, 2)});
    pool.push_back({"enriched-12-3", gen_enriched_tight_cycle(12, 3)});
    pool.push_back({"enriched-10-4", gen_enriched_tight_cycle(10, 4)});
    for (int r = 1; r <= 2; ++r)
        for (int col = 1; col <= 3; ++col) {
            pool.push_back({"hex", gen_hex_3graph(r, col)});
            pool.push_back({"heilmann", gen_heilmann_lattice(r, col)});
        }
    pool.push_back({"heilmann-3x3", gen_heilmann_lattice(3, 3)});
    pool.push_back({"blowup-332", gen_rooted_blowup({3, 3, 2}, 3)});
    pool.push_back({"blowup-222-4", gen_rooted_blowup({2, 2, 2}, 4)});
    pool.push_back({"subdivided", gen_subdivided(loose_cycle(4), {2, 2, 2, 2})});
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        pool.push_back({"random3-sparse", gen_random_kgraph(11, 3, 0.04, seed)});
        pool.push_back({"random3-dense", gen_random_kgraph(9, 3, 0.25, seed)});
        pool.push_back({"random4", gen_random_kgraph(11, 4, 0.03, seed)});
    }
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        pool.push_back({"triangle", gen_triangle_3graph(gen_random_graph(9, 0.45, seed))});
    pool.push_back({"comb", validate({{1, 2, 3}, {1, 4, 5}, {2, 6, 7}, {3, 8, 9}}, 9, 3)});

    int used = 0;
    int with_comb = 0;
    for (const auto& [label, h] : pool) {
        if (h.m() > 50) continue; // random tail; quorum below enforces coverage
        ++used;
        const bool found = find_three_comb(h).has_value();
        if (found != oracles::has_claw(h)) c.fail(label + " disagrees with the claw scan");
        with_comb += found ? 1 : 0;
    }
    if (used < 50) c.fail("only " + std::to_string(used) + " instances qualified");
    if (with_comb == 0 || with_comb == used) c.fail("pool failed to exercise both outcomes");
    c.detail << " " << used << " instances (" << with_comb << " with combs), full agreement";
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion (*)()>> criteria{
        {"exact chain law (symmetric, doubly stochastic, lazy, irreducible) on 20+ instances", criterion_1},
        {"encoding injectivity and congestion certificates over all ordered pairs", criterion_2},
        {"total-variation envelope and mixing-time guarantee up to t = 10^4", criterion_3},
        {"estimator within 20% of exact counts in 85+/100 meta-trials per instance", criterion_4},
        {"chi-square uniformity of 10^5 sampler draws at significance 10^-3", criterion_5},
        {"graph-matching reductions counted exactly for k in {3,4,5}", criterion_6},
        {"family constructions: comb-freeness and edge-count identities", criterion_7},
        {"comb detection agrees with an independent claw search on 50+ instances", criterion_8},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Criterion result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail << " [exception: " << e.what() << "]";
        }
        const auto seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count() /
            1000.0;
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
                  << " -" << result.detail.str() << " (" << seconds << "s)" << std::endl;
        all = all && result.pass;
    }
    return all ? 0 : 1;
}
