#include "hypermatch/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>

#include "hypermatch/chain.hpp"
#include "hypermatch/rng.hpp"

namespace hypermatch {

namespace {

// Canonical state order: by matching size, then lexicographic on edge indices.
bool canonical_less(const Matching& a, const Matching& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void enumerate_rec(const Hypergraph& h, int start, Matching& cur, std::vector<char>& used,
                   long long cap, ErrorCode overflow_code, std::vector<Matching>& out) {
    out.push_back(cur);
    if (cap > 0 && static_cast<long long>(out.size()) > cap) {
        raise(overflow_code, "matching count exceeds cap " + std::to_string(cap) +
                                 ": at least " + std::to_string(out.size()) + " matchings");
    }
    const int m = h.m();
    for (int e = start; e < m; ++e) {
        bool free = true;
        for (Vertex v : h.edges[static_cast<std::size_t>(e)]) {
            if (used[static_cast<std::size_t>(v)]) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        for (Vertex v : h.edges[static_cast<std::size_t>(e)]) used[static_cast<std::size_t>(v)] = 1;
        cur.push_back(e);
        enumerate_rec(h, e + 1, cur, used, cap, overflow_code, out);
        cur.pop_back();
        for (Vertex v : h.edges[static_cast<std::size_t>(e)]) used[static_cast<std::size_t>(v)] = 0;
    }
}

BigInt count_word_rec(std::uint64_t avail, const std::vector<std::uint64_t>& conflict) {
    BigInt total = 1; // the empty completion
    while (avail != 0) {
        const int e = std::countr_zero(avail);
        avail &= avail - 1;
        total += count_word_rec(avail & ~conflict[static_cast<std::size_t>(e)], conflict);
    }
    return total;
}

using MaskVec = std::vector<std::uint64_t>;

int first_set(const MaskVec& v) {
    for (std::size_t w = 0; w < v.size(); ++w) {
        if (v[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(v[w]);
    }
    return -1;
}

BigInt count_wide_rec(MaskVec avail, const std::vector<MaskVec>& conflict) {
    BigInt total = 1;
    for (int e = first_set(avail); e >= 0; e = first_set(avail)) {
        avail[static_cast<std::size_t>(e) / 64] &= ~(std::uint64_t{1} << (e % 64));
        MaskVec rest = avail;
        const MaskVec& c = conflict[static_cast<std::size_t>(e)];
        for (std::size_t w = 0; w < rest.size(); ++w) rest[w] &= ~c[w];
        total += count_wide_rec(std::move(rest), conflict);
    }
    return total;
}

long long checked_steps(const BigInt& bound) {
    static const BigInt limit = BigInt(1) << 62;
    require(bound <= limit, ErrorCode::BadParameters,
            "theoretical walk length " + bound.str() + " is too large to execute; use the empirical mode");
    return bound.convert_to<long long>();
}

struct LevelPlan {
    std::vector<long long> steps; // walk length per level, length m
};

LevelPlan plan_levels(const Hypergraph& h, SampleMode mode, double tv_target, long long burn_in) {
    LevelPlan plan;
    const int m = h.m();
    plan.steps.reserve(static_cast<std::size_t>(m));
    if (mode == SampleMode::EmpiricalBurnIn) {
        require(burn_in >= 0, ErrorCode::BadParameters, "burn-in must be non-negative");
        plan.steps.assign(static_cast<std::size_t>(m), burn_in);
        return plan;
    }
    Hypergraph prefix{h.n, h.k, {}};
    for (int i = 1; i <= m; ++i) {
        prefix.edges.assign(h.edges.begin(), h.edges.begin() + i);
        plan.steps.push_back(checked_steps(theoretical_mixing_bound(prefix, tv_target)));
    }
    return plan;
}

struct RepOutcome {
    double estimate = 0.0;
    std::vector<double> ratios;
    std::uint64_t steps = 0;
};

// One full ladder pass. Level i samples from the chain on the first i edges
// and counts how often edge i-1 is avoided; a level whose count comes back
// zero is rerun once on a fresh stream before giving up.
RepOutcome run_repetition(const Hypergraph& h, const LevelPlan& plan, long long samples,
                          std::uint64_t master_seed, int rep, int repetitions) {
    const int m = h.m();
    RepOutcome out;
    out.ratios.reserve(static_cast<std::size_t>(m));
    ChainRunner runner(h, 0);
    double product = 1.0;
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t level_key =
            static_cast<std::uint64_t>(rep) * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(i - 1);
        const std::uint64_t retry_base =
            static_cast<std::uint64_t>(repetitions) * static_cast<std::uint64_t>(m);
        long long avoided = 0;
        for (int attempt = 0; attempt < 2; ++attempt) {
            runner.reset();
            runner.set_edge_prefix(i);
            runner.reseed(derive_stream(master_seed, level_key + (attempt == 0 ? 0 : retry_base)));
            avoided = 0;
            const long long t = plan.steps[static_cast<std::size_t>(i - 1)];
            for (long long srun = 0; srun < samples; ++srun) {
                runner.reset();
                runner.run(t);
                if (!runner.contains(i - 1)) ++avoided;
            }
            out.steps += static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(samples);
            if (avoided > 0) break;
        }
        require(avoided > 0, ErrorCode::ZeroRatio,
                "level " + std::to_string(i) + " avoidance ratio estimated as zero twice; " +
                    "the walk is too short or the instance too constrained");
        const double ratio = static_cast<double>(avoided) / static_cast<double>(samples);
        out.ratios.push_back(ratio);
        product *= ratio;
    }
    out.estimate = 1.0 / product;
    return out;
}

} // namespace

std::vector<Matching> enumerate_matchings(const Hypergraph& h, long long cap, ErrorCode overflow_code) {
    std::vector<Matching> out;
    Matching cur;
    std::vector<char> used(static_cast<std::size_t>(h.n) + 1, 0);
    enumerate_rec(h, 0, cur, used, cap, overflow_code, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

BigInt count_exact(const Hypergraph& h) {
    const int m = h.m();
    if (m == 0) return 1;
    if (m <= 64) {
        std::vector<std::uint64_t> conflict(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (edges_intersect(h, i, j)) {
                    conflict[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                    conflict[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
                }
            }
        }
        const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        return count_word_rec(all, conflict);
    }
    const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    std::vector<MaskVec> conflict(static_cast<std::size_t>(m), MaskVec(words, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (edges_intersect(h, i, j)) {
                conflict[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] |=
                    std::uint64_t{1} << (j % 64);
                conflict[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) / 64] |=
                    std::uint64_t{1} << (i % 64);
            }
        }
    }
    MaskVec all(words, 0);
    for (int e = 0; e < m; ++e) all[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
    return count_wide_rec(std::move(all), conflict);
}

const char* sample_mode_name(SampleMode mode) {
    switch (mode) {
        case SampleMode::TheoreticalBound: return "theoretical";
        case SampleMode::EmpiricalBurnIn: return "empirical";
    }
    return "unknown";
}

Matching sample_matching(const Hypergraph& h, SampleMode mode, double tv_epsilon,
                         long long burn_in, std::uint64_t seed) {
    if (h.m() == 0) return {};
    long long steps = 0;
    if (mode == SampleMode::TheoreticalBound) {
        require(tv_epsilon > 0.0 && tv_epsilon < 1.0, ErrorCode::BadParameters,
                "tv epsilon must lie in (0,1)");
        require_comb_free(h);
        steps = checked_steps(theoretical_mixing_bound(h, tv_epsilon));
    } else {
        require(burn_in >= 0, ErrorCode::BadParameters, "burn-in must be non-negative");
        steps = burn_in;
    }
    ChainRunner runner(h, seed);
    runner.run(steps);
    return runner.current();
}

EstimateResult estimate_count(const Hypergraph& h, double epsilon, double delta, SampleMode mode,
                              long long burn_in, std::uint64_t master_seed, int threads) {
    require(epsilon > 0.0 && epsilon < 1.0, ErrorCode::BadParameters, "epsilon must lie in (0,1)");
    require(delta > 0.0 && delta < 1.0, ErrorCode::BadParameters, "delta must lie in (0,1)");
    require(threads >= 1, ErrorCode::BadParameters, "thread count must be positive");
    require_comb_free(h);

    const auto t0 = std::chrono::steady_clock::now();
    const int m = h.m();
    EstimateResult result;
    result.epsilon = epsilon;
    result.delta = delta;
    result.mode = mode;
    result.master_seed = master_seed;
    result.repetitions = static_cast<int>(std::ceil(12.0 * std::log(1.0 / delta)));
    if (result.repetitions < 1) result.repetitions = 1;
    if (m == 0) {
        result.estimate = 1.0;
        result.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

    result.samples_per_level =
        static_cast<long long>(std::ceil(48.0 * static_cast<double>(m) / (epsilon * epsilon)));
    const double tv_target = epsilon / (8.0 * static_cast<double>(m));
    const LevelPlan plan = plan_levels(h, mode, tv_target, burn_in);
    result.steps_per_sample = plan.steps;

    const int reps = result.repetitions;
    std::vector<RepOutcome> outcome(static_cast<std::size_t>(reps));
    if (threads > reps) threads = reps;
    std::exception_ptr failure;
    if (threads == 1) {
        for (int r = 0; r < reps; ++r) {
            outcome[static_cast<std::size_t>(r)] =
                run_repetition(h, plan, result.samples_per_level, master_seed, r, reps);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        std::atomic<bool> failed{false};
        std::vector<std::exception_ptr> thread_error(static_cast<std::size_t>(threads));
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) {
                        if (failed.load()) return;
                        outcome[static_cast<std::size_t>(r)] =
                            run_repetition(h, plan, result.samples_per_level, master_seed, r, reps);
                    }
                } catch (...) {
                    thread_error[static_cast<std::size_t>(t)] = std::current_exception();
                    failed.store(true);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : thread_error) {
            if (err) {
                failure = err;
                break;
            }
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& rep : outcome) result.total_steps += rep.steps;
    std::vector<int> order(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) order[static_cast<std::size_t>(r)] = r;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ea = outcome[static_cast<std::size_t>(a)].estimate;
        const double eb = outcome[static_cast<std::size_t>(b)].estimate;
        if (ea != eb) return ea < eb;
        return a < b;
    });
    const RepOutcome& chosen = outcome[static_cast<std::size_t>(order[static_cast<std::size_t>((reps - 1) / 2)])];
    result.estimate = chosen.estimate;
    result.ratios = chosen.ratios;
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace hypermatch
