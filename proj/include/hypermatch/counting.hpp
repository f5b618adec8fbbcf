#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermatch/bigint.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// All matchings of h in canonical order: by size, then lexicographically by
// edge-index sequence. Includes the empty matching, so the result is never
// empty. If cap > 0 and more than cap matchings exist, raises overflow_code
// (the message reports the lower bound reached).
std::vector<Matching> enumerate_matchings(const Hypergraph& h, long long cap = 0,
                                          ErrorCode overflow_code = ErrorCode::CapExceeded);

// Exact number of matchings, empty matching included.
BigInt count_exact(const Hypergraph& h);

enum class SampleMode {
    TheoreticalBound, // walk length from the proven mixing-time bound
    EmpiricalBurnIn,  // caller-supplied walk length
};

const char* sample_mode_name(SampleMode mode);

// One approximate sample: start at the empty matching, run the lazy chain for
// the number of steps dictated by the mode, return the final state.
// TheoreticalBound requires a 3-comb-free input and a tv_epsilon in (0,1);
// EmpiricalBurnIn uses burn_in steps (burn_in >= 0; 0 returns the start state).
Matching sample_matching(const Hypergraph& h, SampleMode mode, double tv_epsilon,
                         long long burn_in, std::uint64_t seed);

struct EstimateResult {
    double estimate = 0.0;                   // 1 / prod(ratios) of the reported repetition
    double epsilon = 0.0;
    double delta = 0.0;
    SampleMode mode = SampleMode::EmpiricalBurnIn;
    std::vector<double> ratios;              // per-level avoidance frequencies, length m
    std::vector<long long> steps_per_sample; // chain length per level, length m
    long long samples_per_level = 0;         // s = ceil(48 m / eps^2)
    int repetitions = 0;                     // R = ceil(12 ln(1/delta))
    std::uint64_t master_seed = 0;
    std::uint64_t total_steps = 0;           // chain steps executed across all reps/levels
    double wall_time_ms = 0.0;               // only field that varies between identical runs
};

// Self-reducible product estimator for the number of matchings. Requires a
// 3-comb-free input. Runs R independent repetitions of the full level ladder
// and reports the lower median by estimate; deterministic given master_seed.
EstimateResult estimate_count(const Hypergraph& h, double epsilon, double delta,
                              SampleMode mode, long long burn_in,
                              std::uint64_t master_seed, int threads = 1);

} // namespace hypermatch
