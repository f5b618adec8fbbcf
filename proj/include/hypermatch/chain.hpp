#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rng.hpp"

namespace hypermatch {

using BigInt = boost::multiprecision::cpp_int;

enum class TransitionKind { Remove, Add, Swap, Null, Lazy };

const char* transition_kind_name(TransitionKind kind);

// Reduced fraction with non-negative value and positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

// Applies the proposal of drawing edge h from matching M: the four cases
// Remove / Add / Swap / Null. Deterministic core of step().
std::pair<Matching, TransitionKind> apply_edge(const Hypergraph& h, const Matching& m, EdgeIndex e);

// One step of the lazy chain: a fair coin holds (Lazy), otherwise a uniform
// edge proposal is applied.
std::pair<Matching, TransitionKind> step(const Hypergraph& h, const Matching& m, Rng& rng);

// Exact one-step probability of the lazy chain; off-diagonal entries are
// 0 or 1/(2|H|), diagonals are 1/2 + (#null proposals)/(2|H|).
Rational transition_probability(const Hypergraph& h, const Matching& m, const Matching& m_prime);

struct TransitionMatrix {
    std::vector<Matching> states;                 // canonical order: by size, then lexicographic
    std::vector<std::vector<long long>> numerators; // probs[i][j] = numerators[i][j] / denominator
    long long denominator = 1;                    // 2|H|, or 1 for an edgeless hypergraph

    int size() const { return static_cast<int>(states.size()); }
    Rational prob(int i, int j) const { return Rational(numerators[static_cast<size_t>(i)][static_cast<size_t>(j)], denominator); }
    int state_index(const Matching& m) const; // -1 when absent
};

TransitionMatrix build_transition_matrix(const Hypergraph& h, long long state_cap);

// Exhaustive conductance enumeration is gated at this many states (2^24 cuts).
inline constexpr int kConductanceStateCap = 24;
// Spectral/TV analysis is gated here.
inline constexpr int kAnalysisStateCap = 2000;

struct ChainAnalysis {
    std::optional<Rational> conductance; // exact; only when |Omega| <= kConductanceStateCap
    double spectral_gap = 0.0;           // 1 - lambda_2
    std::vector<double> tv_curve;        // tv_curve[t] = d_TV(P_t, uniform), start = point mass on {}
    std::optional<long long> t_mix_exact; // min t <= t_max with d_TV <= epsilon
    double epsilon = 0.0;
};

ChainAnalysis analyze(const TransitionMatrix& matrix, double epsilon, long long t_max);

// Ceil of (2/Phi_lb^2)(2 ln Omega_ub + ln(1/epsilon)) with Phi_lb = 1/(4 n^k |H|):
// the polynomial mixing-time guarantee. Requires a comb-free H.
BigInt theoretical_mixing_bound(const Hypergraph& h, double epsilon);

// Cache-friendly simulator for long runs; proposals are restricted to the first
// `edge_prefix` edges so self-reducibility levels reuse one instance. The lazy
// coin and the edge draw are fused into one uniform draw over [0, 2m).
class ChainRunner {
  public:
    ChainRunner(const Hypergraph& h, std::uint64_t seed);

    void set_edge_prefix(int edge_count);
    int edge_prefix() const { return m_eff_; }
    void reseed(std::uint64_t seed) { rng_ = Rng(seed); }
    void reset(); // back to the empty matching

    void step_once();
    void run(long long steps);

    bool contains(EdgeIndex e) const { return in_matching_[static_cast<size_t>(e)] != 0; }
    int matching_size() const { return static_cast<int>(members_.size()); }
    Matching current() const;

  private:
    int k_;
    int m_;
    int m_eff_;
    std::vector<std::int32_t> edge_vertices_; // k consecutive vertices per edge
    std::vector<std::int32_t> occupant_;      // vertex -> covering matching edge, or -1
    std::vector<std::uint8_t> in_matching_;
    std::vector<std::int32_t> members_;
    std::vector<std::int32_t> member_pos_;    // edge -> index into members_, or -1
    Rng rng_;

    void add_edge(int e);
    void remove_edge(int e);
};

} // namespace hypermatch
