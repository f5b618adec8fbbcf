#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypermatch/bigint.hpp"
#include "hypermatch/chain.hpp"
#include "hypermatch/decompose.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct PathStep {
    TransitionKind kind; // Remove, Add, or Swap
    EdgeIndex added;     // -1 when the step adds nothing
    EdgeIndex removed;   // -1 when the step removes nothing
    int venue;           // index into CanonicalPath::decomposition.components
};

struct CanonicalPath {
    std::vector<Matching> matchings; // matchings.front() = I, matchings.back() = F
    std::vector<PathStep> steps;     // steps[j] transforms matchings[j] into matchings[j+1]
    ComponentDecomposition decomposition;

    int length() const { return static_cast<int>(steps.size()); }
};

// The unique deterministic path from I to F: components of I xor F are
// switched in order of their minimum vertex, each traversed by the orientation
// rules fixed in decompose/ordering below. Every consecutive pair is a
// positive-probability chain transition.
CanonicalPath canonical_path(const Hypergraph& h, const Matching& i_matching,
                             const Matching& f_matching);

// A sub-hypergraph given as a sorted set of edge indices. Images of eta lie in
// the augmented state space: matchings plus one extra edge, with the empty set
// and the matchings themselves included by convention.
using EncodingImage = std::vector<EdgeIndex>;

// eta(I,F at M,M') = (I xor F) xor (M union M'). TransitionNotOnPath when
// (M,M') is not a consecutive pair of canonical_path(h, I, F).
EncodingImage eta(const Hypergraph& h, const Matching& i_matching, const Matching& f_matching,
                  const Matching& m, const Matching& m_prime);

// Inverse of eta at a fixed transition: recovers the unique (I,F) whose
// canonical path crosses (M,M') with this image, or nullopt when no such pair
// exists. Never throws for a decoding failure; the result is re-encoded and
// checked before being returned.
std::optional<std::pair<Matching, Matching>> decode(const Hypergraph& h, const Matching& m,
                                                    const Matching& m_prime,
                                                    const EncodingImage& image);

struct TransitionLoad {
    int from_state = 0; // indices into CongestionReport::states
    int to_state = 0;
    long long paths = 0; // number of ordered pairs (I,F) routed through this transition
};

struct CutCheck {
    long long subset_size = 0; // |S|
    long long cut_edges = 0;   // undirected transition-graph edges leaving S
    bool ok = false;           // cut_edges * n^k * |Omega| >= |S| * (|Omega| - |S|)
};

struct CongestionReport {
    std::vector<Matching> states;      // canonical order
    std::vector<TransitionLoad> loads; // every directed transition, sorted by (from, to)
    long long max_load = 0;
    BigInt omega_prime_size = 0;  // exact size of the augmented state space
    BigInt certificate_bound = 0; // n^k * |Omega|
    bool loads_within_certificate = false; // max_load <= omega_prime_size
    bool omega_prime_within_bound = false; // omega_prime_size <= certificate_bound
    std::vector<CutCheck> cut_checks;      // randomly sampled subsets
    bool cuts_ok = false;
};

// Routes the canonical path of every ordered pair (I,F) and tallies the load
// on each directed transition; the load bound by |Omega'| is the congestion
// certificate behind the conductance lower bound. StateSpaceTooLarge when the
// state count exceeds state_cap.
CongestionReport congestion_report(const Hypergraph& h, long long state_cap,
                                   int cut_samples = 64, std::uint64_t seed = 0);

} // namespace hypermatch
