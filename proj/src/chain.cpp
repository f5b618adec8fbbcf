#include "hypermatch/chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "hypermatch/counting.hpp"
#include "hypermatch/util.hpp"

namespace hypermatch {

const char* transition_kind_name(TransitionKind kind) {
    switch (kind) {
        case TransitionKind::Remove: return "Remove";
        case TransitionKind::Add: return "Add";
        case TransitionKind::Swap: return "Swap";
        case TransitionKind::Null: return "Null";
        case TransitionKind::Lazy: return "Lazy";
    }
    return "UnknownKind";
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    require(den > 0 && num >= 0, ErrorCode::Internal, "probabilities are non-negative");
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

std::pair<Matching, TransitionKind> apply_edge(const Hypergraph& h, const Matching& m, EdgeIndex e) {
    const auto& verts = h.edge(e);
    if (sorted_contains(m, e)) {
        Matching next = m;
        erase_sorted(next, e);
        return {std::move(next), TransitionKind::Remove};
    }
    EdgeIndex conflict = -1;
    for (EdgeIndex other : m) {
        if (sets_intersect(verts, h.edge(other))) {
            if (conflict >= 0) return {m, TransitionKind::Null};
            conflict = other;
        }
    }
    Matching next = m;
    if (conflict < 0) {
        insert_sorted(next, e);
        return {std::move(next), TransitionKind::Add};
    }
    erase_sorted(next, conflict);
    insert_sorted(next, e);
    return {std::move(next), TransitionKind::Swap};
}

std::pair<Matching, TransitionKind> step(const Hypergraph& h, const Matching& m, Rng& rng) {
    require(h.m() > 0, ErrorCode::EmptyEdgeSet, "cannot step a chain over zero edges");
    if (rng.next_coin()) return {m, TransitionKind::Lazy};
    auto e = static_cast<EdgeIndex>(rng.next_below(static_cast<std::uint64_t>(h.m())));
    return apply_edge(h, m, e);
}

Rational transition_probability(const Hypergraph& h, const Matching& m, const Matching& m_prime) {
    require_matching(h, m, "M");
    require_matching(h, m_prime, "M'");
    if (h.m() == 0) return Rational(m == m_prime ? 1 : 0, 1);
    long long hits = (m == m_prime) ? h.m() : 0; // the lazy coin
    for (EdgeIndex e = 0; e < h.m(); ++e)
        if (apply_edge(h, m, e).first == m_prime) ++hits;
    return Rational(hits, 2LL * h.m());
}

int TransitionMatrix::state_index(const Matching& m) const {
    auto cmp = [](const Matching& a, const Matching& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    auto it = std::lower_bound(states.begin(), states.end(), m, cmp);
    if (it != states.end() && *it == m) return static_cast<int>(it - states.begin());
    return -1;
}

TransitionMatrix build_transition_matrix(const Hypergraph& h, long long state_cap) {
    TransitionMatrix t;
    t.states = enumerate_matchings(h, state_cap, ErrorCode::StateSpaceTooLarge);
    auto count = static_cast<size_t>(t.states.size());
    t.denominator = h.m() == 0 ? 1 : 2LL * h.m();
    t.numerators.assign(count, std::vector<long long>(count, 0));
    for (size_t i = 0; i < count; ++i) {
        auto diag = static_cast<long long>(h.m()); // the lazy coin
        for (EdgeIndex e = 0; e < h.m(); ++e) {
            auto [next, kind] = apply_edge(h, t.states[i], e);
            if (kind == TransitionKind::Null) {
                ++diag;
            } else {
                int j = t.state_index(next);
                require(j >= 0, ErrorCode::Internal, "step left the enumerated state space");
                ++t.numerators[i][static_cast<size_t>(j)];
            }
        }
        if (h.m() == 0) diag = 1;
        t.numerators[i][i] += diag;
    }
    return t;
}

namespace {

// Exact conductance by Gray-code enumeration of all cuts with |S| <= |Omega|/2.
Rational exact_conductance(const TransitionMatrix& t) {
    int count = t.size();
    if (count == 1) return Rational(1, 1); // degenerate chain: documented convention
    // Off-diagonal numerator weights; cut values stay well inside 64 bits.
    std::vector<std::vector<long long>> w(static_cast<size_t>(count),
                                          std::vector<long long>(static_cast<size_t>(count), 0));
    std::vector<long long> row_off(static_cast<size_t>(count), 0);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (i != j) {
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    t.numerators[static_cast<size_t>(i)][static_cast<size_t>(j)];
                row_off[static_cast<size_t>(i)] += w[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }

    std::vector<long long> to_s(static_cast<size_t>(count), 0); // sum of w[v][i] over i in S
    std::uint32_t mask = 0;
    long long cut = 0;
    int size = 0;
    long long best_num = -1;
    int best_size = 1;
    auto total = static_cast<std::uint32_t>(1u << count);
    for (std::uint32_t g = 1; g < total; ++g) {
        int v = std::countr_zero(g); // Gray code: bit v flips between g-1 and g
        auto bit = static_cast<std::uint32_t>(1u << v);
        if (mask & bit) {
            mask ^= bit;
            --size;
            cut += -row_off[static_cast<size_t>(v)] + 2 * to_s[static_cast<size_t>(v)] -
                   2 * w[static_cast<size_t>(v)][static_cast<size_t>(v)];
            for (int u = 0; u < count; ++u) to_s[static_cast<size_t>(u)] -= w[static_cast<size_t>(u)][static_cast<size_t>(v)];
        } else {
            mask ^= bit;
            ++size;
            cut += row_off[static_cast<size_t>(v)] - 2 * to_s[static_cast<size_t>(v)];
            for (int u = 0; u < count; ++u) to_s[static_cast<size_t>(u)] += w[static_cast<size_t>(u)][static_cast<size_t>(v)];
        }
        if (size >= 1 && 2 * size <= count) {
            // compare cut/size against best_num/best_size
            if (best_num < 0 || static_cast<__int128>(cut) * best_size <
                                    static_cast<__int128>(best_num) * size) {
                best_num = cut;
                best_size = size;
            }
        }
    }
    require(best_num >= 0, ErrorCode::Internal, "no admissible cut found");
    // Phi = (cut numerator / denominator) / |S|
    return Rational(best_num, t.denominator * best_size);
}

} // namespace

ChainAnalysis analyze(const TransitionMatrix& matrix, double epsilon, long long t_max) {
    int count = matrix.size();
    require(count >= 1, ErrorCode::Internal, "empty state space");
    require(count <= kAnalysisStateCap, ErrorCode::StateSpaceTooLarge,
            "analysis over " + std::to_string(count) + " states exceeds the cap of " +
                std::to_string(kAnalysisStateCap));
    require(epsilon > 0, ErrorCode::BadParameters, "epsilon must be positive");
    require(t_max >= 0, ErrorCode::BadParameters, "t_max must be non-negative");

    ChainAnalysis out;
    out.epsilon = epsilon;

    if (count <= kConductanceStateCap) out.conductance = exact_conductance(matrix);

    if (count == 1) {
        out.spectral_gap = 1.0; // documented convention for the degenerate chain
        out.tv_curve.assign(static_cast<size_t>(t_max) + 1, 0.0);
        out.t_mix_exact = 0;
        return out;
    }

    Eigen::MatrixXd p(count, count);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            p(i, j) = static_cast<double>(matrix.numerators[static_cast<size_t>(i)][static_cast<size_t>(j)]) /
                      static_cast<double>(matrix.denominator);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
    require(solver.info() == Eigen::Success, ErrorCode::Internal, "eigendecomposition failed");
    out.spectral_gap = 1.0 - solver.eigenvalues()(count - 2);

    // TV trajectory from the point mass on the empty matching (state 0).
    Matching empty;
    require(matrix.states.front() == empty, ErrorCode::Internal,
            "canonical order must place the empty matching first");
    Eigen::RowVectorXd dist = Eigen::RowVectorXd::Zero(count);
    dist(0) = 1.0;
    double uniform = 1.0 / count;
    out.tv_curve.reserve(static_cast<size_t>(t_max) + 1);
    double envelope_base = 1.0;
    if (out.conductance) {
        double phi = out.conductance->to_double();
        envelope_base = 1.0 - phi * phi / 2.0;
    }
    double count_sq = static_cast<double>(count) * count;
    double envelope = count_sq;
    double prev_tv = 2.0;
    for (long long t = 0; t <= t_max; ++t) {
        double tv = 0.0;
        for (int j = 0; j < count; ++j) tv += std::abs(dist(j) - uniform);
        tv *= 0.5;
        require(tv <= prev_tv + 1e-12, ErrorCode::Internal, "TV distance increased along a lazy chain");
        prev_tv = tv;
        if (out.conductance)
            require(tv <= envelope * (1.0 + 1e-9) + 1e-12, ErrorCode::Internal,
                    "TV distance exceeded the conductance envelope at t=" + std::to_string(t));
        out.tv_curve.push_back(tv);
        if (!out.t_mix_exact && tv <= epsilon) out.t_mix_exact = t;
        if (t < t_max) {
            dist = dist * p;
            envelope *= envelope_base;
        }
    }
    return out;
}

BigInt theoretical_mixing_bound(const Hypergraph& h, double epsilon) {
    require(epsilon > 0, ErrorCode::BadParameters, "epsilon must be positive");
    require_comb_free(h);
    auto m = static_cast<long long>(h.m());
    if (m == 0) return 0;

    double ln_omega = static_cast<double>(m) * std::log(2.0);
    double j = static_cast<double>(h.n) / h.k; // max matching size is at most n/k
    if (j <= static_cast<double>(m)) {
        // sum_{t<=j} C(m,t) <= (e m / j)^j, valid for j <= m
        double alt = j * std::log(std::exp(1.0) * m / j);
        ln_omega = std::min(ln_omega, alt);
    }
    double log_factor = 2.0 * ln_omega + std::log(1.0 / epsilon);
    if (log_factor <= 0) return 0;

    // 2 / Phi_lb^2 = 32 n^{2k} m^2, exactly
    BigInt a = 32;
    BigInt npow = 1;
    for (int i = 0; i < 2 * h.k; ++i) npow *= h.n;
    a *= npow;
    a *= BigInt(m) * m;

    // ceil(a * log_factor) via a 2^32-scaled product; may overshoot by < 2^-32 relatively
    auto scaled = static_cast<BigInt>(std::ceil(log_factor * 4294967296.0));
    BigInt product = a * scaled;
    BigInt one_shift = BigInt(1) << 32;
    return (product + one_shift - 1) >> 32;
}

ChainRunner::ChainRunner(const Hypergraph& h, std::uint64_t seed)
    : k_(h.k), m_(h.m()), m_eff_(h.m()), occupant_(static_cast<size_t>(h.n) + 1, -1),
      in_matching_(static_cast<size_t>(h.m()), 0), member_pos_(static_cast<size_t>(h.m()), -1),
      rng_(seed) {
    require(m_ > 0, ErrorCode::EmptyEdgeSet, "cannot run a chain over zero edges");
    edge_vertices_.reserve(static_cast<size_t>(m_) * k_);
    for (const auto& e : h.edges)
        for (Vertex v : e) edge_vertices_.push_back(v);
}

void ChainRunner::set_edge_prefix(int edge_count) {
    require(edge_count >= 1 && edge_count <= m_, ErrorCode::BadParameters,
            "edge prefix out of range");
    require(members_.empty(), ErrorCode::Internal, "prefix change requires the empty matching");
    m_eff_ = edge_count;
}

void ChainRunner::reset() {
    for (std::int32_t e : members_) {
        in_matching_[static_cast<size_t>(e)] = 0;
        member_pos_[static_cast<size_t>(e)] = -1;
        const std::int32_t* vs = &edge_vertices_[static_cast<size_t>(e) * k_];
        for (int i = 0; i < k_; ++i) occupant_[static_cast<size_t>(vs[i])] = -1;
    }
    members_.clear();
}

void ChainRunner::add_edge(int e) {
    in_matching_[static_cast<size_t>(e)] = 1;
    member_pos_[static_cast<size_t>(e)] = static_cast<std::int32_t>(members_.size());
    members_.push_back(e);
    const std::int32_t* vs = &edge_vertices_[static_cast<size_t>(e) * k_];
    for (int i = 0; i < k_; ++i) occupant_[static_cast<size_t>(vs[i])] = e;
}

void ChainRunner::remove_edge(int e) {
    in_matching_[static_cast<size_t>(e)] = 0;
    const std::int32_t* vs = &edge_vertices_[static_cast<size_t>(e) * k_];
    for (int i = 0; i < k_; ++i) occupant_[static_cast<size_t>(vs[i])] = -1;
    std::int32_t pos = member_pos_[static_cast<size_t>(e)];
    std::int32_t last = members_.back();
    members_[static_cast<size_t>(pos)] = last;
    member_pos_[static_cast<size_t>(last)] = pos;
    members_.pop_back();
    member_pos_[static_cast<size_t>(e)] = -1;
}

void ChainRunner::step_once() {
    std::uint64_t x = rng_.next_below(2ULL * static_cast<std::uint64_t>(m_eff_));
    if (x >= static_cast<std::uint64_t>(m_eff_)) return; // lazy hold
    int e = static_cast<int>(x);
    if (in_matching_[static_cast<size_t>(e)]) {
        remove_edge(e);
        return;
    }
    const std::int32_t* vs = &edge_vertices_[static_cast<size_t>(e) * k_];
    std::int32_t conflict = -1;
    for (int i = 0; i < k_; ++i) {
        std::int32_t occ = occupant_[static_cast<size_t>(vs[i])];
        if (occ >= 0 && occ != conflict) {
            if (conflict >= 0) return; // two conflicts: null proposal
            conflict = occ;
        }
    }
    if (conflict >= 0) remove_edge(conflict);
    add_edge(e);
}

void ChainRunner::run(long long steps) {
    for (long long i = 0; i < steps; ++i) step_once();
}

Matching ChainRunner::current() const {
    Matching m(members_.begin(), members_.end());
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace hypermatch
