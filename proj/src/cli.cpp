#include "hypermatch/cli.hpp"

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypermatch/chain.hpp"
#include "hypermatch/counting.hpp"
#include "hypermatch/generators.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/paths.hpp"
#include "hypermatch/rng.hpp"

namespace hypermatch {

namespace {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::StateSpaceTooLarge:
        case ErrorCode::CapExceeded: return 4;
        case ErrorCode::Internal: return 70;
        default: return 3;
    }
}

void deliver(const std::string& content, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << content;
    } else {
        write_text_file(output_path, content);
    }
}

std::string json_doc(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json hypergraph_echo(const Hypergraph& h) {
    return ordered_json{{"n", h.n}, {"k", h.k}, {"m", h.m()}};
}

// The hypergraph payload plus version and parameter echo; the parser ignores
// the extra keys, so the document stays a valid canonical input file.
std::string annotated_hypergraph(const Hypergraph& h, const std::string& command,
                                 const ordered_json& params, bool lines_format) {
    if (lines_format) return format_hypergraph_lines(h);
    ordered_json doc;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["params"] = params;
    doc["n"] = h.n;
    doc["k"] = h.k;
    doc["edges"] = ordered_json::array();
    for (const auto& e : h.edges) doc["edges"].push_back(e);
    return json_doc(doc);
}

std::string csv_preamble(const std::string& command, const ordered_json& params) {
    std::ostringstream out;
    out << "# " << kToolVersion << "\n# command: " << command << "\n# params: " << params.dump()
        << "\n";
    return out.str();
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

SampleMode parse_mode(const std::string& mode) {
    if (mode == "theoretical") return SampleMode::TheoreticalBound;
    if (mode == "empirical") return SampleMode::EmpiricalBurnIn;
    raise(ErrorCode::ParseError, "unknown mode \"" + mode + "\" (use theoretical or empirical)");
}

struct GenerateConfig {
    std::string family;
    std::string input;
    std::string output;
    std::string format = "json";
    int n = 0;
    int k = 3;
    int overlap = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int nu = 1;
    std::vector<int> sizes;
    int rows = 1;
    int cols = 1;
};

Hypergraph dispatch_generate(const GenerateConfig& cfg) {
    const auto need_input = [&]() {
        require(!cfg.input.empty(), ErrorCode::ParseError,
                "--family " + cfg.family + " requires --input");
        return read_hypergraph(cfg.input);
    };
    if (cfg.family == "overlap-cycle") return gen_overlap_cycle(cfg.n, cfg.k, cfg.overlap);
    if (cfg.family == "tight-cycle") return gen_overlap_cycle(cfg.n, cfg.k, cfg.k - 1);
    if (cfg.family == "enriched-cycle") return gen_enriched_tight_cycle(cfg.n, cfg.k);
    if (cfg.family == "random") {
        require(cfg.seed_given, ErrorCode::ParseError, "--family random requires --seed");
        return gen_random_kgraph(cfg.n, cfg.k, cfg.p, cfg.seed);
    }
    if (cfg.family == "triangle") {
        if (!cfg.input.empty()) return gen_triangle_3graph(read_hypergraph(cfg.input));
        require(cfg.seed_given, ErrorCode::ParseError,
                "--family triangle requires --seed (or --input)");
        return gen_triangle_3graph(gen_random_graph(cfg.n, cfg.p, cfg.seed));
    }
    if (cfg.family == "subdivided") {
        const Hypergraph base = need_input();
        return gen_subdivided(base, std::vector<int>(static_cast<std::size_t>(base.m()), cfg.nu));
    }
    if (cfg.family == "blowup") return gen_rooted_blowup(cfg.sizes, cfg.k);
    if (cfg.family == "hex") return gen_hex_3graph(cfg.rows, cfg.cols);
    if (cfg.family == "heilmann") return gen_heilmann_lattice(cfg.rows, cfg.cols);
    if (cfg.family == "reduce") return reduce_graph_to_kgraph(need_input(), cfg.k);
    raise(ErrorCode::ParseError, "unknown family \"" + cfg.family + "\"");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string(kToolVersion) + " - matchings in k-uniform hypergraphs: exact "
                 "counting, chain analysis, canonical-path verification, and FPRAS estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    // check
    auto* check_cmd = app.add_subcommand("check", "Test an input for a 3-comb");
    std::string check_input;
    std::string check_output;
    check_cmd->add_option("--input,-i", check_input, "hypergraph file")->required();
    check_cmd->add_option("--output,-o", check_output, "write the report here (default stdout)");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Construct a family instance");
    GenerateConfig gen;
    gen_cmd->add_option("--family,-f", gen.family,
                        "overlap-cycle | tight-cycle | enriched-cycle | random | triangle | "
                        "subdivided | blowup | hex | heilmann | reduce")
        ->required();
    gen_cmd->add_option("--input,-i", gen.input, "base instance (subdivided, triangle, reduce)");
    gen_cmd->add_option("--output,-o", gen.output, "write the instance here (default stdout)");
    gen_cmd->add_option("--format", gen.format, "json | lines (default json)");
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--k", gen.k, "uniformity (default 3)");
    gen_cmd->add_option("--overlap", gen.overlap, "consecutive-edge overlap (overlap-cycle)");
    gen_cmd->add_option("--p", gen.p, "edge probability (random, triangle)");
    auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "64-bit seed (random, triangle)");
    gen_cmd->add_option("--nu", gen.nu, "uniform subdivision multiplicity (default 1)");
    gen_cmd->add_option("--sizes", gen.sizes, "comma-separated part sizes (blowup)")
        ->delimiter(',');
    gen_cmd->add_option("--rows", gen.rows, "lattice rows (hex, heilmann)");
    gen_cmd->add_option("--cols", gen.cols, "lattice columns (hex, heilmann)");

    // count-exact
    auto* count_cmd = app.add_subcommand("count-exact", "Exact matching count");
    std::string count_input;
    std::string count_output;
    count_cmd->add_option("--input,-i", count_input, "hypergraph file")->required();
    count_cmd->add_option("--output,-o", count_output, "write the report here (default stdout)");

    // estimate
    auto* est_cmd = app.add_subcommand("estimate", "Randomized approximate matching count");
    std::string est_input;
    std::string est_output;
    double est_epsilon = 0.2;
    double est_delta = 0.1;
    std::string est_mode = "empirical";
    long long est_burn_in = 0;
    std::uint64_t est_seed = 0;
    int est_threads = 1;
    est_cmd->add_option("--input,-i", est_input, "hypergraph file")->required();
    est_cmd->add_option("--output,-o", est_output, "write the result here (default stdout)");
    est_cmd->add_option("--epsilon", est_epsilon, "relative accuracy target in (0,1)");
    est_cmd->add_option("--delta", est_delta, "failure probability target in (0,1)");
    est_cmd->add_option("--mode", est_mode, "theoretical | empirical (default empirical)");
    est_cmd->add_option("--burn-in", est_burn_in, "walk length per sample (empirical mode)");
    auto* est_seed_opt = est_cmd->add_option("--seed", est_seed, "64-bit master seed");
    est_cmd->add_option("--threads", est_threads, "worker threads for the repetitions");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Draw approximately uniform matchings");
    std::string sample_input;
    std::string sample_output;
    double sample_epsilon = 0.1;
    std::string sample_mode = "empirical";
    long long sample_burn_in = 0;
    std::uint64_t sample_seed = 0;
    long long sample_count = 1;
    sample_cmd->add_option("--input,-i", sample_input, "hypergraph file")->required();
    sample_cmd->add_option("--output,-o", sample_output, "write the draws here (default stdout)");
    sample_cmd->add_option("--epsilon", sample_epsilon,
                           "total-variation target (theoretical mode)");
    sample_cmd->add_option("--mode", sample_mode, "theoretical | empirical (default empirical)");
    sample_cmd->add_option("--burn-in", sample_burn_in, "walk length (empirical mode)");
    auto* sample_seed_opt = sample_cmd->add_option("--seed", sample_seed, "64-bit master seed");
    sample_cmd->add_option("--count", sample_count, "number of draws (default 1)");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Exact chain analysis CSV");
    std::string analyze_input;
    std::string analyze_output;
    double analyze_epsilon = 0.25;
    long long analyze_t_max = 10000;
    long long analyze_state_cap = kAnalysisStateCap;
    bool analyze_dump_matrix = false;
    analyze_cmd->add_option("--input,-i", analyze_input, "hypergraph file")->required();
    analyze_cmd->add_option("--output,-o", analyze_output, "write the CSV here (default stdout)");
    analyze_cmd->add_option("--epsilon", analyze_epsilon, "mixing threshold for t_mix");
    analyze_cmd->add_option("--t-max", analyze_t_max, "curve horizon (default 10000)");
    analyze_cmd->add_option("--state-cap", analyze_state_cap, "state-space guard");
    analyze_cmd->add_flag("--dump-matrix", analyze_dump_matrix,
                          "emit the exact transition matrix instead of the CSV");

    // verify-paths
    auto* verify_cmd = app.add_subcommand("verify-paths", "Congestion and injectivity report");
    std::string verify_input;
    std::string verify_output;
    long long verify_state_cap = 500;
    int verify_cut_samples = 64;
    std::uint64_t verify_seed = 0;
    verify_cmd->add_option("--input,-i", verify_input, "hypergraph file")->required();
    verify_cmd->add_option("--output,-o", verify_output, "write the CSV here (default stdout)");
    verify_cmd->add_option("--state-cap", verify_state_cap, "state-space guard (default 500)");
    verify_cmd->add_option("--cut-samples", verify_cut_samples, "random cut checks (default 64)");
    verify_cmd->add_option("--seed", verify_seed, "seed for the cut sampling");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Turn a graph into a k-uniform instance");
    std::string reduce_input;
    std::string reduce_output;
    std::string reduce_format = "json";
    int reduce_k = 3;
    reduce_cmd->add_option("--input,-i", reduce_input, "graph file (2-uniform)")->required();
    reduce_cmd->add_option("--output,-o", reduce_output, "write the instance here (default stdout)");
    reduce_cmd->add_option("--k", reduce_k, "target uniformity (default 3)");
    reduce_cmd->add_option("--format", reduce_format, "json | lines (default json)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hypermatch");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(check_input);
            const auto witness = find_three_comb(h);
            ordered_json doc;
            doc["version"] = kToolVersion;
            doc["command"] = "check";
            doc["params"] = ordered_json{{"input", check_input}};
            doc["instance"] = hypergraph_echo(h);
            doc["comb-free"] = !witness.has_value();
            doc["witness"] = nullptr;
            if (witness) {
                doc["witness"] = ordered_json{{"disjoint", {(*witness)[0], (*witness)[1], (*witness)[2]}},
                                              {"center", (*witness)[3]}};
            }
            deliver(json_doc(doc), check_output, out);
            return 0;
        }
        if (gen_cmd->parsed()) {
            gen.seed_given = gen_seed->count() > 0;
            require(gen.format == "json" || gen.format == "lines", ErrorCode::ParseError,
                    "--format must be json or lines");
            const Hypergraph h = dispatch_generate(gen);
            ordered_json params;
            params["family"] = gen.family;
            if (!gen.input.empty()) params["input"] = gen.input;
            if (gen.n > 0) params["n"] = gen.n;
            params["k"] = gen.k;
            if (gen.family == "overlap-cycle") params["overlap"] = gen.overlap;
            if (gen.family == "random" || gen.family == "triangle") params["p"] = gen.p;
            if (gen.seed_given) params["seed"] = gen.seed;
            if (gen.family == "subdivided") params["nu"] = gen.nu;
            if (gen.family == "blowup") params["sizes"] = gen.sizes;
            if (gen.family == "hex" || gen.family == "heilmann") {
                params["rows"] = gen.rows;
                params["cols"] = gen.cols;
            }
            deliver(annotated_hypergraph(h, "generate", params, gen.format == "lines"), gen.output,
                    out);
            return 0;
        }
        if (count_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(count_input);
            const BigInt count = count_exact(h);
            ordered_json doc;
            doc["version"] = kToolVersion;
            doc["command"] = "count-exact";
            doc["params"] = ordered_json{{"input", count_input}};
            doc["instance"] = hypergraph_echo(h);
            doc["count"] = count.str();
            deliver(json_doc(doc), count_output, out);
            return 0;
        }
        if (est_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(est_input);
            const SampleMode mode = parse_mode(est_mode);
            const bool seed_given = est_seed_opt->count() > 0;
            const std::uint64_t seed = seed_given ? est_seed : fresh_seed();
            const EstimateResult result =
                estimate_count(h, est_epsilon, est_delta, mode, est_burn_in, seed, est_threads);
            ordered_json doc;
            doc["version"] = kToolVersion;
            doc["command"] = "estimate";
            doc["params"] = ordered_json{{"input", est_input},
                                         {"epsilon", est_epsilon},
                                         {"delta", est_delta},
                                         {"mode", sample_mode_name(mode)},
                                         {"burn_in", est_burn_in},
                                         {"seed", seed},
                                         {"seed_was_generated", !seed_given},
                                         {"threads", est_threads}};
            doc["instance"] = hypergraph_echo(h);
            doc["estimate"] = result.estimate;
            doc["ratios"] = result.ratios;
            doc["steps_per_sample"] = result.steps_per_sample;
            doc["samples_per_level"] = result.samples_per_level;
            doc["repetitions"] = result.repetitions;
            doc["master_seed"] = result.master_seed;
            doc["total_steps"] = result.total_steps;
            doc["wall_time_ms"] = result.wall_time_ms; // the one run-to-run volatile field
            deliver(json_doc(doc), est_output, out);
            return 0;
        }
        if (sample_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(sample_input);
            const SampleMode mode = parse_mode(sample_mode);
            require(sample_count >= 1, ErrorCode::ParseError, "--count must be positive");
            const bool seed_given = sample_seed_opt->count() > 0;
            const std::uint64_t seed = seed_given ? sample_seed : fresh_seed();
            ordered_json draws = ordered_json::array();
            for (long long i = 0; i < sample_count; ++i) {
                const Matching m = sample_matching(h, mode, sample_epsilon, sample_burn_in,
                                                   derive_stream(seed, static_cast<std::uint64_t>(i)));
                draws.push_back(m);
            }
            ordered_json doc;
            doc["version"] = kToolVersion;
            doc["command"] = "sample";
            doc["params"] = ordered_json{{"input", sample_input},
                                         {"epsilon", sample_epsilon},
                                         {"mode", sample_mode_name(mode)},
                                         {"burn_in", sample_burn_in},
                                         {"seed", seed},
                                         {"seed_was_generated", !seed_given},
                                         {"count", sample_count}};
            doc["instance"] = hypergraph_echo(h);
            doc["draws"] = draws;
            deliver(json_doc(doc), sample_output, out);
            return 0;
        }
        if (analyze_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(analyze_input);
            const TransitionMatrix matrix = build_transition_matrix(h, analyze_state_cap);
            const ordered_json params = ordered_json{{"input", analyze_input},
                                                     {"epsilon", analyze_epsilon},
                                                     {"t_max", analyze_t_max},
                                                     {"state_cap", analyze_state_cap}};
            if (analyze_dump_matrix) {
                deliver(csv_preamble("analyze", params) + format_matrix(matrix), analyze_output,
                        out);
                return 0;
            }
            const ChainAnalysis analysis = analyze(matrix, analyze_epsilon, analyze_t_max);
            std::ostringstream body;
            body << csv_preamble("analyze", params);
            body << "# states: " << matrix.size() << "\n";
            if (analysis.conductance) {
                body << "# conductance: " << analysis.conductance->to_string() << "\n";
            }
            body << "# spectral_gap: " << analysis.spectral_gap << "\n";
            if (analysis.t_mix_exact) {
                body << "# t_mix_exact: " << *analysis.t_mix_exact << "\n";
            }
            body << format_analysis_csv(analysis, matrix.size());
            deliver(body.str(), analyze_output, out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            const Hypergraph h = read_hypergraph(verify_input);
            const CongestionReport report =
                congestion_report(h, verify_state_cap, verify_cut_samples, verify_seed);
            const ordered_json params = ordered_json{{"input", verify_input},
                                                     {"state_cap", verify_state_cap},
                                                     {"cut_samples", verify_cut_samples},
                                                     {"seed", verify_seed}};
            std::ostringstream body;
            body << csv_preamble("verify-paths", params);
            body << "# states: " << report.states.size() << "\n";
            body << "# omega_prime: " << report.omega_prime_size.str() << "\n";
            body << "# certificate_bound: " << report.certificate_bound.str() << "\n";
            body << "# max_load: " << report.max_load << "\n";
            body << "# loads_within_certificate: "
                 << (report.loads_within_certificate ? "true" : "false") << "\n";
            body << "# omega_prime_within_bound: "
                 << (report.omega_prime_within_bound ? "true" : "false") << "\n";
            body << "# cuts_ok: " << (report.cuts_ok ? "true" : "false") << "\n";
            body << format_congestion_csv(report);
            deliver(body.str(), verify_output, out);
            require(report.loads_within_certificate && report.omega_prime_within_bound &&
                        report.cuts_ok,
                    ErrorCode::Internal, "a congestion certificate failed; see the report");
            return 0;
        }
        if (reduce_cmd->parsed()) {
            require(reduce_format == "json" || reduce_format == "lines", ErrorCode::ParseError,
                    "--format must be json or lines");
            const Hypergraph g = read_hypergraph(reduce_input);
            const Hypergraph h = reduce_graph_to_kgraph(g, reduce_k);
            const ordered_json params = ordered_json{{"input", reduce_input}, {"k", reduce_k}};
            deliver(annotated_hypergraph(h, "reduce", params, reduce_format == "lines"),
                    reduce_output, out);
            return 0;
        }
        err << "error: no command selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: unexpected: " << e.what() << "\n";
        return 70;
    }
}

} // namespace hypermatch
