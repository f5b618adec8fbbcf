#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "hypermatch/chain.hpp"
#include "hypermatch/counting.hpp"
#include "hypermatch/generators.hpp"
#include "hypermatch/io.hpp"
#include "hypermatch/paths.hpp"

namespace py = pybind11;
using namespace hypermatch;

namespace {

py::int_ to_py_int(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

SampleMode mode_from_string(const std::string& mode) {
    if (mode == "theoretical") return SampleMode::TheoreticalBound;
    if (mode == "empirical") return SampleMode::EmpiricalBurnIn;
    raise(ErrorCode::BadParameters, "mode must be 'theoretical' or 'empirical'");
}

py::dict path_to_dict(const CanonicalPath& path) {
    py::dict out;
    out["matchings"] = path.matchings;
    py::list steps;
    for (const auto& s : path.steps) {
        py::dict step;
        step["kind"] = std::string(transition_kind_name(s.kind));
        step["added"] = s.added;
        step["removed"] = s.removed;
        step["venue"] = s.venue;
        steps.append(step);
    }
    out["steps"] = steps;
    return out;
}

} // namespace

PYBIND11_MODULE(_hypermatch, m) {
    m.doc() = "Matchings in k-uniform hypergraphs: exact counting, chain simulation, "
              "canonical-path verification, and randomized approximate counting.";

    py::register_exception<Error>(m, "HypermatchError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_readonly("n", &Hypergraph::n)
        .def_readonly("k", &Hypergraph::k)
        .def_readonly("edges", &Hypergraph::edges)
        .def_property_readonly("m", &Hypergraph::m)
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n) + ", k=" + std::to_string(h.k) +
                   ", m=" + std::to_string(h.m()) + ")";
        });

    m.def("validate", &validate, py::arg("edges"), py::arg("n"), py::arg("k"));
    m.def("parse", &parse_hypergraph, py::arg("text"));
    m.def("to_json", &format_hypergraph_json, py::arg("h"));

    m.def("find_three_comb", [](const Hypergraph& h) -> py::object {
        const auto comb = find_three_comb(h);
        if (!comb) return py::none();
        return py::make_tuple((*comb)[0], (*comb)[1], (*comb)[2], (*comb)[3]);
    });
    m.def("is_matching", &is_matching, py::arg("h"), py::arg("edge_indices"));

    m.def("enumerate_matchings",
          [](const Hypergraph& h, long long cap) { return enumerate_matchings(h, cap); },
          py::arg("h"), py::arg("cap") = 0);
    m.def("count_exact", [](const Hypergraph& h) { return to_py_int(count_exact(h)); });
    m.def("sample_matching",
          [](const Hypergraph& h, const std::string& mode, double epsilon, long long burn_in,
             std::uint64_t seed) {
              return sample_matching(h, mode_from_string(mode), epsilon, burn_in, seed);
          },
          py::arg("h"), py::arg("mode") = "empirical", py::arg("epsilon") = 0.1,
          py::arg("burn_in") = 0, py::arg("seed") = 0);
    m.def("estimate_count",
          [](const Hypergraph& h, double epsilon, double delta, const std::string& mode,
             long long burn_in, std::uint64_t seed, int threads) {
              const EstimateResult r =
                  estimate_count(h, epsilon, delta, mode_from_string(mode), burn_in, seed, threads);
              py::dict out;
              out["estimate"] = r.estimate;
              out["epsilon"] = r.epsilon;
              out["delta"] = r.delta;
              out["mode"] = std::string(sample_mode_name(r.mode));
              out["ratios"] = r.ratios;
              out["steps_per_sample"] = r.steps_per_sample;
              out["samples_per_level"] = r.samples_per_level;
              out["repetitions"] = r.repetitions;
              out["master_seed"] = r.master_seed;
              out["total_steps"] = r.total_steps;
              out["wall_time_ms"] = r.wall_time_ms;
              return out;
          },
          py::arg("h"), py::arg("epsilon") = 0.2, py::arg("delta") = 0.1,
          py::arg("mode") = "empirical", py::arg("burn_in") = 0, py::arg("seed") = 0,
          py::arg("threads") = 1);

    m.def("theoretical_mixing_bound",
          [](const Hypergraph& h, double epsilon) {
              return to_py_int(theoretical_mixing_bound(h, epsilon));
          },
          py::arg("h"), py::arg("epsilon"));
    m.def("analyze_chain",
          [](const Hypergraph& h, double epsilon, long long t_max, long long state_cap) {
              const TransitionMatrix matrix = build_transition_matrix(h, state_cap);
              const ChainAnalysis a = analyze(matrix, epsilon, t_max);
              py::dict out;
              out["states"] = matrix.states;
              out["conductance"] =
                  a.conductance ? py::object(py::str(a.conductance->to_string())) : py::none();
              out["spectral_gap"] = a.spectral_gap;
              out["tv_curve"] = a.tv_curve;
              out["t_mix_exact"] =
                  a.t_mix_exact ? py::object(py::int_(*a.t_mix_exact)) : py::none();
              return out;
          },
          py::arg("h"), py::arg("epsilon") = 0.25, py::arg("t_max") = 1000,
          py::arg("state_cap") = kAnalysisStateCap);

    m.def("canonical_path",
          [](const Hypergraph& h, const Matching& i, const Matching& f) {
              return path_to_dict(canonical_path(h, i, f));
          },
          py::arg("h"), py::arg("initial"), py::arg("final"));
    m.def("eta", &eta, py::arg("h"), py::arg("initial"), py::arg("final"), py::arg("m"),
          py::arg("m_prime"));
    m.def("decode",
          [](const Hypergraph& h, const Matching& m, const Matching& m_prime,
             const EncodingImage& image) -> py::object {
              const auto result = decode(h, m, m_prime, image);
              if (!result) return py::none();
              return py::make_tuple(result->first, result->second);
          },
          py::arg("h"), py::arg("m"), py::arg("m_prime"), py::arg("image"));
    m.def("congestion_report",
          [](const Hypergraph& h, long long state_cap, int cut_samples, std::uint64_t seed) {
              const CongestionReport r = congestion_report(h, state_cap, cut_samples, seed);
              py::dict out;
              out["states"] = r.states;
              out["max_load"] = r.max_load;
              out["omega_prime_size"] = to_py_int(r.omega_prime_size);
              out["certificate_bound"] = to_py_int(r.certificate_bound);
              out["loads_within_certificate"] = r.loads_within_certificate;
              out["omega_prime_within_bound"] = r.omega_prime_within_bound;
              out["cuts_ok"] = r.cuts_ok;
              return out;
          },
          py::arg("h"), py::arg("state_cap") = 500, py::arg("cut_samples") = 64,
          py::arg("seed") = 0);

    m.def("gen_overlap_cycle", &gen_overlap_cycle, py::arg("n"), py::arg("k"), py::arg("overlap"));
    m.def("gen_enriched_tight_cycle", &gen_enriched_tight_cycle, py::arg("n"), py::arg("k"));
    m.def("gen_random_kgraph", &gen_random_kgraph, py::arg("n"), py::arg("k"), py::arg("p"),
          py::arg("seed"));
    m.def("gen_random_graph", &gen_random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_triangle_3graph", &gen_triangle_3graph, py::arg("g"));
    m.def("gen_subdivided", &gen_subdivided, py::arg("h3"), py::arg("nu"));
    m.def("gen_rooted_blowup", &gen_rooted_blowup, py::arg("sizes"), py::arg("k"));
    m.def("gen_brick_wall", &gen_brick_wall, py::arg("rows"), py::arg("cols"));
    m.def("gen_hex_3graph", &gen_hex_3graph, py::arg("rows"), py::arg("cols"));
    m.def("gen_heilmann_lattice", &gen_heilmann_lattice, py::arg("rows"), py::arg("cols"));
    m.def("reduce_graph_to_kgraph", &reduce_graph_to_kgraph, py::arg("g"), py::arg("k"));
    m.def("find_windmill", [](const Hypergraph& g) -> py::object {
        const auto w = find_windmill(g);
        if (!w) return py::none();
        py::dict out;
        out["blades"] = w->blades;
        out["hub"] = w->hub;
        return out;
    });
}
