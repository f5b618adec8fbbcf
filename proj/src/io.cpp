#include "hypermatch/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypermatch {

namespace {

using nlohmann::ordered_json;

Hypergraph parse_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        raise(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    require(doc.is_object(), ErrorCode::ParseError, "top-level JSON value must be an object");
    for (const char* field : {"n", "k", "edges"}) {
        require(doc.contains(field), ErrorCode::ParseError,
                std::string("missing field \"") + field + "\"");
    }
    require(doc["n"].is_number_integer() && doc["k"].is_number_integer(), ErrorCode::ParseError,
            "fields \"n\" and \"k\" must be integers");
    require(doc["edges"].is_array(), ErrorCode::ParseError, "field \"edges\" must be an array");
    std::vector<std::vector<Vertex>> edges;
    for (const auto& row : doc["edges"]) {
        require(row.is_array(), ErrorCode::ParseError, "each edge must be an array of vertex ids");
        std::vector<Vertex> e;
        for (const auto& v : row) {
            require(v.is_number_integer(), ErrorCode::ParseError, "vertex ids must be integers");
            e.push_back(v.get<Vertex>());
        }
        edges.push_back(std::move(e));
    }
    return validate(std::move(edges), doc["n"].get<int>(), doc["k"].get<int>());
}

Hypergraph parse_lines(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, k = 0, m = 0;
    require(static_cast<bool>(in >> n >> k >> m), ErrorCode::ParseError,
            "expected header \"n k m\"");
    require(n >= 0 && k >= 2 && m >= 0, ErrorCode::ParseError,
            "header values out of range (need n >= 0, k >= 2, m >= 0)");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::vector<Vertex> e;
        for (long long j = 0; j < k; ++j) {
            long long v = 0;
            require(static_cast<bool>(in >> v), ErrorCode::ParseError,
                    "edge " + std::to_string(i) + ": expected " + std::to_string(k) +
                        " vertex ids");
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    long long extra = 0;
    require(!(in >> extra), ErrorCode::ParseError, "trailing data after the declared edges");
    return validate(std::move(edges), static_cast<int>(n), static_cast<int>(k));
}

} // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text) : parse_lines(text);
    }
    raise(ErrorCode::ParseError, "empty input");
}

Hypergraph read_hypergraph(const std::string& path) { return parse_hypergraph(read_text_file(path)); }

std::string format_hypergraph_json(const Hypergraph& h) {
    ordered_json doc;
    doc["n"] = h.n;
    doc["k"] = h.k;
    doc["edges"] = ordered_json::array();
    for (const auto& e : h.edges) doc["edges"].push_back(e);
    return doc.dump(2) + "\n";
}

std::string format_hypergraph_lines(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n << ' ' << h.k << ' ' << h.m() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << content;
    require(out.good(), ErrorCode::ParseError, "failed writing " + path);
}

std::string format_matrix(const TransitionMatrix& t) {
    std::ostringstream out;
    out << "states " << t.size() << '\n';
    for (int i = 0; i < t.size(); ++i) {
        out << i << ':';
        for (EdgeIndex e : t.states[static_cast<std::size_t>(i)]) out << ' ' << e;
        out << '\n';
    }
    out << "matrix\n";
    for (int i = 0; i < t.size(); ++i) {
        for (int j = 0; j < t.size(); ++j) {
            if (j) out << '\t';
            out << t.prob(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

} // namespace

std::string format_analysis_csv(const ChainAnalysis& analysis, int state_count) {
    std::ostringstream out;
    out << "t,tv_distance,bound_eq2\n";
    double envelope = static_cast<double>(state_count) * static_cast<double>(state_count);
    double base = 1.0;
    if (analysis.conductance) {
        const double phi = analysis.conductance->to_double();
        base = 1.0 - phi * phi / 2.0;
    }
    for (std::size_t t = 0; t < analysis.tv_curve.size(); ++t) {
        out << t << ',' << format_double(analysis.tv_curve[t]) << ',';
        if (analysis.conductance) out << format_double(envelope);
        out << '\n';
        envelope *= base;
    }
    return out.str();
}

std::string format_congestion_csv(const CongestionReport& report) {
    std::ostringstream out;
    out << "transition,paths,omega_prime,certificate\n";
    for (const auto& load : report.loads) {
        out << load.from_state << "->" << load.to_state << ',' << load.paths << ','
            << report.omega_prime_size.str() << ','
            << (BigInt(load.paths) <= report.omega_prime_size ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace hypermatch
