// JSON and CSV serialization for states, invariant sets, optimizer results,
// sample tables, histograms, curves, and sphere grids.
//
// CSV floats are printed with 17 significant digits so values round-trip.

#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qinv/invariant_set.hpp"
#include "qinv/optimize.hpp"
#include "qinv/states.hpp"
#include "qinv/stats.hpp"

namespace qinv {

using json = nlohmann::json;

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// states

inline json state_to_json(const QutritState& s) {
    json amps = json::array();
    for (const cx& z : s.a) amps.push_back({z.real(), z.imag()});
    return json{{"amplitudes", amps}};
}

inline QutritState state_from_json(const json& j) {
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array() || j["amplitudes"].size() != 27)
        throw std::invalid_argument("state JSON must contain an \"amplitudes\" array of 27 [re, im] pairs");
    QutritState s;
    for (int t = 0; t < 27; ++t) {
        const json& entry = j["amplitudes"][t];
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("state amplitude entries must be [re, im] pairs");
        s.a[t] = cx{entry[0].get<double>(), entry[1].get<double>()};
    }
    return s;
}

inline void state_to_csv(const QutritState& s, std::ostream& os) {
    os << "i,j,k,re,im\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const cx& z = s.amp(i, j, k);
                os << i << ',' << j << ',' << k << ',' << fmt17(z.real()) << ',' << fmt17(z.imag())
                   << '\n';
            }
}

inline QutritState state_from_csv(std::istream& is) {
    QutritState s;
    bool seen[27] = {};
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        int i, j, k;
        double re, im;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%lf,%lf", &i, &j, &k, &re, &im) != 5) {
            if (rows == 0) continue;  // header
            throw std::invalid_argument("state CSV: unparsable row: " + line);
        }
        if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2)
            throw std::invalid_argument("state CSV: index out of range");
        const int flat = flat_index(i, j, k);
        if (seen[flat]) throw std::invalid_argument("state CSV: duplicate index row");
        seen[flat] = true;
        s.a[flat] = cx{re, im};
        ++rows;
    }
    if (rows != 27) throw std::invalid_argument("state CSV: expected 27 amplitude rows");
    return s;
}

// Reads either the JSON or the CSV state format, deciding by the first
// non-whitespace character.
inline QutritState state_from_stream(std::istream& is) {
    std::stringstream buf;
    buf << is.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty state input");
    if (text[first] == '{') return state_from_json(json::parse(text));
    std::istringstream csv(text);
    return state_from_csv(csv);
}

inline QutritState state_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open state file: " + path);
    return state_from_stream(f);
}

// ---------------------------------------------------------------------------
// invariant sets

inline json invariants_to_json(const InvariantSet& inv) {
    const auto pair = [](cx z) { return json::array({z.real(), z.imag()}); };
    return json{{"I6", pair(inv.i6)},   {"I9", pair(inv.i9)},   {"I12", pair(inv.i12)},
                {"Delta333", pair(inv.delta333)},
                {"g6", pair(inv.g6)},   {"g9", pair(inv.g9)},   {"g12", pair(inv.g12)}};
}

inline void invariants_to_csv(const InvariantSet& inv, std::ostream& os) {
    os << "I6_re,I6_im,I9_re,I9_im,I12_re,I12_im,Delta333_re,Delta333_im,"
          "g6_re,g6_im,g9_re,g9_im,g12_re,g12_im\n";
    const cx vals[7] = {inv.i6, inv.i9, inv.i12, inv.delta333, inv.g6, inv.g9, inv.g12};
    for (int t = 0; t < 7; ++t)
        os << fmt17(vals[t].real()) << ',' << fmt17(vals[t].imag()) << (t < 6 ? ',' : '\n');
}

// ---------------------------------------------------------------------------
// optimizer results

inline json coeffs_to_json(const SemiSimpleCoeffs& co) { return json::array({co.a, co.b, co.c}); }

inline json opt_result_to_json(const OptResult& r, bool verbose = false) {
    json optima = json::array();
    for (const LocalOptimum& lo : r.all_local_optima)
        optima.push_back(
            {{"point", coeffs_to_json(lo.point)}, {"value", lo.value}, {"hits", lo.hits}});
    json out{{"objective", objective_name(r.tag)},
             {"seed", r.seed},
             {"best_point", coeffs_to_json(r.best_point)},
             {"best_value", r.best_value},
             {"matched_known", r.matched_known ? json(*r.matched_known) : json(nullptr)},
             {"iterations_used", r.iterations_used},
             {"local_optima", optima}};
    if (verbose) {
        json trace = json::array();
        for (const RestartRecord& rec : r.restarts)
            trace.push_back({{"start", coeffs_to_json(rec.start)},
                             {"point", coeffs_to_json(rec.point)},
                             {"value", rec.value},
                             {"iterations", rec.iterations},
                             {"converged", rec.converged}});
        out["restart_trace"] = std::move(trace);
    }
    return out;
}

// ---------------------------------------------------------------------------
// sampling artifacts

inline void samples_to_csv(const std::vector<SampleRow>& table, std::ostream& os,
                           std::uint64_t seed) {
    os << "# seed=" << seed << '\n';
    os << "a,b,c,absI6,absI9,absI12,absDelta,S_I\n";
    for (const SampleRow& r : table)
        os << fmt17(r.a) << ',' << fmt17(r.b) << ',' << fmt17(r.c) << ',' << fmt17(r.abs_i6) << ','
           << fmt17(r.abs_i9) << ',' << fmt17(r.abs_i12) << ',' << fmt17(r.abs_delta) << ','
           << fmt17(r.s_index) << '\n';
}

inline json samples_to_json(const std::vector<SampleRow>& table, std::uint64_t seed) {
    json rows = json::array();
    for (const SampleRow& r : table)
        rows.push_back({r.a, r.b, r.c, r.abs_i6, r.abs_i9, r.abs_i12, r.abs_delta, r.s_index});
    return json{{"seed", seed},
                {"columns", {"a", "b", "c", "absI6", "absI9", "absI12", "absDelta", "S_I"}},
                {"rows", rows}};
}

inline void histogram_to_csv(const Histogram& h, std::ostream& os) {
    os << "bin_lo,bin_hi,count\n";
    for (std::size_t t = 0; t + 1 < h.bin_edges.size(); ++t)
        os << fmt17(h.bin_edges[t]) << ',' << fmt17(h.bin_edges[t + 1]) << ',' << h.counts[t]
           << '\n';
}

inline json histogram_to_json(const Histogram& h) {
    return json{{"objective", h.objective_tag},
                {"bin_edges", h.bin_edges},
                {"counts", h.counts},
                {"total", h.total},
                {"last_bin_fraction", last_bin_fraction(h)}};
}

inline void curve_to_csv(const std::vector<double>& sorted_values, std::ostream& os) {
    os << "rank,value\n";
    for (std::size_t t = 0; t < sorted_values.size(); ++t)
        os << t << ',' << fmt17(sorted_values[t]) << '\n';
}

inline void grid_to_csv(const SphereGrid& g, std::ostream& os) {
    os << "theta,phi,a,b,c,value\n";
    for (int it = 0; it < g.n_theta; ++it)
        for (int ip = 0; ip < g.n_phi; ++ip) {
            const SemiSimpleCoeffs co = g.point(it, ip);
            os << fmt17(g.thetas[it]) << ',' << fmt17(g.phis[ip]) << ',' << fmt17(co.a) << ','
               << fmt17(co.b) << ',' << fmt17(co.c) << ',' << fmt17(g.value(it, ip)) << '\n';
        }
}

}  // namespace qinv
