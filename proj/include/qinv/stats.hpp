// Monte Carlo evaluation of the invariants over random semi-simple states:
// sample tables, histograms with last-bin fractions, sorted curves, and
// signed level-set grids on the coefficient sphere.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qinv/invariants_closed_form.hpp"
#include "qinv/optimize.hpp"
#include "qinv/rng.hpp"
#include "qinv/states.hpp"

namespace qinv {

struct SampleRow {
    double a, b, c;
    double abs_i6, abs_i9, abs_i12, abs_delta;
    double s_index;
};

namespace detail {

inline SampleRow evaluate_row(const SemiSimpleCoeffs& co) {
    SampleRow row;
    row.a = co.a;
    row.b = co.b;
    row.c = co.c;
    row.abs_i6 = std::abs(i6_ss(co.a, co.b, co.c));
    row.abs_i9 = std::abs(i9_ss(co.a, co.b, co.c));
    row.abs_i12 = std::abs(i12_ss(co.a, co.b, co.c));
    row.abs_delta = std::abs(delta_ss(co.a, co.b, co.c));
    row.s_index = row.abs_i6 / max_abs_i6 + row.abs_i9 / max_abs_i9 + row.abs_i12 / max_abs_i12;
    return row;
}

// rows are generated in fixed chunks with per-chunk rng streams, so the
// table depends only on (n, seed), not on the worker count
constexpr std::size_t sample_chunk = 65536;

}  // namespace detail

inline std::vector<SampleRow> sample_and_evaluate(std::size_t n, std::uint64_t seed, int threads = 0) {
    if (n < 1) throw std::invalid_argument("sample_and_evaluate: n must be >= 1");
    std::vector<SampleRow> table(n);
    const std::size_t chunks = (n + detail::sample_chunk - 1) / detail::sample_chunk;
    const auto run_chunks = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ch = lo; ch < hi; ++ch) {
            Rng rng(stream_seed(seed, ch));
            const std::size_t begin = ch * detail::sample_chunk;
            const std::size_t end = std::min(n, begin + detail::sample_chunk);
            for (std::size_t r = begin; r < end; ++r)
                table[r] = detail::evaluate_row(sample_semisimple(rng));
        }
    };
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp<int>(workers, 1, static_cast<int>(chunks));
    if (workers <= 1) {
        run_chunks(0, chunks);
    } else {
        std::vector<std::thread> pool;
        const std::size_t per = (chunks + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = static_cast<std::size_t>(w) * per;
            const std::size_t hi = std::min(chunks, lo + per);
            if (lo < hi) pool.emplace_back(run_chunks, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return table;
}

// ---------------------------------------------------------------------------
// histograms

struct Histogram {
    std::vector<double> bin_edges;        // n_bins + 1 edges, uniform on [0, upper]
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    std::string objective_tag;
};

// Uniform bins on [0, upper]; values above upper clamp into the last bin.
inline Histogram histogram(const std::vector<double>& values, int n_bins, double upper,
                           std::string objective_tag = {}) {
    if (values.empty()) throw std::invalid_argument("histogram: empty input");
    if (n_bins < 2) throw std::invalid_argument("histogram: need at least 2 bins");
    if (!(upper > 0.0)) throw std::invalid_argument("histogram: upper must be positive");
    Histogram h;
    h.objective_tag = std::move(objective_tag);
    h.bin_edges.resize(n_bins + 1);
    for (int t = 0; t <= n_bins; ++t) h.bin_edges[t] = upper * static_cast<double>(t) / n_bins;
    h.counts.assign(n_bins, 0);
    for (double v : values) {
        int bin = static_cast<int>(v / upper * n_bins);
        bin = std::clamp(bin, 0, n_bins - 1);
        ++h.counts[bin];
    }
    h.total = values.size();
    return h;
}

inline double last_bin_fraction(const Histogram& h) {
    if (h.total == 0) throw std::invalid_argument("last_bin_fraction: empty histogram");
    return static_cast<double>(h.counts.back()) / static_cast<double>(h.total);
}

inline std::vector<double> sorted_curve(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return values;
}

inline std::vector<double> column(const std::vector<SampleRow>& table, ObjectiveTag tag) {
    std::vector<double> out;
    out.reserve(table.size());
    for (const SampleRow& r : table) switch (tag) {
            case ObjectiveTag::i6: out.push_back(r.abs_i6); break;
            case ObjectiveTag::i9: out.push_back(r.abs_i9); break;
            case ObjectiveTag::i12: out.push_back(r.abs_i12); break;
            case ObjectiveTag::delta333: out.push_back(r.abs_delta); break;
            case ObjectiveTag::s_index: out.push_back(r.s_index); break;
        }
    return out;
}

// ---------------------------------------------------------------------------
// level sets on the coefficient sphere

struct SphereGrid {
    int n_theta = 0;
    int n_phi = 0;
    std::vector<double> thetas;  // [0, pi], inclusive
    std::vector<double> phis;    // [0, 2pi), half open
    std::vector<double> values;  // row-major theta x phi, signed objective
    std::string objective_tag;

    double value(int it, int ip) const { return values[static_cast<std::size_t>(it) * n_phi + ip]; }
    SemiSimpleCoeffs point(int it, int ip) const {
        const double ct = cos_theta(it);
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        return {st * std::cos(phis[ip]), st * std::sin(phis[ip]), ct};
    }
    // symmetric in the index so the equator row carries c = 0 exactly
    double cos_theta(int it) const {
        const int mirror = n_theta - 1 - it;
        if (it == mirror) return 0.0;
        if (it > mirror) return -std::cos(thetas[mirror]);
        return std::cos(thetas[it]);
    }
};

// Signed (not absolute) objective values over the uniform spherical grid
// a = sin(theta)cos(phi), b = sin(theta)sin(phi), c = cos(theta).
inline SphereGrid sphere_grid(ObjectiveTag tag, int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 2) throw std::invalid_argument("sphere_grid: resolution must be >= 2");
    SphereGrid g;
    g.n_theta = n_theta;
    g.n_phi = n_phi;
    g.objective_tag = objective_name(tag);
    const double pi = 3.14159265358979323846264338327950288;
    g.thetas.resize(n_theta);
    for (int t = 0; t < n_theta; ++t) g.thetas[t] = pi * static_cast<double>(t) / (n_theta - 1);
    g.phis.resize(n_phi);
    for (int p = 0; p < n_phi; ++p) g.phis[p] = 2.0 * pi * static_cast<double>(p) / n_phi;
    g.values.resize(static_cast<std::size_t>(n_theta) * n_phi);
    const Objective obj = objective(tag);
    for (int t = 0; t < n_theta; ++t)
        for (int p = 0; p < n_phi; ++p) {
            const SemiSimpleCoeffs co = g.point(t, p);
            g.values[static_cast<std::size_t>(t) * n_phi + p] = obj.eval(co.a, co.b, co.c);
        }
    return g;
}

}  // namespace qinv
