// Sphere-constrained maximization of |f| for the closed-form invariants over
// semi-simple coefficients, plus a gradient-free perturbation ascent of
// |Delta333| over all 27 complex amplitudes.
//
// The gradient ascent works on the normalized square (f/scale)^2, where
// scale is the objective's known global maximum: squaring removes the |.|
// kink, and the normalization keeps gradient magnitudes O(1) even for
// Delta333 whose raw values are ~1e-13 (otherwise every point would pass a
// fixed gradient-norm stop).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qinv/invariants_closed_form.hpp"
#include "qinv/invariants_matrix.hpp"
#include "qinv/rng.hpp"
#include "qinv/states.hpp"

namespace qinv {

enum class ObjectiveTag { i6, i9, i12, delta333, s_index };

inline const char* objective_name(ObjectiveTag t) {
    switch (t) {
        case ObjectiveTag::i6: return "i6";
        case ObjectiveTag::i9: return "i9";
        case ObjectiveTag::i12: return "i12";
        case ObjectiveTag::delta333: return "delta";
        case ObjectiveTag::s_index: return "s_index";
    }
    return "?";
}

inline std::optional<ObjectiveTag> parse_objective(const std::string& name) {
    if (name == "i6") return ObjectiveTag::i6;
    if (name == "i9") return ObjectiveTag::i9;
    if (name == "i12") return ObjectiveTag::i12;
    if (name == "delta" || name == "delta333") return ObjectiveTag::delta333;
    if (name == "s_index") return ObjectiveTag::s_index;
    return std::nullopt;
}

struct Objective {
    ObjectiveTag tag = ObjectiveTag::delta333;

    double eval(double a, double b, double c) const {
        switch (tag) {
            case ObjectiveTag::i6: return i6_ss(a, b, c);
            case ObjectiveTag::i9: return i9_ss(a, b, c);
            case ObjectiveTag::i12: return i12_ss(a, b, c);
            case ObjectiveTag::delta333: return delta_ss(a, b, c);
            case ObjectiveTag::s_index:
                return std::abs(i6_ss(a, b, c)) / max_abs_i6 +
                       std::abs(i9_ss(a, b, c)) / max_abs_i9 +
                       std::abs(i12_ss(a, b, c)) / max_abs_i12;
        }
        return 0.0;
    }

    std::array<double, 3> gradient(double a, double b, double c) const {
        switch (tag) {
            case ObjectiveTag::i6: return grad_i6_ss(a, b, c);
            case ObjectiveTag::i9: return grad_i9_ss(a, b, c);
            case ObjectiveTag::i12: return grad_i12_ss(a, b, c);
            case ObjectiveTag::delta333: return grad_delta_ss(a, b, c);
            case ObjectiveTag::s_index: {
                const double s6 = i6_ss(a, b, c) >= 0.0 ? 1.0 : -1.0;
                const double s9 = i9_ss(a, b, c) >= 0.0 ? 1.0 : -1.0;
                const double s12 = i12_ss(a, b, c) >= 0.0 ? 1.0 : -1.0;
                const auto g6 = grad_i6_ss(a, b, c);
                const auto g9 = grad_i9_ss(a, b, c);
                const auto g12 = grad_i12_ss(a, b, c);
                std::array<double, 3> g;
                for (int t = 0; t < 3; ++t)
                    g[t] = s6 * g6[t] / max_abs_i6 + s9 * g9[t] / max_abs_i9 + s12 * g12[t] / max_abs_i12;
                return g;
            }
        }
        return {0.0, 0.0, 0.0};
    }

    // known global maximum of |f| on the unit sphere, used to normalize
    double scale() const {
        switch (tag) {
            case ObjectiveTag::i6: return max_abs_i6;
            case ObjectiveTag::i9: return max_abs_i9;
            case ObjectiveTag::i12: return max_abs_i12;
            case ObjectiveTag::delta333: return max_abs_delta;
            case ObjectiveTag::s_index: return 3.0;
        }
        return 1.0;
    }
};

inline Objective objective(ObjectiveTag tag) { return Objective{tag}; }

struct OptConfig {
    int restarts = 64;
    int max_iters = 2000;       // ascent iterations per restart (accepted-move
                                // budget for perturb_and_ascend)
    double step = 0.05;         // initial step length on the sphere
    double tol_grad = 1e-12;    // stop when the scaled sphere gradient is below
    std::uint64_t rng_seed = 0;
    int threads = 0;            // 0 = hardware concurrency
};

// ---------------------------------------------------------------------------
// implicit (chart) gradients on the sphere

enum class Chart { a, b, c };

constexpr double chart_min_coord = 1e-8;

// Treat the chart coordinate as the dependent variable on a^2+b^2+c^2 = 1
// and differentiate implicitly: for the c-chart,
//   grad = (f_a - (a/c) f_c, f_b - (b/c) f_c).
inline std::array<double, 2> implicit_gradient(const Objective& obj, const SemiSimpleCoeffs& p,
                                               Chart chart = Chart::c) {
    const auto g = obj.gradient(p.a, p.b, p.c);
    switch (chart) {
        case Chart::c:
            if (std::abs(p.c) <= chart_min_coord)
                throw std::domain_error("implicit_gradient: |c| too small for the c-chart");
            return {g[0] - (p.a / p.c) * g[2], g[1] - (p.b / p.c) * g[2]};
        case Chart::b:
            if (std::abs(p.b) <= chart_min_coord)
                throw std::domain_error("implicit_gradient: |b| too small for the b-chart");
            return {g[0] - (p.a / p.b) * g[1], g[2] - (p.c / p.b) * g[1]};
        case Chart::a:
            if (std::abs(p.a) <= chart_min_coord)
                throw std::domain_error("implicit_gradient: |a| too small for the a-chart");
            return {g[1] - (p.b / p.a) * g[0], g[2] - (p.c / p.a) * g[0]};
    }
    throw std::logic_error("unhandled chart");
}

inline Chart best_chart(const SemiSimpleCoeffs& p) {
    const double aa = std::abs(p.a), ab = std::abs(p.b), ac = std::abs(p.c);
    if (ac >= aa && ac >= ab) return Chart::c;
    if (ab >= aa) return Chart::b;
    return Chart::a;
}

// Sphere-restricted gradient norm of the *normalized* objective f/scale,
// evaluated in the chart whose dependent coordinate is largest.
inline double sphere_gradient_norm(const Objective& obj, const SemiSimpleCoeffs& p) {
    const auto g = implicit_gradient(obj, p, best_chart(p));
    return std::hypot(g[0], g[1]) / obj.scale();
}

inline bool is_critical(const Objective& obj, const SemiSimpleCoeffs& p, double tol = 1e-6) {
    return sphere_gradient_norm(obj, p) < tol;
}

// ---------------------------------------------------------------------------
// known maximizer catalogs

// For Delta333: the 12 points (rs, s, s) and coordinate positions; for the
// fundamental invariants: the sign/permutation orbit of (1/sqrt2, -1/sqrt2, 0).
inline std::vector<SemiSimpleCoeffs> known_maximizers(ObjectiveTag tag) {
    if (tag == ObjectiveTag::delta333) {
        std::vector<SemiSimpleCoeffs> out;
        for (int i = 1; i <= 12; ++i) out.push_back(max_delta_coeffs(i));
        return out;
    }
    if (tag == ObjectiveTag::i6 || tag == ObjectiveTag::i9 || tag == ObjectiveTag::i12) {
        const double w = 1.0 / std::sqrt(2.0);
        const double vals[3] = {w, -w, 0.0};
        std::vector<SemiSimpleCoeffs> out;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& pm : perms) out.push_back({vals[pm[0]], vals[pm[1]], vals[pm[2]]});
        return out;
    }
    throw std::invalid_argument("known_maximizers: unsupported objective");
}

// distance up to global sign and coordinate permutation
inline double orbit_distance(const SemiSimpleCoeffs& x, const SemiSimpleCoeffs& y) {
    const double xs[3] = {x.a, x.b, x.c};
    const double ys[3] = {y.a, y.b, y.c};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pm : perms)
        for (double sgn : {1.0, -1.0}) {
            double d2 = 0.0;
            for (int t = 0; t < 3; ++t) {
                const double d = sgn * xs[pm[t]] - ys[t];
                d2 += d * d;
            }
            best = std::min(best, std::sqrt(d2));
        }
    return best;
}

// ---------------------------------------------------------------------------
// multi-start projected gradient ascent

struct RestartRecord {
    SemiSimpleCoeffs start;
    SemiSimpleCoeffs point;
    double value = 0.0;       // |f| at the final iterate
    int iterations = 0;
    bool converged = false;   // gradient criterion met (vs. iteration cap)
};

struct LocalOptimum {
    SemiSimpleCoeffs point;
    double value = 0.0;
    int hits = 0;  // restarts that landed here (up to sign/permutation)
};

struct OptResult {
    ObjectiveTag tag = ObjectiveTag::delta333;
    SemiSimpleCoeffs best_point;
    double best_value = 0.0;
    std::vector<LocalOptimum> all_local_optima;
    std::optional<int> matched_known;
    long iterations_used = 0;
    std::uint64_t seed = 0;
    std::vector<RestartRecord> restarts;
};

namespace detail {

inline SemiSimpleCoeffs renormalized_step(const SemiSimpleCoeffs& p, const std::array<double, 3>& d,
                                          double eta) {
    SemiSimpleCoeffs q{p.a + eta * d[0], p.b + eta * d[1], p.c + eta * d[2]};
    return q.normalized();
}

inline RestartRecord ascend_one(const Objective& obj, const OptConfig& cfg, Rng& rng) {
    const double inv_scale2 = 1.0 / (obj.scale() * obj.scale());
    RestartRecord rec;
    rec.start = sample_semisimple(rng);
    SemiSimpleCoeffs p = rec.start;
    double f = obj.eval(p.a, p.b, p.c);
    double objective_sq = f * f * inv_scale2;
    double eta = cfg.step;
    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        // tangential gradient of (f/scale)^2
        const auto g = obj.gradient(p.a, p.b, p.c);
        std::array<double, 3> t{2.0 * f * inv_scale2 * g[0], 2.0 * f * inv_scale2 * g[1],
                                2.0 * f * inv_scale2 * g[2]};
        const double radial = t[0] * p.a + t[1] * p.b + t[2] * p.c;
        t[0] -= radial * p.a;
        t[1] -= radial * p.b;
        t[2] -= radial * p.c;
        const double gnorm = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
        if (gnorm < cfg.tol_grad) {
            rec.converged = true;
            break;
        }
        const std::array<double, 3> dir{t[0] / gnorm, t[1] / gnorm, t[2] / gnorm};
        // backtracking: halve the step until the squared objective increases
        bool moved = false;
        while (eta > 1e-16) {
            const SemiSimpleCoeffs q = renormalized_step(p, dir, eta);
            const double fq = obj.eval(q.a, q.b, q.c);
            const double sq = fq * fq * inv_scale2;
            if (sq > objective_sq) {
                p = q;
                f = fq;
                objective_sq = sq;
                eta = std::min(eta * 1.5, 0.25);
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!moved) {
            rec.converged = true;  // no ascent direction at line-search resolution
            break;
        }
    }
    rec.point = p;
    rec.value = std::abs(f);
    rec.iterations = it;
    return rec;
}

// canonical orbit representative: lexicographically largest image under
// {+-1} x S3
inline std::array<double, 3> canonical_triple(const SemiSimpleCoeffs& p) {
    const double xs[3] = {p.a, p.b, p.c};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::array<double, 3> best{-2.0, -2.0, -2.0};
    for (const auto& pm : perms)
        for (double sgn : {1.0, -1.0}) {
            const std::array<double, 3> cand{sgn * xs[pm[0]], sgn * xs[pm[1]], sgn * xs[pm[2]]};
            if (cand > best) best = cand;
        }
    return best;
}

}  // namespace detail

inline OptResult maximize_abs(const Objective& obj, const OptConfig& cfg) {
    if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.step <= 0.0 || cfg.tol_grad <= 0.0)
        throw std::invalid_argument("maximize_abs: configuration values must be positive");
    OptResult result;
    result.tag = obj.tag;
    result.seed = cfg.rng_seed;
    result.restarts.resize(cfg.restarts);

    // each restart owns the stream derived from its index, so any thread
    // partition produces identical records
    const auto run_range = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r) {
            Rng rng(stream_seed(cfg.rng_seed, static_cast<std::uint64_t>(r)));
            result.restarts[r] = detail::ascend_one(obj, cfg, rng);
        }
    };
    int workers = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, cfg.restarts);
    if (workers == 1) {
        run_range(0, cfg.restarts);
    } else {
        std::vector<std::thread> pool;
        const int per = (cfg.restarts + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * per, hi = std::min(cfg.restarts, lo + per);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    int best_idx = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        result.iterations_used += result.restarts[r].iterations;
        if (result.restarts[r].value > result.restarts[best_idx].value) best_idx = r;
    }
    result.best_point = result.restarts[best_idx].point;
    result.best_value = result.restarts[best_idx].value;

    // deduplicate final iterates up to sign/permutation (distance 1e-6)
    for (const RestartRecord& rec : result.restarts) {
        const auto rep = detail::canonical_triple(rec.point);
        bool merged = false;
        for (LocalOptimum& lo : result.all_local_optima) {
            const auto lrep = detail::canonical_triple(lo.point);
            const double d = std::sqrt((rep[0] - lrep[0]) * (rep[0] - lrep[0]) +
                                       (rep[1] - lrep[1]) * (rep[1] - lrep[1]) +
                                       (rep[2] - lrep[2]) * (rep[2] - lrep[2]));
            if (d < 1e-6) {
                ++lo.hits;
                if (rec.value > lo.value) {
                    lo.value = rec.value;
                    lo.point = rec.point;
                }
                merged = true;
                break;
            }
        }
        if (!merged) result.all_local_optima.push_back({rec.point, rec.value, 1});
    }
    std::stable_sort(result.all_local_optima.begin(), result.all_local_optima.end(),
                     [](const LocalOptimum& x, const LocalOptimum& y) { return x.value > y.value; });

    if (obj.tag != ObjectiveTag::s_index) {
        const auto catalog = known_maximizers(obj.tag);
        double best_d = std::numeric_limits<double>::infinity();
        int best_k = -1;
        for (int k = 0; k < static_cast<int>(catalog.size()); ++k) {
            const double d = orbit_distance(result.best_point, catalog[k]);
            if (d < best_d) {
                best_d = d;
                best_k = k;
            }
        }
        if (best_k >= 0 && best_d < 1e-4) result.matched_known = best_k;
    }
    return result;
}

// ---------------------------------------------------------------------------
// gradient-free ascent over all 27 complex amplitudes

// Coordinate-wise random perturbation of |Delta333| (matrix path), strict
// improvement only, renormalizing after each accepted move. The proposal
// amplitude adapts: slight growth on acceptance, decay on rejection.
// cfg.max_iters caps *accepted* moves.
inline std::pair<QutritState, double> perturb_and_ascend(const QutritState& start, const OptConfig& cfg) {
    QutritState state = start.norm_sq() > 0.0 ? start.normalized() : start;
    double value = std::abs(hyperdet(state));
    Rng rng(cfg.rng_seed);
    double sigma = cfg.step;
    int accepted = 0;
    long stale = 0;
    const long stale_limit = 20000;  // proposals without improvement
    while (accepted < cfg.max_iters && stale < stale_limit) {
        const int coord = static_cast<int>(rng.next_u64() % 54);
        const double delta = sigma * rng.normal();
        QutritState cand = state;
        if (coord % 2 == 0)
            cand.a[coord / 2] += cx{delta, 0.0};
        else
            cand.a[coord / 2] += cx{0.0, delta};
        cand = cand.normalized();
        const double cv = std::abs(hyperdet(cand));
        if (cv > value) {
            state = cand;
            value = cv;
            ++accepted;
            stale = 0;
            sigma = std::min(sigma * 1.05, 0.2);
        } else {
            ++stale;
            sigma = std::max(sigma * 0.998, 1e-9);
        }
    }
    return {state, value};
}

}  // namespace qinv
