// Closed-form invariant polynomials on semi-simple coefficients (a,b,c),
// their partial derivatives, the factored restricted hyperdeterminant, the
// F2'/F3' family evaluations, and the combined score S_I.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "qinv/invariant_set.hpp"
#include "qinv/states.hpp"

namespace qinv {

// normalization factors of the F2'/F3' family evaluations
inline const double zeta6 = 32.0 / 9261.0;                              // 2^5 / (3^3 * 7^3)
inline const double zeta9 = 32.0 * std::sqrt(42.0) / 170859375.0;       // 2^5 sqrt(42) / (3^7 * 5^7)
inline const double zeta12 = 128.0 / 85766121.0;                        // 2^7 / 21^6

// global maxima of the invariant magnitudes over normalized real
// semi-simple states
inline const double max_abs_i6 = 1.0 / 18.0;
inline const double max_abs_i9 = std::sqrt(6.0) / 3888.0;
inline const double max_abs_i12 = 1.0 / 7776.0;
inline const double max_abs_delta = std::sqrt(3.0) / (524288.0 * 4782969.0);  // sqrt(3)/(2^19 * 3^14)

// ---------------------------------------------------------------------------
// fundamental invariants restricted to a*v1 + b*v2 + c*v3

inline double i6_ss(double a, double b, double c) {
    const double a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
    return (a3 * a3 + b3 * b3 + c3 * c3 - 10.0 * (a3 * b3 + a3 * c3 + b3 * c3)) / 27.0;
}

inline double i9_ss(double a, double b, double c) {
    const double k = -std::sqrt(3.0) / 243.0;
    return k * (a - b) * (a - c) * (b - c) * (a * a + a * b + b * b) * (a * a + a * c + c * c) *
           (b * b + b * c + c * c);
}

inline double i12_ss(double a, double b, double c) {
    const double a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
    const double a6 = a3 * a3, b6 = b3 * b3, c6 = c3 * c3;
    const double p = a6 * a3 * b3 + a3 * b6 * b3 + a6 * a3 * c3 + b6 * b3 * c3 + a3 * c6 * c3 +
                     b3 * c6 * c3 - 4.0 * (a6 * b6 + a6 * c6 + b6 * c6) +
                     2.0 * (a6 * b3 * c3 + a3 * b6 * c3 + a3 * b3 * c6);
    return p / 729.0;
}

// Factored restricted hyperdeterminant. The factored product is kept (rather
// than the expanded degree-36 polynomial) for numerical stability.
inline double delta_ss(double a, double b, double c) {
    const double k = -4.0 / 387420489.0;  // -4 / 3^18
    const double g0 = a + b + c;
    const double g1 = a * a + 2.0 * a * b - a * c + b * b - b * c + c * c;
    const double g2 = a * a - a * b + 2.0 * a * c + b * b - b * c + c * c;
    const double g3 = a * a - a * b - a * c + b * b + 2.0 * b * c + c * c;
    const double g4 = a * a - a * b - a * c + b * b - b * c + c * c;
    const double prod = a * b * c * g0 * g1 * g2 * g3 * g4;
    return k * prod * prod * prod;
}

// Euclidean gradients of the closed forms (analytic differentiation).

inline std::array<double, 3> grad_i6_ss(double a, double b, double c) {
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    const double a3 = a2 * a, b3 = b2 * b, c3 = c2 * c;
    return {(6.0 * a3 * a2 - 30.0 * a2 * (b3 + c3)) / 27.0,
            (6.0 * b3 * b2 - 30.0 * b2 * (a3 + c3)) / 27.0,
            (6.0 * c3 * c2 - 30.0 * c2 * (a3 + b3)) / 27.0};
}

inline std::array<double, 3> grad_i9_ss(double a, double b, double c) {
    const double k = -std::sqrt(3.0) / 243.0;
    // product over six factors; differentiate each in turn
    const double f[6] = {a - b,
                         a - c,
                         b - c,
                         a * a + a * b + b * b,
                         a * a + a * c + c * c,
                         b * b + b * c + c * c};
    const double df[6][3] = {{1.0, -1.0, 0.0},
                             {1.0, 0.0, -1.0},
                             {0.0, 1.0, -1.0},
                             {2.0 * a + b, a + 2.0 * b, 0.0},
                             {2.0 * a + c, 0.0, a + 2.0 * c},
                             {0.0, 2.0 * b + c, b + 2.0 * c}};
    std::array<double, 3> g{0.0, 0.0, 0.0};
    for (int t = 0; t < 6; ++t) {
        double rest = k;
        for (int u = 0; u < 6; ++u)
            if (u != t) rest *= f[u];
        g[0] += rest * df[t][0];
        g[1] += rest * df[t][1];
        g[2] += rest * df[t][2];
    }
    return g;
}

inline std::array<double, 3> grad_i12_ss(double a, double b, double c) {
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    const double a3 = a2 * a, b3 = b2 * b, c3 = c2 * c;
    const double a5 = a3 * a2, b5 = b3 * b2, c5 = c3 * c2;
    const double a6 = a3 * a3, b6 = b3 * b3, c6 = c3 * c3;
    const double a8 = a6 * a2, b8 = b6 * b2, c8 = c6 * c2;
    const double a9 = a6 * a3, b9 = b6 * b3, c9 = c6 * c3;
    const double da = 9.0 * a8 * b3 + 3.0 * a2 * b9 + 9.0 * a8 * c3 + 3.0 * a2 * c9 -
                      24.0 * a5 * (b6 + c6) +
                      2.0 * (6.0 * a5 * b3 * c3 + 3.0 * a2 * b6 * c3 + 3.0 * a2 * b3 * c6);
    const double db = 3.0 * a9 * b2 + 9.0 * a3 * b8 + 9.0 * b8 * c3 + 3.0 * b2 * c9 -
                      24.0 * b5 * (a6 + c6) +
                      2.0 * (3.0 * a6 * b2 * c3 + 6.0 * a3 * b5 * c3 + 3.0 * a3 * b2 * c6);
    const double dc = 3.0 * a9 * c2 + 3.0 * b9 * c2 + 9.0 * a3 * c8 + 9.0 * b3 * c8 -
                      24.0 * c5 * (a6 + b6) +
                      2.0 * (3.0 * a6 * b3 * c2 + 3.0 * a3 * b6 * c2 + 6.0 * a3 * b3 * c5);
    return {da / 729.0, db / 729.0, dc / 729.0};
}

inline std::array<double, 3> grad_delta_ss(double a, double b, double c) {
    const double k = -4.0 / 387420489.0;
    // Delta = k * prod_t u_t^3 over the eight factors below; each zero of a
    // factor is a triple zero, so the product rule stays finite everywhere.
    const double u[8] = {a,
                         b,
                         c,
                         a + b + c,
                         a * a + 2.0 * a * b - a * c + b * b - b * c + c * c,
                         a * a - a * b + 2.0 * a * c + b * b - b * c + c * c,
                         a * a - a * b - a * c + b * b + 2.0 * b * c + c * c,
                         a * a - a * b - a * c + b * b - b * c + c * c};
    const double du[8][3] = {{1.0, 0.0, 0.0},
                             {0.0, 1.0, 0.0},
                             {0.0, 0.0, 1.0},
                             {1.0, 1.0, 1.0},
                             {2.0 * a + 2.0 * b - c, 2.0 * a + 2.0 * b - c, -a - b + 2.0 * c},
                             {2.0 * a - b + 2.0 * c, -a + 2.0 * b - c, 2.0 * a - b + 2.0 * c},
                             {2.0 * a - b - c, -a + 2.0 * b + 2.0 * c, -a + 2.0 * b + 2.0 * c},
                             {2.0 * a - b - c, -a + 2.0 * b - c, -a - b + 2.0 * c}};
    const double cubes[8] = {u[0] * u[0] * u[0], u[1] * u[1] * u[1], u[2] * u[2] * u[2],
                             u[3] * u[3] * u[3], u[4] * u[4] * u[4], u[5] * u[5] * u[5],
                             u[6] * u[6] * u[6], u[7] * u[7] * u[7]};
    std::array<double, 3> g{0.0, 0.0, 0.0};
    for (int t = 0; t < 8; ++t) {
        double rest = k * 3.0 * u[t] * u[t];
        for (int s = 0; s < 8; ++s)
            if (s != t) rest *= cubes[s];
        g[0] += rest * du[t][0];
        g[1] += rest * du[t][1];
        g[2] += rest * du[t][2];
    }
    return g;
}

// ---------------------------------------------------------------------------
// aggregate evaluations

inline double s_index(const InvariantSet& inv) {
    return std::abs(inv.i6) / max_abs_i6 + std::abs(inv.i9) / max_abs_i9 +
           std::abs(inv.i12) / max_abs_i12;
}

// Closed-form evaluation path; raw trace fields are back-filled from the
// invariant values.
inline InvariantSet invariants_semisimple(const SemiSimpleCoeffs& co) {
    InvariantSet inv;
    inv.i6 = i6_ss(co.a, co.b, co.c);
    inv.i9 = i9_ss(co.a, co.b, co.c);
    inv.i12 = i12_ss(co.a, co.b, co.c);
    inv.delta333 = delta_ss(co.a, co.b, co.c);
    attach_traces_from_invariants(inv);
    return inv;
}

// F2' family: invariants of a1*w1 + a2*w2 with a1^2 + a2^2 = 1.
// The hyperdeterminant vanishes identically on this family.
inline InvariantSet invariants_f2prime(double a1, double a2) {
    if (std::abs(a1 * a1 + a2 * a2 - 1.0) > 1e-10)
        throw std::invalid_argument("invariants_f2prime: a1^2 + a2^2 must equal 1");
    const double a1_2 = a1 * a1, a2_2 = a2 * a2;
    const double a1_3 = a1_2 * a1, a2_4 = a2_2 * a2_2;
    const double a1_5 = a1_3 * a1_2, a1_6 = a1_3 * a1_3, a2_6 = a2_4 * a2_2;
    const double a1_9 = a1_6 * a1_3, a2_8 = a2_4 * a2_4;
    const double a1_12 = a1_6 * a1_6, a2_10 = a2_8 * a2_2, a2_12 = a2_6 * a2_6;
    const double a1_8 = a1_6 * a1_2, a1_4 = a1_2 * a1_2;
    InvariantSet inv;
    inv.i6 = zeta6 * (3.0 * a1_6 + 15.0 * a1_2 * a2_4 + 2.0 * a2_6);
    inv.i9 = zeta9 * (-a1_9 + 6.0 * a1_5 * a2_4 + 8.0 * a1_3 * a2_6 + 3.0 * a1 * a2_8);
    inv.i12 = zeta12 * (-3.0 * a1_12 - 3.0 * a1_8 * a2_4 - 40.0 * a1_6 * a2_6 -
                        57.0 * a1_4 * a2_8 - 24.0 * a1_2 * a2_10 - a2_12);
    inv.delta333 = 0.0;
    attach_traces_from_invariants(inv);
    return inv;
}

// F3' family: only I6 survives; |I6| = 2^18 / (5^6 * 41^3) for either sign.
inline double i6_f3prime(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("i6_f3prime: sign must be +1 or -1");
    return -262144.0 / 1076890625.0;  // even degree: same value for both signs
}

}  // namespace qinv
