// 3-qutrit state vectors and the semi-simple coefficient model.
//
// A state is a vector of 27 complex amplitudes a_{ijk}, i,j,k in {0,1,2},
// stored at flat index 9i + 3j + k (the ket-label reading order |ijk>).
// Semi-simple states are real combinations a*v1 + b*v2 + c*v3 of the basis
//   v1 = (|000> + |111> + |222>)/sqrt(3)
//   v2 = (|012> + |120> + |201>)/sqrt(3)
//   v3 = (|021> + |102> + |210>)/sqrt(3)
// This header also provides the catalog of named reference states, the
// local-group and party-permutation actions, uniform coefficient sampling,
// and the coefficient-family classifier.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qinv/complex_linalg.hpp"
#include "qinv/rng.hpp"

namespace qinv {

constexpr int flat_index(int i, int j, int k) { return 9 * i + 3 * j + k; }

constexpr double norm_tol = 1e-12;

struct QutritState {
    std::array<cx, 27> a{};

    cx& amp(int i, int j, int k) { return a[flat_index(i, j, k)]; }
    const cx& amp(int i, int j, int k) const { return a[flat_index(i, j, k)]; }

    double norm_sq() const {
        double s = 0.0;
        for (const cx& z : a) s += std::norm(z);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_normalized(double tol = norm_tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

    QutritState normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize zero state");
        QutritState out;
        for (int t = 0; t < 27; ++t) out.a[t] = a[t] / n;
        return out;
    }

    QutritState& operator+=(const QutritState& o) {
        for (int t = 0; t < 27; ++t) a[t] += o.a[t];
        return *this;
    }
    QutritState& operator*=(cx s) {
        for (cx& z : a) z *= s;
        return *this;
    }
    friend QutritState operator+(QutritState x, const QutritState& y) { return x += y; }
    friend QutritState operator-(const QutritState& x, const QutritState& y) {
        QutritState out;
        for (int t = 0; t < 27; ++t) out.a[t] = x.a[t] - y.a[t];
        return out;
    }
    friend QutritState operator*(cx s, QutritState x) { return x *= s; }
};

struct SemiSimpleCoeffs {
    double a = 0.0, b = 0.0, c = 0.0;

    double norm_sq() const { return a * a + b * b + c * c; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_normalized(double tol = norm_tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

    SemiSimpleCoeffs normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("cannot normalize zero coefficients");
        return {a / n, b / n, c / n};
    }
};

// ---------------------------------------------------------------------------
// semi-simple basis and embedding

namespace detail {
inline constexpr int v1_support[3] = {flat_index(0, 0, 0), flat_index(1, 1, 1), flat_index(2, 2, 2)};
inline constexpr int v2_support[3] = {flat_index(0, 1, 2), flat_index(1, 2, 0), flat_index(2, 0, 1)};
inline constexpr int v3_support[3] = {flat_index(0, 2, 1), flat_index(1, 0, 2), flat_index(2, 1, 0)};
}  // namespace detail

inline QutritState semisimple_to_tensor(const SemiSimpleCoeffs& co) {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    QutritState s;
    for (int t = 0; t < 3; ++t) {
        s.a[detail::v1_support[t]] = co.a * inv_sqrt3;
        s.a[detail::v2_support[t]] = co.b * inv_sqrt3;
        s.a[detail::v3_support[t]] = co.c * inv_sqrt3;
    }
    return s;
}

// ---------------------------------------------------------------------------
// named states

enum class NamedTag {
    ghz333,
    w,
    w333,
    aharonov,
    d3_111,
    psi3,
    d3_2,
    d3_3,
    psi1,
    psi2,
    m333i,
    f2prime,    // parameters (a1, a2) with a1^2 + a2^2 = 1
    f3prime,    // parameter sign = +/-1
    max_delta,  // parameter index 1..12
};

struct NamedState {
    NamedTag tag = NamedTag::ghz333;
    double a1 = 0.0, a2 = 0.0;  // f2prime
    int sign = +1;              // f3prime
    int index = 1;              // max_delta

    static NamedState simple(NamedTag t) { return NamedState{t}; }
    static NamedState f2(double a1, double a2) { return NamedState{NamedTag::f2prime, a1, a2}; }
    static NamedState f3(int sign) { return NamedState{NamedTag::f3prime, 0, 0, sign}; }
    static NamedState maxdelta(int index) { return NamedState{NamedTag::max_delta, 0, 0, +1, index}; }
};

// The 12 coefficient triples attaining the global maximum of |Delta333|:
// (r*s, s, s) with r = 1 +/- sqrt(3), s = +/- 1/sqrt(r^2 + 2), and the
// distinguished coordinate r*s in each of the 3 positions.
// Index layout (1-based): index-1 = 6*r_choice + 3*s_choice + position,
// r_choice 0 -> 1+sqrt(3), s_choice 0 -> positive s.
inline SemiSimpleCoeffs max_delta_coeffs(int index) {
    if (index < 1 || index > 12) throw std::out_of_range("max_delta index must be in 1..12");
    const int t = index - 1;
    const double r = (t / 6 == 0) ? 1.0 + std::sqrt(3.0) : 1.0 - std::sqrt(3.0);
    const double s = ((t / 3) % 2 == 0 ? 1.0 : -1.0) / std::sqrt(r * r + 2.0);
    const int pos = t % 3;
    std::array<double, 3> v{s, s, s};
    v[pos] = r * s;
    return {v[0], v[1], v[2]};
}

namespace detail {

struct PolarAmp {
    double r;
    double theta;
};

// modulus/phase amplitude tables (3-decimal published data); norm is only
// ~0.9996, kept as printed
inline constexpr PolarAmp psi1_polar[27] = {
    {0.193, 1.7},    {0.323, -2.01},  {0.16, -2.16},   {0.229, -2.22},  {0.232, -3.12},
    {0.186, -2.5},   {0.239, -2.34},  {0.141, -0.411}, {0.159, -0.512}, {0.099, 1.54},
    {0.144, -2.43},  {0.148, 2.13},   {0.263, -1.62},  {0.322, 0.475},  {0.216, -1.95},
    {0.068, -1.39},  {0.03, -2.89},   {0.171, 1.91},   {0.253, -2.82},  {0.022, -0.225},
    {0.06, -1.2},    {0.003, 2.64},   {0.133, -1.52},  {0.202, 2.2},    {0.194, 1.08},
    {0.207, 1.13},   {0.274, -2.29},
};

inline constexpr PolarAmp psi2_polar[27] = {
    {0.245, 0.074},  {0.024, 2.49},   {0.248, 1.66},   {0.069, 1.55},   {0.256, 0.114},
    {0.118, -2.88},  {0.313, -1.24},  {0.076, 2.77},   {0.149, 0.208},  {0.208, 2.56},
    {0.227, -2.88},  {0.157, 2.27},   {0.072, 3.08},   {0.2, -1.07},    {0.199, -1.87},
    {0.13, -1.95},   {0.133, 1.5},    {0.218, -1.68},  {0.244, -1.84},  {0.191, -3.05},
    {0.049, 2.61},   {0.144, 1.22},   {0.226, 2.14},   {0.278, -2.46},  {0.227, 0.773},
    {0.186, -2.11},  {0.218, -1.52},
};

inline QutritState from_polar(const PolarAmp (&table)[27]) {
    QutritState s;
    for (int t = 0; t < 27; ++t)
        s.a[t] = table[t].r * cx{std::cos(table[t].theta), std::sin(table[t].theta)};
    return s;
}

inline void add_ket(QutritState& s, int i, int j, int k, double w) {
    s.amp(i, j, k) += w;
}

}  // namespace detail

inline QutritState named_state(const NamedState& ns) {
    using detail::add_ket;
    QutritState s;
    switch (ns.tag) {
        case NamedTag::ghz333:
            return semisimple_to_tensor({1.0, 0.0, 0.0});
        case NamedTag::w: {
            const double w = 1.0 / std::sqrt(3.0);
            add_ket(s, 1, 0, 0, w);
            add_ket(s, 0, 1, 0, w);
            add_ket(s, 0, 0, 1, w);
            return s;
        }
        case NamedTag::w333: {
            const double w = 1.0 / std::sqrt(6.0);
            add_ket(s, 1, 0, 0, w);
            add_ket(s, 2, 0, 0, w);
            add_ket(s, 0, 1, 0, w);
            add_ket(s, 0, 2, 0, w);
            add_ket(s, 0, 0, 1, w);
            add_ket(s, 0, 0, 2, w);
            return s;
        }
        case NamedTag::aharonov: {
            const double w = 1.0 / std::sqrt(6.0);
            add_ket(s, 0, 1, 2, w);
            add_ket(s, 2, 0, 1, w);
            add_ket(s, 1, 2, 0, w);
            add_ket(s, 0, 2, 1, -w);
            add_ket(s, 1, 0, 2, -w);
            add_ket(s, 2, 1, 0, -w);
            return s;
        }
        case NamedTag::d3_111: {
            const double w = 1.0 / std::sqrt(6.0);
            add_ket(s, 0, 1, 2, w);
            add_ket(s, 0, 2, 1, w);
            add_ket(s, 1, 0, 2, w);
            add_ket(s, 1, 2, 0, w);
            add_ket(s, 2, 0, 1, w);
            add_ket(s, 2, 1, 0, w);
            return s;
        }
        case NamedTag::psi3: {
            const double sqrt3 = std::sqrt(3.0);
            const double denom = 2.0 * std::sqrt(6.0 - 3.0 * sqrt3);
            add_ket(s, 0, 0, 0, (3.0 - 2.0 * sqrt3) / denom);
            add_ket(s, 0, 1, 1, 1.0 / denom);
            add_ket(s, 1, 0, 1, 1.0 / denom);
            add_ket(s, 1, 1, 0, 1.0 / denom);
            return s;
        }
        case NamedTag::d3_2: {
            const double w = 1.0 / std::sqrt(15.0);
            add_ket(s, 2, 0, 0, w);
            add_ket(s, 0, 2, 0, w);
            add_ket(s, 0, 0, 2, w);
            add_ket(s, 1, 1, 0, 2.0 * w);
            add_ket(s, 1, 0, 1, 2.0 * w);
            add_ket(s, 0, 1, 1, 2.0 * w);
            return s;
        }
        case NamedTag::d3_3: {
            const double w = 1.0 / std::sqrt(10.0);
            add_ket(s, 0, 1, 2, w);
            add_ket(s, 0, 2, 1, w);
            add_ket(s, 1, 0, 2, w);
            add_ket(s, 1, 2, 0, w);
            add_ket(s, 2, 0, 1, w);
            add_ket(s, 2, 1, 0, w);
            add_ket(s, 1, 1, 1, 2.0 * w);
            return s;
        }
        case NamedTag::psi1:
            return detail::from_polar(detail::psi1_polar);
        case NamedTag::psi2:
            return detail::from_polar(detail::psi2_polar);
        case NamedTag::m333i: {
            const double w = 1.0 / std::sqrt(2.0);
            return semisimple_to_tensor({w, -w, 0.0});
        }
        case NamedTag::f2prime: {
            if (std::abs(ns.a1 * ns.a1 + ns.a2 * ns.a2 - 1.0) > 1e-10)
                throw std::invalid_argument("f2prime parameters must satisfy a1^2 + a2^2 = 1");
            const double w = std::sqrt(2.0 / 21.0);
            // w1 basis vector, weighted by a1
            add_ket(s, 2, 1, 2, -ns.a1 * w);
            add_ket(s, 2, 0, 0, ns.a1 * w);
            add_ket(s, 1, 2, 0, 2.0 * ns.a1 * w);
            add_ket(s, 1, 1, 1, -2.0 * ns.a1 * w);
            add_ket(s, 0, 2, 2, 0.5 * ns.a1 * w);
            add_ket(s, 0, 0, 1, -0.5 * ns.a1 * w);
            // w2 basis vector, weighted by a2
            add_ket(s, 2, 2, 2, -ns.a2 * w);
            add_ket(s, 2, 0, 1, -ns.a2 * w);
            add_ket(s, 1, 2, 1, 2.0 * ns.a2 * w);
            add_ket(s, 1, 1, 0, 2.0 * ns.a2 * w);
            add_ket(s, 0, 1, 2, -0.5 * ns.a2 * w);
            add_ket(s, 0, 0, 0, -0.5 * ns.a2 * w);
            return s;
        }
        case NamedTag::f3prime: {
            if (ns.sign != 1 && ns.sign != -1)
                throw std::invalid_argument("f3prime sign must be +1 or -1");
            // normalized representative: the raw vector
            // -2|001> - 2|010> - 2|100> + 2|111> - (1/8)|222> has norm
            // 5*sqrt(41)/8, so the unit state carries prefactor 8/(5*sqrt(41))
            const double w = ns.sign * 8.0 / (5.0 * std::sqrt(41.0));
            add_ket(s, 0, 0, 1, -2.0 * w);
            add_ket(s, 0, 1, 0, -2.0 * w);
            add_ket(s, 1, 0, 0, -2.0 * w);
            add_ket(s, 1, 1, 1, 2.0 * w);
            add_ket(s, 2, 2, 2, -0.125 * w);
            return s;
        }
        case NamedTag::max_delta:
            return semisimple_to_tensor(max_delta_coeffs(ns.index));
    }
    throw std::logic_error("unhandled named state tag");
}

inline QutritState named_state(NamedTag tag) { return named_state(NamedState::simple(tag)); }

// CLI-facing tag strings: plain lowercase names, "maxdelta<1..12>",
// "f3prime" / "f3prime-", and "f2prime:<a1>,<a2>".
inline std::optional<NamedState> parse_named_tag(const std::string& text) {
    if (text == "ghz333") return NamedState::simple(NamedTag::ghz333);
    if (text == "w") return NamedState::simple(NamedTag::w);
    if (text == "w333") return NamedState::simple(NamedTag::w333);
    if (text == "aharonov") return NamedState::simple(NamedTag::aharonov);
    if (text == "d3_111") return NamedState::simple(NamedTag::d3_111);
    if (text == "psi3") return NamedState::simple(NamedTag::psi3);
    if (text == "d3_2") return NamedState::simple(NamedTag::d3_2);
    if (text == "d3_3") return NamedState::simple(NamedTag::d3_3);
    if (text == "psi1") return NamedState::simple(NamedTag::psi1);
    if (text == "psi2") return NamedState::simple(NamedTag::psi2);
    if (text == "m333i") return NamedState::simple(NamedTag::m333i);
    if (text == "f3prime") return NamedState::f3(+1);
    if (text == "f3prime-") return NamedState::f3(-1);
    if (text.rfind("maxdelta", 0) == 0) {
        try {
            const int idx = std::stoi(text.substr(8));
            if (idx >= 1 && idx <= 12) return NamedState::maxdelta(idx);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    if (text.rfind("f2prime:", 0) == 0) {
        const std::string args = text.substr(8);
        const auto comma = args.find(',');
        if (comma == std::string::npos) return std::nullopt;
        try {
            const double a1 = std::stod(args.substr(0, comma));
            const double a2 = std::stod(args.substr(comma + 1));
            return NamedState::f2(a1, a2);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

inline const char* named_tag_list() {
    return "ghz333 w w333 aharonov d3_111 psi3 d3_2 d3_3 psi1 psi2 m333i "
           "f3prime f3prime- maxdelta<1..12> f2prime:<a1>,<a2>";
}

// ---------------------------------------------------------------------------
// group actions

using Mat3 = std::array<cx, 9>;  // row-major 3x3

inline cx det3(const Mat3& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

inline Mat3 identity3() {
    return Mat3{cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}};
}

// a'_{ijk} = sum_{i'j'k'} A_{ii'} B_{jj'} C_{kk'} a_{i'j'k'}.
// strict mode enforces det(A) = det(B) = det(C) = 1 within 1e-9.
inline QutritState apply_slocc(const QutritState& state, const Mat3& A, const Mat3& B, const Mat3& C,
                               bool strict = false) {
    if (strict) {
        for (const Mat3* m : {&A, &B, &C})
            if (std::abs(det3(*m) - cx{1.0, 0.0}) > 1e-9)
                throw std::invalid_argument("apply_slocc: factor is not unimodular");
    }
    QutritState t1;  // contract first slot
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                cx acc{0.0, 0.0};
                for (int p = 0; p < 3; ++p) acc += A[3 * i + p] * state.amp(p, j, k);
                t1.amp(i, j, k) = acc;
            }
    QutritState t2;  // second slot
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                cx acc{0.0, 0.0};
                for (int p = 0; p < 3; ++p) acc += B[3 * j + p] * t1.amp(i, p, k);
                t2.amp(i, j, k) = acc;
            }
    QutritState out;  // third slot
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                cx acc{0.0, 0.0};
                for (int p = 0; p < 3; ++p) acc += C[3 * k + p] * t2.amp(i, j, p);
                out.amp(i, j, k) = acc;
            }
    return out;
}

// Party permutation: perm[t] names the input slot whose index feeds output
// slot t, i.e. out_{m0 m1 m2} = in_{m_perm[0] m_perm[1] m_perm[2]}.
// perm = {1,0,2} swaps the first two parties.
inline QutritState permute_parties(const QutritState& state, const std::array<int, 3>& perm) {
    bool seen[3] = {false, false, false};
    for (int t : perm) {
        if (t < 0 || t > 2 || seen[t]) throw std::invalid_argument("permute_parties: invalid permutation");
        seen[t] = true;
    }
    QutritState out;
    int m[3];
    for (m[0] = 0; m[0] < 3; ++m[0])
        for (m[1] = 0; m[1] < 3; ++m[1])
            for (m[2] = 0; m[2] < 3; ++m[2])
                out.amp(m[0], m[1], m[2]) = state.amp(m[perm[0]], m[perm[1]], m[perm[2]]);
    return out;
}

// ---------------------------------------------------------------------------
// sampling

// Uniform draw of (a,b,c) on [-1,1]^3, rejected if zero, then scaled to the
// unit sphere. The induced sphere distribution is the cube-renormalization
// measure, not the rotation-invariant one.
inline SemiSimpleCoeffs sample_semisimple(Rng& rng) {
    for (;;) {
        const SemiSimpleCoeffs co{rng.uniform_pm1(), rng.uniform_pm1(), rng.uniform_pm1()};
        const double n2 = co.norm_sq();
        if (n2 > 0.0) {
            const double inv = 1.0 / std::sqrt(n2);
            return {co.a * inv, co.b * inv, co.c * inv};
        }
    }
}

inline SemiSimpleCoeffs sample_semisimple(std::uint64_t seed) {
    Rng rng(seed);
    return sample_semisimple(rng);
}

// ---------------------------------------------------------------------------
// coefficient families

enum class Family { F1, F2, F3, F4, Degenerate };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
        case Family::Degenerate: return "Degenerate";
    }
    return "?";
}

// Classifier over the literal conditions, tested in order F1, F2, F3, F4:
//   F1: abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3
//   F2: c = 0 and b(a^3+b^3) != 0
//   F3: a != 0 and b = c = 0
//   F4: a = 0 and c = -b != 0
// The published conditions hold up to coordinate permutation; this fixes the
// representative convention to the coordinates as given. Zero tests use
// tolerance 1e-10 (inputs are expected normalized).
inline Family classify_semisimple_family(const SemiSimpleCoeffs& co, double tol = 1e-10) {
    const double a = co.a, b = co.b, c = co.c;
    const auto zero = [tol](double x) { return std::abs(x) <= tol; };
    const double a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
    if (!zero(a) && !zero(b) && !zero(c)) {
        const double lhs = a3 + b3 + c3;
        const double rhs = 3.0 * a * b * c;
        if (!zero(lhs * lhs * lhs - rhs * rhs * rhs)) return Family::F1;
        return Family::Degenerate;
    }
    if (zero(c) && !zero(b * (a3 + b3))) return Family::F2;
    if (!zero(a) && zero(b) && zero(c)) return Family::F3;
    if (zero(a) && !zero(b) && zero(c + b)) return Family::F4;
    return Family::Degenerate;
}

}  // namespace qinv
