#include <catch2/catch.hpp>

#include "qinv/invariants_closed_form.hpp"
#include "qinv/invariants_matrix.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::test::close_scaled;

namespace {
const double w = 1.0 / std::sqrt(2.0);
}

TEST_CASE("constant values") {
    REQUIRE(zeta6 == 32.0 / 9261.0);
    REQUIRE(std::abs(zeta9 - 1.21376835394049e-6) < 1e-19);
    REQUIRE(zeta12 == 128.0 / 85766121.0);
    REQUIRE(max_abs_i6 == 1.0 / 18.0);
    REQUIRE(std::abs(max_abs_i9 - 6.300127939e-4) < 1e-12);
    REQUIRE(max_abs_i12 == 1.0 / 7776.0);
    REQUIRE(std::abs(max_abs_delta - 6.907059e-13) / max_abs_delta < 1e-6);
}

TEST_CASE("i6_ss reference values") {
    REQUIRE(i6_ss(1, 0, 0) == Approx(1.0 / 27).epsilon(1e-14));
    REQUIRE(i6_ss(0, 0, 0) == 0.0);
    REQUIRE(i6_ss(w, -w, 0) == Approx(1.0 / 18).epsilon(1e-14));
}

TEST_CASE("i9_ss reference values and antisymmetry") {
    Rng rng(11);
    SECTION("equal arguments force zero") {
        for (int t = 0; t < 100; ++t) {
            const double x = rng.uniform_pm1(), c = rng.uniform_pm1();
            REQUIRE(i9_ss(x, x, c) == 0.0);
        }
    }
    REQUIRE(std::abs(std::abs(i9_ss(w, -w, 0)) - std::sqrt(6.0) / 3888.0) < 1e-18);
    SECTION("transposition antisymmetry") {
        for (int t = 0; t < 1000; ++t) {
            const SemiSimpleCoeffs co = sample_semisimple(rng);
            const double v = i9_ss(co.a, co.b, co.c);
            REQUIRE(std::abs(v + i9_ss(co.b, co.a, co.c)) < 1e-14);
            REQUIRE(std::abs(v + i9_ss(co.a, co.c, co.b)) < 1e-14);
            REQUIRE(std::abs(v + i9_ss(co.c, co.b, co.a)) < 1e-14);
        }
    }
}

TEST_CASE("i12_ss reference values") {
    REQUIRE(i12_ss(1, 0, 0) == 0.0);
    REQUIRE(std::abs(std::abs(i12_ss(w, -w, 0)) - 1.0 / 7776) < 1e-18);
    SECTION("symmetric Dicke state coefficients (0, w, w)") {
        // amplitude-level identity first: the state is v2/sqrt2 + v3/sqrt2
        REQUIRE(qinv::test::max_amp_diff(semisimple_to_tensor({0, w, w}),
                                         named_state(NamedTag::d3_111)) < 1e-15);
        REQUIRE(std::abs(std::abs(i12_ss(0, w, w)) - 1.0 / 23328) < 1e-18);
    }
}

TEST_CASE("delta_ss") {
    Rng rng(13);
    SECTION("vanishes when any coefficient is zero") {
        for (int t = 0; t < 100; ++t)
            REQUIRE(delta_ss(rng.uniform_pm1(), rng.uniform_pm1(), 0.0) == 0.0);
    }
    SECTION("global maximum value at the enumerated maximizers") {
        const double r = 1.0 + std::sqrt(3.0);
        const double s = 1.0 / std::sqrt(r * r + 2.0);
        REQUIRE(std::abs(std::abs(delta_ss(r * s, s, s)) - max_abs_delta) / max_abs_delta < 1e-9);
    }
    SECTION("agrees with the invariant combination") {
        for (int t = 0; t < 1000; ++t) {
            const SemiSimpleCoeffs co = sample_semisimple(rng);
            const double factored = delta_ss(co.a, co.b, co.c);
            const cx combined = delta333_from_invariants(
                i6_ss(co.a, co.b, co.c), i9_ss(co.a, co.b, co.c), i12_ss(co.a, co.b, co.c));
            REQUIRE(close_scaled(combined.real(), factored, 1e-9, max_abs_delta));
        }
    }
    SECTION("permutation invariance of i6, i12, delta and |i9|") {
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int t = 0; t < 1000; ++t) {
            const SemiSimpleCoeffs co = sample_semisimple(rng);
            const double v[3] = {co.a, co.b, co.c};
            for (const auto& pm : perms) {
                const double a = v[pm[0]], b = v[pm[1]], c = v[pm[2]];
                REQUIRE(std::abs(i6_ss(a, b, c) - i6_ss(co.a, co.b, co.c)) < 1e-12);
                REQUIRE(std::abs(i12_ss(a, b, c) - i12_ss(co.a, co.b, co.c)) < 1e-12);
                REQUIRE(std::abs(delta_ss(a, b, c) - delta_ss(co.a, co.b, co.c)) < 1e-12);
                REQUIRE(std::abs(std::abs(i9_ss(a, b, c)) - std::abs(i9_ss(co.a, co.b, co.c))) <
                        1e-12);
            }
        }
    }
}

TEST_CASE("closed-form gradients match finite differences") {
    Rng rng(17);
    const double h = 1e-6;
    const auto check = [&](double (*f)(double, double, double),
                           std::array<double, 3> (*g)(double, double, double), double scale) {
        for (int t = 0; t < 200; ++t) {
            const SemiSimpleCoeffs p = sample_semisimple(rng);
            const auto ana = g(p.a, p.b, p.c);
            const double fd[3] = {
                (f(p.a + h, p.b, p.c) - f(p.a - h, p.b, p.c)) / (2 * h),
                (f(p.a, p.b + h, p.c) - f(p.a, p.b - h, p.c)) / (2 * h),
                (f(p.a, p.b, p.c + h) - f(p.a, p.b, p.c - h)) / (2 * h),
            };
            const double diff = std::sqrt((ana[0] - fd[0]) * (ana[0] - fd[0]) +
                                          (ana[1] - fd[1]) * (ana[1] - fd[1]) +
                                          (ana[2] - fd[2]) * (ana[2] - fd[2]));
            const double denom = std::max(std::hypot(fd[0], std::hypot(fd[1], fd[2])), 1e-4 * scale);
            REQUIRE(diff / denom < 1e-5);
        }
    };
    check(&i6_ss, &grad_i6_ss, max_abs_i6);
    check(&i9_ss, &grad_i9_ss, max_abs_i9);
    check(&i12_ss, &grad_i12_ss, max_abs_i12);
    check(&delta_ss, &grad_delta_ss, max_abs_delta);
}

TEST_CASE("invariants_f2prime") {
    SECTION("endpoint (0,1)") {
        const InvariantSet inv = invariants_f2prime(0.0, 1.0);
        REQUIRE(inv.i6.real() == Approx(2.0 * zeta6).epsilon(1e-14));
        REQUIRE(inv.i9.real() == 0.0);
        REQUIRE(inv.i12.real() == Approx(-zeta12).epsilon(1e-14));
        REQUIRE(inv.delta333 == cx{0.0, 0.0});
    }
    SECTION("critical point (1/2, sqrt3/2) reproduces the published decimals") {
        const InvariantSet inv = invariants_f2prime(0.5, std::sqrt(3.0) / 2.0);
        REQUIRE(std::abs(std::abs(inv.i6) - 0.0103660511823777) / 0.0103660511823777 < 1e-10);
        REQUIRE(std::abs(std::abs(inv.i9) - 1.21376835394049e-6) / 1.21376835394049e-6 < 1e-10);
        REQUIRE(std::abs(std::abs(inv.i12) - 4.47729237981977e-6) / 4.47729237981977e-6 < 1e-10);
        REQUIRE(inv.delta333 == cx{0.0, 0.0});
    }
    SECTION("rejects non-normalized parameters") {
        REQUIRE_THROWS_AS(invariants_f2prime(0.8, 0.8), std::invalid_argument);
    }
    SECTION("reduced one-variable forms on the constraint circle") {
        for (int t = 0; t <= 200; ++t) {
            const double a1 = -1.0 + 2.0 * t / 200.0;
            const double a2 = std::sqrt(std::max(0.0, 1.0 - a1 * a1));
            const InvariantSet inv = invariants_f2prime(a1, a2);
            const double a1_sq = a1 * a1;
            const double i6_red = zeta6 * (16 * std::pow(a1, 6) - 24 * std::pow(a1, 4) + 9 * a1_sq + 2);
            const double i9_red = zeta9 * (-4 * a1 * a1 * a1 + 3 * a1);
            const double i12_red =
                zeta12 * (-32 * std::pow(a1, 6) + 48 * std::pow(a1, 4) - 18 * a1_sq - 1);
            REQUIRE(std::abs(inv.i6.real() - i6_red) < 1e-12);
            REQUIRE(std::abs(inv.i9.real() - i9_red) < 1e-12);
            REQUIRE(std::abs(inv.i12.real() - i12_red) < 1e-12);
        }
    }
}

TEST_CASE("i6_f3prime") {
    const double expected = 262144.0 / 1076890625.0;  // 2^18 / (5^6 * 41^3)
    REQUIRE(std::abs(std::abs(i6_f3prime(+1)) - expected) / expected < 1e-12);
    REQUIRE(i6_f3prime(+1) == i6_f3prime(-1));  // even degree
    REQUIRE_THROWS_AS(i6_f3prime(0), std::invalid_argument);
    SECTION("matrix path on the f3prime states agrees, signed") {
        for (int sign : {+1, -1}) {
            const InvariantSet inv = fundamental_invariants(named_state(NamedState::f3(sign)));
            REQUIRE(std::abs(inv.i6.real() - i6_f3prime(sign)) / expected < 1e-9);
            REQUIRE(std::abs(inv.i9) < 1e-9 * max_abs_i9);
            REQUIRE(std::abs(inv.i12) < 1e-9 * max_abs_i12);
            REQUIRE(std::abs(inv.delta333) < 1e-9 * max_abs_delta);
        }
    }
}

TEST_CASE("s_index") {
    SECTION("Aharonov scores exactly 3") {
        const InvariantSet inv = fundamental_invariants(named_state(NamedTag::aharonov));
        REQUIRE(std::abs(s_index(inv) - 3.0) < 1e-9);
    }
    SECTION("zero invariants score 0") {
        REQUIRE(s_index(InvariantSet{}) == 0.0);
    }
    SECTION("GHZ scores 2/3") {
        const InvariantSet inv = fundamental_invariants(named_state(NamedTag::ghz333));
        REQUIRE(std::abs(s_index(inv) - 2.0 / 3.0) < 1e-12);
    }
    SECTION("non-negative on random inputs") {
        Rng rng(19);
        for (int t = 0; t < 200; ++t) {
            const SemiSimpleCoeffs co = sample_semisimple(rng);
            REQUIRE(s_index(invariants_semisimple(co)) >= 0.0);
        }
    }
}
