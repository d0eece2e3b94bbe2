#include <catch2/catch.hpp>

#include "qinv/stats.hpp"
#include "test_support.hpp"

using namespace qinv;

TEST_CASE("sample_and_evaluate") {
    SECTION("single row reproduces bitwise") {
        const auto t1 = sample_and_evaluate(1, 7);
        const auto t2 = sample_and_evaluate(1, 7);
        REQUIRE(t1.size() == 1);
        REQUIRE(t1[0].a == t2[0].a);
        REQUIRE(t1[0].abs_delta == t2[0].abs_delta);
    }
    SECTION("worker count does not change the table") {
        const auto t1 = sample_and_evaluate(150000, 3, 1);
        const auto t3 = sample_and_evaluate(150000, 3, 3);
        REQUIRE(t1.size() == t3.size());
        for (std::size_t r = 0; r < t1.size(); r += 997) {
            REQUIRE(t1[r].a == t3[r].a);
            REQUIRE(t1[r].s_index == t3[r].s_index);
        }
    }
    SECTION("rows are normalized and respect the published maxima") {
        const auto table = sample_and_evaluate(100000, 0);
        for (std::size_t r = 0; r < table.size(); r += 17) {
            const SampleRow& row = table[r];
            REQUIRE(std::abs(row.a * row.a + row.b * row.b + row.c * row.c - 1.0) < 1e-12);
        }
        for (const SampleRow& row : table) {
            REQUIRE(row.abs_i6 <= max_abs_i6 * (1.0 + 1e-9));
            REQUIRE(row.abs_i9 <= max_abs_i9 * (1.0 + 1e-9));
            REQUIRE(row.abs_i12 <= max_abs_i12 * (1.0 + 1e-9));
            REQUIRE(row.abs_delta <= max_abs_delta * (1.0 + 1e-9));
            REQUIRE(row.s_index <= 3.0 * (1.0 + 1e-9));
        }
    }
    SECTION("n must be positive") {
        REQUIRE_THROWS_AS(sample_and_evaluate(0, 0), std::invalid_argument);
    }
}

TEST_CASE("histogram") {
    SECTION("two-point example") {
        const Histogram h = histogram({0.0, 1.0}, 2, 1.0);
        REQUIRE(h.counts == std::vector<std::uint64_t>{1, 1});
        REQUIRE(h.total == 2);
    }
    SECTION("values above the upper edge clamp into the last bin") {
        const Histogram h = histogram({0.05, 5.0, 0.95, 1.0}, 10, 1.0);
        REQUIRE(h.counts[0] == 1);
        REQUIRE(h.counts[9] == 3);
    }
    SECTION("mass conservation and edge monotonicity") {
        Rng rng(61);
        std::vector<double> values;
        for (int t = 0; t < 5000; ++t) values.push_back(rng.next_double() * 2.0);
        const Histogram h = histogram(values, 37, 1.5);
        std::uint64_t sum = 0;
        for (auto c : h.counts) sum += c;
        REQUIRE(sum == values.size());
        REQUIRE(h.counts.size() + 1 == h.bin_edges.size());
        for (std::size_t t = 0; t + 1 < h.bin_edges.size(); ++t)
            REQUIRE(h.bin_edges[t] < h.bin_edges[t + 1]);
    }
    SECTION("input validation") {
        REQUIRE_THROWS_AS(histogram({}, 10, 1.0), std::invalid_argument);
        REQUIRE_THROWS_AS(histogram({1.0}, 1, 1.0), std::invalid_argument);
        REQUIRE_THROWS_AS(histogram({1.0}, 10, 0.0), std::invalid_argument);
    }
    SECTION("last_bin_fraction") {
        std::vector<double> values(99, 0.1);
        values.push_back(0.999);
        const Histogram h = histogram(values, 10, 1.0);
        REQUIRE(last_bin_fraction(h) == Approx(0.01));
    }
}

TEST_CASE("sorted_curve") {
    REQUIRE(sorted_curve({3.0, 1.0, 2.0}) == std::vector<double>{1.0, 2.0, 3.0});
    SECTION("20000-sample curves: monotone, bounded, and i6 has a plateau") {
        const auto table = sample_and_evaluate(20000, 0);
        const auto dcurve = sorted_curve(column(table, ObjectiveTag::delta333));
        for (std::size_t t = 1; t < dcurve.size(); ++t) REQUIRE(dcurve[t] >= dcurve[t - 1]);
        REQUIRE(dcurve.back() <= max_abs_delta * (1.0 + 1e-9));
        const auto icurve = sorted_curve(column(table, ObjectiveTag::i6));
        std::size_t flat = 0;
        for (std::size_t t = 1; t < icurve.size(); ++t)
            if (icurve[t] - icurve[t - 1] < 1e-4 * max_abs_i6) ++flat;
        REQUIRE(static_cast<double>(flat) / icurve.size() > 0.2);
    }
}

TEST_CASE("sphere_grid") {
    SECTION("resolution validation") {
        REQUIRE_THROWS_AS(sphere_grid(ObjectiveTag::i6, 1, 10), std::invalid_argument);
    }
    SECTION("equator row carries c = 0 exactly, so delta vanishes there") {
        const SphereGrid g = sphere_grid(ObjectiveTag::delta333, 21, 24);
        const int equator = 10;
        for (int p = 0; p < g.n_phi; ++p) {
            REQUIRE(g.point(equator, p).c == 0.0);
            REQUIRE(g.value(equator, p) == 0.0);
        }
    }
    SECTION("i9 grid is antisymmetric under the a<->b reflection") {
        const SphereGrid g = sphere_grid(ObjectiveTag::i9, 21, 24);
        for (int t = 0; t < g.n_theta; ++t)
            for (int p = 0; p < g.n_phi; ++p) {
                const int mirrored = ((6 - p) % 24 + 24) % 24;  // phi -> pi/2 - phi
                REQUIRE(std::abs(g.value(t, p) + g.value(t, mirrored)) < 1e-12);
            }
    }
    SECTION("even invariants are 3-cycle symmetric on grid points") {
        for (ObjectiveTag tag : {ObjectiveTag::i6, ObjectiveTag::i12, ObjectiveTag::delta333}) {
            const SphereGrid g = sphere_grid(tag, 11, 12);
            const Objective obj = objective(tag);
            for (int t = 0; t < g.n_theta; ++t)
                for (int p = 0; p < g.n_phi; ++p) {
                    const SemiSimpleCoeffs co = g.point(t, p);
                    REQUIRE(std::abs(obj.eval(co.b, co.c, co.a) - g.value(t, p)) < 1e-12);
                }
        }
    }
    SECTION("grid covers the angle ranges uniformly") {
        const SphereGrid g = sphere_grid(ObjectiveTag::i6, 5, 8);
        REQUIRE(g.thetas.front() == 0.0);
        REQUIRE(g.thetas.back() == Approx(3.14159265358979).epsilon(1e-12));
        REQUIRE(g.phis.front() == 0.0);
        REQUIRE(g.phis.back() < 6.283185307179586);
    }
}
