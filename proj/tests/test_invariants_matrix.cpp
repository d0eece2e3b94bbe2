#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qinv/invariants_closed_form.hpp"
#include "qinv/invariants_matrix.hpp"
#include "qinv/verify.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::test::close_scaled;

namespace {
const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

QutritState random_complex_state(Rng& rng) {
    QutritState s;
    for (int t = 0; t < 27; ++t) s.a[t] = cx{rng.uniform_pm1(), rng.uniform_pm1()};
    return s.normalized();
}
}  // namespace

TEST_CASE("build_adjoint block structure") {
    SECTION("zero state gives zero blocks") {
        const AdjointMatrix k = build_adjoint(QutritState{});
        for (const cx& z : k.k02.data()) REQUIRE(z == cx{0, 0});
        for (const cx& z : k.k10.data()) REQUIRE(z == cx{0, 0});
        for (const cx& z : k.k21.data()) REQUIRE(z == cx{0, 0});
    }
    SECTION("hand-checked cells for the GHZ-type state") {
        const AdjointMatrix k = build_adjoint(named_state(NamedTag::ghz333));
        // first K02 row starts with -(1/3) z_{2,2,2} and ends with (2/3) z_{0,0,0}
        REQUIRE(std::abs(k.k02(0, 0) - cx{-inv_sqrt3 / 3.0, 0}) < 1e-15);
        REQUIRE(std::abs(k.k02(0, 26) - cx{2.0 * inv_sqrt3 / 3.0, 0}) < 1e-15);
        REQUIRE(std::abs(k.k02(0, 13) - cx{inv_sqrt3 / 3.0, 0}) < 1e-15);  // (1/3) z_{1,1,1}
        // first K10 row starts with -z_{0,0,0}
        REQUIRE(k.k10(0, 0) == cx{-inv_sqrt3, 0});
        // first K21 row: +z_{1,1,1} at column 0, -z_{0,0,0} at column 13
        REQUIRE(k.k21(0, 0) == cx{inv_sqrt3, 0});
        REQUIRE(k.k21(0, 13) == cx{-inv_sqrt3, 0});
        // K02 entries only involve z_{000}, z_{111}, z_{222} here
        int nonzero = 0;
        for (const cx& z : k.k02.data())
            if (z != cx{0, 0}) ++nonzero;
        REQUIRE(nonzero == 36);  // 12 table entries per surviving amplitude
    }
    SECTION("dense embedding is block cyclic") {
        Rng rng(3);
        const CMatrix kd = build_adjoint(random_complex_state(rng)).dense();
        for (int r = 0; r < 78; ++r)
            for (int c = 0; c < 78; ++c) {
                const bool in_k02 = r < 24 && c >= 51;
                const bool in_k10 = r >= 24 && r < 51 && c < 24;
                const bool in_k21 = r >= 51 && c >= 24 && c < 51;
                if (!in_k02 && !in_k10 && !in_k21) REQUIRE(kd(r, c) == cx{0, 0});
            }
    }
}

TEST_CASE("power traces") {
    Rng rng(23);
    const QutritState x = random_complex_state(rng);
    const AdjointMatrix k = build_adjoint(x);
    SECTION("bounds checked") {
        REQUIRE_THROWS_AS(power_trace(k, 0), std::invalid_argument);
        REQUIRE_THROWS_AS(power_trace(k, 17), std::invalid_argument);
    }
    SECTION("gradation: tr K = tr K^3... only multiples of 3 survive") {
        REQUIRE(std::abs(power_trace(k, 1)) < 1e-12);
        REQUIRE(std::abs(power_trace(k, 2)) < 1e-12);
        REQUIRE(std::abs(power_trace(k, 9)) < 1e-10);  // the degree-9 obstruction
        REQUIRE(std::abs(power_trace(build_adjoint(QutritState{}), 6)) == 0.0);
    }
    SECTION("block-diagonal fast path equals dense powers") {
        const InvariantSet inv = fundamental_invariants(x);
        REQUIRE(std::abs(inv.g6 - power_trace(k, 6)) < 1e-12 * std::max(1.0, std::abs(inv.g6)));
        REQUIRE(std::abs(inv.g12 - power_trace(k, 12)) < 1e-12 * std::max(1.0, std::abs(inv.g12)));
    }
    SECTION("GHZ trace of K^6 is exactly -4") {
        const InvariantSet inv = fundamental_invariants(named_state(NamedTag::ghz333));
        REQUIRE(std::abs(inv.g6 - cx{-4.0, 0.0}) < 1e-10);
    }
}

TEST_CASE("strassen determinant") {
    SECTION("zero and GHZ states") {
        REQUIRE(strassen_det(QutritState{}) == cx{0, 0});
        REQUIRE(std::abs(strassen_det(named_state(NamedTag::ghz333))) < 1e-12);
    }
    SECTION("3x3 block-antisymmetric pattern: diagonal blocks zero, block(r,c) = -block(c,r)") {
        Rng rng(67);
        const CMatrix s9 = strassen_matrix(random_complex_state(rng));
        for (int br = 0; br < 3; ++br)
            for (int bc = 0; bc < 3; ++bc)
                for (int u = 0; u < 3; ++u)
                    for (int v = 0; v < 3; ++v) {
                        if (br == bc)
                            REQUIRE(s9(3 * br + u, 3 * bc + v) == cx{0, 0});
                        else
                            REQUIRE(s9(3 * br + u, 3 * bc + v) == -s9(3 * bc + u, 3 * br + v));
                    }
    }
    SECTION("sign fixture: matrix I9 equals the closed form, signed") {
        // closed form at the Aharonov coefficients (0, 1/sqrt2, -1/sqrt2) is
        // +sqrt(6)/3888; det(S9) itself comes out positive there, so the
        // library multiplies -det(S9) by i9_trace_sign = -1
        const double w = 1.0 / std::sqrt(2.0);
        const double closed = i9_ss(0.0, w, -w);
        REQUIRE(closed > 0.0);
        const cx g9 = strassen_det(named_state(NamedTag::aharonov));
        REQUIRE(std::abs(i9_trace_sign * -g9 - cx{closed, 0}) < 1e-12);
        REQUIRE(std::abs(std::abs(g9) - std::sqrt(6.0) / 3888.0) / (std::sqrt(6.0) / 3888.0) <
                1e-10);
    }
}

TEST_CASE("fundamental_invariants on reference states") {
    SECTION("Aharonov") {
        const InvariantSet inv = fundamental_invariants(named_state(NamedTag::aharonov));
        REQUIRE(std::abs(std::abs(inv.i6) - 1.0 / 18) / (1.0 / 18) < 1e-9);
        REQUIRE(std::abs(std::abs(inv.i9) - max_abs_i9) / max_abs_i9 < 1e-9);
        REQUIRE(std::abs(std::abs(inv.i12) - 1.0 / 7776) / (1.0 / 7776) < 1e-9);
        REQUIRE(std::abs(inv.delta333) < 1e-12 * max_abs_delta + 1e-25);
    }
    SECTION("nilpotent states annihilate everything") {
        for (NamedTag tag : {NamedTag::w, NamedTag::w333}) {
            const InvariantSet inv = fundamental_invariants(named_state(tag));
            REQUIRE(std::abs(inv.i6) < 1e-12);
            REQUIRE(std::abs(inv.i9) < 1e-12);
            REQUIRE(std::abs(inv.i12) < 1e-12);
            REQUIRE(std::abs(inv.delta333) < 1e-12);
        }
    }
    SECTION("Dicke D3_3") {
        const InvariantSet inv = fundamental_invariants(named_state(NamedTag::d3_3));
        REQUIRE(std::abs(std::abs(inv.i6) - 1.0 / 125) / (1.0 / 125) < 1e-9);
        REQUIRE(std::abs(inv.i9) < 1e-9 * max_abs_i9);
        REQUIRE(std::abs(std::abs(inv.i12) - 1.0 / 500000) / (1.0 / 500000) < 1e-9);
    }
    SECTION("published approximate states") {
        const InvariantSet p1 = fundamental_invariants(named_state(NamedTag::psi1));
        REQUIRE(std::abs(std::abs(p1.i6) - 0.007245) / 0.007245 < 5e-3);
        REQUIRE(std::abs(std::abs(p1.i9) - 7.954e-5) / 7.954e-5 < 5e-3);
        REQUIRE(std::abs(std::abs(p1.i12) - 5.245e-6) / 5.245e-6 < 5e-3);
        REQUIRE(std::abs(std::abs(p1.delta333) - 6.243e-16) / 6.243e-16 < 5e-3);
        const InvariantSet p2 = fundamental_invariants(named_state(NamedTag::psi2));
        REQUIRE(std::abs(std::abs(p2.delta333) - 7.889e-17) / 7.889e-17 < 5e-3);
    }
    SECTION("combination identity holds by construction") {
        Rng rng(29);
        for (int t = 0; t < 50; ++t) {
            const InvariantSet inv = fundamental_invariants(random_complex_state(rng));
            const cx recombined = delta333_from_invariants(inv.i6, inv.i9, inv.i12);
            REQUIRE(std::abs(inv.delta333 - recombined) <=
                    1e-10 * std::max(std::abs(inv.delta333), max_abs_delta));
        }
    }
}

TEST_CASE("hyperdet") {
    SECTION("enumerated maximizers reach the global maximum") {
        REQUIRE(std::abs(std::abs(hyperdet(named_state(NamedState::maxdelta(1)))) - max_abs_delta) /
                    max_abs_delta <
                1e-6);
    }
    SECTION("nilpotent W gives zero") {
        REQUIRE(std::abs(hyperdet(named_state(NamedTag::w))) < 1e-15);
    }
}

TEST_CASE("matrix path equals closed forms on random semi-simple states") {
    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        const SemiSimpleCoeffs co = sample_semisimple(rng);
        const InvariantSet m = fundamental_invariants(semisimple_to_tensor(co));
        const InvariantSet c = invariants_semisimple(co);
        REQUIRE(std::abs(m.i6 - c.i6) <= 1e-9 * std::max(std::abs(c.i6), max_abs_i6));
        REQUIRE(std::abs(m.i9 - c.i9) <= 1e-9 * std::max(std::abs(c.i9), max_abs_i9));
        REQUIRE(std::abs(m.i12 - c.i12) <= 1e-9 * std::max(std::abs(c.i12), max_abs_i12));
        REQUIRE(std::abs(m.delta333 - c.delta333) <=
                1e-9 * std::max(std::abs(c.delta333), max_abs_delta));
        REQUIRE(std::abs(m.g9 - c.g9) <= 1e-9 * std::max(std::abs(c.g9), max_abs_i9));
    }
}

TEST_CASE("homogeneity under scaling") {
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        const QutritState x = random_complex_state(rng);
        const InvariantSet base = fundamental_invariants(x);
        const double lam = 0.5 + 1.5 * rng.next_double();
        QutritState y = x;
        y *= lam;
        const InvariantSet s = fundamental_invariants(y);
        const double l6 = std::pow(lam, 6), l9 = std::pow(lam, 9), l12 = std::pow(lam, 12),
                     l36 = std::pow(lam, 36);
        REQUIRE(std::abs(s.i6 - l6 * base.i6) <= 1e-8 * std::max(std::abs(l6 * base.i6), l6 * max_abs_i6));
        REQUIRE(std::abs(s.i9 - l9 * base.i9) <= 1e-8 * std::max(std::abs(l9 * base.i9), l9 * max_abs_i9));
        REQUIRE(std::abs(s.i12 - l12 * base.i12) <=
                1e-8 * std::max(std::abs(l12 * base.i12), l12 * max_abs_i12));
        REQUIRE(std::abs(s.delta333 - l36 * base.delta333) <=
                1e-8 * std::max(std::abs(l36 * base.delta333), l36 * max_abs_delta));
    }
}

TEST_CASE("SLOCC invariance on the GHZ orbit") {
    Rng rng(41);
    const QutritState ghz = named_state(NamedTag::ghz333);
    const InvariantSet base = fundamental_invariants(ghz);
    for (int t = 0; t < 20; ++t) {
        const Mat3 A = verify_detail::random_unimodular(rng);
        const Mat3 B = verify_detail::random_unimodular(rng);
        const Mat3 C = verify_detail::random_unimodular(rng);
        REQUIRE(std::abs(det3(A) - cx{1, 0}) < 1e-9);
        const InvariantSet s = fundamental_invariants(apply_slocc(ghz, A, B, C, true));
        REQUIRE(std::abs(s.i6 - base.i6) <= 1e-8 * std::max(std::abs(base.i6), max_abs_i6));
        REQUIRE(std::abs(s.i9 - base.i9) <= 1e-8 * std::max(std::abs(base.i9), max_abs_i9));
        REQUIRE(std::abs(s.i12 - base.i12) <= 1e-8 * std::max(std::abs(base.i12), max_abs_i12));
        REQUIRE(std::abs(s.delta333 - base.delta333) <=
                1e-8 * std::max(std::abs(base.delta333), max_abs_delta));
    }
}

TEST_CASE("the hyperdeterminant bound holds on matrix-path samples") {
    Rng rng(43);
    for (int t = 0; t < 2000; ++t) {
        const SemiSimpleCoeffs co = sample_semisimple(rng);
        REQUIRE(std::abs(hyperdet(semisimple_to_tensor(co))) <= max_abs_delta * (1.0 + 1e-6));
    }
}

TEST_CASE("adjoint data asset integrity") {
    VerifyOptions opt;
    opt.data_dir = QINV_DATA_DIR;
    SECTION("shipped asset passes") {
        const CheckResult res = check_adjoint_data(opt);
        INFO(res.detail);
        REQUIRE(res.pass);
    }
    SECTION("corrupted asset fails") {
        std::ifstream in(std::string(QINV_DATA_DIR) + "/adjoint_blocks.csv");
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        const auto pos = text.find("K21,0,0,");
        REQUIRE(pos != std::string::npos);
        text[pos + 8] = text[pos + 8] == '1' ? '2' : '1';  // flip a numerator digit
        const std::string dir =
            (std::filesystem::temp_directory_path() / "qinv_corrupt_data").string();
        std::filesystem::create_directories(dir);
        std::ofstream out(dir + "/adjoint_blocks.csv");
        out << text;
        out.close();
        VerifyOptions bad;
        bad.data_dir = dir;
        REQUIRE_FALSE(check_adjoint_data(bad).pass);
    }
}
