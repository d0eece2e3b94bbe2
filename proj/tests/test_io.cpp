#include <catch2/catch.hpp>

#include <sstream>

#include "qinv/io.hpp"
#include "test_support.hpp"

using namespace qinv;
using qinv::test::max_amp_diff;

namespace {
QutritState random_state(Rng& rng) {
    QutritState s;
    for (int t = 0; t < 27; ++t) s.a[t] = cx{rng.uniform_pm1(), rng.uniform_pm1()};
    return s.normalized();
}
}  // namespace

TEST_CASE("state serialization round trips") {
    Rng rng(71);
    for (int t = 0; t < 5; ++t) {
        const QutritState s = random_state(rng);
        SECTION("json " + std::to_string(t)) {
            const QutritState back = state_from_json(state_to_json(s));
            REQUIRE(max_amp_diff(s, back) == 0.0);
        }
        SECTION("csv " + std::to_string(t)) {
            std::stringstream ss;
            state_to_csv(s, ss);
            const QutritState back = state_from_csv(ss);
            REQUIRE(max_amp_diff(s, back) == 0.0);
        }
    }
    SECTION("format detection") {
        const QutritState s = named_state(NamedTag::aharonov);
        std::stringstream js;
        js << state_to_json(s).dump();
        REQUIRE(max_amp_diff(state_from_stream(js), s) == 0.0);
        std::stringstream cs;
        state_to_csv(s, cs);
        REQUIRE(max_amp_diff(state_from_stream(cs), s) == 0.0);
    }
    SECTION("malformed input is rejected") {
        REQUIRE_THROWS_AS(state_from_json(json{{"amplitudes", json::array({1.0, 2.0})}}),
                          std::invalid_argument);
        std::stringstream bad("i,j,k,re,im\n0,0,0,1.0,0.0\n");
        REQUIRE_THROWS_AS(state_from_csv(bad), std::invalid_argument);
        std::stringstream dup;
        state_to_csv(named_state(NamedTag::w), dup);
        std::string text = dup.str() + "0,0,0,1.0,0.0\n";
        std::stringstream dup2(text);
        REQUIRE_THROWS_AS(state_from_csv(dup2), std::invalid_argument);
        REQUIRE_THROWS_AS(state_from_file("no_such_file.json"), std::invalid_argument);
    }
}

TEST_CASE("invariant set serialization") {
    const InvariantSet inv = fundamental_invariants(named_state(NamedTag::aharonov));
    SECTION("json carries all seven fields as [re, im]") {
        const json j = invariants_to_json(inv);
        for (const char* key : {"I6", "I9", "I12", "Delta333", "g6", "g9", "g12"}) {
            REQUIRE(j.contains(key));
            REQUIRE(j[key].is_array());
            REQUIRE(j[key].size() == 2);
        }
        REQUIRE(j["I6"][0].get<double>() == inv.i6.real());
    }
    SECTION("csv header and 17-digit round trip") {
        std::stringstream ss;
        invariants_to_csv(inv, ss);
        std::string header;
        std::getline(ss, header);
        REQUIRE(header ==
                "I6_re,I6_im,I9_re,I9_im,I12_re,I12_im,Delta333_re,Delta333_im,"
                "g6_re,g6_im,g9_re,g9_im,g12_re,g12_im");
        std::string row;
        std::getline(ss, row);
        double first = 0.0;
        REQUIRE(std::sscanf(row.c_str(), "%lf", &first) == 1);
        REQUIRE(first == inv.i6.real());  // %.17g round trips doubles
    }
}

TEST_CASE("sampling artifact writers") {
    const auto table = sample_and_evaluate(100, 5);
    SECTION("samples csv") {
        std::stringstream ss;
        samples_to_csv(table, ss, 5);
        std::string line;
        std::getline(ss, line);
        REQUIRE(line == "# seed=5");
        std::getline(ss, line);
        REQUIRE(line == "a,b,c,absI6,absI9,absI12,absDelta,S_I");
        int rows = 0;
        while (std::getline(ss, line))
            if (!line.empty()) ++rows;
        REQUIRE(rows == 100);
    }
    SECTION("histogram csv") {
        const Histogram h = histogram(column(table, ObjectiveTag::i6), 10, max_abs_i6, "i6");
        std::stringstream ss;
        histogram_to_csv(h, ss);
        std::string line;
        std::getline(ss, line);
        REQUIRE(line == "bin_lo,bin_hi,count");
        int rows = 0;
        std::uint64_t total = 0;
        double lo, hi;
        std::uint64_t count;
        while (std::getline(ss, line)) {
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lu", &lo, &hi, &count) == 3);
            total += count;
            ++rows;
        }
        REQUIRE(rows == 10);
        REQUIRE(total == 100);
    }
    SECTION("curve csv is rank,value") {
        const auto curve = sorted_curve(column(table, ObjectiveTag::i9));
        std::stringstream ss;
        curve_to_csv(curve, ss);
        std::string line;
        std::getline(ss, line);
        REQUIRE(line == "rank,value");
        std::getline(ss, line);
        REQUIRE(line.rfind("0,", 0) == 0);
    }
    SECTION("grid csv has one row per grid point") {
        const SphereGrid g = sphere_grid(ObjectiveTag::i12, 5, 6);
        std::stringstream ss;
        grid_to_csv(g, ss);
        int rows = -1;  // header
        std::string line;
        while (std::getline(ss, line))
            if (!line.empty()) ++rows;
        REQUIRE(rows == 30);
    }
}

TEST_CASE("optimizer result serialization is deterministic") {
    OptConfig cfg;
    cfg.restarts = 8;
    cfg.rng_seed = 12;
    const OptResult r1 = maximize_abs(objective(ObjectiveTag::i12), cfg);
    const OptResult r2 = maximize_abs(objective(ObjectiveTag::i12), cfg);
    REQUIRE(opt_result_to_json(r1, true).dump() == opt_result_to_json(r2, true).dump());
    const json j = opt_result_to_json(r1, false);
    REQUIRE(j.contains("best_point"));
    REQUIRE(j.contains("best_value"));
    REQUIRE(j.contains("matched_known"));
    REQUIRE(j.contains("local_optima"));
    REQUIRE(j.contains("seed"));
    REQUIRE_FALSE(j.contains("restart_trace"));
    REQUIRE(opt_result_to_json(r1, true).contains("restart_trace"));
}
