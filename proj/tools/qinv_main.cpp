// qinv: evaluate SLOCC invariants of 3-qutrit states, search for maximizers,
// sample random semi-simple states, export level-set grids, and run the
// verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse errors.
// stdout carries the payload; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qinv/io.hpp"
#include "qinv/verify.hpp"

#ifndef QINV_DATA_DIR
#define QINV_DATA_DIR "data"
#endif

namespace {

using namespace qinv;

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    return file;
}

std::optional<SemiSimpleCoeffs> parse_triple(const std::string& text) {
    SemiSimpleCoeffs co;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &co.a, &co.b, &co.c, &tail) != 3)
        return std::nullopt;
    return co;
}

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    int threads = 0;
};

int cmd_eval(const std::string& input_path, const std::string& semisimple, const std::string& path,
             const CommonOpts& common) {
    InvariantSet inv;
    if (!semisimple.empty()) {
        const auto co = parse_triple(semisimple);
        if (!co) {
            std::cerr << "error: --semisimple expects a,b,c\n";
            return 2;
        }
        inv = path == "closed" ? invariants_semisimple(*co)
                               : fundamental_invariants(semisimple_to_tensor(*co));
    } else {
        if (input_path.empty()) {
            std::cerr << "error: eval needs a state file or --semisimple a,b,c\n";
            return 2;
        }
        if (path == "closed") {
            std::cerr << "error: --path closed is only valid with --semisimple\n";
            return 2;
        }
        inv = fundamental_invariants(state_from_file(input_path));
    }
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    if (common.format == "csv")
        invariants_to_csv(inv, os);
    else
        os << invariants_to_json(inv).dump(2) << '\n';
    return 0;
}

int cmd_named(const std::string& tag, const CommonOpts& common) {
    const auto ns = parse_named_tag(tag);
    if (!ns) {
        std::cerr << "error: unknown state tag '" << tag << "'\nvalid tags: " << named_tag_list()
                  << '\n';
        return 2;
    }
    const QutritState state = named_state(*ns);
    const InvariantSet inv = fundamental_invariants(state);
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    if (common.format == "csv") {
        state_to_csv(state, os);
        os << '\n';
        invariants_to_csv(inv, os);
    } else {
        json out = state_to_json(state);
        out["tag"] = tag;
        out["invariants"] = invariants_to_json(inv);
        out["magnitudes"] = {{"absI6", std::abs(inv.i6)},
                             {"absI9", std::abs(inv.i9)},
                             {"absI12", std::abs(inv.i12)},
                             {"absDelta333", std::abs(inv.delta333)},
                             {"S_I", s_index(inv)}};
        os << out.dump(2) << '\n';
    }
    return 0;
}

int cmd_maximize(const std::string& objective_id, const OptConfig& cfg, bool verbose,
                 const CommonOpts& common) {
    const auto tag = parse_objective(objective_id);
    if (!tag) {
        std::cerr << "error: unknown objective '" << objective_id
                  << "' (use i6|i9|i12|delta|s_index)\n";
        return 2;
    }
    const OptResult result = maximize_abs(objective(*tag), cfg);
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    os << opt_result_to_json(result, verbose).dump(2) << '\n';
    return 0;
}

int cmd_sample(std::size_t samples, const std::string& objective_id, int bins, double upper,
               bool want_histogram, bool want_curve, const CommonOpts& common) {
    const auto table = sample_and_evaluate(samples, common.seed, common.threads);
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    if (!want_histogram && !want_curve) {
        if (common.format == "csv")
            samples_to_csv(table, os, common.seed);
        else
            os << samples_to_json(table, common.seed).dump() << '\n';
        return 0;
    }
    const auto tag = parse_objective(objective_id);
    if (!tag) {
        std::cerr << "error: --histogram/--curve need --objective i6|i9|i12|delta|s_index\n";
        return 2;
    }
    auto values = column(table, *tag);
    if (want_curve) {
        const auto curve = sorted_curve(values);
        if (common.format == "csv") {
            os << "# seed=" << common.seed << '\n';
            curve_to_csv(curve, os);
        } else {
            os << json{{"seed", common.seed},
                       {"objective", objective_name(*tag)},
                       {"sorted_values", curve}}
                      .dump()
               << '\n';
        }
        return 0;
    }
    if (upper <= 0.0) upper = objective(*tag).scale();
    const Histogram h = histogram(values, bins, upper, objective_name(*tag));
    if (common.format == "csv") {
        os << "# seed=" << common.seed << '\n';
        histogram_to_csv(h, os);
    } else {
        json out = histogram_to_json(h);
        out["seed"] = common.seed;
        os << out.dump(2) << '\n';
    }
    return 0;
}

int cmd_grid(const std::string& objective_id, int n_theta, int n_phi, const CommonOpts& common) {
    const auto tag = parse_objective(objective_id);
    if (!tag) {
        std::cerr << "error: unknown objective '" << objective_id
                  << "' (use i6|i9|i12|delta|s_index)\n";
        return 2;
    }
    const SphereGrid grid = sphere_grid(*tag, n_theta, n_phi);
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    if (common.format == "csv") {
        grid_to_csv(grid, os);
    } else {
        os << json{{"objective", grid.objective_tag},
                   {"n_theta", grid.n_theta},
                   {"n_phi", grid.n_phi},
                   {"thetas", grid.thetas},
                   {"phis", grid.phis},
                   {"values", grid.values}}
                  .dump()
           << '\n';
    }
    return 0;
}

int cmd_verify(const VerifyOptions& opt, const CommonOpts& common) {
    const auto results = run_verification(opt);
    std::ofstream file;
    std::ostream& os = open_output(file, common.out_path);
    if (common.format == "json") {
        json arr = json::array();
        for (const CheckResult& r : results)
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"status", r.skipped ? "skip" : (r.pass ? "pass" : "fail")},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        os << json{{"seed", opt.seed}, {"checks", arr}, {"all_passed", all_passed(results)}}.dump(2)
           << '\n';
    } else {
        print_report(results, os);
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC invariants (I6, I9, I12, Delta333) of 3-qutrit states"};
    app.require_subcommand(1);
    CommonOpts common;

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate invariants of a state");
    std::string eval_input, eval_semisimple, eval_path = "matrix";
    eval->add_option("input", eval_input, "state file (JSON or CSV)");
    eval->add_option("--semisimple", eval_semisimple, "coefficients a,b,c instead of a file");
    eval->add_option("--path", eval_path, "evaluation path")
        ->check(CLI::IsMember({"matrix", "closed"}));
    eval->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
    eval->add_option("--out", common.out_path, "write payload to a file instead of stdout");

    // named
    auto* named = app.add_subcommand("named", "print a named state and its invariants");
    std::string named_tag;
    named->add_option("tag", named_tag, "state tag")->required();
    named->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
    named->add_option("--out", common.out_path);

    // maximize
    auto* maximize = app.add_subcommand("maximize", "multi-start maximization of |objective|");
    std::string max_objective = "delta";
    OptConfig cfg;
    bool verbose = false;
    maximize->add_option("--objective", max_objective, "i6|i9|i12|delta|s_index");
    maximize->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber);
    maximize->add_option("--iters", cfg.max_iters)->check(CLI::PositiveNumber);
    maximize->add_option("--step", cfg.step)->check(CLI::PositiveNumber);
    maximize->add_option("--tol-grad", cfg.tol_grad)->check(CLI::PositiveNumber);
    maximize->add_option("--seed", cfg.rng_seed);
    maximize->add_option("--threads", cfg.threads);
    maximize->add_flag("--verbose", verbose, "include the full restart trace");
    maximize->add_option("--out", common.out_path);

    // sample
    auto* sample = app.add_subcommand("sample", "random semi-simple states and their invariants");
    std::size_t n_samples = 20000;
    std::string sample_objective;
    int bins = 100;
    double upper = 0.0;
    bool want_histogram = false, want_curve = false;
    sample->add_option("--samples", n_samples)->check(CLI::PositiveNumber);
    sample->add_option("--objective", sample_objective, "column for --histogram/--curve");
    sample->add_option("--bins", bins)->check(CLI::Range(2, 1000000));
    sample->add_option("--upper", upper, "histogram upper edge (default: objective maximum)");
    sample->add_flag("--histogram", want_histogram, "emit a histogram instead of the table");
    sample->add_flag("--curve", want_curve, "emit the ascending sorted curve");
    sample->add_option("--seed", common.seed);
    sample->add_option("--threads", common.threads);
    sample->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
    sample->add_option("--out", common.out_path);

    // grid
    auto* grid = app.add_subcommand("grid", "signed objective values on the coefficient sphere");
    std::string grid_objective = "delta";
    int n_theta = 101, n_phi = 200;
    grid->add_option("--objective", grid_objective, "i6|i9|i12|delta|s_index");
    grid->add_option("--ntheta", n_theta)->check(CLI::Range(2, 100000));
    grid->add_option("--nphi", n_phi)->check(CLI::Range(2, 100000));
    grid->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
    grid->add_option("--out", common.out_path);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    VerifyOptions vopt;
    vopt.data_dir = QINV_DATA_DIR;
    std::string verify_format = "text";
    verify->add_flag("--quick", vopt.quick, "skip the 500k sampling-statistics checks");
    verify->add_option("--threads", vopt.threads);
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--data", vopt.data_dir, "directory holding adjoint_blocks.csv");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_input, eval_semisimple, eval_path, common);
        if (named->parsed()) return cmd_named(named_tag, common);
        if (maximize->parsed()) return cmd_maximize(max_objective, cfg, verbose, common);
        if (sample->parsed())
            return cmd_sample(n_samples, sample_objective, bins, upper, want_histogram, want_curve,
                              common);
        if (grid->parsed()) return cmd_grid(grid_objective, n_theta, n_phi, common);
        if (verify->parsed()) {
            common.format = verify_format;
            return cmd_verify(vopt, common);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
