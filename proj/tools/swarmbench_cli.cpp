#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "swarmbench/experiment.hpp"

namespace {

int do_run(const std::string& config_path, const std::string& out_dir,
           unsigned jobs) {
    swarmbench::ExperimentConfig cfg;
    try {
        cfg = swarmbench::parse_experiment_config(
            swarmbench::read_file(config_path));
    } catch (const swarmbench::ConfigParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    try {
        swarmbench::run_experiment(cfg, out_dir, jobs);
    } catch (const swarmbench::InvalidConfig& e) {
        std::cerr << "invalid algorithm parameter '" << e.field
                  << "': " << e.what() << "\n";
        return 3;
    }
    std::cout << "wrote " << cfg.algorithms.size() * cfg.seed_count
              << " run records to " << out_dir << "\n";
    return 0;
}

int do_compare(const std::string& dir, const std::string& alg_a,
               const std::string& alg_b, const std::string& measure) {
    const auto kind = measure == "accuracy"
                          ? swarmbench::stats::MeasureKind::fixed_accuracy
                          : swarmbench::stats::MeasureKind::fixed_budget;
    const auto runs = swarmbench::load_runs(dir);
    const auto report = swarmbench::compare_runs(runs, alg_a, alg_b, kind);
    const std::string text = swarmbench::render_report(report, alg_a, alg_b);
    std::cout << text;
    const auto out = std::filesystem::path(dir) /
                     ("compare_" + alg_a + "_" + alg_b + "_" + measure + ".json");
    swarmbench::write_file_atomic(out,
                                  swarmbench::to_json(report).dump(2) + "\n");
    return 0;
}

int do_curve(const std::string& dir, const std::vector<std::string>& algorithms,
             const std::string& out_file) {
    const auto runs = swarmbench::load_runs(dir);
    std::vector<std::string> names = algorithms;
    if (names.empty())
        for (const auto& [name, _] : runs.by_algorithm) names.push_back(name);
    const std::string csv = swarmbench::curve_csv(runs, names);
    if (out_file.empty()) {
        std::cout << csv;
    } else {
        swarmbench::write_file_atomic(out_file, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmbench: swarm-intelligence optimizers and a statistical "
                 "benchmark harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "runs", run_dir, measure = "budget";
    std::string alg_a, alg_b, curve_out;
    std::vector<std::string> curve_algs;
    unsigned jobs = 1;

    auto* cmd_run = app.add_subcommand("run", "execute an experiment grid");
    cmd_run->add_option("--config", config_path, "experiment config file")
        ->required();
    cmd_run->add_option("--out", out_dir, "output directory");
    cmd_run->add_option("--jobs", jobs, "parallel workers across seeds");

    auto* cmd_compare =
        app.add_subcommand("compare", "compare two algorithms from a run directory");
    cmd_compare->add_option("--out", run_dir, "run directory")->required();
    cmd_compare->add_option("a", alg_a, "first algorithm")->required();
    cmd_compare->add_option("b", alg_b, "second algorithm")->required();
    cmd_compare->add_option("--measure", measure, "budget or accuracy")
        ->check(CLI::IsMember({"budget", "accuracy"}));

    auto* cmd_curve =
        app.add_subcommand("curve", "emit mean/std convergence curves as CSV");
    cmd_curve->add_option("--out", run_dir, "run directory")->required();
    cmd_curve->add_option("algorithms", curve_algs, "algorithms to include");
    cmd_curve->add_option("--csv", curve_out, "CSV output file (default stdout)");

    auto* cmd_list_fns =
        app.add_subcommand("list-functions", "print the benchmark functions");
    auto* cmd_list_algs =
        app.add_subcommand("list-algorithms", "print the available algorithms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) return do_run(config_path, out_dir, jobs);
        if (cmd_compare->parsed())
            return do_compare(run_dir, alg_a, alg_b, measure);
        if (cmd_curve->parsed()) return do_curve(run_dir, curve_algs, curve_out);
        if (cmd_list_fns->parsed()) {
            for (const auto& fn : swarmbench::benchfns::catalog())
                std::printf("%-12s bounds [%g, %g]^d  optimum 0 at %s\n",
                            fn.name.c_str(), fn.lower, fn.upper,
                            fn.optimum_location.c_str());
            return 0;
        }
        if (cmd_list_algs->parsed()) {
            for (const auto& id : swarmbench::algorithm_ids())
                std::printf("%s\n", id.c_str());
            std::printf("aco (TSP instances only)\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
