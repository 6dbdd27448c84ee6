#pragma once

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "swarmbench/algorithms.hpp"
#include "swarmbench/benchfns.hpp"
#include "swarmbench/combinatorial.hpp"
#include "swarmbench/record_io.hpp"
#include "swarmbench/stats.hpp"

namespace swarmbench {

struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgorithmEntry {
    std::string label;
    std::optional<AlgorithmConfig> continuous;
    std::optional<AcoConfig> aco;
};

struct ExperimentConfig {
    std::optional<std::string> function;  // benchmark name
    Eigen::Index dimension = 0;
    std::optional<std::string> tsp_path;
    std::uint64_t max_evaluations = 0;
    std::optional<double> target_accuracy;
    std::size_t seed_count = 1;
    std::uint64_t base_seed = 1;
    std::vector<AlgorithmEntry> algorithms;
    std::string raw;  // config file bytes, hashed into the manifest
};

namespace detail {

template <typename T>
T field(const nlohmann::json& j, const char* key, T fallback) {
    if (auto it = j.find(key); it != j.end()) return it->get<T>();
    return fallback;
}

inline AlgorithmConfig parse_continuous(const nlohmann::json& j,
                                        const std::string& id) {
    if (id == PsoConfig::id) {
        PsoConfig c;
        c.alpha = field(j, "alpha", c.alpha);
        c.beta = field(j, "beta", c.beta);
        c.inertia = field(j, "inertia", c.inertia);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == ApsoConfig::id) {
        ApsoConfig c;
        c.beta0 = field(j, "beta0", c.beta0);
        c.alpha_rand = field(j, "alpha", c.alpha_rand);
        c.alpha_decay = field(j, "alpha_decay", c.alpha_decay);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == DeConfig::id) {
        DeConfig c;
        c.F = field(j, "F", c.F);
        c.C_r = field(j, "C_r", c.C_r);
        const std::string scheme = field<std::string>(j, "scheme", "binomial");
        if (scheme == "binomial")
            c.scheme = CrossoverScheme::binomial;
        else if (scheme == "exponential")
            c.scheme = CrossoverScheme::exponential;
        else
            throw InvalidConfig("scheme", "scheme must be binomial or exponential");
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == FaConfig::id) {
        FaConfig c;
        c.beta0 = field(j, "beta0", c.beta0);
        c.gamma = field(j, "gamma", c.gamma);
        c.alpha_rand = field(j, "alpha", c.alpha_rand);
        c.alpha_decay = field(j, "alpha_decay", c.alpha_decay);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == CsConfig::id) {
        CsConfig c;
        c.p_a = field(j, "p_a", c.p_a);
        c.alpha = field(j, "alpha", c.alpha);
        c.s = field(j, "s", c.s);
        c.lambda = field(j, "lambda", c.lambda);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == BaConfig::id) {
        BaConfig c;
        c.f_min = field(j, "f_min", c.f_min);
        c.f_max = field(j, "f_max", c.f_max);
        c.alpha_loud = field(j, "alpha_loud", c.alpha_loud);
        c.gamma_pulse = field(j, "gamma_pulse", c.gamma_pulse);
        c.loudness0 = field(j, "loudness0", c.loudness0);
        c.pulse0 = field(j, "pulse0", c.pulse0);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == SaConfig::id) {
        SaConfig c;
        c.alpha_rand = field(j, "alpha", c.alpha_rand);
        c.cooling = field(j, "cooling", c.cooling);
        c.scale_decay = field(j, "scale_decay", c.scale_decay);
        c.n = field(j, "n", c.n);
        return c;
    }
    if (id == PatternSearchConfig::id) {
        PatternSearchConfig c;
        c.init_step_fraction = field(j, "init_step_fraction", c.init_step_fraction);
        return c;
    }
    if (id == AbcConfig::id) {
        AbcConfig c;
        c.n = field(j, "n", c.n);
        c.limit = field(j, "limit", c.limit);
        return c;
    }
    throw ConfigParseError("unknown algorithm id: " + id);
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.raw = text;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigParseError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        const auto& problem = j.at("problem");
        if (problem.contains("tsp")) {
            cfg.tsp_path = problem.at("tsp").get<std::string>();
        } else {
            cfg.function = problem.at("function").get<std::string>();
            cfg.dimension = problem.at("dimension").get<Eigen::Index>();
        }
        cfg.max_evaluations = j.at("budget").at("max_evaluations").get<std::uint64_t>();
        if (j.at("budget").contains("target_accuracy") &&
            !j.at("budget").at("target_accuracy").is_null())
            cfg.target_accuracy = j.at("budget").at("target_accuracy").get<double>();
        cfg.seed_count = j.at("seeds").at("count").get<std::size_t>();
        cfg.base_seed = j.at("seeds").at("base").get<std::uint64_t>();
        if (cfg.seed_count < 1) throw ConfigParseError("seeds.count must be >= 1");
        const auto& algs = j.at("algorithms");
        if (!algs.is_array() || algs.empty())
            throw ConfigParseError("algorithms must be a nonempty array");
        for (const auto& a : algs) {
            AlgorithmEntry entry;
            const std::string id = a.at("id").get<std::string>();
            entry.label = detail::field<std::string>(a, "name", id);
            if (id == "aco") {
                AcoConfig c;
                c.alpha = detail::field(a, "alpha", c.alpha);
                c.beta = detail::field(a, "beta", c.beta);
                c.evaporation = detail::field(a, "evaporation", c.evaporation);
                c.deposit = detail::field(a, "deposit", c.deposit);
                c.ants = detail::field(a, "ants", c.ants);
                entry.aco = c;
            } else {
                entry.continuous = detail::parse_continuous(a, id);
            }
            cfg.algorithms.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigParseError(std::string("config field missing or mistyped: ") + e.what());
    }
    if (cfg.tsp_path) {
        for (const auto& a : cfg.algorithms)
            if (!a.aco)
                throw ConfigParseError("TSP problems support only the aco algorithm");
    } else {
        for (const auto& a : cfg.algorithms)
            if (a.aco)
                throw ConfigParseError("aco requires a TSP problem");
    }
    // SWARMBENCH_SEED overrides the base seed from the config.
    if (const char* env = std::getenv("SWARMBENCH_SEED"))
        cfg.base_seed = std::strtoull(env, nullptr, 10);
    return cfg;
}

inline std::string record_filename(const std::string& label, std::uint64_t seed) {
    return label + "_seed" + std::to_string(seed) + ".json";
}

/// Executes the full (algorithm x seed) grid, writes one RunRecord JSON per
/// run plus a manifest with content hashes. Deterministic in the config
/// bytes regardless of the worker count.
inline void run_experiment(const ExperimentConfig& cfg,
                           const std::filesystem::path& out_dir,
                           unsigned jobs = 1) {
    for (const auto& entry : cfg.algorithms) {
        if (entry.continuous) {
            const Problem problem = benchfns::make(*cfg.function, cfg.dimension);
            validate(*entry.continuous, problem);
        } else {
            entry.aco->validate();
        }
    }
    std::filesystem::create_directories(out_dir);

    struct Task {
        std::size_t alg;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
        for (std::size_t s = 0; s < cfg.seed_count; ++s)
            tasks.push_back({a, cfg.base_seed + s});

    std::vector<std::string> serialized(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto& entry = cfg.algorithms[tasks[t].alg];
            RunRecord record;
            if (entry.continuous) {
                const Problem problem =
                    benchfns::make(*cfg.function, cfg.dimension);
                Budget budget{cfg.max_evaluations, 0, cfg.target_accuracy};
                record = run(*entry.continuous, problem, budget, tasks[t].seed);
            } else {
                RouteGraph graph = load_tsp(*cfg.tsp_path);
                record = aco_optimize(graph, *entry.aco, cfg.max_evaluations,
                                      tasks[t].seed)
                             .record;
            }
            record.algorithm = entry.label;
            serialized[t] = to_json(record).dump(2) + "\n";
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    nlohmann::ordered_json manifest;
    manifest["config_hash"] = content_hash(cfg.raw);
    manifest["max_evaluations"] = cfg.max_evaluations;
    if (cfg.target_accuracy)
        manifest["target_accuracy"] = *cfg.target_accuracy;
    else
        manifest["target_accuracy"] = nullptr;
    auto records = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto& entry = cfg.algorithms[tasks[t].alg];
        const std::string name = record_filename(entry.label, tasks[t].seed);
        write_file_atomic(out_dir / name, serialized[t]);
        records.push_back({{"file", name},
                           {"algorithm", entry.label},
                           {"seed", tasks[t].seed},
                           {"hash", content_hash(serialized[t])}});
    }
    manifest["records"] = std::move(records);
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

struct ManifestMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedRuns {
    std::uint64_t max_evaluations = 0;
    std::optional<double> target_accuracy;
    std::map<std::string, std::vector<RunRecord>> by_algorithm;
};

/// Loads a run directory, refusing to proceed on any content-hash mismatch.
inline LoadedRuns load_runs(const std::filesystem::path& dir) {
    const auto manifest_path = dir / "manifest.json";
    const nlohmann::json manifest = nlohmann::json::parse(read_file(manifest_path));
    LoadedRuns out;
    out.max_evaluations = manifest.at("max_evaluations").get<std::uint64_t>();
    if (!manifest.at("target_accuracy").is_null())
        out.target_accuracy = manifest.at("target_accuracy").get<double>();
    for (const auto& entry : manifest.at("records")) {
        const std::string file = entry.at("file").get<std::string>();
        const std::string data = read_file(dir / file);
        if (content_hash(data) != entry.at("hash").get<std::string>())
            throw ManifestMismatch("content hash mismatch for " + file);
        out.by_algorithm[entry.at("algorithm").get<std::string>()].push_back(
            record_from_json(nlohmann::json::parse(data)));
    }
    return out;
}

inline stats::ComparisonReport compare_runs(const LoadedRuns& runs,
                                            const std::string& alg_a,
                                            const std::string& alg_b,
                                            stats::MeasureKind kind) {
    auto records_of = [&](const std::string& name) -> const std::vector<RunRecord>& {
        auto it = runs.by_algorithm.find(name);
        if (it == runs.by_algorithm.end())
            throw std::runtime_error("no records for algorithm: " + name);
        return it->second;
    };
    const auto& ra = records_of(alg_a);
    const auto& rb = records_of(alg_b);
    if (kind == stats::MeasureKind::fixed_budget) {
        std::vector<double> va, vb;
        for (const auto& r : ra) va.push_back(r.final_best_value);
        for (const auto& r : rb) vb.push_back(r.final_best_value);
        return stats::compare_fixed_budget(stats::summarize(va),
                                           stats::summarize(vb));
    }
    if (!runs.target_accuracy)
        throw std::runtime_error(
            "fixed-accuracy comparison requires target_accuracy to be set "
            "when the runs are produced (budget.target_accuracy in the run config)");
    std::vector<double> ca, cb;
    std::size_t fa = 0, fb = 0;
    for (const auto& r : ra) {
        if (r.evaluations_to_accuracy)
            ca.push_back(static_cast<double>(*r.evaluations_to_accuracy));
        else
            ++fa;
    }
    for (const auto& r : rb) {
        if (r.evaluations_to_accuracy)
            cb.push_back(static_cast<double>(*r.evaluations_to_accuracy));
        else
            ++fb;
    }
    return stats::compare_fixed_accuracy(ca, cb, fa, fb);
}

/// Plain-text report in the mu +/- sigma convention, with the ratio line
/// and its pitfall warning.
inline std::string render_report(const stats::ComparisonReport& report,
                                 const std::string& alg_a,
                                 const std::string& alg_b) {
    std::string text;
    text += "measure: " + stats::to_string(report.kind) + "\n";
    text += alg_a + ": " + stats::format_mean_std(report.a.mean, report.a.std) +
            " (n=" + std::to_string(report.a.n) + ")\n";
    text += alg_b + ": " + stats::format_mean_std(report.b.mean, report.b.std) +
            " (n=" + std::to_string(report.b.n) + ")\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "p_value: %.4g\n", report.p_value);
    text += buf;
    text += "verdict: " + stats::to_string(report.verdict) +
            (report.marginal ? " (marginal)" : "") + "\n";
    text += "note: " + report.note + "\n";
    if (report.b.mean != 0.0 && report.a.n > 0 && report.b.n > 0) {
        const auto [ratio, sigma] = stats::ratio_uncertainty(report.a, report.b);
        std::snprintf(buf, sizeof(buf), "ratio %s/%s: %.2f ± %.4g",
                      alg_a.c_str(), alg_b.c_str(), ratio, sigma);
        text += buf;
        text += std::string("  [") + stats::kRatioWarning + "]\n";
    }
    return text;
}

/// CSV of mean/std best-so-far per algorithm at the union of recorded
/// checkpoints, with step interpolation between a record's points.
inline std::string curve_csv(const LoadedRuns& runs,
                             const std::vector<std::string>& algorithms) {
    std::set<std::uint64_t> checkpoints;
    for (const auto& name : algorithms) {
        auto it = runs.by_algorithm.find(name);
        if (it == runs.by_algorithm.end())
            throw std::runtime_error("no records for algorithm: " + name);
        for (const auto& r : it->second)
            for (const auto& [evals, best] : r.curve) checkpoints.insert(evals);
    }
    std::string csv = "evals";
    for (const auto& name : algorithms)
        csv += "," + name + "_mean_best," + name + "_std_best";
    csv += "\n";
    for (const std::uint64_t cp : checkpoints) {
        std::string row = std::to_string(cp);
        for (const auto& name : algorithms) {
            const auto& records = runs.by_algorithm.at(name);
            std::vector<double> vals;
            for (const auto& r : records) {
                double best = std::numeric_limits<double>::quiet_NaN();
                for (const auto& [evals, value] : r.curve) {
                    if (evals > cp) break;
                    best = value;
                }
                if (!std::isnan(best)) vals.push_back(best);
            }
            if (vals.empty()) {
                row += ",,";
            } else {
                double mean = 0;
                for (double v : vals) mean += v;
                mean /= static_cast<double>(vals.size());
                double sd = 0;
                if (vals.size() > 1) {
                    double ss = 0;
                    for (double v : vals) ss += (v - mean) * (v - mean);
                    sd = std::sqrt(ss / static_cast<double>(vals.size() - 1));
                }
                char buf[64];
                std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", mean, sd);
                row += buf;
            }
        }
        csv += row + "\n";
    }
    return csv;
}

}  // namespace swarmbench
