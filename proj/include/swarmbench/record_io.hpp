#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "swarmbench/core.hpp"
#include "swarmbench/stats.hpp"

namespace swarmbench {

inline nlohmann::ordered_json to_json(const RunRecord& record) {
    nlohmann::ordered_json j;
    j["algorithm"] = record.algorithm;
    j["seed"] = record.seed;
    auto curve = nlohmann::ordered_json::array();
    for (const auto& [evals, best] : record.curve)
        curve.push_back({evals, best});
    j["curve"] = std::move(curve);
    j["final_best"] = record.final_best_value;
    auto pos = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < record.final_best_position.size(); ++i)
        pos.push_back(record.final_best_position[i]);
    j["final_best_position"] = std::move(pos);
    if (record.evaluations_to_accuracy)
        j["evals_to_accuracy"] = *record.evaluations_to_accuracy;
    else
        j["evals_to_accuracy"] = nullptr;
    return j;
}

inline RunRecord record_from_json(const nlohmann::json& j) {
    RunRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& point : j.at("curve"))
        r.curve.emplace_back(point.at(0).get<std::uint64_t>(),
                             point.at(1).get<double>());
    r.final_best_value = j.at("final_best").get<double>();
    const auto& pos = j.at("final_best_position");
    r.final_best_position.resize(static_cast<Eigen::Index>(pos.size()));
    for (std::size_t i = 0; i < pos.size(); ++i)
        r.final_best_position[static_cast<Eigen::Index>(i)] = pos[i].get<double>();
    if (!j.at("evals_to_accuracy").is_null())
        r.evaluations_to_accuracy = j.at("evals_to_accuracy").get<std::uint64_t>();
    return r;
}

inline nlohmann::ordered_json to_json(const stats::ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = stats::to_string(report.kind);
    j["a"] = {{"mean", report.a.mean}, {"std", report.a.std}, {"n", report.a.n}};
    j["b"] = {{"mean", report.b.mean}, {"std", report.b.std}, {"n", report.b.n}};
    j["verdict"] = stats::to_string(report.verdict);
    j["marginal"] = report.marginal;
    j["p_value"] = report.p_value;
    j["note"] = report.note;
    if (report.kind == stats::MeasureKind::fixed_accuracy) {
        j["failures_a"] = report.failures_a;
        j["failures_b"] = report.failures_b;
    }
    j["warning"] = stats::kRatioWarning;
    return j;
}

/// FNV-1a 64-bit content hash, printed as hex; used by the run manifest.
inline std::string content_hash(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325u;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3u;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

/// Atomic write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& data) {
    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << data;
    }
    std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace swarmbench
