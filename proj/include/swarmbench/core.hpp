#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swarmbench/rng.hpp"

namespace swarmbench {

using Vector = Eigen::VectorXd;

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

struct InvalidConfig : std::runtime_error {
    InvalidConfig(std::string field_name, const std::string& what)
        : std::runtime_error(what), field(std::move(field_name)) {}
    std::string field;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Box-constrained minimization problem: f, bounds, dimension.
struct Problem {
    Eigen::Index dimension;
    Vector lower;
    Vector upper;
    std::function<double(const Vector&)> objective;
    std::optional<double> known_optimum;
    std::string name;

    void check() const {
        if (dimension <= 0) throw InvalidConfig("dimension", "dimension must be positive");
        if (lower.size() != dimension || upper.size() != dimension)
            throw InvalidConfig("bounds", "bound vectors must have length d");
        for (Eigen::Index i = 0; i < dimension; ++i)
            if (!(lower[i] < upper[i]))
                throw InvalidConfig("bounds", "lower[i] < upper[i] required");
    }
};

/// Componentwise projection into the problem box. Idempotent.
inline Vector clamp(const Vector& x, const Problem& problem) {
    return x.cwiseMax(problem.lower).cwiseMin(problem.upper);
}

/// One population member. `fitness` caches objective(position) from the
/// evaluation that produced it; NaN means not yet evaluated.
struct Agent {
    Vector position;
    Vector velocity;  // empty unless the algorithm uses one
    double fitness = std::numeric_limits<double>::quiet_NaN();

    bool evaluated() const { return !std::isnan(fitness); }
};

/// Evaluation budget; the sole stopping criterion for every run.
struct Budget {
    std::uint64_t max_evaluations;
    std::uint64_t used = 0;
    std::optional<double> target_accuracy;

    bool exhausted() const { return used >= max_evaluations; }
};

/// Counts one objective call against the budget, caches the fitness.
inline double evaluate(const Problem& problem, Agent& agent, Budget& budget) {
    if (budget.exhausted()) throw BudgetExhausted();
    agent.fitness = problem.objective(agent.position);
    ++budget.used;
    return agent.fitness;
}

/// Trace of one independent run: best-so-far curve plus final state.
struct RunRecord {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::uint64_t, double>> curve;  // (evals, best)
    double final_best_value = std::numeric_limits<double>::infinity();
    Vector final_best_position;
    std::optional<std::uint64_t> evaluations_to_accuracy;
    double wall_time_seconds = 0;  // informational only, never serialized
};

/// Observes every evaluation of a run and maintains the monotone
/// best-so-far curve outside the algorithm's own dynamics.
class Recorder {
public:
    Recorder(RunRecord& record, Budget& budget) : record_(record), budget_(budget) {}

    double evaluate(const Problem& problem, Agent& agent) {
        const double f = swarmbench::evaluate(problem, agent, budget_);
        observe(agent.position, f);
        return f;
    }

    void observe(const Vector& position, double value) {
        if (value < record_.final_best_value) {
            record_.final_best_value = value;
            record_.final_best_position = position;
            append_point(value);
            if (budget_.target_accuracy && !record_.evaluations_to_accuracy &&
                value <= *budget_.target_accuracy) {
                record_.evaluations_to_accuracy = budget_.used;
            }
        }
    }

    /// Extra curve point at a sweep boundary; keeps the curve dense enough
    /// for cross-seed aggregation at shared checkpoints.
    void mark_sweep() { append_point(record_.final_best_value); }

    double best() const { return record_.final_best_value; }
    const Vector& best_position() const { return record_.final_best_position; }
    Budget& budget() { return budget_; }

private:
    void append_point(double value) {
        if (!record_.curve.empty() && record_.curve.back().first == budget_.used) {
            record_.curve.back().second = value;
            return;
        }
        record_.curve.emplace_back(budget_.used, value);
    }

    RunRecord& record_;
    Budget& budget_;
};

/// Uniform initial population inside the problem box.
inline std::vector<Agent> init_population(const Problem& problem, std::size_t n,
                                          RngStream& rng) {
    std::vector<Agent> pop(n);
    for (auto& agent : pop) {
        agent.position.resize(problem.dimension);
        for (Eigen::Index i = 0; i < problem.dimension; ++i)
            agent.position[i] = rng.uniform(problem.lower[i], problem.upper[i]);
    }
    return pop;
}

}  // namespace swarmbench
