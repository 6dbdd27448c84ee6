#pragma once

#include <Eigen/Core>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "swarmbench/core.hpp"
#include "swarmbench/operators.hpp"
#include "swarmbench/rng.hpp"

namespace swarmbench {

// ---------------------------------------------------------------------------
// Configs
// ---------------------------------------------------------------------------

struct PsoConfig {
    double alpha = 2.0;    // social acceleration
    double beta = 2.0;     // cognitive acceleration
    double inertia = 1.0;  // w; 1 reproduces the bare velocity recursion
    std::size_t n = 30;

    static constexpr const char* id = "pso";
    void validate(const Problem&) const {
        if (n < 2) throw InvalidConfig("n", "pso requires n >= 2");
        if (alpha < 0) throw InvalidConfig("alpha", "alpha must be >= 0");
        if (beta < 0) throw InvalidConfig("beta", "beta must be >= 0");
    }
};

struct ApsoConfig {
    double beta0 = 0.5;       // pull toward the current best
    double alpha_rand = 0.2;  // Gaussian step scale
    double alpha_decay = 0.97;  // per-sweep shrink of alpha_rand
    std::size_t n = 30;

    static constexpr const char* id = "apso";
    void validate(const Problem&) const {
        if (n < 1) throw InvalidConfig("n", "apso requires n >= 1");
        if (beta0 < 0) throw InvalidConfig("beta0", "beta0 must be >= 0");
        if (alpha_rand < 0) throw InvalidConfig("alpha", "alpha must be >= 0");
        if (!(alpha_decay > 0 && alpha_decay <= 1))
            throw InvalidConfig("alpha_decay", "alpha_decay must be in (0, 1]");
    }
};

struct DeConfig {
    double F = 0.5;
    double C_r = 0.9;
    CrossoverScheme scheme = CrossoverScheme::binomial;
    std::size_t n = 30;

    static constexpr const char* id = "de";
    void validate(const Problem&) const {
        if (!(F >= 0.0 && F <= 2.0))
            throw InvalidConfig("F", "F must be in [0, 2]");
        if (!(C_r >= 0.0 && C_r <= 1.0))
            throw InvalidConfig("C_r", "C_r must be in [0, 1]");
        if (n < 4) throw InvalidConfig("n", "de requires n >= 4 distinct indices");
    }
};

struct FaConfig {
    double beta0 = 1.0;       // attractiveness at r = 0
    double gamma = 0.01;      // absorption coefficient
    double alpha_rand = 0.2;  // randomization scale
    double alpha_decay = 0.97;
    std::size_t n = 25;

    static constexpr const char* id = "fa";
    void validate(const Problem&) const {
        if (n < 2) throw InvalidConfig("n", "fa requires n >= 2");
        if (beta0 < 0) throw InvalidConfig("beta0", "beta0 must be >= 0");
        if (gamma < 0) throw InvalidConfig("gamma", "gamma must be >= 0");
        if (alpha_rand < 0) throw InvalidConfig("alpha", "alpha must be >= 0");
        if (!(alpha_decay > 0 && alpha_decay <= 1))
            throw InvalidConfig("alpha_decay", "alpha_decay must be in (0, 1]");
    }
};

struct CsConfig {
    double p_a = 0.25;    // switching probability
    double alpha = 0.01;  // step size scaling factor
    double s = 1.0;       // local step size
    double lambda = 1.5;  // Levy tail index
    std::size_t n = 25;

    static constexpr const char* id = "cs";
    void validate(const Problem&) const {
        if (!(p_a >= 0.0 && p_a <= 1.0))
            throw InvalidConfig("p_a", "p_a must be in [0, 1]");
        if (!(alpha > 0)) throw InvalidConfig("alpha", "alpha must be > 0");
        if (!(s > 0)) throw InvalidConfig("s", "s must be > 0");
        if (!(lambda > 0 && lambda <= 2))
            throw InvalidConfig("lambda", "lambda must be in (0, 2]");
        if (n < 3) throw InvalidConfig("n", "cs requires n >= 3 for distinct j, k");
    }
};

struct BaConfig {
    double f_min = 0.0;
    double f_max = 2.0;
    double alpha_loud = 0.9;   // loudness decay, cooling-schedule-like
    double gamma_pulse = 0.1;  // pulse-rate growth constant
    double loudness0 = 1.0;
    double pulse0 = 0.5;
    std::size_t n = 30;

    static constexpr const char* id = "ba";
    void validate(const Problem&) const {
        if (!(f_min <= f_max))
            throw InvalidConfig("f_min", "f_min must be <= f_max");
        if (!(alpha_loud > 0 && alpha_loud < 1))
            throw InvalidConfig("alpha_loud", "alpha_loud must be in (0, 1)");
        if (!(gamma_pulse > 0))
            throw InvalidConfig("gamma_pulse", "gamma_pulse must be > 0");
        if (!(pulse0 >= 0 && pulse0 <= 1))
            throw InvalidConfig("pulse0", "pulse0 must be in [0, 1]");
        if (n < 1) throw InvalidConfig("n", "ba requires n >= 1");
    }
};

struct SaConfig {
    double alpha_rand = 0.3;   // Gaussian proposal scale
    double cooling = 0.95;     // geometric temperature factor per sweep
    double scale_decay = 0.9995;  // per-sweep shrink of the proposal scale
    std::size_t n = 10;  // initial sample used to set the temperature scale

    static constexpr const char* id = "sa";
    void validate(const Problem&) const {
        if (!(alpha_rand > 0)) throw InvalidConfig("alpha", "alpha must be > 0");
        if (!(cooling > 0 && cooling < 1))
            throw InvalidConfig("cooling", "cooling must be in (0, 1)");
        if (!(scale_decay > 0 && scale_decay <= 1))
            throw InvalidConfig("scale_decay", "scale_decay must be in (0, 1]");
        if (n < 2) throw InvalidConfig("n", "sa requires n >= 2 initial samples");
    }
};

struct PatternSearchConfig {
    double init_step_fraction = 0.25;  // of the box width, per dimension

    static constexpr const char* id = "pattern_search";
    void validate(const Problem&) const {
        if (!(init_step_fraction > 0))
            throw InvalidConfig("init_step_fraction",
                                "init_step_fraction must be > 0");
    }
};

struct AbcConfig {
    std::size_t n = 30;
    std::size_t limit = 0;  // 0 = use n * d

    static constexpr const char* id = "abc";
    void validate(const Problem&) const {
        if (n < 2) throw InvalidConfig("n", "abc requires n >= 2");
    }
};

using AlgorithmConfig =
    std::variant<PsoConfig, ApsoConfig, DeConfig, FaConfig, CsConfig, BaConfig,
                 SaConfig, PatternSearchConfig, AbcConfig>;

inline std::string algorithm_name(const AlgorithmConfig& config) {
    return std::visit([](const auto& c) { return std::string(c.id); }, config);
}

inline void validate(const AlgorithmConfig& config, const Problem& problem) {
    std::visit([&](const auto& c) { c.validate(problem); }, config);
}

// ---------------------------------------------------------------------------
// Proposal helpers. These are the single source of the update formulas, so
// the degeneracy relations between FA, SA, APSO, CS and DE hold exactly.
// ---------------------------------------------------------------------------

/// Firefly move toward a brighter neighbor:
///   x_i + beta0 exp(-gamma r_ij^2) (x_j - x_i) + alpha eps,   eps Gaussian.
inline Vector fa_move(const Vector& xi, const Vector& xj, double beta0,
                      double gamma, double alpha, RngStream& rng) {
    const double r2 = (xj - xi).squaredNorm();
    const double attract = beta0 * std::exp(-gamma * r2);
    const Vector eps = rng.gaussian_vector(xi.size());
    return xi + attract * (xj - xi) + alpha * eps;
}

/// Accelerated-PSO move: the firefly move with gamma = 0 and the neighbor
/// replaced by the current global best.
inline Vector apso_move(const Vector& x, const Vector& gbest, double beta0,
                        double alpha, RngStream& rng) {
    return fa_move(x, gbest, beta0, 0.0, alpha, rng);
}

/// Isotropic Gaussian proposal, the beta0 = 0 firefly limit.
inline Vector sa_propose(const Vector& x, double scale, RngStream& rng) {
    return x + scale * rng.gaussian_vector(x.size());
}

inline double sa_accept_probability(double delta_f, double temperature) {
    if (delta_f <= 0) return 1.0;
    return std::exp(-delta_f / temperature);
}

/// Cuckoo local walk x_i + alpha s H(p_a - eps) (x_j - x_k), with a fresh
/// uniform eps gating each component.
inline Vector cs_local_proposal(const Vector& xi, const Vector& xj,
                                const Vector& xk, double alpha, double s,
                                double p_a, RngStream& rng) {
    const double scale = alpha * s;
    Vector out(xi.size());
    for (Eigen::Index c = 0; c < xi.size(); ++c) {
        const double eps = rng.uniform();
        const double gate = (p_a - eps > 0.0) ? 1.0 : 0.0;
        out[c] = xi[c] + scale * gate * (xj[c] - xk[c]);
    }
    return out;
}

/// Bat pulse-rate schedule r^0 [1 - exp(-gamma t)].
inline double ba_pulse_rate(double r0, double gamma, double t) {
    return r0 * (1.0 - std::exp(-gamma * t));
}

// ---------------------------------------------------------------------------
// Newton-Raphson baseline (per-dimension separable objectives)
// ---------------------------------------------------------------------------

struct SingularCurvature : std::runtime_error {
    SingularCurvature() : std::runtime_error("second derivative below tolerance") {}
};

/// Damped Newton iterate x - p f'(x)/f''(x), applied per dimension.
/// grad and curvature return the componentwise first and second derivatives.
inline Vector newton_step(const Vector& x,
                          const std::function<Vector(const Vector&)>& grad,
                          const std::function<Vector(const Vector&)>& curvature,
                          double p) {
    const Vector g = grad(x);
    const Vector h = curvature(x);
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(h[i]) < 1e-12) throw SingularCurvature();
        out[i] = x[i] - p * g[i] / h[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Steppers: one population sweep per step(). Updates are asynchronous
// (in-place) throughout; an agent's move can use already-moved neighbors.
// ---------------------------------------------------------------------------

class Stepper {
public:
    virtual ~Stepper() = default;
    virtual void step() = 0;
    virtual const std::vector<Agent>& population() const = 0;
};

namespace detail {

class PopulationStepper : public Stepper {
public:
    PopulationStepper(const Problem& problem, Recorder& recorder, RngStream& rng)
        : problem_(problem), recorder_(recorder), rng_(rng) {}
    const std::vector<Agent>& population() const override { return pop_; }

protected:
    void init_uniform(std::size_t n) {
        pop_ = init_population(problem_, n, rng_);
        for (auto& a : pop_) recorder_.evaluate(problem_, a);
    }

    std::size_t best_index() const {
        std::size_t b = 0;
        for (std::size_t i = 1; i < pop_.size(); ++i)
            if (pop_[i].fitness < pop_[b].fitness) b = i;
        return b;
    }

    const Problem& problem_;
    Recorder& recorder_;
    RngStream& rng_;
    std::vector<Agent> pop_;
};

class PsoStepper final : public PopulationStepper {
public:
    PsoStepper(const PsoConfig& cfg, const Problem& problem, Recorder& recorder,
               RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg) {
        init_uniform(cfg.n);
        for (auto& a : pop_) a.velocity = Vector::Zero(problem.dimension);
        pbest_.reserve(pop_.size());
        for (const auto& a : pop_) pbest_.push_back(a);
        const std::size_t b = best_index();
        gbest_ = pop_[b].position;
        gbest_value_ = pop_[b].fitness;
    }

    void step() override {
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            Agent& a = pop_[i];
            const Vector eps1 = rng_.uniform_vector(problem_.dimension);
            const Vector eps2 = rng_.uniform_vector(problem_.dimension);
            a.velocity = cfg_.inertia * a.velocity +
                         cfg_.alpha * eps1.cwiseProduct(gbest_ - a.position) +
                         cfg_.beta * eps2.cwiseProduct(pbest_[i].position - a.position);
            a.position = clamp(a.position + a.velocity, problem_);
            recorder_.evaluate(problem_, a);
            if (select_greedy(a.fitness, pbest_[i].fitness)) pbest_[i] = a;
            if (select_greedy(a.fitness, gbest_value_)) {
                gbest_value_ = a.fitness;
                gbest_ = a.position;
            }
        }
    }

private:
    PsoConfig cfg_;
    std::vector<Agent> pbest_;
    Vector gbest_;
    double gbest_value_ = 0;
};

class ApsoStepper final : public PopulationStepper {
public:
    ApsoStepper(const ApsoConfig& cfg, const Problem& problem, Recorder& recorder,
                RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg),
          alpha_(cfg.alpha_rand) {
        init_uniform(cfg.n);
        const std::size_t b = best_index();
        gbest_ = pop_[b].position;
        gbest_value_ = pop_[b].fitness;
    }

    void step() override {
        for (auto& a : pop_) {
            a.position = clamp(
                apso_move(a.position, gbest_, cfg_.beta0, alpha_, rng_), problem_);
            recorder_.evaluate(problem_, a);
            if (select_greedy(a.fitness, gbest_value_)) {
                gbest_value_ = a.fitness;
                gbest_ = a.position;
            }
        }
        alpha_ *= cfg_.alpha_decay;
    }

private:
    ApsoConfig cfg_;
    double alpha_;
    Vector gbest_;
    double gbest_value_ = 0;
};

class DeStepper final : public PopulationStepper {
public:
    DeStepper(const DeConfig& cfg, const Problem& problem, Recorder& recorder,
              RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg) {
        init_uniform(cfg.n);
    }

    void step() override {
        const std::size_t n = pop_.size();
        for (std::size_t i = 0; i < n; ++i) {
            // r, p, q, i distinct, drawn by random permutation
            const auto perm = rng_.permutation(n);
            std::size_t picks[3];
            std::size_t got = 0;
            for (std::size_t v : perm) {
                if (v == i) continue;
                picks[got++] = v;
                if (got == 3) break;
            }
            const Vector mutant = mutate_de(pop_[picks[0]].position,
                                            pop_[picks[1]].position,
                                            pop_[picks[2]].position, cfg_.F);
            Vector trial = cfg_.scheme == CrossoverScheme::exponential
                               ? crossover_exponential(pop_[i].position, mutant,
                                                       cfg_.C_r, rng_)
                               : crossover_binomial(pop_[i].position, mutant,
                                                    cfg_.C_r, rng_);
            Agent cand{clamp(trial, problem_)};
            recorder_.evaluate(problem_, cand);
            if (select_greedy(cand.fitness, pop_[i].fitness)) pop_[i] = cand;
        }
    }

private:
    DeConfig cfg_;
};

class FaStepper final : public PopulationStepper {
public:
    FaStepper(const FaConfig& cfg, const Problem& problem, Recorder& recorder,
              RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg),
          alpha_(cfg.alpha_rand) {
        init_uniform(cfg.n);
    }

    void step() override {
        // Brightness is frozen at sweep start; positions update in place.
        std::vector<double> brightness(pop_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i)
            brightness[i] = pop_[i].fitness;
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            bool moved = false;
            for (std::size_t j = 0; j < pop_.size(); ++j) {
                if (brightness[j] < brightness[i]) {
                    pop_[i].position = clamp(
                        fa_move(pop_[i].position, pop_[j].position, cfg_.beta0,
                                cfg_.gamma, alpha_, rng_),
                        problem_);
                    moved = true;
                }
            }
            if (moved) recorder_.evaluate(problem_, pop_[i]);
        }
        alpha_ *= cfg_.alpha_decay;
    }

private:
    FaConfig cfg_;
    double alpha_;
};

class CsStepper final : public PopulationStepper {
public:
    CsStepper(const CsConfig& cfg, const Problem& problem, Recorder& recorder,
              RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg),
          levy_{cfg.lambda, cfg.alpha, 0.1} {
        init_uniform(cfg.n);
    }

    void step() override {
        const std::size_t n = pop_.size();
        // Global phase: Levy flight, compared against a random nest.
        for (std::size_t i = 0; i < n; ++i) {
            Agent cand{clamp(
                pop_[i].position + levy_vector(levy_, problem_.dimension, rng_),
                problem_)};
            recorder_.evaluate(problem_, cand);
            const std::size_t host = rng_.uniform_index(n);
            if (select_greedy(cand.fitness, pop_[host].fitness)) pop_[host] = cand;
        }
        // Local phase: gated difference walk, greedy against the incumbent.
        for (std::size_t i = 0; i < n; ++i) {
            const auto perm = rng_.permutation(n);
            std::size_t jk[2];
            std::size_t got = 0;
            for (std::size_t v : perm) {
                if (v == i) continue;
                jk[got++] = v;
                if (got == 2) break;
            }
            Agent cand{clamp(
                cs_local_proposal(pop_[i].position, pop_[jk[0]].position,
                                  pop_[jk[1]].position, cfg_.alpha, cfg_.s,
                                  cfg_.p_a, rng_),
                problem_)};
            recorder_.evaluate(problem_, cand);
            if (select_greedy(cand.fitness, pop_[i].fitness)) pop_[i] = cand;
        }
    }

private:
    CsConfig cfg_;
    LevyParams levy_;
};

class BaStepper final : public PopulationStepper {
public:
    BaStepper(const BaConfig& cfg, const Problem& problem, Recorder& recorder,
              RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg) {
        init_uniform(cfg.n);
        for (auto& a : pop_) a.velocity = Vector::Zero(problem.dimension);
        loudness_.assign(cfg.n, cfg.loudness0);
        pulse_.assign(cfg.n, ba_pulse_rate(cfg.pulse0, cfg.gamma_pulse, 0.0));
        const std::size_t b = best_index();
        best_ = pop_[b].position;
        best_value_ = pop_[b].fitness;
    }

    void step() override {
        ++sweep_;
        const double mean_loudness =
            std::accumulate(loudness_.begin(), loudness_.end(), 0.0) /
            static_cast<double>(loudness_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i) {
            Agent& a = pop_[i];
            const double beta = rng_.uniform();
            const double freq = cfg_.f_min + (cfg_.f_max - cfg_.f_min) * beta;
            a.velocity += (a.position - best_) * freq;
            Vector proposal = a.position + a.velocity;
            if (rng_.uniform() < pulse_[i]) {
                // local walk around the current best, scaled by mean loudness
                proposal = best_ + 0.1 * mean_loudness *
                                       rng_.gaussian_vector(problem_.dimension);
            }
            Agent cand{clamp(proposal, problem_)};
            recorder_.evaluate(problem_, cand);
            const bool loud_gate = rng_.uniform() < loudness_[i];
            if (loud_gate && select_greedy(cand.fitness, a.fitness)) {
                a.position = cand.position;
                a.fitness = cand.fitness;
                loudness_[i] *= cfg_.alpha_loud;
                pulse_[i] = ba_pulse_rate(cfg_.pulse0, cfg_.gamma_pulse,
                                          static_cast<double>(sweep_));
            }
            if (select_greedy(cand.fitness, best_value_)) {
                best_value_ = cand.fitness;
                best_ = cand.position;
            }
        }
    }

private:
    BaConfig cfg_;
    std::vector<double> loudness_;
    std::vector<double> pulse_;
    Vector best_;
    double best_value_ = 0;
    std::uint64_t sweep_ = 0;
};

class SaStepper final : public PopulationStepper {
public:
    SaStepper(const SaConfig& cfg, const Problem& problem, Recorder& recorder,
              RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg),
          scale_(cfg.alpha_rand) {
        // Temperature scale from the objective spread of an initial sample.
        init_uniform(cfg.n);
        double lo = pop_[0].fitness, hi = pop_[0].fitness;
        std::size_t b = 0;
        for (std::size_t i = 1; i < pop_.size(); ++i) {
            lo = std::min(lo, pop_[i].fitness);
            hi = std::max(hi, pop_[i].fitness);
            if (pop_[i].fitness < pop_[b].fitness) b = i;
        }
        temperature_ = std::max(hi - lo, 1e-12);
        pop_ = {pop_[b]};
    }

    void step() override {
        Agent& a = pop_[0];
        Agent cand{clamp(sa_propose(a.position, scale_, rng_), problem_)};
        recorder_.evaluate(problem_, cand);
        const double delta = cand.fitness - a.fitness;
        if (rng_.uniform() < sa_accept_probability(delta, temperature_)) a = cand;
        temperature_ *= cfg_.cooling;
        scale_ *= cfg_.scale_decay;
    }

private:
    SaConfig cfg_;
    double scale_;
    double temperature_ = 1.0;
};

class PatternSearchStepper final : public PopulationStepper {
public:
    PatternSearchStepper(const PatternSearchConfig& cfg, const Problem& problem,
                         Recorder& recorder, RngStream& rng)
        : PopulationStepper(problem, recorder, rng) {
        init_uniform(1);
        steps_ = cfg.init_step_fraction * (problem.upper - problem.lower);
    }

    void step() override {
        Agent& a = pop_[0];
        bool improved = false;
        for (Eigen::Index i = 0; i < problem_.dimension; ++i) {
            for (const double sign : {+1.0, -1.0}) {
                Vector target = a.position;
                target[i] += sign * steps_[i];
                Agent cand{clamp(mutate_pattern(a.position, target), problem_)};
                recorder_.evaluate(problem_, cand);
                if (cand.fitness < a.fitness) {
                    a = cand;
                    improved = true;
                    break;  // first improvement in this dimension
                }
            }
        }
        if (!improved) steps_ *= 0.5;
    }

private:
    Vector steps_;
};

class AbcStepper final : public PopulationStepper {
public:
    AbcStepper(const AbcConfig& cfg, const Problem& problem, Recorder& recorder,
               RngStream& rng)
        : PopulationStepper(problem, recorder, rng), cfg_(cfg) {
        init_uniform(cfg.n);
        trials_.assign(cfg.n, 0);
        limit_ = cfg.limit > 0
                     ? cfg.limit
                     : cfg.n * static_cast<std::size_t>(problem.dimension);
    }

    void step() override {
        const std::size_t n = pop_.size();
        for (std::size_t i = 0; i < n; ++i) neighbor_move(i);  // employed
        // Onlookers pick sources fitness-proportionally.
        std::vector<double> weight(n);
        double total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = pop_[i].fitness;
            weight[i] = f >= 0 ? 1.0 / (1.0 + f) : 1.0 + std::abs(f);
            total += weight[i];
        }
        for (std::size_t k = 0; k < n; ++k) {
            double r = rng_.uniform() * total;
            std::size_t pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                r -= weight[i];
                if (r <= 0) {
                    pick = i;
                    break;
                }
            }
            neighbor_move(pick);
        }
        // Scouts: stagnant sources restart uniformly.
        for (std::size_t i = 0; i < n; ++i) {
            if (trials_[i] >= limit_) {
                for (Eigen::Index c = 0; c < problem_.dimension; ++c)
                    pop_[i].position[c] =
                        rng_.uniform(problem_.lower[c], problem_.upper[c]);
                recorder_.evaluate(problem_, pop_[i]);
                trials_[i] = 0;
            }
        }
    }

private:
    void neighbor_move(std::size_t i) {
        const std::size_t n = pop_.size();
        std::size_t j = rng_.uniform_index(n - 1);
        if (j >= i) ++j;
        const auto dim = static_cast<Eigen::Index>(
            rng_.uniform_index(static_cast<std::size_t>(problem_.dimension)));
        const double phi = rng_.uniform(-1.0, 1.0);
        Agent cand = pop_[i];
        cand.position[dim] += phi * (pop_[i].position[dim] - pop_[j].position[dim]);
        cand.position = clamp(cand.position, problem_);
        recorder_.evaluate(problem_, cand);
        const bool strictly_better = cand.fitness < pop_[i].fitness;
        if (select_greedy(cand.fitness, pop_[i].fitness)) pop_[i] = cand;
        if (strictly_better)
            trials_[i] = 0;
        else
            ++trials_[i];
    }

    AbcConfig cfg_;
    std::vector<std::size_t> trials_;
    std::size_t limit_ = 0;
};

}  // namespace detail

inline std::unique_ptr<Stepper> make_stepper(const AlgorithmConfig& config,
                                             const Problem& problem,
                                             Recorder& recorder, RngStream& rng) {
    return std::visit(
        [&](const auto& cfg) -> std::unique_ptr<Stepper> {
            using C = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<C, PsoConfig>)
                return std::make_unique<detail::PsoStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, ApsoConfig>)
                return std::make_unique<detail::ApsoStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, DeConfig>)
                return std::make_unique<detail::DeStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, FaConfig>)
                return std::make_unique<detail::FaStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, CsConfig>)
                return std::make_unique<detail::CsStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, BaConfig>)
                return std::make_unique<detail::BaStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, SaConfig>)
                return std::make_unique<detail::SaStepper>(cfg, problem, recorder, rng);
            else if constexpr (std::is_same_v<C, PatternSearchConfig>)
                return std::make_unique<detail::PatternSearchStepper>(cfg, problem, recorder, rng);
            else
                return std::make_unique<detail::AbcStepper>(cfg, problem, recorder, rng);
        },
        config);
}

/// Runs one algorithm to budget exhaustion. Deterministic in
/// (config, problem, budget, seed, run_index).
inline RunRecord run(const AlgorithmConfig& config, const Problem& problem,
                     Budget budget, std::uint64_t seed,
                     std::uint64_t run_index = 0) {
    problem.check();
    validate(config, problem);
    RunRecord record;
    record.algorithm = algorithm_name(config);
    record.seed = seed;
    Recorder recorder(record, budget);
    RngStream rng = RngStream(seed).split(run_index);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto stepper = make_stepper(config, problem, recorder, rng);
        recorder.mark_sweep();
        while (!budget.exhausted()) {
            stepper->step();
            recorder.mark_sweep();
        }
    } catch (const BudgetExhausted&) {
        recorder.mark_sweep();  // partial sweep kept
    }
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return record;
}

inline const std::vector<std::string>& algorithm_ids() {
    static const std::vector<std::string> ids = {
        "pso", "apso", "de", "fa", "cs", "ba", "sa", "pattern_search", "abc"};
    return ids;
}

}  // namespace swarmbench
