#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "swarmbench/core.hpp"
#include "swarmbench/rng.hpp"

namespace swarmbench {

// ---------------------------------------------------------------------------
// Mutation primitives
// ---------------------------------------------------------------------------

struct LevyParams {
    double lambda = 1.5;     // tail index in (0, 2]
    double step_scale = 1.0; // alpha
    double cutoff = 0.1;     // s0

    void check() const {
        if (!(lambda > 0.0 && lambda <= 2.0))
            throw InvalidConfig("lambda", "lambda must be in (0, 2]");
        if (!(step_scale > 0.0))
            throw InvalidConfig("step_scale", "step scale must be positive");
        if (!(cutoff > 0.0))
            throw InvalidConfig("cutoff", "cutoff must be positive");
    }
};

/// Tail density of the Levy distribution,
///   L(s, lambda) = lambda Gamma(lambda) sin(pi lambda / 2) / pi * s^-(1+lambda).
inline double levy_density(double s, double lambda) {
    if (!(s > 0.0)) throw DomainError("levy_density requires s > 0");
    if (!(lambda > 0.0 && lambda <= 2.0))
        throw DomainError("levy_density requires lambda in (0, 2]");
    const double c = lambda * std::tgamma(lambda) *
                     std::sin(std::numbers::pi * lambda / 2.0) / std::numbers::pi;
    return c * std::pow(s, -(1.0 + lambda));
}

/// Heavy-tailed step via the Mantegna two-Gaussian ratio. The sample's
/// survival function decays like s^-lambda, matching the density tail above;
/// the body of the distribution is not pinned by the tail formula.
inline double levy_sample(const LevyParams& params, RngStream& rng) {
    const double lambda = params.lambda;
    const double num = std::tgamma(1.0 + lambda) *
                       std::sin(std::numbers::pi * lambda / 2.0);
    const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda *
                       std::pow(2.0, (lambda - 1.0) / 2.0);
    const double sigma_u = std::pow(num / den, 1.0 / lambda);
    const double u = rng.gaussian() * sigma_u;
    const double v = rng.gaussian();
    return params.step_scale * u / std::pow(std::abs(v), 1.0 / lambda);
}

inline Vector levy_vector(const LevyParams& params, Eigen::Index d, RngStream& rng) {
    Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = levy_sample(params, rng);
    return v;
}

/// Pattern-search move x <- x + (x_new - x); telescopes to x_new.
inline Vector mutate_pattern(const Vector& x, const Vector& new_move) {
    if (x.size() != new_move.size())
        throw DomainError("mutate_pattern: length mismatch");
    return x + (new_move - x);
}

/// Differential mutation x_r + F (x_p - x_q).
inline Vector mutate_de(const Vector& x_r, const Vector& x_p, const Vector& x_q,
                        double F) {
    if (!(F >= 0.0 && F <= 2.0))
        throw InvalidConfig("F", "differential weight F must be in [0, 2]");
    if (x_r.size() != x_p.size() || x_r.size() != x_q.size())
        throw DomainError("mutate_de: length mismatch");
    return x_r + F * (x_p - x_q);
}

// ---------------------------------------------------------------------------
// Crossover primitives
// ---------------------------------------------------------------------------

enum class CrossoverScheme { binomial, exponential, ga_uniform };

struct CrossoverParams {
    double rate = 0.9;  // C_r
    CrossoverScheme scheme = CrossoverScheme::binomial;

    void check() const {
        if (!(rate >= 0.0 && rate <= 1.0))
            throw InvalidConfig("C_r", "crossover rate must be in [0, 1]");
    }
};

/// Binomial (uniform) crossover; one uniformly chosen index is always taken
/// from the mutant so that C_r = 0 is not a no-op.
inline Vector crossover_binomial(const Vector& target, const Vector& mutant,
                                 double rate, RngStream& rng) {
    const Eigen::Index d = target.size();
    if (mutant.size() != d) throw DomainError("crossover: length mismatch");
    const auto forced = static_cast<Eigen::Index>(rng.uniform_index(d));
    Vector child = target;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (i == forced || rng.uniform() < rate) child[i] = mutant[i];
    }
    return child;
}

/// Exponential crossover: one circular contiguous block from the mutant,
/// block length L with P(L >= k) = rate^(k-1), capped at d.
inline Vector crossover_exponential(const Vector& target, const Vector& mutant,
                                    double rate, RngStream& rng) {
    const Eigen::Index d = target.size();
    if (mutant.size() != d) throw DomainError("crossover: length mismatch");
    const auto start = static_cast<Eigen::Index>(rng.uniform_index(d));
    Vector child = target;
    Eigen::Index len = 1;
    while (len < d && rng.uniform() < rate) ++len;
    for (Eigen::Index k = 0; k < len; ++k) {
        const Eigen::Index i = (start + k) % d;
        child[i] = mutant[i];
    }
    return child;
}

/// Single-point recombination at a uniform interior cut; returns both
/// offspring. Offspring agree with the parents wherever the parents agree.
inline std::pair<Vector, Vector> crossover_ga(const Vector& parent1,
                                              const Vector& parent2,
                                              RngStream& rng) {
    const Eigen::Index d = parent1.size();
    if (parent2.size() != d) throw DomainError("crossover: length mismatch");
    if (d == 1) return {parent1, parent2};
    // cut in {1, ..., d-1}: both sides nonempty
    const auto cut = static_cast<Eigen::Index>(rng.uniform_index(d - 1)) + 1;
    Vector a = parent1, b = parent2;
    for (Eigen::Index i = cut; i < d; ++i) std::swap(a[i], b[i]);
    return {a, b};
}

// ---------------------------------------------------------------------------
// Selection primitives
// ---------------------------------------------------------------------------

/// Greedy pairwise selection; ties go to the candidate.
inline bool select_greedy(double candidate_value, double incumbent_value) {
    if (std::isnan(candidate_value) || std::isnan(incumbent_value))
        throw DomainError("select_greedy: NaN objective value");
    return candidate_value <= incumbent_value;
}

/// Indices of the k smallest values, ties broken by lower index.
inline std::vector<std::size_t> select_elitist(const std::vector<double>& values,
                                               std::size_t k) {
    if (k > values.size())
        throw DomainError("select_elitist: k exceeds population size");
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });
    idx.resize(k);
    return idx;
}

}  // namespace swarmbench
