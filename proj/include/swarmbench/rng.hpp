#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numbers>
#include <cmath>
#include <vector>

namespace swarmbench {

/// Counter-based deterministic random stream. Draws are a pure function of
/// (key, counter), so identical seeds give bit-identical sequences on every
/// platform, and streams derived with distinct split indices never share a
/// key. All randomness in the library flows through this type.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : key_(mix(mix(seed) ^ kStreamTag)) {}

    /// Derive an independent sub-stream, e.g. per (run_index, agent_index).
    RngStream split(std::uint64_t index) const {
        RngStream s(*this);
        s.key_ = mix(key_ ^ mix(index + kSplitTag));
        s.counter_ = 0;
        return s;
    }

    std::uint64_t next_u64() { return mix(key_ ^ mix(counter_++)); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Two uniforms per draw, no caching,
    /// so the draw count is a fixed function of the call count.
    double gaussian() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    Eigen::VectorXd uniform_vector(Eigen::Index d) {
        Eigen::VectorXd v(d);
        for (Eigen::Index i = 0; i < d; ++i) v[i] = uniform();
        return v;
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index d) {
        Eigen::VectorXd v(d);
        for (Eigen::Index i = 0; i < d; ++i) v[i] = gaussian();
        return v;
    }

    /// Fisher-Yates permutation of {0, ..., n-1}.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::swap(p[i - 1], p[uniform_index(i)]);
        }
        return p;
    }

private:
    static constexpr std::uint64_t kStreamTag = 0x53574d42u;  // "SWMB"
    static constexpr std::uint64_t kSplitTag = 0x9e3779b97f4a7c15u;

    // splitmix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15u;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9u;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebu;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace swarmbench
