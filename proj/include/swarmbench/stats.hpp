#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "swarmbench/core.hpp"

namespace swarmbench::stats {

struct TooFewSamples : std::runtime_error {
    TooFewSamples() : std::runtime_error("need at least 2 samples") {}
};

struct SampleStats {
    double mean = 0;
    double std = 0;  // sample standard deviation, divisor n-1
    std::size_t n = 0;
    std::vector<double> values;
};

inline SampleStats summarize(const std::vector<double>& values) {
    if (values.size() < 2) throw TooFewSamples();
    SampleStats s;
    s.n = values.size();
    s.values = values;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(s.n);
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    return s;
}

inline std::string format_mean_std(double mean, double std) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g ± %.6g", mean, std);
    return buf;
}

// ---------------------------------------------------------------------------
// Welch's t-test
// ---------------------------------------------------------------------------

namespace detail {

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
inline double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 200;
    constexpr double kEps = 3e-14;
    constexpr double kTiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

inline double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                            std::lgamma(b) + a * std::log(x) +
                            b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace detail

/// Two-sided p-value of Welch's unequal-variance t-test.
inline double welch_p_value(const SampleStats& a, const SampleStats& b) {
    const double va = a.std * a.std / static_cast<double>(a.n);
    const double vb = b.std * b.std / static_cast<double>(b.n);
    const double se2 = va + vb;
    if (se2 == 0.0) return a.mean == b.mean ? 1.0 : 0.0;
    const double t = (a.mean - b.mean) / std::sqrt(se2);
    const double nu =
        se2 * se2 / (va * va / static_cast<double>(a.n - 1) +
                     vb * vb / static_cast<double>(b.n - 1));
    const double x = nu / (nu + t * t);
    return detail::incomplete_beta(nu / 2.0, 0.5, x);
}

// ---------------------------------------------------------------------------
// Comparison reports
// ---------------------------------------------------------------------------

enum class MeasureKind { fixed_budget, fixed_accuracy };
enum class Verdict { A_better, B_better, indistinguishable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::A_better: return "A_better";
        case Verdict::B_better: return "B_better";
        default: return "indistinguishable";
    }
}

inline std::string to_string(MeasureKind k) {
    return k == MeasureKind::fixed_budget ? "fixed_budget" : "fixed_accuracy";
}

struct ComparisonReport {
    MeasureKind kind = MeasureKind::fixed_budget;
    SampleStats a;
    SampleStats b;
    Verdict verdict = Verdict::indistinguishable;
    bool marginal = false;  // winner decided only by a narrower spread
    double p_value = 1.0;
    std::string note;
    std::size_t failures_a = 0;  // fixed-accuracy runs that never reached delta
    std::size_t failures_b = 0;
};

/// Shared decision rule: a significant mean difference decides; otherwise
/// the narrower spread wins marginally; identical spreads tie.
inline ComparisonReport compare(MeasureKind kind, const SampleStats& a,
                                const SampleStats& b,
                                double significance = 0.05) {
    ComparisonReport r;
    r.kind = kind;
    r.a = a;
    r.b = b;
    r.p_value = welch_p_value(a, b);
    if (r.p_value < significance && a.mean != b.mean) {
        r.verdict = a.mean < b.mean ? Verdict::A_better : Verdict::B_better;
        r.note = "means differ (Welch p < significance)";
    } else if (a.std != b.std) {
        r.verdict = a.std < b.std ? Verdict::A_better : Verdict::B_better;
        r.marginal = true;
        r.note = "means statistically indistinguishable; narrower spread wins marginally";
    } else {
        r.verdict = Verdict::indistinguishable;
        r.note = "means and spreads indistinguishable";
    }
    return r;
}

struct MismatchedBudgets : std::runtime_error {
    MismatchedBudgets() : std::runtime_error("samples come from different budgets") {}
};

/// Fixed-budget comparison of final objective values at equal budgets.
inline ComparisonReport compare_fixed_budget(
    const SampleStats& a, const SampleStats& b, double significance = 0.05,
    std::optional<std::uint64_t> budget_a = std::nullopt,
    std::optional<std::uint64_t> budget_b = std::nullopt) {
    if (budget_a && budget_b && *budget_a != *budget_b)
        throw MismatchedBudgets();
    return compare(MeasureKind::fixed_budget, a, b, significance);
}

struct EmptySuccessSet : std::runtime_error {
    EmptySuccessSet() : std::runtime_error("no run of either algorithm reached the accuracy") {}
};

/// Fixed-accuracy comparison of evaluation counts; runs that never reached
/// delta enter as failure counts, not as samples.
inline ComparisonReport compare_fixed_accuracy(
    const std::vector<double>& counts_a, const std::vector<double>& counts_b,
    std::size_t failures_a, std::size_t failures_b,
    double significance = 0.05) {
    if (counts_a.size() < 2 && counts_b.size() < 2) throw EmptySuccessSet();
    ComparisonReport r;
    if (counts_a.size() < 2) {
        r = compare(MeasureKind::fixed_accuracy, summarize(counts_b),
                    summarize(counts_b), significance);
        r.a = SampleStats{};
        r.verdict = Verdict::B_better;
        r.marginal = false;
        r.note = "A reached the accuracy in fewer than 2 runs";
    } else if (counts_b.size() < 2) {
        r = compare(MeasureKind::fixed_accuracy, summarize(counts_a),
                    summarize(counts_a), significance);
        r.b = SampleStats{};
        r.verdict = Verdict::A_better;
        r.marginal = false;
        r.note = "B reached the accuracy in fewer than 2 runs";
    } else {
        r = compare(MeasureKind::fixed_accuracy, summarize(counts_a),
                    summarize(counts_b), significance);
    }
    r.failures_a = failures_a;
    r.failures_b = failures_b;
    if (failures_a || failures_b) {
        r.note += "; failures A=" + std::to_string(failures_a) +
                  " B=" + std::to_string(failures_b);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ratio-normalization pitfall
// ---------------------------------------------------------------------------

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("ratio denominator mean is zero") {}
};

inline constexpr const char* kRatioWarning =
    "ratio normalization inflates propagated uncertainty and must not be "
    "used as a performance verdict";

/// mu_A/mu_B with uncorrelated error propagation
///   sigma = (A/B) sqrt(sigma_A^2/A^2 + sigma_B^2/B^2).
inline std::pair<double, double> ratio_uncertainty(const SampleStats& a,
                                                   const SampleStats& b) {
    if (b.mean == 0.0) throw DivisionByZero();
    const double ratio = a.mean / b.mean;
    const double ra = a.std / a.mean;
    const double rb = b.std / b.mean;
    return {ratio, std::abs(ratio) * std::sqrt(ra * ra + rb * rb)};
}

// ---------------------------------------------------------------------------
// Diversity diagnostic
// ---------------------------------------------------------------------------

/// Mean pairwise Euclidean distance over the population.
inline double diversity(const std::vector<Vector>& positions) {
    if (positions.size() < 2) throw TooFewSamples();
    double total = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            total += (positions[i] - positions[j]).norm();
            ++pairs;
        }
    return total / static_cast<double>(pairs);
}

}  // namespace swarmbench::stats
