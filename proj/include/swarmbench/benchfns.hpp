#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "swarmbench/core.hpp"

namespace swarmbench::benchfns {

struct UnknownFunction : std::runtime_error {
    explicit UnknownFunction(const std::string& name)
        : std::runtime_error("unknown benchmark function: " + name) {}
};

struct FunctionInfo {
    std::string name;
    double lower;
    double upper;
    std::string optimum_location;
};

inline const std::vector<FunctionInfo>& catalog() {
    static const std::vector<FunctionInfo> fns = {
        {"sphere", -5.12, 5.12, "origin"},
        {"rosenbrock", -5.0, 10.0, "all-ones"},
        {"ackley", -32.768, 32.768, "origin"},
        {"rastrigin", -5.12, 5.12, "origin"},
        {"griewank", -600.0, 600.0, "origin"},
        {"two_well", -2.0, 2.0, "+/-1 per coordinate"},
    };
    return fns;
}

/// Standard test functions, all with minimum value 0.
inline Problem make(const std::string& name, Eigen::Index d) {
    if (d < 1) throw InvalidConfig("dimension", "dimension must be >= 1");
    Problem p;
    p.dimension = d;
    p.name = name;
    p.known_optimum = 0.0;
    auto box = [&](double lo, double hi) {
        p.lower = Vector::Constant(d, lo);
        p.upper = Vector::Constant(d, hi);
    };
    if (name == "sphere") {
        box(-5.12, 5.12);
        p.objective = [](const Vector& x) { return x.squaredNorm(); };
    } else if (name == "rosenbrock") {
        if (d < 2) throw InvalidConfig("dimension", "rosenbrock requires d >= 2");
        box(-5.0, 10.0);
        p.objective = [](const Vector& x) {
            double s = 0;
            for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = 1.0 - x[i];
                s += 100.0 * a * a + b * b;
            }
            return s;
        };
    } else if (name == "ackley") {
        box(-32.768, 32.768);
        p.objective = [d](const Vector& x) {
            const double n = static_cast<double>(d);
            const double sq = x.squaredNorm() / n;
            double c = 0;
            for (Eigen::Index i = 0; i < x.size(); ++i)
                c += std::cos(2.0 * std::numbers::pi * x[i]);
            return -20.0 * std::exp(-0.2 * std::sqrt(sq)) - std::exp(c / n) +
                   20.0 + std::numbers::e;
        };
    } else if (name == "rastrigin") {
        box(-5.12, 5.12);
        p.objective = [d](const Vector& x) {
            double s = 10.0 * static_cast<double>(d);
            for (Eigen::Index i = 0; i < x.size(); ++i)
                s += x[i] * x[i] -
                     10.0 * std::cos(2.0 * std::numbers::pi * x[i]);
            return s;
        };
    } else if (name == "griewank") {
        box(-600.0, 600.0);
        p.objective = [](const Vector& x) {
            double prod = 1.0;
            for (Eigen::Index i = 0; i < x.size(); ++i)
                prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
            return x.squaredNorm() / 4000.0 - prod + 1.0;
        };
    } else if (name == "two_well") {
        // Symmetric double well, minima at +/-1 in each coordinate.
        box(-2.0, 2.0);
        p.objective = [](const Vector& x) {
            double s = 0;
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                const double w = x[i] * x[i] - 1.0;
                s += w * w;
            }
            return s;
        };
    } else {
        throw UnknownFunction(name);
    }
    return p;
}

}  // namespace swarmbench::benchfns
