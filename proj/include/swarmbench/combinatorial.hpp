#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "swarmbench/core.hpp"
#include "swarmbench/rng.hpp"

namespace swarmbench {

/// Symmetric TSP-style graph with pheromone and heuristic desirability
/// d_ij = 1/s_ij on every edge.
struct RouteGraph {
    Eigen::MatrixXd distance;    // s_ij, symmetric, zero diagonal
    Eigen::MatrixXd pheromone;   // phi_ij, kept >= floor
    Eigen::MatrixXd desirability;  // 1/s_ij off-diagonal

    static constexpr double kPheromoneFloor = 1e-9;

    Eigen::Index size() const { return distance.rows(); }

    static RouteGraph from_distances(const Eigen::MatrixXd& s,
                                     double initial_pheromone = 1.0) {
        const Eigen::Index m = s.rows();
        if (s.cols() != m || m < 2)
            throw InvalidConfig("distance", "distance matrix must be square, m >= 2");
        for (Eigen::Index i = 0; i < m; ++i) {
            if (s(i, i) != 0.0)
                throw InvalidConfig("distance", "diagonal must be zero");
            for (Eigen::Index j = 0; j < m; ++j) {
                if (i == j) continue;
                if (!(s(i, j) > 0.0))
                    throw InvalidConfig("distance", "off-diagonal distances must be positive");
                if (s(i, j) != s(j, i))
                    throw InvalidConfig("distance", "distance matrix must be symmetric");
            }
        }
        RouteGraph g;
        g.distance = s;
        g.pheromone = Eigen::MatrixXd::Constant(m, m, initial_pheromone);
        g.desirability = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j)
                if (i != j) g.desirability(i, j) = 1.0 / s(i, j);
        return g;
    }
};

struct AcoConfig {
    double alpha = 1.0;       // pheromone influence
    double beta = 2.0;        // desirability influence
    double evaporation = 0.5; // rho
    double deposit = 1.0;     // Q
    std::size_t ants = 10;

    void validate() const {
        if (!(alpha > 0)) throw InvalidConfig("alpha", "alpha must be > 0");
        if (!(beta > 0)) throw InvalidConfig("beta", "beta must be > 0");
        if (!(evaporation > 0 && evaporation < 1))
            throw InvalidConfig("evaporation", "evaporation must be in (0, 1)");
        if (!(deposit > 0)) throw InvalidConfig("deposit", "deposit must be > 0");
        if (ants < 1) throw InvalidConfig("ants", "ants must be >= 1");
    }
};

struct EmptyNeighborhood : std::runtime_error {
    EmptyNeighborhood() : std::runtime_error("no allowed next node") {}
};

using Tour = std::vector<Eigen::Index>;

/// Move distribution phi^alpha d^beta over the allowed next nodes,
/// normalized over the feasible moves from the current node.
inline Eigen::VectorXd route_probabilities(const RouteGraph& graph,
                                           const AcoConfig& config,
                                           Eigen::Index current,
                                           const std::vector<Eigen::Index>& allowed) {
    if (allowed.empty()) throw EmptyNeighborhood();
    Eigen::VectorXd w(static_cast<Eigen::Index>(allowed.size()));
    for (std::size_t k = 0; k < allowed.size(); ++k) {
        const Eigen::Index j = allowed[k];
        w[static_cast<Eigen::Index>(k)] =
            std::pow(graph.pheromone(current, j), config.alpha) *
            std::pow(graph.desirability(current, j), config.beta);
    }
    return w / w.sum();
}

/// Hamiltonian tour by sequential sampling over unvisited nodes.
inline Tour construct_tour(const RouteGraph& graph, const AcoConfig& config,
                           Eigen::Index start, RngStream& rng) {
    const Eigen::Index m = graph.size();
    std::vector<bool> visited(static_cast<std::size_t>(m), false);
    Tour tour{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (static_cast<Eigen::Index>(tour.size()) < m) {
        std::vector<Eigen::Index> allowed;
        for (Eigen::Index j = 0; j < m; ++j)
            if (!visited[static_cast<std::size_t>(j)]) allowed.push_back(j);
        const Eigen::VectorXd p =
            route_probabilities(graph, config, tour.back(), allowed);
        double r = rng.uniform();
        std::size_t pick = allowed.size() - 1;
        for (std::size_t k = 0; k < allowed.size(); ++k) {
            r -= p[static_cast<Eigen::Index>(k)];
            if (r <= 0) {
                pick = k;
                break;
            }
        }
        tour.push_back(allowed[pick]);
        visited[static_cast<std::size_t>(allowed[pick])] = true;
    }
    return tour;
}

inline double tour_length(const RouteGraph& graph, const Tour& tour) {
    double len = 0;
    for (std::size_t k = 0; k < tour.size(); ++k)
        len += graph.distance(tour[k], tour[(k + 1) % tour.size()]);
    return len;
}

/// Evaporate, then deposit Q/length on every traversed edge (symmetric),
/// with the floor applied afterwards.
inline void update_pheromone(RouteGraph& graph, const std::vector<Tour>& tours,
                             const std::vector<double>& lengths,
                             const AcoConfig& config) {
    graph.pheromone *= (1.0 - config.evaporation);
    for (std::size_t t = 0; t < tours.size(); ++t) {
        const double gain = config.deposit / lengths[t];
        const Tour& tour = tours[t];
        for (std::size_t k = 0; k < tour.size(); ++k) {
            const Eigen::Index a = tour[k];
            const Eigen::Index b = tour[(k + 1) % tour.size()];
            graph.pheromone(a, b) += gain;
            graph.pheromone(b, a) += gain;
        }
    }
    graph.pheromone =
        graph.pheromone.cwiseMax(RouteGraph::kPheromoneFloor);
}

struct AcoResult {
    Tour best_tour;
    double best_length = 0;
    RunRecord record;
};

/// Construct/deposit loop; the budget counts tour constructions.
inline AcoResult aco_optimize(RouteGraph graph, const AcoConfig& config,
                              std::uint64_t max_constructions,
                              std::uint64_t seed) {
    config.validate();
    AcoResult result;
    result.record.algorithm = "aco";
    result.record.seed = seed;
    result.best_length = std::numeric_limits<double>::infinity();
    RngStream rng(seed);
    std::uint64_t used = 0;
    while (used < max_constructions) {
        std::vector<Tour> tours;
        std::vector<double> lengths;
        for (std::size_t a = 0; a < config.ants && used < max_constructions; ++a) {
            const Eigen::Index start = static_cast<Eigen::Index>(
                rng.uniform_index(static_cast<std::size_t>(graph.size())));
            Tour tour = construct_tour(graph, config, start, rng);
            const double len = tour_length(graph, tour);
            ++used;
            tours.push_back(std::move(tour));
            lengths.push_back(len);
            if (len < result.best_length) {
                result.best_length = len;
                result.best_tour = tours.back();
                result.record.curve.emplace_back(used, len);
            }
        }
        update_pheromone(graph, tours, lengths, config);
    }
    result.record.final_best_value = result.best_length;
    return result;
}

/// Plain-text TSP instance: line 1 holds m, then m rows of m distances.
inline RouteGraph load_tsp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open TSP file: " + path);
    Eigen::Index m = 0;
    in >> m;
    if (m < 2) throw std::runtime_error("invalid TSP instance: " + path);
    Eigen::MatrixXd s(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            if (!(in >> s(i, j)))
                throw std::runtime_error("truncated TSP instance: " + path);
    return RouteGraph::from_distances(s);
}

inline std::string format_tour(const Tour& tour) {
    std::ostringstream out;
    for (std::size_t k = 0; k < tour.size(); ++k) {
        if (k) out << ',';
        out << tour[k];
    }
    return out.str();
}

}  // namespace swarmbench
