#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swarmbench/combinatorial.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

using namespace swarmbench;

namespace {

RouteGraph uniform_graph(Eigen::Index m, double dist = 1.0) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Constant(m, m, dist);
    s.diagonal().setZero();
    return RouteGraph::from_distances(s);
}

double brute_force_optimum(const RouteGraph& graph) {
    const Eigen::Index m = graph.size();
    std::vector<Eigen::Index> perm;
    for (Eigen::Index i = 1; i < m; ++i) perm.push_back(i);
    double best = std::numeric_limits<double>::infinity();
    do {
        Tour tour{0};
        tour.insert(tour.end(), perm.begin(), perm.end());
        best = std::min(best, tour_length(graph, tour));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("route_probabilities normalization and symmetry") {
    AcoConfig cfg;
    auto g = uniform_graph(5);
    const auto p = route_probabilities(g, cfg, 0, {1, 2, 3, 4});
    CHECK(p.size() == 4);
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 4; ++k) CHECK(p[k] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(route_probabilities(g, cfg, 0, {}), EmptyNeighborhood);
}

TEST_CASE("route_probabilities follows pheromone ratios") {
    AcoConfig cfg;
    cfg.alpha = 1.0;
    cfg.beta = 1.0;
    auto g = uniform_graph(3);
    g.pheromone(0, 1) = 2.0;
    g.pheromone(0, 2) = 1.0;
    const auto p = route_probabilities(g, cfg, 0, {1, 2});
    CHECK(p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // zero exponents kill both factors
    AcoConfig zero;
    zero.alpha = 0.0;
    zero.beta = 0.0;
    const auto u = route_probabilities(g, zero, 0, {1, 2});
    CHECK(u[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("route_probabilities invariant under pheromone scaling") {
    RngStream rng(5);
    AcoConfig cfg;
    cfg.alpha = 1.3;
    cfg.beta = 2.1;
    auto g = uniform_graph(6);
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j < 6; ++j)
            if (i != j) g.pheromone(i, j) = rng.uniform(0.1, 5.0);
    const auto p1 = route_probabilities(g, cfg, 2, {0, 1, 4, 5});
    g.pheromone *= 37.5;
    const auto p2 = route_probabilities(g, cfg, 2, {0, 1, 4, 5});
    CHECK((p1 - p2).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("construct_tour visits every node once") {
    AcoConfig cfg;
    auto g = uniform_graph(2);
    RngStream rng(1);
    const Tour t2 = construct_tour(g, cfg, 0, rng);
    CHECK(t2 == Tour{0, 1});

    auto g7 = uniform_graph(7);
    for (int rep = 0; rep < 50; ++rep) {
        Tour t = construct_tour(g7, cfg, rep % 7, rng);
        std::sort(t.begin(), t.end());
        for (Eigen::Index i = 0; i < 7; ++i) CHECK(t[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("construct_tour samples uniformly on a symmetric graph") {
    AcoConfig cfg;
    auto g = uniform_graph(3);
    RngStream rng(99);
    std::map<Tour, int> counts;
    const int trials = 10000;
    for (int rep = 0; rep < trials; ++rep)
        ++counts[construct_tour(g, cfg, 0, rng)];
    REQUIRE(counts.size() == 2);
    for (const auto& [tour, c] : counts)
        CHECK(std::abs(static_cast<double>(c) / trials - 0.5) < 0.02);
}

TEST_CASE("construct_tour follows dominant pheromone") {
    AcoConfig cfg;
    auto g = uniform_graph(5);
    const Tour target{0, 1, 2, 3, 4};
    for (std::size_t k = 0; k < target.size(); ++k) {
        const Eigen::Index a = target[k], b = target[(k + 1) % 5];
        g.pheromone(a, b) = g.pheromone(b, a) = 1e9;
    }
    RngStream rng(7);
    int hits = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const Tour t = construct_tour(g, cfg, 0, rng);
        if (t == target || (t[1] == 4 && t[4] == 1)) ++hits;  // either direction
    }
    CHECK(hits == 100);
}

TEST_CASE("update_pheromone evaporation and deposit") {
    AcoConfig cfg;
    cfg.deposit = 1.0;

    // full evaporation with no tours leaves the floor everywhere
    auto g = uniform_graph(4);
    AcoConfig rho1 = cfg;
    rho1.evaporation = 1.0 - 1e-15;
    update_pheromone(g, {}, {}, rho1);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            CHECK(g.pheromone(i, j) <= RouteGraph::kPheromoneFloor * 1.01);

    // near-zero evaporation: traversed edges gain exactly Q/L
    auto g2 = uniform_graph(4);
    const Tour tour{0, 1, 2, 3};
    AcoConfig rho0 = cfg;
    rho0.evaporation = 1e-300;
    update_pheromone(g2, {tour}, {4.0}, rho0);
    CHECK(g2.pheromone(0, 1) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(g2.pheromone(3, 0) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(g2.pheromone(0, 2) == doctest::Approx(1.0).epsilon(1e-12));

    // shorter tours end with more pheromone on their unique edges
    auto g3 = uniform_graph(4);
    const Tour t_short{0, 1, 2, 3};
    const Tour t_long{0, 2, 1, 3};
    AcoConfig mid = cfg;
    mid.evaporation = 0.5;
    update_pheromone(g3, {t_short, t_long}, {2.0, 8.0}, mid);
    CHECK(g3.pheromone(0, 1) > g3.pheromone(0, 2));
}

TEST_CASE("pheromone stays bounded under repeated updates") {
    AcoConfig cfg;
    cfg.evaporation = 0.5;
    auto g = uniform_graph(4);
    const Tour tour{0, 1, 2, 3};
    const double l_min = 4.0;
    for (int it = 0; it < 200; ++it)
        update_pheromone(g, {tour}, {l_min}, cfg);
    const double bound = cfg.deposit / (cfg.evaporation * l_min) + 1.0;
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) {
            CHECK(g.pheromone(i, j) >= RouteGraph::kPheromoneFloor);
            CHECK(g.pheromone(i, j) <= bound + 1e-9);
        }
}

TEST_CASE("aco_optimize: m=3 is optimal immediately; curve is monotone") {
    RngStream rng(12);
    Eigen::MatrixXd s(3, 3);
    s << 0, 2, 3, 2, 0, 4, 3, 4, 0;
    auto g = RouteGraph::from_distances(s);
    AcoConfig cfg;
    const auto res = aco_optimize(g, cfg, 5, 1);
    CHECK(res.best_length == doctest::Approx(9.0));
    for (std::size_t k = 1; k < res.record.curve.size(); ++k)
        CHECK(res.record.curve[k].second <= res.record.curve[k - 1].second);
}

TEST_CASE("aco_optimize with a single-iteration budget is the sample minimum") {
    auto g = uniform_graph(5, 2.0);
    AcoConfig cfg;
    cfg.ants = 10;
    const auto res = aco_optimize(g, cfg, 10, 3);
    CHECK(res.best_length == doctest::Approx(10.0));  // all tours length 10
    CHECK(res.best_tour.size() == 5);
}

TEST_CASE("aco matches the brute-force optimum on a random instance") {
    RngStream rng(55);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = i + 1; j < 5; ++j)
            s(i, j) = s(j, i) = rng.uniform(1.0, 10.0);
    auto g = RouteGraph::from_distances(s);
    const double opt = brute_force_optimum(g);
    const auto res = aco_optimize(g, AcoConfig{}, 2000, 17);
    CHECK(res.best_length == doctest::Approx(opt).epsilon(1e-12));
}

TEST_CASE("tsp file round trip and tour formatting") {
    const auto path = std::filesystem::temp_directory_path() / "sb_test_tsp.txt";
    {
        std::ofstream out(path);
        out << "3\n0 2 3\n2 0 4\n3 4 0\n";
    }
    const auto g = load_tsp(path.string());
    CHECK(g.size() == 3);
    CHECK(g.distance(0, 2) == 3.0);
    CHECK(g.desirability(1, 2) == doctest::Approx(0.25));
    CHECK(format_tour({0, 2, 1}) == "0,2,1");
    std::filesystem::remove(path);
}
