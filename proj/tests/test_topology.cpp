// Copyright 2026 the qjoule developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qjoule/topology.hpp"

using namespace qj;

TEST_SUITE("topology") {

TEST_CASE("linear graph is a path") {
    const auto g = CouplingGraph::linear(5);
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.neighbors(0) == std::vector<int>{1});
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK(g.neighbors(4) == std::vector<int>{3});
}

TEST_CASE("square lattice 7x7 has 49 nodes and 84 edges") {
    const auto g = CouplingGraph::square_lattice(7, 7);
    CHECK(g.node_count() == 49);
    CHECK(g.edge_count() == 84);   // 2 * 7 * 6
}

TEST_CASE("fully connected n=4 has 6 edges") {
    const auto g = CouplingGraph::fully_connected(4);
    CHECK(g.edge_count() == 6);
}

TEST_CASE("heavy-hex construction: subdivided hexagons, degree <= 3") {
    const auto g = CouplingGraph::heavy_hex(1, 1);
    CHECK(g.node_count() == 12);   // hexagon with each edge subdivided
    CHECK(g.edge_count() == 12);

    const auto big = CouplingGraph::heavy_hex(2, 3);
    CHECK(big.node_count() == 49);
    int degree_two = 0;
    int degree_three = 0;
    for (int v = 0; v < big.node_count(); ++v) {
        const auto deg = big.neighbors(v).size();
        CHECK(deg >= 1);
        CHECK(deg <= 3);
        if (deg == 2) ++degree_two;
        if (deg == 3) ++degree_three;
    }
    CHECK(degree_two >= big.node_count() / 2);   // inserted nodes all have degree 2
    CHECK(degree_three > 0);
    CHECK_NOTHROW(metrics(big));   // connected
}

TEST_CASE("too-small sizes are rejected") {
    CHECK_THROWS_AS(CouplingGraph::linear(1), DomainError);
    CHECK_THROWS_AS(CouplingGraph::fully_connected(1), DomainError);
    CHECK_THROWS_AS(CouplingGraph::square_lattice(0, 5), DomainError);
    CHECK_THROWS_AS(CouplingGraph::heavy_hex(0, 1), DomainError);
}

TEST_CASE("path-49 average distance is (n+1)/3") {
    const auto m = metrics(CouplingGraph::linear(49));
    CHECK(m.avg_shortest_path == doctest::Approx(50.0 / 3.0).epsilon(1e-14));
    CHECK(m.diameter == 48);
}

TEST_CASE("grid 7x7 average distance is 14/3") {
    const auto m = metrics(CouplingGraph::square_lattice(7, 7));
    CHECK(m.avg_shortest_path == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
    CHECK(m.diameter == 12);
}

TEST_CASE("fully connected graphs have unit distances") {
    for (const int n : {2, 5, 11}) {
        const auto m = metrics(CouplingGraph::fully_connected(n));
        CHECK(m.avg_shortest_path == 1.0);
        CHECK(m.diameter == 1);
    }
}

TEST_CASE("metrics match the Floyd-Warshall oracle on all families up to 12 nodes") {
    std::vector<CouplingGraph> graphs;
    for (int n = 2; n <= 12; ++n) graphs.push_back(CouplingGraph::linear(n));
    for (int n = 2; n <= 12; ++n) graphs.push_back(CouplingGraph::circular(n));
    for (int n = 2; n <= 12; ++n) graphs.push_back(CouplingGraph::fully_connected(n));
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            if (rows * cols >= 2 && rows * cols <= 12) {
                graphs.push_back(CouplingGraph::square_lattice(rows, cols));
            }
        }
    }
    graphs.push_back(CouplingGraph::heavy_hex(1, 1));   // 12 nodes
    for (const auto& g : graphs) {
        const auto m = metrics(g);
        const auto ref = oracle::floyd_warshall(g);
        REQUIRE(ref.connected);
        CHECK(m.avg_shortest_path == ref.avg_distinct_pairs);   // exact, same integer sum
        CHECK(m.diameter == ref.diameter);
    }
}

TEST_CASE("metrics match the oracle on random connected graphs up to 12 nodes") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) {
            edges.emplace_back(v, static_cast<int>(rng() % v));   // random spanning tree
        }
        std::set<std::pair<int, int>> have(edges.begin(), edges.end());
        const int extra = static_cast<int>(rng() % (n + 1));
        for (int k = 0; k < extra; ++k) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u == v) continue;
            if (u < v) std::swap(u, v);
            if (have.insert({u, v}).second) {
                edges.emplace_back(u, v);
            }
        }
        const auto g = CouplingGraph::from_edges(n, edges);
        const auto m = metrics(g);
        const auto ref = oracle::floyd_warshall(g);
        REQUIRE(ref.connected);
        CHECK(m.avg_shortest_path == ref.avg_distinct_pairs);
        CHECK(m.diameter == ref.diameter);
    }
}

TEST_CASE("disconnected graphs name an unreachable pair") {
    const auto g = CouplingGraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(metrics(g), doctest::Contains("no path"), DomainError);
}

TEST_CASE("edge list parsing round-trips and rejects junk") {
    std::istringstream good("4 3\n0 1\n1 2\n2 3\n");
    const auto g = CouplingGraph::from_edge_list(good);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.family() == GraphFamily::Custom);

    std::istringstream truncated("4 3\n0 1\n");
    CHECK_THROWS_AS(CouplingGraph::from_edge_list(truncated), ConfigError);
    std::istringstream selfloop("2 1\n1 1\n");
    CHECK_THROWS_AS(CouplingGraph::from_edge_list(selfloop), ConfigError);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(CouplingGraph::from_edge_list(dup), ConfigError);
}

TEST_CASE("post-routing depth reproduces the 2D and linear worked examples") {
    const RoutingInput r{500, 0.5};
    CHECK(post_routing_depth(r, CouplingGraph::square_lattice(7, 7)) == 2000);
    CHECK(post_routing_depth(r, CouplingGraph::linear(49)) == 6500);
}

TEST_CASE("no overhead cases collapse to D0") {
    const auto full = metrics(CouplingGraph::fully_connected(17));
    for (const std::int64_t d0 : {1, 7, 500, 99991}) {
        CHECK(post_routing_depth({d0, 1.0}, full) == d0);
    }
    const auto grid = metrics(CouplingGraph::square_lattice(7, 7));
    CHECK(post_routing_depth({123, 0.0}, grid) == 123);
}

TEST_CASE("routing depth is monotone in alpha, d0 and graph distance") {
    const auto path = metrics(CouplingGraph::linear(49));
    const auto grid = metrics(CouplingGraph::square_lattice(7, 7));
    std::int64_t previous = 0;
    for (const double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto d = post_routing_depth({500, alpha}, grid);
        CHECK(d >= previous);
        previous = d;
    }
    CHECK(post_routing_depth({500, 0.5}, path) >= post_routing_depth({500, 0.5}, grid));
    CHECK(post_routing_depth({1000, 0.5}, grid) >= post_routing_depth({500, 0.5}, grid));
}

TEST_CASE("depth equals D0 exactly when routing is free, and only then") {
    const auto grid = metrics(CouplingGraph::square_lattice(7, 7));
    const auto full = metrics(CouplingGraph::fully_connected(12));
    for (const std::int64_t d0 : {2, 10, 500, 10000}) {
        CHECK(post_routing_depth({d0, 0.0}, grid) == d0);
        CHECK(post_routing_depth({d0, 1.0}, full) == d0);
        for (const double alpha : {0.1, 0.5, 1.0}) {
            CHECK(post_routing_depth({d0, alpha}, grid) > d0);
        }
    }
}

TEST_CASE("per-layer multiplier is constant across a D0 sweep") {
    const auto grid = metrics(CouplingGraph::square_lattice(7, 7));
    const std::int64_t overhead = swap_overhead_layers(grid);
    for (const double alpha : {0.0, 0.3, 0.5, 1.0}) {
        const double multiplier = 1.0 + alpha * static_cast<double>(overhead);
        for (const std::int64_t d0 : {10, 100, 1000, 10000}) {
            const auto d = post_routing_depth({d0, alpha}, grid);
            CHECK(std::abs(static_cast<double>(d) - multiplier * static_cast<double>(d0)) <= 0.5);
        }
    }
}

TEST_CASE("diameter mode upper-bounds the average mode") {
    for (const auto& g : {CouplingGraph::linear(15), CouplingGraph::square_lattice(4, 5),
                          CouplingGraph::heavy_hex(2, 2)}) {
        const auto m = metrics(g);
        CHECK(post_routing_depth({500, 0.7}, m, DistanceMode::Diameter) >=
              post_routing_depth({500, 0.7}, m, DistanceMode::Average));
    }
}

TEST_CASE("routing sweep is ordered and complete") {
    const std::vector<CouplingGraph> graphs = {CouplingGraph::linear(49),
                                               CouplingGraph::square_lattice(7, 7)};
    const auto rows = routing_sweep(graphs, {500}, {0.5});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].family == GraphFamily::Linear);
    CHECK(rows[0].depth == 6500);
    CHECK(rows[1].family == GraphFamily::SquareLattice);
    CHECK(rows[1].depth == 2000);

    const auto grid_rows = routing_sweep({CouplingGraph::square_lattice(7, 7)}, {1000, 100}, {1.0});
    REQUIRE(grid_rows.size() == 2);
    CHECK(grid_rows[0].d0 == 100);    // sorted ascending
    CHECK(grid_rows[0].depth == 700); // multiplier 1 + 3*2 = 7
    CHECK(grid_rows[1].depth == 7000);

    CHECK_THROWS_AS(routing_sweep({}, {1}, {0.5}), ConfigError);
}

TEST_CASE("invalid routing inputs are rejected") {
    const auto grid = metrics(CouplingGraph::square_lattice(3, 3));
    CHECK_THROWS_AS(post_routing_depth({0, 0.5}, grid), DomainError);
    CHECK_THROWS_AS(post_routing_depth({10, -0.1}, grid), DomainError);
    CHECK_THROWS_AS(post_routing_depth({10, 1.5}, grid), DomainError);
}

} // TEST_SUITE
