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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qjoule/errors.hpp"

namespace qj {

enum class GraphFamily {
    Linear,
    Circular,
    SquareLattice,
    HeavyHex,
    FullyConnected,
    Custom,
};

std::string to_string(GraphFamily f);
GraphFamily graph_family_from_string(const std::string& s);

/// Undirected simple qubit-coupling graph with nodes 0..n-1. Nodes are qubits,
/// edges mark pairs that can interact directly.
class CouplingGraph {
public:
    static CouplingGraph linear(int n);
    static CouplingGraph circular(int n);
    static CouplingGraph square_lattice(int rows, int cols);
    /// Hexagonal lattice of `rows` x `cols` cells with every edge subdivided
    /// once. Inserted nodes have degree 2; lattice vertices keep degree <= 3.
    static CouplingGraph heavy_hex(int rows, int cols);
    static CouplingGraph fully_connected(int n);
    /// Builds a Custom graph from explicit edges. Rejects self-loops and
    /// duplicate edges.
    static CouplingGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    /// Reads the edge-list format: first line "n m", then m lines "u v".
    static CouplingGraph from_edge_list(std::istream& in);
    static CouplingGraph from_edge_list_file(const std::string& path);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    GraphFamily family() const { return family_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

private:
    CouplingGraph(GraphFamily family, int n);
    void add_edge(int u, int v);

    GraphFamily family_;
    std::vector<std::vector<int>> adjacency_;
    std::int64_t edge_count_ = 0;
};

/// Exact all-pairs distance summary of a connected coupling graph.
/// `distance_sum` is over distinct unordered node pairs, so
/// avg_shortest_path = distance_sum / (n*(n-1)/2).
struct GraphMetrics {
    int nodes = 0;
    std::int64_t edges = 0;
    std::uint64_t distance_sum = 0;
    double avg_shortest_path = 0.0;
    int diameter = 0;
};

/// BFS-based all-pairs distances. Throws DomainError naming an unreachable
/// pair when the graph is disconnected.
GraphMetrics metrics(const CouplingGraph& g);

/// Pre-routing circuit shape: transpiled depth and the fraction of layers
/// containing at least one two-qubit gate.
struct RoutingInput {
    std::int64_t d0 = 1;
    double alpha_2q = 1.0;
};

void validate(const RoutingInput& r);

enum class DistanceMode {
    Average,    // use avg shortest path (the default model)
    Diameter,   // worst-case upper bound
};

/// SWAP-overhead layers added per two-qubit layer: 3*ceil((d-1)/2) with d the
/// average shortest path (or the diameter). Computed in exact integer
/// arithmetic from the distance sum.
std::int64_t swap_overhead_layers(const GraphMetrics& m, DistanceMode mode = DistanceMode::Average);

/// Post-routing depth D = round(D0 * (1 + alpha_2q * overhead)).
/// Equals D0 exactly when alpha_2q = 0 or the graph is fully connected.
std::int64_t post_routing_depth(const RoutingInput& r, const GraphMetrics& m,
                                DistanceMode mode = DistanceMode::Average);
std::int64_t post_routing_depth(const RoutingInput& r, const CouplingGraph& g,
                                DistanceMode mode = DistanceMode::Average);

struct RoutingSweepRow {
    GraphFamily family;
    int nodes;
    double avg_shortest_path;
    int diameter;
    std::int64_t d0;
    double alpha_2q;
    std::int64_t depth;
};

/// One row per (graph, d0, alpha), ordered by the input graph order, then
/// ascending d0, then the input alpha order.
std::vector<RoutingSweepRow> routing_sweep(const std::vector<CouplingGraph>& graphs,
                                           const std::vector<std::int64_t>& d0_values,
                                           const std::vector<double>& alphas,
                                           DistanceMode mode = DistanceMode::Average);

} // namespace qj
