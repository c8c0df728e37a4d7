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

#include "qjoule/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace qj {

std::string to_string(GraphFamily f) {
    switch (f) {
    case GraphFamily::Linear: return "linear";
    case GraphFamily::Circular: return "circular";
    case GraphFamily::SquareLattice: return "grid";
    case GraphFamily::HeavyHex: return "heavy_hex";
    case GraphFamily::FullyConnected: return "full";
    case GraphFamily::Custom: return "custom";
    }
    throw DomainError("unknown graph family");
}

GraphFamily graph_family_from_string(const std::string& s) {
    if (s == "linear") return GraphFamily::Linear;
    if (s == "circular") return GraphFamily::Circular;
    if (s == "grid" || s == "square_lattice") return GraphFamily::SquareLattice;
    if (s == "heavy_hex" || s == "heavy-hex") return GraphFamily::HeavyHex;
    if (s == "full" || s == "fully_connected") return GraphFamily::FullyConnected;
    if (s == "custom") return GraphFamily::Custom;
    throw ConfigError("unknown graph family '" + s + "'");
}

CouplingGraph::CouplingGraph(GraphFamily family, int n) : family_(family), adjacency_(n) {
    if (n < 1) {
        throw DomainError("graph needs at least one node");
    }
}

void CouplingGraph::add_edge(int u, int v) {
    if (u == v) {
        throw ConfigError("self-loop on node " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
        throw ConfigError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    for (int w : adjacency_[u]) {
        if (w == v) {
            throw ConfigError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
}

CouplingGraph CouplingGraph::linear(int n) {
    if (n < 2) {
        throw DomainError("linear graph needs n >= 2");
    }
    CouplingGraph g(GraphFamily::Linear, n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

CouplingGraph CouplingGraph::circular(int n) {
    if (n < 2) {
        throw DomainError("circular graph needs n >= 2");
    }
    CouplingGraph g(GraphFamily::Circular, n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    if (n > 2) {   // n == 2 degenerates to a single edge; keep the graph simple
        g.add_edge(n - 1, 0);
    }
    return g;
}

CouplingGraph CouplingGraph::square_lattice(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("square lattice needs rows, cols >= 1");
    }
    if (static_cast<std::int64_t>(rows) * cols < 2) {
        throw DomainError("square lattice needs at least two nodes");
    }
    CouplingGraph g(GraphFamily::SquareLattice, rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return g;
}

CouplingGraph CouplingGraph::heavy_hex(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("heavy-hex lattice needs rows, cols >= 1");
    }
    // Brick-wall hexagonal lattice: columns of 2*rows+2 nodes joined
    // vertically, horizontal rungs where row and column parity agree. The two
    // degree-1 corners do not belong to any hexagon and are dropped.
    const int height = 2 * rows + 2;
    const int raw_nodes = height * (cols + 1);
    std::vector<std::pair<int, int>> raw_edges;
    auto id = [height](int i, int j) { return j * height + i; };
    for (int j = 0; j <= cols; ++j) {
        for (int i = 0; i + 1 < height; ++i) {
            raw_edges.emplace_back(id(i, j), id(i + 1, j));
        }
    }
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < height; ++i) {
            if (i % 2 == j % 2) {
                raw_edges.emplace_back(id(i, j), id(i, j + 1));
            }
        }
    }
    std::vector<int> degree(raw_nodes, 0);
    for (const auto& [u, v] : raw_edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> relabel(raw_nodes, -1);
    int hex_nodes = 0;
    for (int v = 0; v < raw_nodes; ++v) {
        if (degree[v] > 1) {
            relabel[v] = hex_nodes++;
        }
    }
    // Subdivide every surviving edge once.
    std::vector<std::pair<int, int>> hex_edges;
    for (const auto& [u, v] : raw_edges) {
        if (relabel[u] >= 0 && relabel[v] >= 0) {
            hex_edges.emplace_back(relabel[u], relabel[v]);
        }
    }
    const int total = hex_nodes + static_cast<int>(hex_edges.size());
    CouplingGraph g(GraphFamily::HeavyHex, total);
    int next = hex_nodes;
    for (const auto& [u, v] : hex_edges) {
        g.add_edge(u, next);
        g.add_edge(next, v);
        ++next;
    }
    return g;
}

CouplingGraph CouplingGraph::fully_connected(int n) {
    if (n < 2) {
        throw DomainError("fully connected graph needs n >= 2");
    }
    CouplingGraph g(GraphFamily::FullyConnected, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

CouplingGraph CouplingGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 2) {
        throw DomainError("custom graph needs n >= 2");
    }
    CouplingGraph g(GraphFamily::Custom, n);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

CouplingGraph CouplingGraph::from_edge_list(std::istream& in) {
    int n = 0;
    std::int64_t m = 0;
    if (!(in >> n >> m)) {
        throw ConfigError("edge list: expected header line 'n m'");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw ConfigError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        }
        edges.emplace_back(u, v);
    }
    return from_edges(n, edges);
}

CouplingGraph CouplingGraph::from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open edge list file '" + path + "'");
    }
    return from_edge_list(in);
}

GraphMetrics metrics(const CouplingGraph& g) {
    const int n = g.node_count();
    GraphMetrics m;
    m.nodes = n;
    m.edges = g.edge_count();
    if (n == 1) {
        m.avg_shortest_path = 0.0;
        return m;
    }
    std::vector<int> dist(n);
    std::vector<int> frontier;
    frontier.reserve(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        frontier.clear();
        frontier.push_back(src);
        std::size_t head = 0;
        while (head < frontier.size()) {
            const int u = frontier[head++];
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    frontier.push_back(v);
                }
            }
        }
        for (int v = src + 1; v < n; ++v) {
            if (dist[v] < 0) {
                throw DomainError("graph is disconnected: no path between nodes " +
                                  std::to_string(src) + " and " + std::to_string(v));
            }
            m.distance_sum += static_cast<std::uint64_t>(dist[v]);
            m.diameter = std::max(m.diameter, dist[v]);
        }
    }
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    m.avg_shortest_path = static_cast<double>(m.distance_sum) / pairs;
    return m;
}

void validate(const RoutingInput& r) {
    if (r.d0 < 1) {
        throw DomainError("pre-routing depth D0 must be >= 1");
    }
    if (!(r.alpha_2q >= 0.0 && r.alpha_2q <= 1.0)) {
        throw DomainError("alpha_2q must be in [0, 1]");
    }
}

std::int64_t swap_overhead_layers(const GraphMetrics& m, DistanceMode mode) {
    if (mode == DistanceMode::Diameter) {
        return 3 * (static_cast<std::int64_t>(m.diameter) / 2);   // ceil((d-1)/2) == floor(d/2)
    }
    // ceil((dbar - 1) / 2) with dbar = sum / pairs, kept in integer arithmetic.
    const std::uint64_t pairs = static_cast<std::uint64_t>(m.nodes) * (m.nodes - 1) / 2;
    if (pairs == 0 || m.distance_sum <= pairs) {
        return 0;   // dbar <= 1: fully connected, no overhead
    }
    const std::uint64_t numerator = m.distance_sum - pairs;
    return 3 * static_cast<std::int64_t>((numerator + 2 * pairs - 1) / (2 * pairs));
}

std::int64_t post_routing_depth(const RoutingInput& r, const GraphMetrics& m, DistanceMode mode) {
    validate(r);
    const double multiplier = 1.0 + r.alpha_2q * static_cast<double>(swap_overhead_layers(m, mode));
    return std::llround(static_cast<double>(r.d0) * multiplier);
}

std::int64_t post_routing_depth(const RoutingInput& r, const CouplingGraph& g, DistanceMode mode) {
    return post_routing_depth(r, metrics(g), mode);
}

std::vector<RoutingSweepRow> routing_sweep(const std::vector<CouplingGraph>& graphs,
                                           const std::vector<std::int64_t>& d0_values,
                                           const std::vector<double>& alphas,
                                           DistanceMode mode) {
    if (graphs.empty() || d0_values.empty() || alphas.empty()) {
        throw ConfigError("routing sweep needs at least one graph, one D0 and one alpha");
    }
    std::vector<std::int64_t> sorted_d0 = d0_values;
    std::sort(sorted_d0.begin(), sorted_d0.end());
    std::vector<RoutingSweepRow> rows;
    rows.reserve(graphs.size() * sorted_d0.size() * alphas.size());
    for (const auto& g : graphs) {
        const GraphMetrics m = metrics(g);
        for (const auto d0 : sorted_d0) {
            for (const double alpha : alphas) {
                const RoutingInput r{d0, alpha};
                rows.push_back({g.family(), m.nodes, m.avg_shortest_path, m.diameter, d0, alpha,
                                post_routing_depth(r, m, mode)});
            }
        }
    }
    return rows;
}

} // namespace qj
