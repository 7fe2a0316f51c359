#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpart {

// Loop-free undirected graph, no parallel edges.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // (u,v) with u < v
    std::vector<uint32_t> adj;              // adjacency bitsets

    explicit SimpleGraph(int vertices = 0);

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
    int edge_count() const { return int(edges.size()); }

    SimpleGraph complement() const;
    // Appends an isolated vertex.
    SimpleGraph plus_isolated_vertex() const;
};

// Named small graphs for tests and the CLI.
SimpleGraph complete_graph(int k);
SimpleGraph empty_graph(int k);
SimpleGraph path_graph(int k);
SimpleGraph cycle_graph(int k);
SimpleGraph star_graph(int leaves);

// Line 1: "n m"; then m lines "u v" with 0 <= u < v < n.
SimpleGraph parse_graph(const std::string& text);
std::string format_graph(const SimpleGraph& g);

struct Bipartition {
    uint32_t u_side = 0; // bitmask of the U vertices; V = the rest

    bool in_u(int v) const { return (u_side >> v) & 1; }
};

// Checks every edge crosses the U-V cut.
bool is_bipartite_for(const SimpleGraph& g, const Bipartition& bip);

// 2-colouring of a connected graph; throws if not connected or not bipartite.
Bipartition bipartition_of_connected(const SimpleGraph& g);

} // namespace mpart
