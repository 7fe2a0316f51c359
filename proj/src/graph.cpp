#include "mpart/graph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace mpart {

SimpleGraph::SimpleGraph(int vertices) : n(vertices), adj(vertices, 0) {
    if (vertices < 0 || vertices > 31)
        throw std::invalid_argument("graph size out of range");
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (adjacent(u, v)) throw std::invalid_argument("parallel edge rejected");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::plus_isolated_vertex() const {
    SimpleGraph g(n + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_graph(int k) {
    SimpleGraph g(k);
    for (int u = 0; u < k; u++)
        for (int v = u + 1; v < k; v++) g.add_edge(u, v);
    return g;
}

SimpleGraph empty_graph(int k) { return SimpleGraph(k); }

SimpleGraph path_graph(int k) {
    SimpleGraph g(k);
    for (int v = 1; v < k; v++) g.add_edge(v - 1, v);
    return g;
}

SimpleGraph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    SimpleGraph g = path_graph(k);
    g.add_edge(0, k - 1);
    return g;
}

SimpleGraph star_graph(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int v = 1; v <= leaves; v++) g.add_edge(0, v);
    return g;
}

SimpleGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            lineno++;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("empty graph file");
    std::istringstream head(line);
    int n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header \"n m\"");
    SimpleGraph g(n);
    for (int i = 0; i < m; i++) {
        if (!next_line())
            throw std::invalid_argument("unexpected end of file: expected " +
                                        std::to_string(m) + " edges");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected edge \"u v\"");
        if (!(0 <= u && u < v && v < n))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": edge must satisfy 0 <= u < v < n");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

std::string format_graph(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

bool is_bipartite_for(const SimpleGraph& g, const Bipartition& bip) {
    for (auto [u, v] : g.edges)
        if (bip.in_u(u) == bip.in_u(v)) return false;
    return true;
}

Bipartition bipartition_of_connected(const SimpleGraph& g) {
    if (g.n == 0) return Bipartition{};
    std::vector<int> colour(g.n, -1);
    std::deque<int> queue{0};
    colour[0] = 0;
    int seen = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < g.n; v++) {
            if (!g.adjacent(u, v)) continue;
            if (colour[v] == -1) {
                colour[v] = 1 - colour[u];
                queue.push_back(v);
                seen++;
            } else if (colour[v] == colour[u]) {
                throw std::invalid_argument("graph is not bipartite");
            }
        }
    }
    if (seen != g.n) throw std::invalid_argument("graph is not connected");
    Bipartition bip;
    for (int v = 0; v < g.n; v++)
        if (colour[v] == 0) bip.u_side |= 1u << v;
    return bip;
}

} // namespace mpart
