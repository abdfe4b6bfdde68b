#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homw1/errors.hpp"

namespace homw1::graphs {

// Simple undirected loopless graph on dense integer vertices.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency_lists() const;
    bool is_bipartite() const;
};

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

Graph make_complete(int m);
Graph make_cycle(int s);
Graph make_path(int s);  // s vertices, s-1 edges
Graph make_kneser(int n, int k);
Graph make_mycielski(const Graph& g);

// CLI spec strings: "complete:4", "cycle:5", "path:4", "kneser:5:2",
// "mycielski:cycle:5", "file:PATH".
Graph parse_graph_spec(const std::string& spec);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

struct GraphAutomorphism {
    std::vector<int> perm;
};

bool is_automorphism(const Graph& g, const GraphAutomorphism& a);

// For g = cycle(2r+1) with the generator's labeling: v_i -> v_{2r-i}.
GraphAutomorphism flip_automorphism(const Graph& g);

long long count_homomorphisms(const Graph& g, const Graph& h);

// Exhaustive; throws GuardExceeded when vertex_count > guard.
int chromatic_number(const Graph& g, int guard_vertices = 12);

}  // namespace homw1::graphs
