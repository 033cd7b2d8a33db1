#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdcrit/errors.hpp"

namespace cdcrit {

// A sorted list of vertex ids. Used both as "set of vertices" and as ordered role lists.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// No self-loops, no multi-edges; adjacency is symmetric.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);

// Copy of g with the edge uv added (no-op if already present).
Graph add_edge_copy(const Graph& g, int u, int v);

// Subgraph induced by vs; vertex i of the result is vs[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

// Half-open vertex ranges of the input parts inside the combined graph.
using PartOffsets = std::vector<std::pair<int, int>>;

struct JoinResult {
    Graph graph;
    PartOffsets offsets;
};

// Disjoint union of parts plus complete joins between consecutive parts only.
JoinResult join_sequence(const std::vector<Graph>& parts);

// Disjoint union of g1 and g2 plus all edges between V(g1) and h (h in g2's labels).
JoinResult join_onto_subgraph(const Graph& g1, const Graph& g2, const VertexSet& h);

// Connected components of G - removed, ordered by smallest contained vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});
bool is_connected(const Graph& g);

struct BlockCutDecomposition {
    VertexSet cut_vertices;              // sorted
    std::vector<VertexSet> blocks;       // each sorted; ordered by (min vertex, content)
    int zeta() const { return static_cast<int>(cut_vertices.size()); }
};

// Lowpoint (DFS) block/cut-vertex decomposition. Isolated vertices become singleton blocks.
BlockCutDecomposition cut_vertices_and_blocks(const Graph& g);

// Per-vertex closed-neighborhood and adjacency bitmasks; requires n <= 64.
struct MaskView {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> adj;     // open neighborhoods
    std::vector<std::uint64_t> closed;  // N[v]
};
MaskView mask_view(const Graph& g);

// Text format: optional '#' comment lines, then "n m", then m lines "u v" (u < v),
// sorted lexicographically on output.
std::string to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

} // namespace cdcrit
