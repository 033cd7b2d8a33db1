#include "cdcrit/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cdcrit {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adj) twice += a.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidParams("vertex count must be non-negative");
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        nb[u].insert(v);
        nb[v].insert(u);
    }
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (int v = 0; v < n; ++v) g.adj[v].assign(nb[v].begin(), nb[v].end());
    return g;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) es.emplace_back(u, v);
    return build_graph(g.n, es);
}

Graph add_edge_copy(const Graph& g, int u, int v) {
    auto es = g.edges();
    es.emplace_back(std::min(u, v), std::max(u, v));
    return build_graph(g.n, es);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    std::vector<int> index(g.n, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.n) throw InvalidSubgraph("vertex out of range");
        index[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (int u : vs)
        for (int w : g.adj[u])
            if (index[w] >= 0 && u < w) es.emplace_back(index[u], index[w]);
    return build_graph(static_cast<int>(vs.size()), es);
}

JoinResult join_sequence(const std::vector<Graph>& parts) {
    if (parts.empty()) throw EmptyJoin("join_sequence requires at least one part");
    PartOffsets offsets;
    int total = 0;
    for (const auto& p : parts) {
        offsets.emplace_back(total, total + p.n);
        total += p.n;
    }
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int base = offsets[i].first;
        for (auto [u, v] : parts[i].edges()) es.emplace_back(base + u, base + v);
        if (i + 1 < parts.size()) {
            for (int u = offsets[i].first; u < offsets[i].second; ++u)
                for (int v = offsets[i + 1].first; v < offsets[i + 1].second; ++v)
                    es.emplace_back(u, v);
        }
    }
    return {build_graph(total, es), offsets};
}

JoinResult join_onto_subgraph(const Graph& g1, const Graph& g2, const VertexSet& h) {
    for (int v : h)
        if (v < 0 || v >= g2.n) throw InvalidSubgraph("H is not a subset of V(G2)");
    PartOffsets offsets{{0, g1.n}, {g1.n, g1.n + g2.n}};
    std::vector<std::pair<int, int>> es = g1.edges();
    for (auto [u, v] : g2.edges()) es.emplace_back(g1.n + u, g1.n + v);
    for (int u = 0; u < g1.n; ++u)
        for (int v : h) es.emplace_back(u, g1.n + v);
    return {build_graph(g1.n + g2.n, es), offsets};
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    std::vector<char> gone(g.n, 0), seen(g.n, 0);
    for (int v : removed) {
        if (v < 0 || v >= g.n) throw InvalidSubgraph("removed vertex out of range");
        gone[v] = 1;
    }
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (gone[s] || seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.adj[u])
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // DFS from increasing start vertices already yields smallest-vertex order.
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return components(g).size() == 1;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& gr)
        : g(gr), disc(gr.n, -1), low(gr.n, 0), parent(gr.n, -1), is_cut(gr.n, 0) {}

    // Iterative DFS to avoid recursion limits on long paths.
    void run(int root) {
        struct Frame {
            int v;
            std::size_t next = 0;
        };
        std::vector<Frame> st{{root}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            Frame& f = st.back();
            int v = f.v;
            if (f.next < g.adj[v].size()) {
                int w = g.adj[v][f.next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    if (v == root) ++root_children;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    st.push_back({w});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int p = parent[v];
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_cut[p] = 1;
                        // Pop the block rooted at tree edge (p, v).
                        std::set<int> verts;
                        while (!edge_stack.empty()) {
                            auto [a, b] = edge_stack.back();
                            edge_stack.pop_back();
                            verts.insert(a);
                            verts.insert(b);
                            if (a == p && b == v) break;
                        }
                        if (!verts.empty()) blocks.emplace_back(verts.begin(), verts.end());
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

} // namespace

BlockCutDecomposition cut_vertices_and_blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.n; ++v)
        if (bf.disc[v] == -1) {
            bf.run(v);
            if (g.adj[v].empty()) bf.blocks.push_back({v}); // isolated vertex
        }
    BlockCutDecomposition out;
    for (int v = 0; v < g.n; ++v)
        if (bf.is_cut[v]) out.cut_vertices.push_back(v);
    out.blocks = std::move(bf.blocks);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

MaskView mask_view(const Graph& g) {
    if (g.n > 64) throw SizeLimit("bitmask view requires n <= 64, got n=" + std::to_string(g.n));
    MaskView mv;
    mv.n = g.n;
    mv.full = g.n == 64 ? ~0ULL : ((1ULL << g.n) - 1);
    mv.adj.assign(g.n, 0);
    mv.closed.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t m = 0;
        for (int w : g.adj[v]) m |= 1ULL << w;
        mv.adj[v] = m;
        mv.closed[v] = m | (1ULL << v);
    }
    return mv;
}

std::string to_text(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> data;
    while (std::getline(is, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        data.push_back(line);
    }
    if (data.empty()) throw ParseError("empty graph file");
    std::istringstream head(data[0]);
    int n = 0;
    long m = 0;
    if (!(head >> n >> m)) throw ParseError("expected header line \"n m\"");
    if (static_cast<long>(data.size()) - 1 < m)
        throw ParseError("expected " + std::to_string(m) + " edge lines");
    std::vector<std::pair<int, int>> es;
    for (long i = 1; i <= m; ++i) {
        std::istringstream el(data[static_cast<std::size_t>(i)]);
        int u = 0, v = 0;
        if (!(el >> u >> v)) throw ParseError("bad edge line: " + data[static_cast<std::size_t>(i)]);
        es.emplace_back(u, v);
    }
    return build_graph(n, es);
}

} // namespace cdcrit
