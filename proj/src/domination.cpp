#include "cdcrit/domination.hpp"

#include <algorithm>
#include <bit>

namespace cdcrit {

namespace {

bool subset_connected(const MaskView& mv, std::uint64_t chosen) {
    if (chosen == 0) return false;
    std::uint64_t seed = chosen & (~chosen + 1);
    std::uint64_t reach = seed;
    for (;;) {
        std::uint64_t frontier = reach;
        std::uint64_t next = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= mv.adj[v] & chosen;
        }
        if (next == reach) break;
        reach = next;
    }
    return reach == chosen;
}

std::uint64_t coverage(const MaskView& mv, std::uint64_t chosen) {
    std::uint64_t cov = 0;
    std::uint64_t m = chosen;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        cov |= mv.closed[v];
    }
    return cov;
}

VertexSet to_set(std::uint64_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Enumerates vertex subsets of exactly `size` free picks (all > any forced vertex
// constraint is NOT imposed; free picks run over all non-forced vertices in
// ascending order), pruning branches whose closed neighborhood can no longer
// dominate. Calls sink on every dominating+connected subset, in lexicographic
// order of the free part; sink returns false to stop the search.
struct Searcher {
    const MaskView& mv;
    const SearchBudget& budget;
    std::vector<std::uint64_t> suffix_cov; // over free vertices, by vertex id
    std::uint64_t forced_mask = 0;
    std::uint64_t require_mask = 0;
    std::uint64_t nodes = 0;

    Searcher(const MaskView& m, const SearchBudget& b) : mv(m), budget(b) {
        suffix_cov.assign(mv.n + 1, 0);
    }

    void prepare() {
        suffix_cov[mv.n] = 0;
        for (int v = mv.n - 1; v >= 0; --v) {
            std::uint64_t c = suffix_cov[v + 1];
            if (!(forced_mask >> v & 1)) c |= mv.closed[v];
            suffix_cov[v] = c;
        }
    }

    void tick() {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("subset search exceeded " + std::to_string(budget.max_nodes) +
                                 " nodes");
        if (budget.deadline && (nodes & 0xFFF) == 1 &&
            std::chrono::steady_clock::now() > *budget.deadline)
            throw BudgetExceeded("subset search exceeded time budget");
    }

    template <typename Sink>
    bool recurse(int start, int remaining, std::uint64_t chosen, std::uint64_t covered,
                 Sink&& sink) {
        tick();
        if (remaining == 0) {
            if (covered == mv.full && (require_mask == 0 || (chosen & require_mask)) &&
                subset_connected(mv, chosen))
                return sink(chosen);
            return true;
        }
        for (int v = start; v <= mv.n - remaining; ++v) {
            if (forced_mask >> v & 1) continue;
            if ((covered | mv.closed[v] | suffix_cov[v + 1]) != mv.full) continue;
            if (!recurse(v + 1, remaining - 1, chosen | (1ULL << v), covered | mv.closed[v],
                         sink))
                return false;
        }
        return true;
    }

    // remaining free slots = size - popcount(forced)
    template <typename Sink>
    void run(int size, Sink&& sink) {
        int forced_count = std::popcount(forced_mask);
        if (size < forced_count) return;
        std::uint64_t covered = coverage(mv, forced_mask);
        int remaining = size - forced_count;
        if (remaining == 0) {
            tick();
            if (covered == mv.full && forced_mask != 0 &&
                (require_mask == 0 || (forced_mask & require_mask)) &&
                subset_connected(mv, forced_mask))
                sink(forced_mask);
            return;
        }
        if ((covered | suffix_cov[0]) != mv.full) return;
        recurse(0, remaining, forced_mask, covered, sink);
    }
};

MaskView checked_view(const Graph& g) {
    if (g.n > 64)
        throw BudgetExceeded("exact search supports at most 64 vertices, got n=" +
                             std::to_string(g.n));
    return mask_view(g);
}

} // namespace

DominationCertificate check_set(const Graph& g, const VertexSet& s) {
    DominationCertificate cert;
    cert.set = s;
    std::sort(cert.set.begin(), cert.set.end());
    cert.size = static_cast<int>(cert.set.size());
    for (int v : cert.set)
        if (v < 0 || v >= g.n) throw InvalidSubgraph("set vertex out of range");

    std::vector<char> in_set(g.n, 0);
    for (int v : cert.set) in_set[v] = 1;
    cert.is_dominating = true;
    for (int v = 0; v < g.n; ++v) {
        if (in_set[v]) continue;
        bool dominated = false;
        for (int w : g.adj[v])
            if (in_set[w]) {
                dominated = true;
                break;
            }
        if (!dominated) {
            cert.is_dominating = false;
            break;
        }
    }
    if (cert.set.empty()) {
        cert.is_dominating = g.n == 0;
        cert.induces_connected = false;
        return cert;
    }
    cert.induces_connected = is_connected(induced_subgraph(g, cert.set));
    return cert;
}

std::optional<VertexSet> find_cd_set(const Graph& g, int max_size, const VertexSet& forced,
                                     const VertexSet& require_any, const SearchBudget& budget) {
    if (g.n == 0) return VertexSet{};
    MaskView mv = checked_view(g);
    Searcher s(mv, budget);
    for (int v : forced) s.forced_mask |= 1ULL << v;
    for (int v : require_any) s.require_mask |= 1ULL << v;
    s.prepare();
    int lo = std::max<int>(1, std::popcount(s.forced_mask));
    std::optional<VertexSet> found;
    for (int size = lo; size <= std::min(max_size, g.n) && !found; ++size) {
        s.run(size, [&](std::uint64_t chosen) {
            found = to_set(chosen);
            return false;
        });
    }
    return found;
}

GammaResult connected_domination_number(const Graph& g, const SearchBudget& budget) {
    if (g.n == 0) return {0, {}};
    if (!is_connected(g)) throw NotConnected("gamma_c requires a connected graph");
    int cap = budget.max_subset_size < 0 ? g.n : budget.max_subset_size;
    auto w = find_cd_set(g, cap, {}, {}, budget);
    if (!w)
        throw BudgetExceeded("no CD-set within size cap " + std::to_string(cap));
    return {static_cast<int>(w->size()), *w};
}

std::vector<VertexSet> enumerate_cd_sets_of_size(const Graph& g, int size,
                                                 const SearchBudget& budget) {
    std::vector<VertexSet> out;
    if (g.n == 0 || size <= 0 || size > g.n) return out;
    MaskView mv = checked_view(g);
    Searcher s(mv, budget);
    s.prepare();
    s.run(size, [&](std::uint64_t chosen) {
        out.push_back(to_set(chosen));
        return true;
    });
    return out;
}

std::vector<VertexSet> enumerate_min_cd_sets(const Graph& g, const SearchBudget& budget) {
    if (!is_connected(g)) throw NotConnected("gamma_c requires a connected graph");
    if (g.n == 0) return {};
    auto gamma = connected_domination_number(g, budget);
    return enumerate_cd_sets_of_size(g, gamma.value, budget);
}

GammaResult domination_number(const Graph& g, const SearchBudget& budget) {
    if (g.n == 0) return {0, {}};
    MaskView mv = checked_view(g);
    // Same lexicographic subset search, without the connectivity requirement.
    std::vector<std::uint64_t> suffix(mv.n + 1, 0);
    for (int v = mv.n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | mv.closed[v];
    std::uint64_t nodes = 0;
    auto tick = [&] {
        if (++nodes > budget.max_nodes) throw BudgetExceeded("domination search over budget");
    };
    std::optional<std::uint64_t> found;
    auto rec = [&](auto&& self, int start, int remaining, std::uint64_t chosen,
                   std::uint64_t covered) -> bool {
        tick();
        if (covered == mv.full) {
            // Pad with nothing: chosen already dominates; but we enumerate exact sizes,
            // so only accept when remaining == 0.
            if (remaining == 0) {
                found = chosen;
                return false;
            }
        }
        if (remaining == 0) return true;
        for (int v = start; v <= mv.n - remaining; ++v) {
            if ((covered | mv.closed[v] | suffix[v + 1]) != mv.full) continue;
            if (!self(self, v + 1, remaining - 1, chosen | (1ULL << v), covered | mv.closed[v]))
                return false;
        }
        return true;
    };
    int cap = budget.max_subset_size < 0 ? g.n : budget.max_subset_size;
    for (int size = 1; size <= cap && !found; ++size) rec(rec, 0, size, 0, 0);
    if (!found) throw BudgetExceeded("no dominating set within size cap");
    return {std::popcount(*found), to_set(*found)};
}

namespace {

// Exhaustive spanning-tree enumeration by edge include/exclude with a union-find
// per branch; prunes cycles and infeasible suffixes.
struct TreeEnum {
    const std::vector<std::pair<int, int>>& edges;
    int n;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    int best = -1;
    std::vector<int> deg;

    TreeEnum(const std::vector<std::pair<int, int>>& es, int nn, std::uint64_t mn)
        : edges(es), n(nn), max_nodes(mn), deg(nn, 0) {}

    static int find(std::vector<int>& p, int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }

    void rec(std::size_t idx, int picked, std::vector<int> parent) {
        if (++nodes > max_nodes) throw BudgetExceeded("spanning-tree enumeration over budget");
        if (picked == n - 1) {
            int leaves = 0;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) ++leaves;
            best = std::max(best, leaves);
            return;
        }
        if (idx >= edges.size()) return;
        if (static_cast<int>(edges.size() - idx) < n - 1 - picked) return;
        auto [u, v] = edges[idx];
        int ru = find(parent, u), rv = find(parent, v);
        if (ru != rv) {
            auto p2 = parent;
            p2[ru] = rv;
            ++deg[u];
            ++deg[v];
            rec(idx + 1, picked + 1, std::move(p2));
            --deg[u];
            --deg[v];
        }
        rec(idx + 1, picked, std::move(parent));
    }
};

} // namespace

MaxLeafResult max_leaf_number(const Graph& g, int enumeration_threshold,
                              const SearchBudget& budget) {
    if (g.n < 2) throw InvalidParams("max_leaf_number requires n >= 2");
    if (!is_connected(g)) throw NotConnected("max_leaf_number requires a connected graph");
    if (g.n <= enumeration_threshold) {
        auto es = g.edges();
        TreeEnum te(es, g.n, budget.max_nodes);
        std::vector<int> parent(g.n);
        for (int v = 0; v < g.n; ++v) parent[v] = v;
        te.rec(0, 0, parent);
        return {te.best, MaxLeafMethod::SpanningTreeEnumeration};
    }
    auto gamma = connected_domination_number(g, budget);
    return {g.n - gamma.value, MaxLeafMethod::Identity};
}

} // namespace cdcrit
