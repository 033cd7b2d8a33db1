#include "cdcrit/hamiltonicity.hpp"

#include <algorithm>
#include <bit>

namespace cdcrit {

std::optional<PathCertificate> hamiltonian_path_exact(const Graph& g, const HpConfig& cfg) {
    if (g.n > cfg.max_n)
        throw SizeLimit("hamiltonian_path_exact capped at n=" + std::to_string(cfg.max_n) +
                        ", got n=" + std::to_string(g.n));
    if (g.n == 0) return PathCertificate{};
    if (g.n == 1) return PathCertificate{{0}};

    MaskView mv = mask_view(g);
    std::uint64_t full = mv.full;
    // dp[mask] = bitmask of vertices that can end a path visiting exactly `mask`.
    std::vector<std::uint64_t> dp(1ULL << g.n, 0);
    for (int v = 0; v < g.n; ++v) dp[1ULL << v] = 1ULL << v;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::uint64_t ends = dp[mask];
        if (!ends) continue;
        std::uint64_t m = ends;
        while (m) {
            int e = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t nxt = mv.adj[e] & ~mask;
            while (nxt) {
                int v = std::countr_zero(nxt);
                nxt &= nxt - 1;
                dp[mask | (1ULL << v)] |= 1ULL << v;
            }
        }
    }
    if (!dp[full]) return std::nullopt;

    PathCertificate cert;
    std::uint64_t mask = full;
    int end = std::countr_zero(dp[full]);
    cert.sequence.push_back(end);
    while (mask != (1ULL << end)) {
        std::uint64_t prev_mask = mask ^ (1ULL << end);
        std::uint64_t cands = dp[prev_mask] & mv.adj[end];
        int prev = std::countr_zero(cands);
        mask = prev_mask;
        end = prev;
        cert.sequence.push_back(end);
    }
    std::reverse(cert.sequence.begin(), cert.sequence.end());
    // Canonical orientation: a reversed Hamiltonian path is the same path, so
    // report the one whose first vertex is smaller.
    if (cert.sequence.back() < cert.sequence.front())
        std::reverse(cert.sequence.begin(), cert.sequence.end());
    return cert;
}

PathVerdict verify_path(const Graph& g, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != g.n)
        return {false, -1,
                "sequence length " + std::to_string(seq.size()) + " != n=" + std::to_string(g.n)};
    std::vector<char> seen(g.n, 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= g.n)
            return {false, static_cast<int>(i), "vertex out of range at index " + std::to_string(i)};
        if (seen[v])
            return {false, static_cast<int>(i),
                    "vertex " + std::to_string(v) + " repeated at index " + std::to_string(i)};
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1]))
            return {false, static_cast<int>(i),
                    std::to_string(seq[i]) + " and " + std::to_string(seq[i + 1]) +
                        " are not adjacent (index " + std::to_string(i) + "-" +
                        std::to_string(i + 1) + ")"};
    return {true, -1, ""};
}

WitnessVerdict verify_nontraceability_witness(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InvalidWitness("witness set must be nonempty");
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.n) throw InvalidWitness("witness vertex out of range");
    if (static_cast<int>(sorted.size()) == g.n)
        throw InvalidWitness("witness set must be a proper subset of V");
    int omega = static_cast<int>(components(g, sorted).size());
    return {omega > static_cast<int>(sorted.size()) + 1, omega};
}

namespace {

// Remaining vertices of `pool` not yet used, ascending.
VertexSet remaining(const VertexSet& pool, const std::vector<char>& used) {
    VertexSet out;
    for (int v : pool)
        if (!used[v]) out.push_back(v);
    return out;
}

PathCertificate b1_path(const Graph& g, const FamilyTag& tag) {
    int b = tag.single("b");
    VertexSet centers = tag.role("S");
    VertexSet leaves;
    for (const auto& [name, vs] : tag.roles)
        if (name.rfind("Sprime.", 0) == 0) leaves.insert(leaves.end(), vs.begin(), vs.end());
    std::sort(leaves.begin(), leaves.end());
    VertexSet body = centers; // centers + isolated vertices, the second clique
    if (tag.has_role("Ssecond")) {
        const auto& iso = tag.role("Ssecond");
        body.insert(body.end(), iso.begin(), iso.end());
    }
    std::sort(body.begin(), body.end());

    // Lexicographically smallest leaf-center edge (u in leaves, v in centers).
    int u = -1, v = -1;
    for (int lu : leaves) {
        for (int cv : centers)
            if (g.has_edge(lu, cv)) {
                u = lu;
                v = cv;
                break;
            }
        if (u >= 0) break;
    }
    if (u < 0) throw InvalidParams("B1 tag/graph mismatch: no leaf-center edge");
    int uprime = -1;
    for (int lu : leaves)
        if (lu != u) {
            uprime = lu;
            break;
        }
    if (uprime < 0) throw InvalidParams("B1 requires at least two leaves");

    PathCertificate cert;
    std::vector<char> used(g.n, 0);
    cert.sequence.push_back(b);
    used[b] = 1;
    cert.sequence.push_back(uprime);
    used[uprime] = 1;
    used[u] = 1; // reserve: u must come last among the leaves
    for (int w : remaining(leaves, used)) {
        cert.sequence.push_back(w);
        used[w] = 1;
    }
    cert.sequence.push_back(u);
    cert.sequence.push_back(v);
    used[v] = 1;
    for (int w : remaining(body, used)) {
        cert.sequence.push_back(w);
        used[w] = 1;
    }
    return cert;
}

} // namespace

PathCertificate constructive_hamiltonian_path(const Graph& g, const FamilyTag& tag) {
    if (tag.family == "B1") return b1_path(g, tag);

    if (tag.family == "Uk") {
        PathCertificate cert;
        for (int c : tag.role("c")) cert.sequence.push_back(c);
        auto pb = b1_path(g, tag).sequence; // starts at b
        cert.sequence.insert(cert.sequence.end(), pb.begin(), pb.end());
        return cert;
    }

    if (tag.family == "G1") {
        int k = std::stoi(tag.params.at("k"));
        int ell = std::stoi(tag.params.at("ell"));
        const VertexSet& c = tag.role("c");
        const VertexSet& q = tag.role("Q");
        PathCertificate cert;
        if (ell <= k - 4) {
            // c_0..c_{ell-1}, clique, c_ell..c_{k-4}, then the B1 path from b.
            for (int i = 0; i < ell; ++i) cert.sequence.push_back(c[i]);
            for (int w : q) cert.sequence.push_back(w);
            for (std::size_t i = ell; i < c.size(); ++i) cert.sequence.push_back(c[i]);
        } else {
            // ell = k-3: c_0..c_{k-4}, clique, then b.
            for (int ci : c) cert.sequence.push_back(ci);
            for (int w : q) cert.sequence.push_back(w);
        }
        auto pb = b1_path(g, tag).sequence;
        cert.sequence.insert(cert.sequence.end(), pb.begin(), pb.end());
        return cert;
    }

    throw UnsupportedFamily("no constructive path for family " + tag.family +
                            " (use the exact solver)");
}

std::optional<NonTraceabilityWitness> witness_search(const Graph& g,
                                                     const std::optional<FamilyTag>& tag,
                                                     int size_bound) {
    if (tag && (tag->family == "Ns" || tag->family == "Pkl") && tag->has_role("B1") &&
        tag->has_role("B2") && tag->has_role("x")) {
        VertexSet s = tag->role("B1");
        const auto& b2 = tag->role("B2");
        s.insert(s.end(), b2.begin(), b2.end());
        s.push_back(tag->single("x"));
        std::sort(s.begin(), s.end());
        auto verdict = verify_nontraceability_witness(g, s);
        if (verdict.valid) return NonTraceabilityWitness{s, verdict.component_count};
    }

    if (g.n < 2) return std::nullopt;
    int base_omega = static_cast<int>(components(g).size());
    std::optional<NonTraceabilityWitness> found;
    VertexSet chosen;
    // Lexicographic subsets of each size; prune with omega(G-S) <= omega(G) + sum(deg-1).
    auto rec = [&](auto&& self, int start, int remain, int slack) -> bool {
        if (remain == 0) {
            if (slack < 0) return true; // cannot beat |S|+1 even in the best case
            auto comps = components(g, chosen);
            if (static_cast<int>(comps.size()) > static_cast<int>(chosen.size()) + 1) {
                found = NonTraceabilityWitness{chosen, static_cast<int>(comps.size())};
                return false;
            }
            return true;
        }
        for (int v = start; v <= g.n - remain; ++v) {
            chosen.push_back(v);
            if (!self(self, v + 1, remain - 1, slack + g.degree(v) - 2)) return true;
            chosen.pop_back();
        }
        return true;
    };
    for (int size = 1; size <= std::min(size_bound, g.n - 1) && !found; ++size) {
        chosen.clear();
        // slack tracks omega(G) + sum(deg-1) - (|S|+1): each pick adds deg-1 and costs 1.
        rec(rec, 0, size, base_omega - 1 - 1);
    }
    return found;
}

} // namespace cdcrit
