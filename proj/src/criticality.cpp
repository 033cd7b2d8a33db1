#include "cdcrit/criticality.hpp"

#include <algorithm>

namespace cdcrit {

namespace {

std::vector<std::pair<int, int>> non_adjacent_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

} // namespace

CriticalityReport criticality_report(const Graph& g, const SearchBudget& budget) {
    if (g.n < 2) throw InvalidParams("criticality_report requires n >= 2");
    if (!is_connected(g)) throw NotConnected("criticality_report requires a connected graph");

    CriticalityReport rep;
    rep.gamma_c = connected_domination_number(g, budget).value;
    rep.zeta = cut_vertices_and_blocks(g).zeta();

    rep.is_critical = true;
    for (auto [u, v] : non_adjacent_pairs(g)) {
        Graph gu = add_edge_copy(g, u, v);
        PairEntry entry;
        entry.u = u;
        entry.v = v;
        auto smaller = find_cd_set(gu, rep.gamma_c - 1, {}, {}, budget);
        entry.gamma_c_after =
            smaller ? static_cast<int>(smaller->size()) : rep.gamma_c;
        entry.min_cd_sets_after = enumerate_cd_sets_of_size(gu, entry.gamma_c_after, budget);
        if (entry.gamma_c_after >= rep.gamma_c) rep.is_critical = false;
        rep.pairs.push_back(std::move(entry));
    }
    rep.k = rep.gamma_c;
    return rep;
}

std::vector<LemmaAudit> lemma1_audit(const Graph& g, int k, const SearchBudget& budget) {
    LemmaAudit a{"L1a", {}}, b{"L1b", {}}, c{"L1c", {}};
    for (auto [x, y] : non_adjacent_pairs(g)) {
        Graph gxy = add_edge_copy(g, x, y);
        auto smaller = find_cd_set(gxy, k - 1, {}, {}, budget);
        int gamma_after = smaller ? static_cast<int>(smaller->size()) : k;
        for (const auto& d : enumerate_cd_sets_of_size(gxy, gamma_after, budget)) {
            int size = static_cast<int>(d.size());
            if (size < k - 2 || size > k - 1)
                a.violations.push_back({x, y, d,
                                        "|D|=" + std::to_string(size) + " outside [k-2,k-1]"});
            bool has_x = std::binary_search(d.begin(), d.end(), x);
            bool has_y = std::binary_search(d.begin(), d.end(), y);
            if (!has_x && !has_y)
                b.violations.push_back({x, y, d, "D avoids both endpoints"});
            // Exactly one endpoint in D: the other's original neighborhood must miss D.
            auto check_c = [&](int in, int out) {
                for (int w : g.adj[out])
                    if (std::binary_search(d.begin(), d.end(), w)) {
                        c.violations.push_back(
                            {x, y, d,
                             "endpoint " + std::to_string(in) + " in D but neighbor " +
                                 std::to_string(w) + " of " + std::to_string(out) +
                                 " also in D"});
                        return;
                    }
            };
            if (has_x && !has_y) check_c(x, y);
            if (has_y && !has_x) check_c(y, x);
        }
    }
    return {a, b, c};
}

std::vector<LemmaAudit> lemma2_audit(const Graph& g, const SearchBudget& budget) {
    LemmaAudit a{"L2a", {}}, b{"L2b", {}}, c{"L2c", {}};
    auto dec = cut_vertices_and_blocks(g);
    if (dec.cut_vertices.empty()) return {a, b, c};

    std::vector<VertexSet> min_sets;
    if (is_connected(g)) min_sets = enumerate_min_cd_sets(g, budget);

    for (int cv : dec.cut_vertices) {
        auto comps = components(g, {cv});
        if (comps.size() != 2)
            a.violations.push_back(
                {cv, -1, {}, "G - c has " + std::to_string(comps.size()) + " components"});
        for (const auto& comp : comps) {
            VertexSet nbhd;
            for (int w : g.adj[cv])
                if (std::binary_search(comp.begin(), comp.end(), w)) nbhd.push_back(w);
            for (std::size_t i = 0; i < nbhd.size(); ++i)
                for (std::size_t j = i + 1; j < nbhd.size(); ++j)
                    if (!g.has_edge(nbhd[i], nbhd[j])) {
                        b.violations.push_back({cv, -1, nbhd,
                                                "neighbors " + std::to_string(nbhd[i]) + "," +
                                                    std::to_string(nbhd[j]) +
                                                    " non-adjacent in one component"});
                        i = nbhd.size();
                        break;
                    }
        }
        for (const auto& d : min_sets)
            if (!std::binary_search(d.begin(), d.end(), cv)) {
                c.violations.push_back({cv, -1, d, "minimum CD-set avoids the cut-vertex"});
                break;
            }
    }
    return {a, b, c};
}

ClassPReport check_class_P(const Graph& g, const VertexSet& h, int k,
                           const SearchBudget& budget) {
    ClassPReport rep;
    VertexSet hs = h;
    std::sort(hs.begin(), hs.end());

    if (hs.size() < 2) {
        rep.failure = "H must have order >= 2";
        return rep;
    }
    for (int v : hs)
        if (v < 0 || v >= g.n) {
            rep.failure = "H vertex out of range";
            return rep;
        }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (!g.has_edge(hs[i], hs[j])) {
                rep.failure = "G[H] is not complete";
                return rep;
            }
    for (int v = 0; v < g.n; ++v) {
        if (std::binary_search(hs.begin(), hs.end(), v)) continue;
        bool adj_all = true;
        for (int w : hs)
            if (!g.has_edge(v, w)) {
                adj_all = false;
                break;
            }
        if (adj_all) {
            rep.failure = "H is not maximal: vertex " + std::to_string(v) +
                          " is adjacent to all of H";
            return rep;
        }
    }
    if (connected_domination_number(g, budget).value != k) {
        rep.failure = "gamma_c(G) != k";
        return rep;
    }

    // Property (b) per pair also certifies gamma_c(G+xy) < k, i.e. criticality.
    for (auto [x, y] : non_adjacent_pairs(g)) {
        Graph gxy = add_edge_copy(g, x, y);
        auto w = find_cd_set(gxy, k - 1, {}, hs, budget);
        if (!w) {
            auto any = find_cd_set(gxy, k - 1, {}, {}, budget);
            rep.failure = any ? "no CD-set of G+xy below size k meets H (pair " +
                                    std::to_string(x) + "," + std::to_string(y) + ")"
                              : "G is not critical at pair " + std::to_string(x) + "," +
                                    std::to_string(y);
            return rep;
        }
        rep.pair_witnesses.push_back({{x, y}, *w});
    }
    rep.preconditions_ok = true;

    for (int v = 0; v < g.n; ++v) {
        auto w = find_cd_set(g, k, {v}, hs, budget);
        if (!w || static_cast<int>(w->size()) != k) {
            rep.failure = "vertex " + std::to_string(v) +
                          " lies in no gamma_c-set meeting H";
            return rep;
        }
        rep.vertex_witnesses.push_back({v, *w});
    }
    rep.verdict = true;
    return rep;
}

ClassB2Report check_class_B2(const Graph& h, int b, const SearchBudget& budget) {
    ClassB2Report rep;
    if (b < 0 || b >= h.n) {
        rep.failure = "head out of range";
        return rep;
    }
    if (!is_connected(h)) {
        rep.failure = "H is not connected";
        return rep;
    }
    auto dec = cut_vertices_and_blocks(h);
    rep.single_block = dec.blocks.size() == 1 && dec.cut_vertices.empty();
    if (!rep.single_block) {
        rep.failure = "H is not a single block";
        return rep;
    }
    auto gamma = connected_domination_number(h, budget);
    rep.gamma_c_is_3 = gamma.value == 3;
    if (!rep.gamma_c_is_3) {
        rep.failure = "gamma_c(H) = " + std::to_string(gamma.value) + ", expected 3";
        return rep;
    }
    const auto& nb = h.adj[b];
    rep.head_neighborhood_complete = true;
    for (std::size_t i = 0; i < nb.size() && rep.head_neighborhood_complete; ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!h.has_edge(nb[i], nb[j])) {
                rep.head_neighborhood_complete = false;
                break;
            }
    if (!rep.head_neighborhood_complete) {
        rep.failure = "N_H(b) is not complete";
        return rep;
    }
    rep.vertices_in_small_sets = true;
    for (int v = 0; v < h.n; ++v) {
        if (v == b) continue;
        if (!find_cd_set(h, 3, {v}, {}, budget)) {
            rep.vertices_in_small_sets = false;
            rep.failure = "vertex " + std::to_string(v) + " lies in no size-3 gamma_c-set";
            return rep;
        }
    }
    rep.pair_sets_exist = true;
    for (int x = 0; x < h.n; ++x) {
        if (x == b) continue;
        for (int y = x + 1; y < h.n; ++y) {
            if (y == b || h.has_edge(x, y)) continue;
            Graph hxy = add_edge_copy(h, x, y);
            // Need a size-2 CD-set containing a neighbor of b and one of {x,y}.
            bool ok = false;
            for (const auto& d : enumerate_cd_sets_of_size(hxy, 2, budget)) {
                bool meets_nb = false, meets_xy = false;
                for (int w : d) {
                    if (h.has_edge(b, w)) meets_nb = true;
                    if (w == x || w == y) meets_xy = true;
                }
                if (meets_nb && meets_xy) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                rep.pair_sets_exist = false;
                rep.failure = "pair " + std::to_string(x) + "," + std::to_string(y) +
                              " has no qualifying size-2 CD-set in H+xy";
                return rep;
            }
        }
    }
    rep.verdict = true;
    return rep;
}

} // namespace cdcrit
