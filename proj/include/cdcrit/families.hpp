#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

// Construction metadata: designated vertices and vertex-set roles that downstream
// constructive path builders and witness extraction rely on. Role sets partition
// V(G); groups hold auxiliary (possibly overlapping) sets such as per-construction
// aliases. Serialized as a key=value sidecar next to the graph file.
struct FamilyTag {
    std::string family; // B1, Uk, G1, G2, Ns, Pkl
    std::map<std::string, std::string> params;
    std::map<std::string, VertexSet> roles;
    std::map<std::string, VertexSet> groups;

    const VertexSet& role(const std::string& name) const;
    bool has_role(const std::string& name) const { return roles.count(name) > 0; }
    int single(const std::string& name) const; // role that must be a single vertex
};

struct FamilyInstance {
    Graph graph;
    FamilyTag tag;
};

struct B1Params {
    std::vector<int> star_sizes; // n_1..n_t, t >= 2, each >= 1
    int isolated = 0;
};

// Complete graph on S (star centers), S' (star leaves) and S'' (isolated set)
// minus the star edges, plus a head b adjacent to exactly S'.
// Labels: b=0, then star i as center, leaves; S'' last.
// Roles: b, S, Sprime.<i> per star, Ssecond (omitted when empty).
FamilyInstance build_B1(const B1Params& params);

// Path c_0..c_{k-3} attached to the head b of a B1 graph by the edge c_{k-3}b.
// Labels: c_i = i, then the B1 graph shifted by k-2.
// k >= 4 by default; k in {2,3} (degenerate path) behind allow_small_k.
FamilyInstance build_Uk(int k, const B1Params& params, bool allow_small_k = false);

// Single-clique family: for ell <= k-4, disjoint paths c_0..c_{ell-1} and
// c_ell..c_{k-4} with joins c_{ell-1} v K_{n_ell} v c_ell and the edge c_{k-4}b;
// for ell = k-3, path c_0..c_{k-4} with join c_{k-4} v K_{n_{k-3}} v b (and no
// c_{k-4}b edge). Labels: c_i = i (0..k-4), clique, then the B1 graph.
FamilyInstance build_G1(int k, int ell, int n_ell, const B1Params& params);

// Path c_0..c_{k-4} plus an end block H (class-B2 member with head b), joined by
// the single edge b c_{k-4}. Verifies the block via check_class_B2. k >= 5.
// Labels: c_i = i, then H shifted by k-3.
FamilyInstance build_G2(int k, const Graph& h, int b);

// The non-traceable family: x plus cliques B1={a_i}, B2={b_i}, B3={z_{i,j}};
// complete bipartite B1-B2 minus the matching a_ib_i; x joined to B3;
// a_i ~ z_{i,j} for all j != i; b_i ~ z_{j,l} iff i not in {j,l}. s >= 6.
// Labels: x=0, a_i=i, b_i=s+i, z_{i,j} in lexicographic (i,j) order from 2s+1.
// groups.H aliases B2 (the designated maximal complete subgraph).
FamilyInstance build_Ns(int s);

// x_0 v K_{n_1} v ... v K_{n_l} v_H base: new vertex x_0, a chain of cliques,
// the last clique joined onto the base's designated H only (groups.H or roles.H).
// Labels: x_0=0, cliques consecutively, then the base graph shifted.
FamilyInstance build_Pkl(const FamilyInstance& base, const std::vector<int>& clique_sizes);

// Sidecar serialization: "family=..." then params (bare key=value), roles.<name>,
// group.<name>; vertex lists range-compressed ("1-6,9"). Round-trips exactly.
std::string tag_to_text(const FamilyTag& tag);
FamilyTag tag_from_text(const std::string& text);

std::string compress_vertex_list(const VertexSet& vs);
VertexSet parse_vertex_list(const std::string& text);

} // namespace cdcrit
