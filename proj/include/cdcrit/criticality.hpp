#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdcrit/domination.hpp"
#include "cdcrit/graph.hpp"

namespace cdcrit {

struct PairEntry {
    int u = 0, v = 0;
    int gamma_c_after = 0;
    std::vector<VertexSet> min_cd_sets_after;
};

struct CriticalityReport {
    int gamma_c = 0;
    bool is_critical = false;
    int k = 0; // = gamma_c when critical
    std::vector<PairEntry> pairs;
    int zeta = 0;
};

// Exact gamma_c before and after each single non-edge addition. gamma_c(G+uv) is
// decided by bounded search up to gamma_c(G)-1; on a miss it equals gamma_c(G),
// since adding an edge cannot increase gamma_c.
CriticalityReport criticality_report(const Graph& g, const SearchBudget& budget = {});

struct LemmaViolation {
    int a = -1, b = -1;   // pair (x,y), or (cut-vertex, -1)
    VertexSet set;        // offending set, if any
    std::string detail;
};

struct LemmaAudit {
    std::string lemma_id; // L1a, L1b, L1c, L2a, L2b, L2c
    std::vector<LemmaViolation> violations;
    bool clean() const { return violations.empty(); }
};

// For every non-adjacent pair (x,y) and every minimum CD-set D of G+xy:
//   L1a: k-2 <= |D| <= k-1
//   L1b: D intersects {x,y}
//   L1c: if D picks exactly x of the pair, no G-neighbor of y lies in D
// Diagnostic: reports violations, never throws on property failure.
std::vector<LemmaAudit> lemma1_audit(const Graph& g, int k, const SearchBudget& budget = {});

// For every cut-vertex c:
//   L2a: G - c has exactly two components
//   L2b: the neighborhoods of c inside each component induce complete subgraphs
//   L2c: every minimum CD-set of G contains c
// (L2c over minimum CD-sets: a CD-set avoiding c would lie inside one component
// of G - c and could not dominate the other.)
std::vector<LemmaAudit> lemma2_audit(const Graph& g, const SearchBudget& budget = {});

struct ClassPReport {
    bool verdict = false;
    bool preconditions_ok = false;
    std::string failure; // empty when verdict true
    std::vector<std::pair<int, VertexSet>> vertex_witnesses; // property (a), per vertex
    std::vector<std::pair<std::pair<int, int>, VertexSet>> pair_witnesses; // property (b)
};

// Membership test for the property class with designated maximal complete subgraph H:
//   preconditions (verified here): G[H] complete of order >= 2, H maximal
//   (no outside vertex adjacent to all of H), G is k-gamma_c-critical;
//   (a) every vertex lies in some gamma_c-set meeting H;
//   (b) every non-adjacent pair has a CD-set of G+xy of size < k meeting H.
ClassPReport check_class_P(const Graph& g, const VertexSet& h, int k,
                           const SearchBudget& budget = {});

struct ClassB2Report {
    bool verdict = false;
    bool single_block = false;
    bool gamma_c_is_3 = false;
    bool head_neighborhood_complete = false;
    bool vertices_in_small_sets = false;
    bool pair_sets_exist = false;
    std::string failure; // first failing condition, empty when verdict true
};

// Block membership test for the end-block class with head b:
//   H is a single block; gamma_c(H) = 3; N_H(b) induces a complete graph;
//   every v != b lies in some size-3 gamma_c-set; for every non-adjacent pair
//   x,y in H-b there is a size-2 CD-set of H+xy containing a neighbor of b
//   and at least one of x,y.
ClassB2Report check_class_B2(const Graph& h, int b, const SearchBudget& budget = {});

} // namespace cdcrit
