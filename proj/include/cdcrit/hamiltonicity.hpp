#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdcrit/families.hpp"
#include "cdcrit/graph.hpp"

namespace cdcrit {

struct PathCertificate {
    std::vector<int> sequence; // visits every vertex once, consecutive adjacency
};

struct NonTraceabilityWitness {
    VertexSet cut_set;
    int component_count = 0; // omega(G - cut_set), > |cut_set| + 1
};

struct HpConfig {
    int max_n = 24;
};

// Bitmask dynamic program over (visited set, endpoint) states. Returns a
// certificate when a Hamiltonian path exists; reconstruction is deterministic
// (lowest endpoint, then lowest predecessor). Throws SizeLimit when n > max_n.
std::optional<PathCertificate> hamiltonian_path_exact(const Graph& g, const HpConfig& cfg = {});

struct PathVerdict {
    bool valid = false;
    int first_bad_index = -1; // index i where seq[i] is wrong / seq[i]seq[i+1] non-edge
    std::string reason;
};

PathVerdict verify_path(const Graph& g, const std::vector<int>& seq);

struct WitnessVerdict {
    bool valid = false;        // omega(G - S) > |S| + 1
    int component_count = 0;
};

// Throws InvalidWitness when S is empty or S = V(G).
WitnessVerdict verify_nontraceability_witness(const Graph& g, const VertexSet& s);

// Constructive Hamiltonian paths replaying the family constructions:
//   B1: start at the head b, traverse the leaf clique ending at a leaf u with a
//       center neighbor v, cross the uv edge, finish the center/isolated clique.
//   Uk: c_0..c_{k-3}, then b, then the rest of the B1 path.
//   G1: thread the clique between c_{ell-1} and c_ell (or between c_{k-4} and b
//       when ell = k-3), then the B1 path.
// Tie-breaking choices (the uv edge, orderings inside cliques) are the
// lexicographically smallest valid ones. Throws UnsupportedFamily otherwise.
PathCertificate constructive_hamiltonian_path(const Graph& g, const FamilyTag& tag);

// Structural shortcut for Ns/Pkl tags (S = B1 u B2 u {x}); otherwise enumerates
// candidate cut sets in lexicographic order by increasing size up to size_bound,
// with a degree-based component-count prune. Returns the first valid witness.
std::optional<NonTraceabilityWitness> witness_search(const Graph& g,
                                                     const std::optional<FamilyTag>& tag,
                                                     int size_bound);

} // namespace cdcrit
