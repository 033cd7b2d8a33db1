#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct DominationCertificate {
    VertexSet set;
    bool is_dominating = false;
    bool induces_connected = false;
    int size = 0;
};

// Both flags computed; S is a CD-set of G iff both are true.
DominationCertificate check_set(const Graph& g, const VertexSet& s);

struct SearchBudget {
    int max_subset_size = -1;                  // -1 means n
    std::uint64_t max_nodes = 100'000'000;     // enumeration nodes visited
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GammaResult {
    int value = 0;
    VertexSet witness; // lexicographically smallest minimum set
};

// Exact gamma_c by subset enumeration in lexicographic order, sizes ascending.
// Throws NotConnected on disconnected input, BudgetExceeded past the budget.
GammaResult connected_domination_number(const Graph& g, const SearchBudget& budget = {});

// All minimum CD-sets, lexicographic order.
std::vector<VertexSet> enumerate_min_cd_sets(const Graph& g, const SearchBudget& budget = {});

// All CD-sets of exactly the given size, lexicographic order.
std::vector<VertexSet> enumerate_cd_sets_of_size(const Graph& g, int size,
                                                 const SearchBudget& budget = {});

// Smallest CD-set of size <= max_size that contains all of `forced` and (when
// `require_any` is nonempty) intersects it; lexicographically first at minimum size.
std::optional<VertexSet> find_cd_set(const Graph& g, int max_size,
                                     const VertexSet& forced = {},
                                     const VertexSet& require_any = {},
                                     const SearchBudget& budget = {});

// Exact domination number (connectivity of G not required).
GammaResult domination_number(const Graph& g, const SearchBudget& budget = {});

enum class MaxLeafMethod { SpanningTreeEnumeration, Identity };

struct MaxLeafResult {
    int value = 0;
    MaxLeafMethod method = MaxLeafMethod::SpanningTreeEnumeration;
};

// For n <= enumeration_threshold: exhaustive spanning-tree enumeration.
// Otherwise the identity n - gamma_c(G) (the two agree on connected graphs).
MaxLeafResult max_leaf_number(const Graph& g, int enumeration_threshold = 10,
                              const SearchBudget& budget = {});

} // namespace cdcrit
