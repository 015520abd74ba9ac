#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diforest/multidigraph.hpp"
#include "diforest/simplicial.hpp"

namespace diforest {

enum class ConflictFlavor { LinearForest, Tree };

/// Simple graph on the edge identifiers of a host multidigraph; adjacency
/// encodes the pairwise obstructions for the chosen complex flavor.
struct ConflictGraph {
    std::vector<std::string> labels; // host edge ids, in host edge order
    std::vector<std::uint32_t> adj;  // adjacency masks, irreflexive symmetric
    ConflictFlavor flavor = ConflictFlavor::LinearForest;

    int size() const { return static_cast<int>(labels.size()); }
    bool adjacent(int a, int b) const { return adj[static_cast<std::size_t>(a)] >> b & 1; }
    int edge_pair_count() const;
};

/// e ~ f iff same source, same target, or same unordered endpoint pair.
ConflictGraph conflict_graph_lf(const Multidigraph& d);
/// e ~ f iff same target or same unordered endpoint pair.
ConflictGraph conflict_graph_dt(const Multidigraph& d);

/// Facets are the maximal independent sets (Bron-Kerbosch with pivoting on
/// the complement relation).
SimplicialComplex independence_complex(const ConflictGraph& g, int vertex_cap = 25);

struct Chordality {
    bool chordal = false;
    std::vector<std::string> elimination_order; // perfect elimination order when chordal
    std::vector<std::string> hole;              // an induced cycle of length >= 4 otherwise
};

/// Maximum-cardinality-search elimination check; on failure returns an
/// induced cycle witness.
Chordality chordality(const ConflictGraph& g);

/// All chordless cycles of length >= 3, as vertex index sequences in cyclic
/// order, deduplicated by vertex set.
std::vector<std::vector<int>> induced_cycles(const ConflictGraph& g);

/// True iff every induced cycle has length 3 or 5.
bool woodroofe_condition(const ConflictGraph& g);

/// Exploratory realizability report for linear-forest conflict graphs: the
/// canonical clique cover (out-stars, in-stars and endpoint-pair cliques),
/// the three-clique neighborhood cover, and an induced-claw scan. Claw
/// findings with pairwise distinct leaf sources and targets are logged, not
/// fatal; every such claw must still hang off an endpoint-pair conflict.
struct Realizability {
    bool clique_cover_ok = false;
    bool neighborhood_cover_ok = false;
    struct Claw {
        std::string center;
        std::vector<std::string> leaves;
        bool has_endpoint_pair_leaf = false;
    };
    std::vector<Claw> claw_findings;
    bool every_claw_has_pair_leaf = true;
};

Realizability realizability_checks(const Multidigraph& d);

} // namespace diforest
