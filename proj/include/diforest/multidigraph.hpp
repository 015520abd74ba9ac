#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diforest/errors.hpp"

namespace diforest {

/// Edge sets over one multidigraph are bitmasks in the host's edge order.
using EdgeMask = std::uint32_t;

struct Edge {
    std::string id;
    int src = -1;
    int dst = -1;
};

/// A multidigraph: ordered vertex set plus an ordered list of identified
/// edges with source/target maps. Parallel edges and 2-cycles are allowed;
/// loops are not (no construction in this library produces or consumes one).
/// Values are treated as immutable once built; every operation below is a
/// pure function of its inputs.
class Multidigraph {
public:
    Multidigraph() = default;

    int add_vertex(const std::string& id);
    /// Adds endpoint vertices on demand. Rejects duplicate edge ids and loops.
    int add_edge(const std::string& id, const std::string& src_id, const std::string& dst_id);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return vertex_ids_[static_cast<std::size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }

    int source(int e) const { return edges_[static_cast<std::size_t>(e)].src; }
    int target(int e) const { return edges_[static_cast<std::size_t>(e)].dst; }

    /// -1 when absent.
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    /// Throws InvalidInput when the identifier is unknown.
    int require_vertex(const std::string& id) const;
    int require_edge(const std::string& id) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> edge_lookup_;
};

EdgeMask full_edge_mask(const Multidigraph& d);
/// Throws InvalidInput on an identifier that is not an edge of d.
EdgeMask edge_mask(const Multidigraph& d, const std::vector<std::string>& edge_ids);
std::vector<std::string> edge_ids_of(const Multidigraph& d, EdgeMask mask);

/// Subgraph induced by an edge subset: edge set sigma, vertex set exactly the
/// endpoints of sigma.
Multidigraph induced_by_edges(const Multidigraph& d, EdgeMask sigma);

/// Subgraph induced on a vertex subset: all edges with both endpoints inside.
Multidigraph induced_on_vertices(const Multidigraph& d, const std::vector<int>& vertices);

struct Degrees {
    int in = 0;
    int out = 0;
};
Degrees degrees(const Multidigraph& d, const std::string& vertex);

enum class SubsetClass {
    LinearForest,   ///< vertex-disjoint union of directed paths
    DirectedForest, ///< directed forest that is not a linear forest
    NotForest,      ///< contains a directed cycle or a degree violation
};
SubsetClass classify_subset(const Multidigraph& d, EdgeMask sigma);

/// All edge subsets inducing a directed cycle (2-cycles included), sorted.
std::vector<EdgeMask> directed_cycles(const Multidigraph& d);

struct Acyclicity {
    bool acyclic = false;     ///< no directed cycles at all
    bool two_acyclic = false; ///< no directed cycle of length >= 3
};
Acyclicity acyclicity(const Multidigraph& d);

/// Contraction-like link graph for the linear forest complex: drop every edge
/// sharing e's source, sharing e's target, or spanning e's endpoint pair, then
/// merge the endpoints of e (the merged vertex keeps the smaller identifier).
Multidigraph link_lf(const Multidigraph& d, int e);
/// Link graph for the directed tree complex: drop edges sharing e's target or
/// spanning e's endpoint pair, then merge the endpoints of e.
Multidigraph link_dt(const Multidigraph& d, int e);
Multidigraph delete_edge(const Multidigraph& d, int e);

/// Cyclic sequences of distinct edges (3 <= length <= max_len) in which
/// consecutive edges share a source or share a target; one representative per
/// rotation/reflection class, as index sequences. Exhaustive when
/// max_len >= edge_count.
std::vector<std::vector<int>> alternating_closed_trails(const Multidigraph& d, int max_len);

/// True iff no induced subgraph of d is isomorphic to the double directed
/// string L_n.
bool is_ln_free(const Multidigraph& d, int n);

/// Edges e for which some directed cycle contains an f with t(e)=t(f) and
/// s(e)!=s(f).
std::vector<int> cycle_piercing_edges(const Multidigraph& d);

/// Edges with no witness pair (f, sigma): t(e)=t(f), s(e)!=s(f), e on the
/// directed cycle sigma, and s(f) outside V(sigma).
std::vector<int> simplicial_edges(const Multidigraph& d);

/// Tagged disjoint union; identifiers get "1:" / "2:" prefixes.
Multidigraph disjoint_union(const Multidigraph& a, const Multidigraph& b);

/// Isomorphism via backtracking over vertex bijections with degree pruning.
/// Intended for desk scale (|V| <= 8 or so); correct but slow beyond it.
bool are_isomorphic(const Multidigraph& a, const Multidigraph& b);

bool underlying_is_forest(const Multidigraph& d);
bool underlying_is_cycle(const Multidigraph& d);

/// Partition of the edge set by weakly connected component, ordered by the
/// smallest edge index in each part.
std::vector<EdgeMask> weak_components_edges(const Multidigraph& d);

} // namespace diforest
