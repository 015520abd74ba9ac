#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diforest/conflict.hpp"
#include "diforest/multidigraph.hpp"
#include "diforest/simplicial.hpp"

namespace diforest {

/// Antichain of minimal obstruction sets over the host's edge identifiers.
/// Vertices live in a fixed identifier table with an alive mask, which keeps
/// minors cheap: deletion and contraction only shrink the alive set and
/// rewrite hyperedge masks.
class ConflictHypergraph {
public:
    ConflictHypergraph() = default;
    ConflictHypergraph(std::vector<std::string> ids, std::uint32_t alive,
                       std::vector<std::uint32_t> hyperedges, ConflictFlavor flavor);

    int alive_count() const { return std::popcount(alive_); }
    std::uint32_t alive_mask() const { return alive_; }
    const std::vector<std::string>& id_table() const { return ids_; }
    std::vector<std::string> vertex_ids() const;
    const std::vector<std::uint32_t>& hyperedges() const { return hyperedges_; }
    std::vector<std::vector<std::string>> hyperedges_as_ids() const;
    ConflictFlavor flavor() const { return flavor_; }

    int index_of(const std::string& id) const; // -1 when absent or dead

    /// Keeps hyperedges avoiding v; v leaves the vertex set.
    ConflictHypergraph deletion(int v) const;
    /// Strips v from every hyperedge, then keeps the minimal sets. A
    /// contracted singleton hyperedge {v} leaves the empty hyperedge behind,
    /// which kills every independent set downstream.
    ConflictHypergraph contraction(int v) const;

    /// v is simplicial iff every two hyperedges through v leave a third
    /// hyperedge inside their union minus v.
    bool is_simplicial_vertex(int v) const;
    std::vector<std::string> simplicial_vertices() const;

    /// Canonical memo key after greedy degree-profile relabeling; equal keys
    /// imply isomorphic hypergraphs.
    std::vector<std::uint32_t> canonical_key() const;

private:
    std::vector<std::string> ids_;
    std::uint32_t alive_ = 0;
    std::vector<std::uint32_t> hyperedges_; // sorted antichain over ids_ bit space
    ConflictFlavor flavor_ = ConflictFlavor::Tree;
};

/// Hyperedges: directed-cycle edge sets, parallel pairs, and shared-target
/// pairs, filtered to an antichain.
ConflictHypergraph conflict_hypergraph_dt(const Multidigraph& d);
/// As above plus shared-source pairs.
ConflictHypergraph conflict_hypergraph_lf(const Multidigraph& d);

struct WChordality {
    DecisionStatus status = DecisionStatus::False;
    std::optional<ConflictHypergraph> witness; // minor without a simplicial vertex
    std::vector<std::string> witness_path;     // op:vertex steps reaching the witness
    std::size_t states_explored = 0;
};

/// Exhaustive exploration of all deletion/contraction minors (the hypergraph
/// itself included), memoized on canonical form.
WChordality is_w_chordal(const ConflictHypergraph& h, int vertex_cap = 12);

/// Faces are the sets containing no hyperedge, in facet form.
SimplicialComplex independence_complex_h(const ConflictHypergraph& h, int vertex_cap = 20);

} // namespace diforest
