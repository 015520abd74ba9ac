#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "diforest/errors.hpp"

namespace diforest {

/// Faces are bitmasks over the complex's sorted label vector (<= 32 vertices).
using FaceMask = std::uint32_t;

/// Simplicial complex in facet form. Labels are kept sorted, facets form an
/// antichain sorted ascending as masks. Two distinguished values: the void
/// complex (no faces at all, empty facet list) and the empty complex {∅}
/// (single facet 0). Declared vertices that sit in no facet become 0-faces,
/// i.e. singleton facets.
class SimplicialComplex {
public:
    SimplicialComplex() = default; // void complex

    static SimplicialComplex make_void();
    static SimplicialComplex make_empty();
    static SimplicialComplex simplex(std::vector<std::string> vertices);

    SimplicialComplex(std::vector<std::string> declared_vertices,
                      const std::vector<std::vector<std::string>>& facet_sets);

    /// Builds from faces (not necessarily maximal) over a parent label space.
    static SimplicialComplex from_masks(const std::vector<std::string>& parent_labels,
                                        std::vector<FaceMask> faces);

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }
    bool is_simplex() const { return facets_.size() <= 1; }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<FaceMask>& facets() const { return facets_; }

    /// Dimension of the complex; requires a non-void complex.
    int dim() const;

    FaceMask mask_of(const std::vector<std::string>& vertex_ids) const;
    std::vector<std::string> ids_of(FaceMask m) const;

    bool contains(FaceMask face) const;

    /// Downward closure (includes the empty face when the complex is
    /// non-void), sorted ascending. Throws CapExceeded past face_cap.
    std::vector<FaceMask> all_faces(std::size_t face_cap = 1u << 20) const;
    std::vector<FaceMask> faces_of_dim(int d, std::size_t face_cap = 1u << 20) const;

    /// lk(σ) = { τ : τ∩σ=∅, τ∪σ ∈ Δ }. Throws InvalidInput if σ ∉ Δ.
    SimplicialComplex link(FaceMask face) const;
    /// del(σ) = { τ ∈ Δ : τ∩σ=∅ }. Throws InvalidInput if σ ∉ Δ.
    SimplicialComplex deletion(FaceMask face) const;

    /// Subcomplex generated by the d-dimensional faces; void if none exist.
    SimplicialComplex pure_skeleton(int d) const;

    SimplicialComplex with_label_prefix(const std::string& prefix) const;

    /// Vertices v such that every facet of del(v) is a facet of the complex.
    std::vector<std::string> shedding_vertices() const;

    /// Connected components of the facet hypergraph (0 for void/{∅}).
    int component_count() const;

    /// Memoization key: facets after relabeling vertices by
    /// (facet-degree, label order); equal keys imply isomorphic complexes.
    std::vector<FaceMask> canonical_key() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<FaceMask> facets_;

    void normalize(std::vector<FaceMask> faces, bool add_uncovered_singletons);
};

/// Join of complexes on disjoint label sets; facets are pairwise unions.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Certificate of vertex decomposability: a shedding tree whose leaves are
/// simplices (possibly void or {∅}).
struct SheddingNode {
    bool leaf = true;
    std::string vertex; // shedding vertex when !leaf
    std::unique_ptr<SheddingNode> link_child;
    std::unique_ptr<SheddingNode> del_child;
};

enum class DecisionStatus { True, False, Capped };

struct VdResult {
    DecisionStatus status = DecisionStatus::False;
    std::shared_ptr<SheddingNode> certificate; // set when status == True
    std::string witness;                       // set when status == False
};

struct VdOptions {
    int vertex_cap = 18;
};

VdResult is_vertex_decomposable(const SimplicialComplex& complex, const VdOptions& opts = {});

/// Replays a shedding tree against the complex; true iff it certifies VD.
bool replay_shedding_certificate(const SimplicialComplex& complex, const SheddingNode& node);

struct ShellResult {
    DecisionStatus status = DecisionStatus::False;
    std::vector<FaceMask> order; // shelling order when status == True
};

struct ShellOptions {
    int facet_cap = 12;
};

ShellResult is_shellable(const SimplicialComplex& complex, const ShellOptions& opts = {});

/// Checks the shelling condition for the given facet order.
bool replay_shelling(const SimplicialComplex& complex, const std::vector<FaceMask>& order);

/// Shelling order built from a vertex decomposition: deletion facets first,
/// then the link facets rejoined with the shedding vertex. Empty when the
/// complex is not decomposable; throws CapExceeded past the vertex cap.
std::vector<FaceMask> shelling_from_decomposition(const SimplicialComplex& complex,
                                                  const VdOptions& opts = {});

} // namespace diforest
