#pragma once

#include <string>
#include <vector>

#include "diforest/multidigraph.hpp"
#include "diforest/simplicial.hpp"

namespace diforest {

enum class ComplexKind { Dlf, Dt };

/// Directed linear forest complex or directed tree complex, built from first
/// principles: faces are the edge subsets whose induced subgraph lies in the
/// allowed class. DFS over edge indices with downward-closure pruning.
SimplicialComplex build_complex(const Multidigraph& d, ComplexKind kind, int edge_cap = 16);

enum class IdentityName {
    IndLf,         ///< Dlf(D) = Ind(G^lf_D), gated on 2-acyclicity
    IndDt,         ///< DT(D) = Ind(G^t_D), gated on 2-acyclicity
    IndHLf,        ///< Dlf(D) = Ind(H^lf_D)
    IndHDt,        ///< DT(D) = Ind(H^t_D)
    LinkDelLf,     ///< lk/del in Dlf match the link graph and edge deletion
    LinkDelDt,     ///< lk/del in DT match the link graph and edge deletion
    Join,          ///< complexes of weak components join to the whole
    HyperDelContr, ///< hypergraph deletion/contraction match digraph operations
};

const char* identity_name(IdentityName which);
bool parse_identity(const std::string& text, IdentityName& out);
std::vector<IdentityName> all_identities();

struct IdentityResult {
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string witness; // minimal failing face / edge when Fail, gate reason when Skip
};

/// Facet-set equality checks for the lemma-level identities. Hypothesis-gated
/// identities report Skip when the gate fails unless force is set.
IdentityResult verify_identity(const Multidigraph& d, IdentityName which, bool force = false);

enum class TheoremName {
    VdDlf,       ///< acyclic + no alternating closed trail => Dlf vertex decomposable
    VdDlfForest, ///< L2-free + underlying forest => Dlf vertex decomposable
    VdDt,        ///< 2-acyclic => DT vertex decomposable
    ChordalDt,   ///< 2-acyclic => tree conflict graph chordal
    VdDtCycle,   ///< underlying cycle + a one-way adjacent pair => DT vertex decomposable
    WChordalDt,  ///< no cycle-piercing edge => H^t W-chordal and DT shellable
};

const char* theorem_name(TheoremName which);
bool parse_theorem(const std::string& text, TheoremName& out);
std::vector<TheoremName> all_theorems();

struct TheoremResult {
    enum class Status { Pass, Fail, NotApplicable, Capped } status = Status::NotApplicable;
    std::string detail;
};

/// Checks the hypothesis; when it holds, asserts the conclusion through the
/// corresponding decision procedure.
TheoremResult verify_theorem(const Multidigraph& d, TheoremName which);

} // namespace diforest
