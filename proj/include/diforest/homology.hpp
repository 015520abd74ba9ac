#pragma once

#include <map>
#include <string>
#include <vector>

#include "diforest/simplicial.hpp"

namespace diforest {

/// Reduced integral homology: Betti numbers and torsion coefficients per
/// dimension, from -1 (the empty face is part of the chain complex) up to the
/// dimension of the complex.
struct HomologyReport {
    int dim = -2; // -2 encodes the void complex
    std::map<int, long long> betti;
    std::map<int, std::vector<long long>> torsion;

    bool trivial_below(int top) const {
        for (const auto& [d, b] : betti)
            if (d < top && b != 0) return false;
        for (const auto& [d, t] : torsion)
            if (d < top && !t.empty()) return false;
        return true;
    }
};

/// Boundary matrices over the integers reduced via Smith normal form. The
/// rational Betti numbers (fraction-free Gaussian rank) are computed alongside
/// and cross-checked; a mismatch throws.
HomologyReport reduced_homology(const SimplicialComplex& complex, std::size_t face_cap = 20000);

/// Independent route: ranks over the rationals only (Bareiss elimination).
std::map<int, long long> rational_betti(const SimplicialComplex& complex,
                                        std::size_t face_cap = 20000);

struct CmResult {
    DecisionStatus status = DecisionStatus::False;
    std::string witness; // failing (face, degree) when status == False
};

/// Cohen-Macaulay over the rationals: every link has vanishing reduced
/// homology below its dimension.
CmResult is_cohen_macaulay(const SimplicialComplex& complex, std::size_t face_cap = 20000);

/// Sequentially Cohen-Macaulay: every pure skeleton is Cohen-Macaulay.
CmResult is_sequentially_cm(const SimplicialComplex& complex, std::size_t face_cap = 20000);

} // namespace diforest
