#include "diforest/homology.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>

namespace diforest {

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

/// Column-indexed boundary matrix from faces of dimension d to faces of
/// dimension d-1. Faces come in sorted mask order, which fixes signs.
Matrix boundary_matrix(const std::vector<FaceMask>& rows, const std::vector<FaceMask>& cols) {
    Matrix m(rows.size(), std::vector<mpz_class>(cols.size(), 0));
    std::map<FaceMask, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        FaceMask f = cols[j];
        int sign = 1;
        for (int v = 0; v < 32; ++v) {
            if (!(f >> v & 1)) continue;
            FaceMask sub = f & ~(FaceMask{1} << v);
            m[row_index.at(sub)][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

struct SnfResult {
    long long rank = 0;
    std::vector<mpz_class> factors; // invariant factors, d1 | d2 | ...
};

/// Dense Smith normal form with smallest-pivot selection; arbitrary-precision
/// entries keep the elimination exact.
SnfResult smith_normal_form(Matrix m) {
    SnfResult res;
    if (m.empty() || m[0].empty()) return res;
    const std::size_t nr = m.size(), nc = m[0].size();
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // locate the smallest nonzero entry in the remaining submatrix
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (m[i][j] == 0) continue;
                if (pi == nr || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix for true invariant
            // factors; fold a bad row in and keep reducing
            for (std::size_t i = t + 1; i < nr && clean; ++i)
                for (std::size_t j = t + 1; j < nc && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < nc; ++k) m[t][k] += m[i][k];
                        clean = false;
                    }
        }
        ++t;
    }
    for (std::size_t k = 0; k < t; ++k) {
        res.factors.push_back(abs(m[k][k]));
        ++res.rank;
    }
    return res;
}

/// Rank over the rationals via Bareiss fraction-free elimination.
long long bareiss_rank(Matrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t nr = m.size(), nc = m[0].size();
    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<long long>(row);
}

/// Faces of the complex bucketed by dimension, -1 upward. Void -> empty.
std::vector<std::vector<FaceMask>> faces_by_dim(const SimplicialComplex& c,
                                                std::size_t face_cap) {
    std::vector<std::vector<FaceMask>> by_dim;
    if (c.is_void()) return by_dim;
    by_dim.resize(static_cast<std::size_t>(c.dim() + 2));
    for (FaceMask f : c.all_faces(face_cap))
        by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    return by_dim;
}

} // namespace

HomologyReport reduced_homology(const SimplicialComplex& complex, std::size_t face_cap) {
    HomologyReport rep;
    if (complex.is_void()) return rep;
    rep.dim = complex.dim();

    auto by_dim = faces_by_dim(complex, face_cap);
    const int top = rep.dim;

    // ranks[i + 1] = rank of the boundary map leaving dimension i
    std::vector<long long> ranks(static_cast<std::size_t>(top + 3), 0);
    std::map<int, std::vector<long long>> factor_at; // invariant factors of the map leaving dim i

    for (int i = 0; i <= top; ++i) {
        const auto& cols = by_dim[static_cast<std::size_t>(i + 1)];
        const auto& rows = by_dim[static_cast<std::size_t>(i)];
        if (cols.empty() || rows.empty()) continue;
        Matrix b = boundary_matrix(rows, cols);
        SnfResult snf = smith_normal_form(b);
        long long cross = bareiss_rank(std::move(b));
        if (cross != snf.rank)
            throw Error("homology cross-check failed: SNF rank " + std::to_string(snf.rank) +
                        " vs rational rank " + std::to_string(cross));
        ranks[static_cast<std::size_t>(i + 1)] = snf.rank;
        std::vector<long long> tor;
        for (const auto& f : snf.factors)
            if (f > 1) {
                if (!f.fits_slong_p()) throw Error("torsion coefficient out of range");
                tor.push_back(f.get_si());
            }
        factor_at[i] = std::move(tor);
    }

    for (int i = -1; i <= top; ++i) {
        long long n_i = static_cast<long long>(by_dim[static_cast<std::size_t>(i + 1)].size());
        long long out_rank = ranks[static_cast<std::size_t>(i + 1)];     // boundary leaving dim i
        long long in_rank =
            (i + 2 <= top + 1) ? ranks[static_cast<std::size_t>(i + 2)] : 0; // entering dim i
        rep.betti[i] = n_i - out_rank - in_rank;
        // torsion of H_i is carried by the boundary map leaving dimension i+1
        auto it = factor_at.find(i + 1);
        rep.torsion[i] = (it == factor_at.end()) ? std::vector<long long>{} : it->second;
    }
    return rep;
}

std::map<int, long long> rational_betti(const SimplicialComplex& complex, std::size_t face_cap) {
    std::map<int, long long> out;
    if (complex.is_void()) return out;
    const int top = complex.dim();
    auto by_dim = faces_by_dim(complex, face_cap);
    std::vector<long long> ranks(static_cast<std::size_t>(top + 3), 0);
    for (int i = 0; i <= top; ++i) {
        const auto& cols = by_dim[static_cast<std::size_t>(i + 1)];
        const auto& rows = by_dim[static_cast<std::size_t>(i)];
        if (cols.empty() || rows.empty()) continue;
        ranks[static_cast<std::size_t>(i + 1)] = bareiss_rank(boundary_matrix(rows, cols));
    }
    for (int i = -1; i <= top; ++i) {
        long long n_i = static_cast<long long>(by_dim[static_cast<std::size_t>(i + 1)].size());
        long long in_rank = (i + 2 <= top + 1) ? ranks[static_cast<std::size_t>(i + 2)] : 0;
        out[i] = n_i - ranks[static_cast<std::size_t>(i + 1)] - in_rank;
    }
    return out;
}

CmResult is_cohen_macaulay(const SimplicialComplex& complex, std::size_t face_cap) {
    CmResult res;
    if (complex.is_void() || complex.is_empty_complex()) {
        res.status = DecisionStatus::True;
        return res;
    }
    try {
        for (FaceMask face : complex.all_faces(face_cap)) {
            SimplicialComplex lk = complex.link(face);
            int d = lk.dim();
            if (d <= -1) continue;
            // the field is the rationals, so ranks suffice here
            auto betti = rational_betti(lk, face_cap);
            for (const auto& [i, b] : betti) {
                if (i < d && b != 0) {
                    res.status = DecisionStatus::False;
                    std::string ids;
                    for (const auto& s : complex.ids_of(face)) ids += (ids.empty() ? "" : ",") + s;
                    res.witness = "link of {" + ids + "} has reduced Betti " + std::to_string(b) +
                                  " in degree " + std::to_string(i) + " < dim " + std::to_string(d);
                    return res;
                }
            }
        }
    } catch (const CapExceeded&) {
        res.status = DecisionStatus::Capped;
        return res;
    }
    res.status = DecisionStatus::True;
    return res;
}

CmResult is_sequentially_cm(const SimplicialComplex& complex, std::size_t face_cap) {
    CmResult res;
    if (complex.is_void() || complex.is_empty_complex()) {
        res.status = DecisionStatus::True;
        return res;
    }
    try {
        for (int d = 0; d <= complex.dim(); ++d) {
            CmResult part = is_cohen_macaulay(complex.pure_skeleton(d), face_cap);
            if (part.status == DecisionStatus::Capped) return part;
            if (part.status == DecisionStatus::False) {
                res.status = DecisionStatus::False;
                res.witness = "pure " + std::to_string(d) + "-skeleton: " + part.witness;
                return res;
            }
        }
    } catch (const CapExceeded&) {
        res.status = DecisionStatus::Capped;
        return res;
    }
    res.status = DecisionStatus::True;
    return res;
}

} // namespace diforest
