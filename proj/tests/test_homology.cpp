#include <doctest.h>

#include <bit>
#include <map>
#include <vector>

#include "diforest/homology.hpp"

using namespace diforest;

namespace {

SimplicialComplex boundary_triangle() {
    return SimplicialComplex({}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

SimplicialComplex boundary_tetrahedron() {
    return SimplicialComplex(
        {}, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

SimplicialComplex two_segments() { return SimplicialComplex({}, {{"p", "q"}, {"r", "s"}}); }

/// Six-vertex triangulation of the real projective plane; every edge lies in
/// exactly two of the ten triangles.
SimplicialComplex projective_plane() {
    return SimplicialComplex({}, {{"1", "2", "3"},
                                  {"1", "2", "4"},
                                  {"1", "3", "5"},
                                  {"1", "4", "6"},
                                  {"1", "5", "6"},
                                  {"2", "3", "6"},
                                  {"2", "4", "5"},
                                  {"2", "5", "6"},
                                  {"3", "4", "5"},
                                  {"3", "4", "6"}});
}

long long betti(const HomologyReport& h, int d) {
    auto it = h.betti.find(d);
    return it == h.betti.end() ? 0 : it->second;
}

bool no_torsion(const HomologyReport& h) {
    for (const auto& [d, t] : h.torsion)
        if (!t.empty()) return false;
    return true;
}

} // namespace

TEST_CASE("spheres") {
    HomologyReport circle = reduced_homology(boundary_triangle());
    CHECK(betti(circle, -1) == 0);
    CHECK(betti(circle, 0) == 0);
    CHECK(betti(circle, 1) == 1);
    CHECK(no_torsion(circle));

    HomologyReport sphere = reduced_homology(boundary_tetrahedron());
    CHECK(betti(sphere, 2) == 1);
    CHECK(betti(sphere, 1) == 0);
    CHECK(betti(sphere, 0) == 0);
    CHECK(no_torsion(sphere));
}

TEST_CASE("degenerate complexes") {
    HomologyReport empty = reduced_homology(SimplicialComplex::make_empty());
    CHECK(betti(empty, -1) == 1);

    HomologyReport v = reduced_homology(SimplicialComplex::make_void());
    CHECK(v.betti.empty());

    HomologyReport pt = reduced_homology(SimplicialComplex::simplex({"x"}));
    CHECK(betti(pt, -1) == 0);
    CHECK(betti(pt, 0) == 0);
}

TEST_CASE("disconnected pure 1-complex") {
    HomologyReport h = reduced_homology(two_segments());
    CHECK(betti(h, 0) == 1); // two contractible components
    CHECK(betti(h, 1) == 0);
}

TEST_CASE("projective plane has 2-torsion") {
    auto rp2 = projective_plane();
    CHECK(rp2.all_faces().size() == 1 + 6 + 15 + 10);
    HomologyReport h = reduced_homology(rp2);
    CHECK(betti(h, 0) == 0);
    CHECK(betti(h, 1) == 0);
    CHECK(betti(h, 2) == 0);
    REQUIRE(h.torsion.at(1).size() == 1);
    CHECK(h.torsion.at(1)[0] == 2);
    CHECK(h.torsion.at(2).empty());
}

TEST_CASE("rational route agrees with the integral route") {
    for (const auto& c : {boundary_triangle(), boundary_tetrahedron(), two_segments(),
                          projective_plane(),
                          SimplicialComplex({}, {{"a", "b", "c"}, {"c", "d"}})}) {
        HomologyReport h = reduced_homology(c);
        auto q = rational_betti(c);
        CHECK(h.betti == q);
    }
}

TEST_CASE("reduced Euler characteristic bookkeeping") {
    for (const auto& c : {boundary_triangle(), boundary_tetrahedron(), two_segments(),
                          projective_plane()}) {
        long long chi_faces = 0;
        for (FaceMask f : c.all_faces())
            chi_faces += (std::popcount(f) % 2 == 0) ? -1 : 1; // (-1)^dim, dim = popcount-1
        HomologyReport h = reduced_homology(c);
        long long chi = 0;
        for (const auto& [d, b] : h.betti) {
            long long sign = ((d % 2) + 2) % 2 == 0 ? 1 : -1;
            chi += sign * b;
        }
        CHECK(chi == chi_faces);
    }
}

TEST_CASE("boundary composition vanishes") {
    // independent oracle: rebuild boundary maps over the faces and compose
    auto check_complex = [](const SimplicialComplex& c) {
        auto faces = c.all_faces();
        std::map<FaceMask, int> index;
        for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);
        auto boundary = [&](FaceMask f) {
            std::vector<std::pair<int, int>> terms; // (face index, coefficient)
            int sign = 1;
            for (int v = 0; v < 32; ++v) {
                if (!(f >> v & 1)) continue;
                terms.push_back({index.at(f & ~(FaceMask{1} << v)), sign});
                sign = -sign;
            }
            return terms;
        };
        for (FaceMask f : faces) {
            if (std::popcount(f) < 2) continue;
            std::map<int, int> acc;
            for (auto [g, cg] : boundary(f))
                for (auto [h, ch] : boundary(faces[static_cast<std::size_t>(g)]))
                    acc[h] += cg * ch;
            for (auto [h, coeff] : acc) CHECK(coeff == 0);
        }
    };
    check_complex(boundary_tetrahedron());
    check_complex(projective_plane());
}

TEST_CASE("cohen-macaulay decisions") {
    CHECK(is_cohen_macaulay(SimplicialComplex::simplex({"a", "b", "c"})).status ==
          DecisionStatus::True);
    CHECK(is_cohen_macaulay(boundary_tetrahedron()).status == DecisionStatus::True);

    CmResult bad = is_cohen_macaulay(two_segments());
    CHECK(bad.status == DecisionStatus::False);
    CHECK(!bad.witness.empty());

    CHECK(is_cohen_macaulay(SimplicialComplex::make_void()).status == DecisionStatus::True);
    CHECK(is_cohen_macaulay(SimplicialComplex::make_empty()).status == DecisionStatus::True);
}

TEST_CASE("sequential cohen-macaulay decisions") {
    // pure shellable complexes are sequentially CM
    CHECK(is_sequentially_cm(boundary_tetrahedron()).status == DecisionStatus::True);
    // non-pure but shellable: triangle with a pendant segment
    CHECK(is_sequentially_cm(SimplicialComplex({}, {{"a", "b", "c"}, {"c", "d"}})).status ==
          DecisionStatus::True);
    CHECK(is_sequentially_cm(two_segments()).status == DecisionStatus::False);
    // connected but with a disconnected pure 1-skeleton
    SimplicialComplex odd({}, {{"a", "b", "c"}, {"a", "d"}, {"e", "f"}});
    CHECK(is_sequentially_cm(odd).status == DecisionStatus::False);
}
