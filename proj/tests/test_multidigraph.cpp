#include <doctest.h>

#include <algorithm>
#include <set>

#include "diforest/generators.hpp"
#include "diforest/multidigraph.hpp"
#include "oracles.hpp"

using namespace diforest;

namespace {

Multidigraph single_edge() {
    Multidigraph d;
    d.add_edge("e", "a", "b");
    return d;
}

std::set<std::set<std::string>> id_sets(const Multidigraph& d, const std::vector<EdgeMask>& ms) {
    std::set<std::set<std::string>> out;
    for (EdgeMask m : ms) {
        auto ids = edge_ids_of(d, m);
        out.insert(std::set<std::string>(ids.begin(), ids.end()));
    }
    return out;
}

} // namespace

TEST_CASE("construction rejects duplicates and loops") {
    Multidigraph d;
    d.add_edge("e1", "a", "b");
    CHECK_THROWS_AS(d.add_edge("e1", "b", "a"), InvalidInput);
    CHECK_THROWS_AS(d.add_edge("e2", "a", "a"), InvalidInput);
    CHECK(d.edge_count() == 1);
}

TEST_CASE("induced_by_edges keeps exactly the endpoints") {
    Multidigraph p3 = double_cycle(3);
    Multidigraph sub = induced_by_edges(p3, edge_mask(p3, {"e1"}));
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.vertex_index("0") >= 0);
    CHECK(sub.vertex_index("1") >= 0);

    Multidigraph empty = induced_by_edges(p3, 0);
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Multidigraph a = demo_a();
    Multidigraph par = induced_by_edges(a, edge_mask(a, {"e6", "e7"}));
    CHECK(par.vertex_count() == 2);
    CHECK(par.edge_count() == 2);
    for (int e = 0; e < par.edge_count(); ++e) {
        CHECK(par.vertex_id(par.source(e)) == "u1");
        CHECK(par.vertex_id(par.target(e)) == "u3");
    }

    CHECK_THROWS_AS(edge_mask(p3, {"nope"}), InvalidInput);
}

TEST_CASE("degrees") {
    Multidigraph c3 = directed_cycle(3);
    for (int v = 0; v < 3; ++v) {
        auto deg = degrees(c3, c3.vertex_id(v));
        CHECK(deg.in == 1);
        CHECK(deg.out == 1);
    }

    Multidigraph iso = single_edge();
    iso.add_vertex("z");
    auto dz = degrees(iso, "z");
    CHECK(dz.in == 0);
    CHECK(dz.out == 0);

    auto d0 = degrees(double_cycle(3), "0");
    CHECK(d0.in == 2);
    CHECK(d0.out == 2);

    CHECK_THROWS_AS(degrees(iso, "missing"), InvalidInput);
}

TEST_CASE("classify_subset") {
    Multidigraph l2 = double_string(2);
    CHECK(classify_subset(l2, 0) == SubsetClass::LinearForest);
    CHECK(classify_subset(l2, edge_mask(l2, {"e1", "e2"})) == SubsetClass::LinearForest);

    Multidigraph c3 = directed_cycle(3);
    CHECK(classify_subset(c3, full_edge_mask(c3)) == SubsetClass::NotForest);

    Multidigraph fan;
    fan.add_edge("x", "a", "b");
    fan.add_edge("y", "a", "c");
    CHECK(classify_subset(fan, full_edge_mask(fan)) == SubsetClass::DirectedForest);
}

TEST_CASE("classify_subset agrees with the brute-force definitions") {
    std::vector<Multidigraph> corpus = {double_string(2), double_cycle(3), directed_cycle(4),
                                        demo_a(), demo_b()};
    for (const auto& d : corpus) {
        EdgeMask all = full_edge_mask(d);
        for (EdgeMask m = 0;; ++m) {
            if ((m & all) == m) {
                SubsetClass c = classify_subset(d, m);
                bool lf = oracle::is_linear_forest_brute(d, m);
                bool df = oracle::is_directed_forest_brute(d, m);
                CHECK((c == SubsetClass::LinearForest) == lf);
                CHECK((c != SubsetClass::NotForest) == df);
            }
            if (m == all) break;
        }
    }
}

TEST_CASE("directed_cycles on the named instances") {
    Multidigraph c3 = directed_cycle(3);
    auto cycles = directed_cycles(c3);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == full_edge_mask(c3));

    Multidigraph l2 = double_string(2);
    CHECK(id_sets(l2, directed_cycles(l2)) ==
          std::set<std::set<std::string>>{{"e1", "e1'"}, {"e2", "e2'"}});

    Multidigraph c = demo_c();
    CHECK(id_sets(c, directed_cycles(c)) ==
          std::set<std::set<std::string>>{{"e3", "e5", "e6"},
                                          {"e4", "e5", "e6"},
                                          {"e7", "e8", "e9", "e11"},
                                          {"e7", "e8", "e10", "e11"}});
}

TEST_CASE("directed_cycles matches the subset-scan oracle") {
    std::vector<Multidigraph> corpus = {double_string(2), double_string(3), double_cycle(3),
                                        directed_cycle(4), demo_a(), demo_b(), demo_c()};
    for (const auto& d : corpus) {
        auto got = directed_cycles(d);
        auto want = oracle::directed_cycles_brute(d);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("directed cycle sets form an antichain") {
    std::vector<Multidigraph> corpus = {double_cycle(3), double_cycle(4), demo_a(), demo_c()};
    for (const auto& d : corpus) {
        auto cycles = directed_cycles(d);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = 0; j < cycles.size(); ++j)
                if (i != j) CHECK((cycles[i] & cycles[j]) != cycles[i]);
    }
}

TEST_CASE("acyclicity is monotone under edge deletion") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RandomSpec spec;
        spec.vertices = 4;
        spec.edges = 6;
        spec.seed = seed;
        Multidigraph d = random_multidigraph(spec);
        Acyclicity before = acyclicity(d);
        for (int e = 0; e < d.edge_count(); ++e) {
            Acyclicity after = acyclicity(delete_edge(d, e));
            if (before.acyclic) CHECK(after.acyclic);
            if (before.two_acyclic) CHECK(after.two_acyclic);
        }
    }
}

TEST_CASE("acyclicity") {
    auto a = acyclicity(double_string(2));
    CHECK_FALSE(a.acyclic);
    CHECK(a.two_acyclic);

    auto b = acyclicity(directed_cycle(3));
    CHECK_FALSE(b.acyclic);
    CHECK_FALSE(b.two_acyclic);

    auto c = acyclicity(single_edge());
    CHECK(c.acyclic);
    CHECK(c.two_acyclic);
}

TEST_CASE("link_lf") {
    // four-vertex showcase: the surviving triangle with merged endpoints
    Multidigraph b = demo_b();
    Multidigraph lk = link_lf(b, b.require_edge("e"));
    CHECK(lk.vertex_count() == 3);
    REQUIRE(lk.edge_count() == 3);
    auto edge_str = [&](const Multidigraph& d, const std::string& id) {
        int e = d.require_edge(id);
        return d.vertex_id(d.source(e)) + ">" + d.vertex_id(d.target(e));
    };
    CHECK(edge_str(lk, "f3") == "1>2");
    CHECK(edge_str(lk, "f4") == "1>3");
    CHECK(edge_str(lk, "f5") == "2>3");

    Multidigraph se = single_edge();
    Multidigraph selk = link_lf(se, 0);
    CHECK(selk.vertex_count() == 1);
    CHECK(selk.edge_count() == 0);

    Multidigraph l2 = double_string(2);
    Multidigraph l2lk = link_lf(l2, l2.require_edge("e1"));
    CHECK(l2lk.vertex_count() == 2); // merged vertex and vertex 3
    REQUIRE(l2lk.edge_count() == 1);
    CHECK(edge_str(l2lk, "e2") == "1>3");
}

TEST_CASE("link_dt") {
    Multidigraph b = demo_b();
    Multidigraph lk = link_dt(b, b.require_edge("e"));
    CHECK(lk.vertex_count() == 3);
    CHECK(lk.edge_count() == 5);
    // the doubled 1->2 plus the rerouted 4->2 pile up on the merged vertex
    int count12 = 0, count13 = 0, count23 = 0;
    for (int e = 0; e < lk.edge_count(); ++e) {
        std::string s = lk.vertex_id(lk.source(e)), t = lk.vertex_id(lk.target(e));
        if (s == "1" && t == "2") ++count12;
        if (s == "1" && t == "3") ++count13;
        if (s == "2" && t == "3") ++count23;
    }
    CHECK(count12 == 3);
    CHECK(count13 == 1);
    CHECK(count23 == 1);

    Multidigraph se = single_edge();
    CHECK(link_dt(se, 0).vertex_count() == 1);
    CHECK(link_dt(se, 0).edge_count() == 0);

    Multidigraph p3 = double_cycle(3);
    Multidigraph p3lk = link_dt(p3, p3.require_edge("e1"));
    CHECK(p3lk.vertex_count() == 2);
    REQUIRE(p3lk.edge_count() == 3);
    auto has = [&](const std::string& id, const std::string& s, const std::string& t) {
        int e = p3lk.edge_index(id);
        REQUIRE(e >= 0);
        CHECK(p3lk.vertex_id(p3lk.source(e)) == s);
        CHECK(p3lk.vertex_id(p3lk.target(e)) == t);
    };
    has("e2", "0", "2");
    has("e3", "2", "0");
    has("e3'", "0", "2");
}

TEST_CASE("delete_edge") {
    Multidigraph b = demo_b();
    Multidigraph del = delete_edge(b, b.require_edge("e"));
    CHECK(del.vertex_count() == 4);
    CHECK(del.edge_count() == 6);

    Multidigraph se = single_edge();
    Multidigraph sdel = delete_edge(se, 0);
    CHECK(sdel.vertex_count() == 2);
    CHECK(sdel.edge_count() == 0);

    Multidigraph l2 = double_string(2);
    Multidigraph l2del = delete_edge(l2, l2.require_edge("e1"));
    CHECK(l2del.edge_count() == 3);
    CHECK(l2del.edge_index("e1") == -1);
}

TEST_CASE("alternating closed trails") {
    Multidigraph w;
    w.add_edge("a", "1", "2");
    w.add_edge("b", "3", "2");
    w.add_edge("c", "3", "4");
    w.add_edge("d", "1", "4");
    auto trails = alternating_closed_trails(w, 4);
    REQUIRE(trails.size() == 1);
    CHECK(trails[0].size() == 4);

    CHECK(alternating_closed_trails(directed_path(5), 10).empty());
    CHECK(alternating_closed_trails(directed_cycle(3), 3).empty());
    CHECK_THROWS_AS(alternating_closed_trails(w, 2), InvalidInput);
}

TEST_CASE("alternating closed trails match the sequence-scan oracle") {
    std::vector<Multidigraph> corpus = {double_string(2), double_cycle(3), demo_a(), demo_b()};
    for (const auto& d : corpus) {
        auto got = alternating_closed_trails(d, d.edge_count());
        CHECK(got.size() == oracle::alternating_trail_count_brute(d, d.edge_count()));
    }
}

TEST_CASE("is_ln_free") {
    CHECK_FALSE(is_ln_free(double_string(2), 2));
    CHECK(is_ln_free(directed_cycle(3), 2));
    // the doubled 3-cycle carries a doubled 2-path through any vertex
    CHECK_FALSE(is_ln_free(double_cycle(3), 2));
    CHECK_FALSE(is_ln_free(double_string(3), 2));
    CHECK_FALSE(is_ln_free(double_string(3), 3));
    CHECK(is_ln_free(double_string(3), 4));

    // a single 2-cycle is the n = 1 double string
    Multidigraph one;
    one.add_edge("e", "a", "b");
    one.add_edge("f", "b", "a");
    CHECK_FALSE(is_ln_free(one, 1));
    CHECK(is_ln_free(one, 2));
}

TEST_CASE("is_ln_free matches the edge-subset scan oracle") {
    // oracle: test every edge subset of size 2n for isomorphism with the
    // double string
    auto ln = [](int n) { return double_string(n); };
    std::vector<Multidigraph> corpus = {double_string(2), double_cycle(3), demo_a(), demo_b()};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        RandomSpec spec;
        spec.vertices = 4;
        spec.edges = 6;
        spec.seed = seed;
        corpus.push_back(random_multidigraph(spec));
    }
    for (const auto& d : corpus) {
        for (int n = 2; n <= 3; ++n) {
            bool found = false;
            EdgeMask all = full_edge_mask(d);
            for (EdgeMask m = 0;; ++m) {
                if ((m & all) == m && std::popcount(m) == 2 * n &&
                    are_isomorphic(induced_by_edges(d, m), ln(n)))
                    found = true;
                if (m == all || found) break;
            }
            CHECK(is_ln_free(d, n) == !found);
        }
    }
}

TEST_CASE("cycle_piercing_edges") {
    CHECK(cycle_piercing_edges(demo_c()).empty());
    CHECK(cycle_piercing_edges(directed_path(4)).empty());
    Multidigraph p3 = double_cycle(3);
    CHECK(cycle_piercing_edges(p3).size() == 6); // symmetric, every edge pierces
}

TEST_CASE("simplicial_edges") {
    CHECK(simplicial_edges(demo_c()).size() == 11);
    CHECK(simplicial_edges(directed_path(4)).size() == 4);
    // every edge of the double directed 3-cycle has a 2-cycle through it and a
    // third edge entering its head from outside, so none are simplicial
    CHECK(simplicial_edges(double_cycle(3)).empty());
}

TEST_CASE("disjoint_union") {
    Multidigraph l2 = double_string(2);
    Multidigraph empty;
    CHECK(are_isomorphic(disjoint_union(l2, empty), l2));

    Multidigraph both = disjoint_union(l2, directed_cycle(3));
    CHECK(both.edge_count() == l2.edge_count() + 3);
    CHECK(both.vertex_count() == l2.vertex_count() + 3);
}

TEST_CASE("are_isomorphic") {
    Multidigraph l2 = double_string(2);
    CHECK(are_isomorphic(l2, l2));
    CHECK_FALSE(are_isomorphic(l2, double_cycle(3)));

    Multidigraph relabeled;
    relabeled.add_edge("x", "p", "q");
    relabeled.add_edge("y", "q", "r");
    relabeled.add_edge("z", "r", "p");
    CHECK(are_isomorphic(relabeled, directed_cycle(3)));

    // equivalence relation on a seeded sample
    std::vector<Multidigraph> sample;
    for (std::uint64_t s = 1; s <= 6; ++s) {
        RandomSpec spec;
        spec.vertices = 4;
        spec.edges = 5;
        spec.seed = s;
        sample.push_back(random_multidigraph(spec));
    }
    for (const auto& a : sample) CHECK(are_isomorphic(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
}

TEST_CASE("underlying graph helpers") {
    CHECK(underlying_is_forest(double_string(3)));
    CHECK_FALSE(underlying_is_forest(double_cycle(3)));
    CHECK(underlying_is_cycle(double_cycle(4)));
    CHECK(underlying_is_cycle(directed_cycle(3)));
    CHECK_FALSE(underlying_is_cycle(double_string(2)));
    CHECK_FALSE(underlying_is_cycle(demo_a()));

    Multidigraph two = disjoint_union(directed_cycle(3), directed_cycle(3));
    auto comps = weak_components_edges(two);
    REQUIRE(comps.size() == 2);
    CHECK(std::popcount(comps[0]) == 3);
    CHECK(std::popcount(comps[1]) == 3);
}

TEST_CASE("link graphs only ever drop edges relative to deletion") {
    std::vector<Multidigraph> corpus = {double_string(2), double_cycle(3), demo_a(), demo_b(),
                                        demo_c()};
    for (const auto& d : corpus) {
        for (int e = 0; e < d.edge_count(); ++e) {
            Multidigraph lf = link_lf(d, e);
            Multidigraph dt = link_dt(d, e);
            Multidigraph del = delete_edge(d, e);
            for (int f = 0; f < lf.edge_count(); ++f)
                CHECK(del.edge_index(lf.edge(f).id) >= 0);
            for (int f = 0; f < dt.edge_count(); ++f)
                CHECK(del.edge_index(dt.edge(f).id) >= 0);
            // the lf rules remove a superset of the dt rules
            for (int f = 0; f < lf.edge_count(); ++f)
                CHECK(dt.edge_index(lf.edge(f).id) >= 0);
        }
    }
}
