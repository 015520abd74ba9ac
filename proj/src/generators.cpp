#include "diforest/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace diforest {

Multidigraph double_string(int n) {
    if (n < 2) throw InvalidInput("double directed string requires n >= 2");
    Multidigraph d;
    for (int i = 1; i <= n + 1; ++i) d.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        d.add_edge("e" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
        d.add_edge("e" + std::to_string(i) + "'", std::to_string(i + 1), std::to_string(i));
    }
    return d;
}

Multidigraph double_cycle(int n) {
    if (n < 3) throw InvalidInput("double directed cycle requires n >= 3");
    Multidigraph d;
    for (int i = 0; i < n; ++i) d.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        std::string from = std::to_string(i - 1);
        std::string to = std::to_string(i % n);
        d.add_edge("e" + std::to_string(i), from, to);
        d.add_edge("e" + std::to_string(i) + "'", to, from);
    }
    return d;
}

Multidigraph directed_cycle(int n) {
    if (n < 3) throw InvalidInput("directed cycle requires n >= 3");
    Multidigraph d;
    for (int i = 0; i < n; ++i) d.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        d.add_edge("e" + std::to_string(i), std::to_string(i - 1), std::to_string(i % n));
    return d;
}

Multidigraph directed_path(int n) {
    if (n < 1) throw InvalidInput("directed path requires n >= 1");
    Multidigraph d;
    for (int i = 0; i <= n; ++i) d.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        d.add_edge("e" + std::to_string(i), std::to_string(i - 1), std::to_string(i));
    return d;
}

Multidigraph bipartite_conflict_realizer(int m, int n) {
    if (m < 1 || n < 1 || m > 3 || n > 3)
        throw InvalidInput("complete bipartite conflict graphs exist only for parts of size 1..3");
    bool swapped = m > n;
    if (swapped) std::swap(m, n);

    // edges are listed as (id, src, dst); reversing all edges swaps the roles
    // of the two parts without changing the conflict graph
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    if (m == 1 && n == 1) {
        edges = {{"x1", "1", "2"}, {"y1", "1", "3"}};
    } else if (m == 1 && n == 2) {
        edges = {{"x1", "1", "2"}, {"y1", "2", "1"}, {"y2", "1", "3"}};
    } else if (m == 1 && n == 3) {
        edges = {{"x1", "1", "2"}, {"y1", "2", "1"}, {"y2", "1", "3"}, {"y3", "4", "2"}};
    } else if (m == 2 && n == 2) {
        edges = {{"x1", "1", "2"}, {"x2", "2", "3"}, {"y1", "2", "1"}, {"y2", "3", "2"}};
    } else if (m == 2 && n == 3) {
        edges = {{"x1", "1", "2"}, {"x2", "2", "3"}, {"y1", "2", "1"}, {"y2", "3", "2"},
                 {"y3", "1", "3"}};
    } else { // 3,3
        edges = {{"x1", "0", "1"}, {"x2", "1", "2"}, {"x3", "2", "0"},
                 {"y1", "1", "0"}, {"y2", "2", "1"}, {"y3", "0", "2"}};
    }
    Multidigraph d;
    for (auto& [id, src, dst] : edges) {
        if (swapped) {
            // reversing every edge swaps the roles of the two parts
            std::string flipped = (id[0] == 'x' ? "y" : "x") + id.substr(1);
            d.add_edge(flipped, dst, src);
        } else {
            d.add_edge(id, src, dst);
        }
    }
    return d;
}

Multidigraph demo_a() {
    Multidigraph d;
    for (int i = 1; i <= 4; ++i) d.add_vertex("u" + std::to_string(i));
    d.add_edge("e1", "u1", "u2");
    d.add_edge("e2", "u2", "u3");
    d.add_edge("e3", "u2", "u4");
    d.add_edge("e4", "u4", "u2");
    d.add_edge("e5", "u3", "u4");
    d.add_edge("e6", "u1", "u3");
    d.add_edge("e7", "u1", "u3");
    return d;
}

Multidigraph demo_b() {
    Multidigraph d;
    for (int i = 1; i <= 4; ++i) d.add_vertex(std::to_string(i));
    d.add_edge("e", "1", "4");
    d.add_edge("f1", "1", "2");
    d.add_edge("f2", "1", "2");
    d.add_edge("f3", "4", "2");
    d.add_edge("f4", "4", "3");
    d.add_edge("f5", "2", "3");
    d.add_edge("f6", "3", "4");
    return d;
}

Multidigraph demo_c() {
    Multidigraph d;
    for (int i = 1; i <= 8; ++i) d.add_vertex("v" + std::to_string(i));
    d.add_edge("e1", "v2", "v1");
    d.add_edge("e2", "v4", "v1");
    d.add_edge("e3", "v7", "v4");
    d.add_edge("e4", "v7", "v4");
    d.add_edge("e5", "v8", "v7");
    d.add_edge("e6", "v4", "v8");
    d.add_edge("e7", "v5", "v2");
    d.add_edge("e8", "v2", "v3");
    d.add_edge("e9", "v3", "v6");
    d.add_edge("e10", "v3", "v6");
    d.add_edge("e11", "v6", "v5");
    return d;
}

namespace {

/// Uniform-ish draw below bound; modulo bias is irrelevant here, determinism
/// across platforms is what matters.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

Multidigraph random_multidigraph(const RandomSpec& spec) {
    if (spec.vertices < 2 || spec.edges < 0 || spec.multiplicity_cap < 1)
        throw InvalidInput("random multidigraph needs >= 2 vertices, >= 0 edges, cap >= 1");
    std::mt19937_64 rng(spec.seed);
    const int n = spec.vertices;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Multidigraph d;
        for (int i = 1; i <= n; ++i) d.add_vertex(std::to_string(i));
        std::map<std::pair<int, int>, int> mult;
        bool ok = true;
        for (int e = 1; e <= spec.edges && ok; ++e) {
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                int u = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
                int v = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - 1)));
                if (v >= u) ++v;
                if (mult[{u, v}] >= spec.multiplicity_cap) continue;
                ++mult[{u, v}];
                d.add_edge("e" + std::to_string(e), std::to_string(u + 1), std::to_string(v + 1));
                placed = true;
            }
            ok = placed;
        }
        if (!ok) continue;
        Acyclicity a = acyclicity(d);
        if (spec.filter == RandomSpec::Filter::Acyclic && !a.acyclic) continue;
        if (spec.filter == RandomSpec::Filter::TwoAcyclic && !a.two_acyclic) continue;
        return d;
    }
    throw InvalidInput("rejection sampling failed; filters too strict for the parameters");
}

namespace {

/// Invariant bucket used to keep pairwise isomorphism checks cheap.
std::string iso_bucket_key(const Multidigraph& d) {
    std::vector<std::pair<int, int>> degs;
    for (int v = 0; v < d.vertex_count(); ++v) {
        Degrees g = degrees(d, d.vertex_id(v));
        degs.push_back({g.in, g.out});
    }
    std::sort(degs.begin(), degs.end());
    std::string key = std::to_string(d.vertex_count()) + "/" + std::to_string(d.edge_count());
    for (auto [i, o] : degs) key += ":" + std::to_string(i) + "," + std::to_string(o);
    return key;
}

} // namespace

std::vector<Multidigraph> enumerate_all(int max_vertices, int max_edges, int multiplicity_cap) {
    if (max_vertices < 1 || max_edges < 0 || multiplicity_cap < 1)
        throw InvalidInput("bad enumeration bounds");
    std::vector<Multidigraph> out;
    {
        Multidigraph single;
        single.add_vertex("1");
        out.push_back(single); // the unique edgeless instance kept in the corpus
    }
    if (max_edges == 0) return out;

    std::map<std::string, std::vector<std::size_t>> buckets;
    for (int nv = 2; nv <= max_vertices; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < nv; ++u)
            for (int v = 0; v < nv; ++v)
                if (u != v) pairs.push_back({u, v});

        std::vector<int> mult(pairs.size(), 0);
        auto emit = [&]() {
            std::vector<bool> covered(static_cast<std::size_t>(nv), false);
            int total = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (mult[p] == 0) continue;
                total += mult[p];
                covered[static_cast<std::size_t>(pairs[p].first)] = true;
                covered[static_cast<std::size_t>(pairs[p].second)] = true;
            }
            if (total == 0) return;
            if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return;

            Multidigraph d;
            for (int i = 1; i <= nv; ++i) d.add_vertex(std::to_string(i));
            int e = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                for (int c = 0; c < mult[p]; ++c)
                    d.add_edge("e" + std::to_string(++e), std::to_string(pairs[p].first + 1),
                               std::to_string(pairs[p].second + 1));

            std::string key = iso_bucket_key(d);
            for (std::size_t idx : buckets[key])
                if (are_isomorphic(out[idx], d)) return;
            buckets[key].push_back(out.size());
            out.push_back(std::move(d));
        };

        auto rec = [&](auto&& self, std::size_t p, int budget) -> void {
            if (p == pairs.size()) {
                emit();
                return;
            }
            for (int c = 0; c <= std::min(multiplicity_cap, budget); ++c) {
                mult[p] = c;
                self(self, p + 1, budget - c);
            }
            mult[p] = 0;
        };
        rec(rec, 0, max_edges);
    }
    return out;
}

Multidigraph generate(const FamilySpec& spec) {
    if (spec.family == "ln") return double_string(spec.n);
    if (spec.family == "pn") return double_cycle(spec.n);
    if (spec.family == "cycle") return directed_cycle(spec.n);
    if (spec.family == "path") return directed_path(spec.n);
    if (spec.family == "kmn") return bipartite_conflict_realizer(spec.m, spec.n);
    if (spec.family == "random") return random_multidigraph(spec.random);
    if (spec.family == "demo-a") return demo_a();
    if (spec.family == "demo-b") return demo_b();
    if (spec.family == "demo-c") return demo_c();
    throw InvalidInput("unknown family '" + spec.family + "'");
}

std::vector<std::pair<std::string, Multidigraph>> named_corpus() {
    std::vector<std::pair<std::string, Multidigraph>> out;
    out.emplace_back("ln2", double_string(2));
    out.emplace_back("ln3", double_string(3));
    out.emplace_back("pn3", double_cycle(3));
    out.emplace_back("pn4", double_cycle(4));
    out.emplace_back("cycle3", directed_cycle(3));
    out.emplace_back("cycle4", directed_cycle(4));
    out.emplace_back("demo-a", demo_a());
    out.emplace_back("demo-b", demo_b());
    out.emplace_back("demo-c", demo_c());
    return out;
}

} // namespace diforest
