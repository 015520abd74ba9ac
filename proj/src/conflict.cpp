#include "diforest/conflict.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace diforest {

int ConflictGraph::edge_pair_count() const {
    int total = 0;
    for (auto m : adj) total += std::popcount(m);
    return total / 2;
}

namespace {

ConflictGraph build_conflict(const Multidigraph& d, bool include_source_rule) {
    if (d.edge_count() > 32) throw CapExceeded("conflict graphs support at most 32 edges");
    ConflictGraph g;
    g.flavor = include_source_rule ? ConflictFlavor::LinearForest : ConflictFlavor::Tree;
    for (const Edge& e : d.edges()) g.labels.push_back(e.id);
    g.adj.assign(g.labels.size(), 0);
    const int n = d.edge_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool same_source = d.source(a) == d.source(b);
            bool same_target = d.target(a) == d.target(b);
            bool same_pair = (same_source && same_target) ||
                             (d.source(a) == d.target(b) && d.target(a) == d.source(b));
            bool conflict = same_target || same_pair || (include_source_rule && same_source);
            if (conflict) {
                g.adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
                g.adj[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
            }
        }
    }
    return g;
}

} // namespace

ConflictGraph conflict_graph_lf(const Multidigraph& d) { return build_conflict(d, true); }
ConflictGraph conflict_graph_dt(const Multidigraph& d) { return build_conflict(d, false); }

SimplicialComplex independence_complex(const ConflictGraph& g, int vertex_cap) {
    const int n = g.size();
    if (n > vertex_cap)
        throw CapExceeded("independence complex cap of " + std::to_string(vertex_cap) +
                          " vertices exceeded");
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    // complement adjacency: maximal cliques there are maximal independent sets
    std::vector<std::uint32_t> nbar(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        nbar[static_cast<std::size_t>(v)] =
            all & ~g.adj[static_cast<std::size_t>(v)] & ~(std::uint32_t{1} << v);

    std::vector<std::uint32_t> cliques;
    auto bk = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
        if (p == 0 && x == 0) {
            cliques.push_back(r);
            return;
        }
        std::uint32_t px = p | x;
        int pivot = -1, best = -1;
        for (int u = 0; u < n; ++u) {
            if (!(px >> u & 1)) continue;
            int c = std::popcount(p & nbar[static_cast<std::size_t>(u)]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        std::uint32_t cand = p & ~nbar[static_cast<std::size_t>(pivot)];
        for (int v = 0; v < n; ++v) {
            if (!(cand >> v & 1)) continue;
            std::uint32_t bit = std::uint32_t{1} << v;
            self(self, r | bit, p & nbar[static_cast<std::size_t>(v)],
                 x & nbar[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (n == 0) return SimplicialComplex::make_empty();
    bk(bk, 0, all, 0);

    std::vector<std::vector<std::string>> facet_sets;
    std::sort(cliques.begin(), cliques.end());
    for (std::uint32_t c : cliques) {
        std::vector<std::string> fs;
        for (int v = 0; v < n; ++v)
            if (c >> v & 1) fs.push_back(g.labels[static_cast<std::size_t>(v)]);
        facet_sets.push_back(std::move(fs));
    }
    return SimplicialComplex(g.labels, facet_sets);
}

std::vector<std::vector<int>> induced_cycles(const ConflictGraph& g) {
    const int n = g.size();
    std::map<std::uint32_t, std::vector<int>> found; // keyed by vertex set
    std::vector<int> path;

    // chordless path extension: a new vertex may touch only the path's last
    // vertex, except the start vertex which closes a cycle
    auto dfs = [&](auto&& self, std::uint32_t path_mask, std::uint32_t middle_mask) -> void {
        int last = path.back();
        int v0 = path.front();
        for (int w = 0; w < n; ++w) {
            if (w <= v0) continue;
            if (path_mask >> w & 1) continue;
            if (!g.adjacent(last, w)) continue;
            if (g.adj[static_cast<std::size_t>(w)] & middle_mask) continue;
            if (g.adjacent(v0, w)) {
                if (path.size() >= 2) {
                    auto cycle = path;
                    cycle.push_back(w);
                    std::uint32_t key = path_mask | (std::uint32_t{1} << w);
                    found.emplace(key, std::move(cycle));
                }
                continue; // any extension through w would chord back to v0
            }
            path.push_back(w);
            self(self, path_mask | (std::uint32_t{1} << w),
                 middle_mask | (std::uint32_t{1} << last));
            path.pop_back();
        }
    };

    for (int v0 = 0; v0 < n; ++v0) {
        for (int v1 = v0 + 1; v1 < n; ++v1) {
            if (!g.adjacent(v0, v1)) continue;
            path = {v0, v1};
            dfs(dfs, (std::uint32_t{1} << v0) | (std::uint32_t{1} << v1), 0);
        }
    }

    std::vector<std::vector<int>> out;
    for (auto& [key, cyc] : found) out.push_back(std::move(cyc));
    return out;
}

Chordality chordality(const ConflictGraph& g) {
    const int n = g.size();
    Chordality res;
    if (n == 0) {
        res.chordal = true;
        return res;
    }

    // maximum cardinality search, numbering n..1
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> number(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    for (int k = n; k >= 1; --k) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (numbered[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])
                pick = v;
        }
        number[static_cast<std::size_t>(pick)] = k;
        numbered[static_cast<std::size_t>(pick)] = true;
        for (int u = 0; u < n; ++u)
            if (!numbered[static_cast<std::size_t>(u)] && g.adjacent(pick, u))
                ++weight[static_cast<std::size_t>(u)];
    }

    // perfect elimination check along increasing numbers
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
        int u = -1;
        std::uint32_t later = 0;
        for (int w = 0; w < n; ++w) {
            if (!g.adjacent(v, w) || number[static_cast<std::size_t>(w)] <= number[static_cast<std::size_t>(v)])
                continue;
            later |= std::uint32_t{1} << w;
            if (u < 0 || number[static_cast<std::size_t>(w)] < number[static_cast<std::size_t>(u)]) u = w;
        }
        if (u < 0) continue;
        std::uint32_t rest = later & ~(std::uint32_t{1} << u);
        if ((rest & ~g.adj[static_cast<std::size_t>(u)]) != 0) ok = false;
    }

    res.chordal = ok;
    if (ok) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return number[static_cast<std::size_t>(a)] < number[static_cast<std::size_t>(b)];
        });
        for (int v : order) res.elimination_order.push_back(g.labels[static_cast<std::size_t>(v)]);
    } else {
        for (const auto& cyc : induced_cycles(g)) {
            if (cyc.size() >= 4) {
                for (int v : cyc) res.hole.push_back(g.labels[static_cast<std::size_t>(v)]);
                break;
            }
        }
    }
    return res;
}

bool woodroofe_condition(const ConflictGraph& g) {
    if (g.size() > 20) throw CapExceeded("induced-cycle enumeration capped at 20 vertices");
    for (const auto& cyc : induced_cycles(g)) {
        auto len = cyc.size();
        if (len != 3 && len != 5) return false;
    }
    return true;
}

Realizability realizability_checks(const Multidigraph& d) {
    ConflictGraph g = conflict_graph_lf(d);
    const int n = g.size();
    Realizability rep;
    auto endpoint_pair = [&](int e) {
        return std::pair<int, int>{std::min(d.source(e), d.target(e)),
                                   std::max(d.source(e), d.target(e))};
    };

    // canonical clique families: out-stars, in-stars, endpoint-pair bundles
    std::map<int, std::uint32_t> out_star, in_star;
    std::map<std::pair<int, int>, std::uint32_t> pair_bundle;
    for (int e = 0; e < n; ++e) {
        out_star[d.source(e)] |= std::uint32_t{1} << e;
        in_star[d.target(e)] |= std::uint32_t{1} << e;
        pair_bundle[endpoint_pair(e)] |= std::uint32_t{1} << e;
    }
    auto is_clique = [&](std::uint32_t m) {
        for (int a = 0; a < n; ++a) {
            if (!(m >> a & 1)) continue;
            std::uint32_t rest = m & ~(std::uint32_t{1} << a);
            if ((rest & ~g.adj[static_cast<std::size_t>(a)]) != 0) return false;
        }
        return true;
    };
    bool cliques_ok = true;
    for (auto& [v, m] : out_star) cliques_ok = cliques_ok && is_clique(m);
    for (auto& [v, m] : in_star) cliques_ok = cliques_ok && is_clique(m);
    for (auto& [p, m] : pair_bundle) cliques_ok = cliques_ok && is_clique(m);

    bool adjacency_covered = true;
    for (int a = 0; a < n && adjacency_covered; ++a)
        for (int b = a + 1; b < n && adjacency_covered; ++b) {
            if (!g.adjacent(a, b)) continue;
            std::uint32_t pairm = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
            bool covered = false;
            auto check = [&](std::uint32_t m) { covered = covered || (m & pairm) == pairm; };
            check(out_star[d.source(a)]);
            check(in_star[d.target(a)]);
            check(pair_bundle[endpoint_pair(a)]);
            adjacency_covered = covered;
        }
    rep.clique_cover_ok = cliques_ok && adjacency_covered;

    bool nbhd_ok = true;
    for (int e = 0; e < n && nbhd_ok; ++e) {
        std::uint32_t cover = out_star[d.source(e)] | in_star[d.target(e)] |
                              pair_bundle[endpoint_pair(e)];
        nbhd_ok = (g.adj[static_cast<std::size_t>(e)] & ~cover) == 0;
    }
    rep.neighborhood_cover_ok = nbhd_ok;

    // induced-claw scan over each center's neighborhood
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (g.adjacent(c, v)) nb.push_back(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    int x = nb[i], y = nb[j], z = nb[k];
                    if (g.adjacent(x, y) || g.adjacent(x, z) || g.adjacent(y, z)) continue;
                    bool distinct_sources = d.source(x) != d.source(y) &&
                                            d.source(x) != d.source(z) &&
                                            d.source(y) != d.source(z);
                    bool distinct_targets = d.target(x) != d.target(y) &&
                                            d.target(x) != d.target(z) &&
                                            d.target(y) != d.target(z);
                    bool pair_leaf = endpoint_pair(x) == endpoint_pair(c) ||
                                     endpoint_pair(y) == endpoint_pair(c) ||
                                     endpoint_pair(z) == endpoint_pair(c);
                    if (!pair_leaf) rep.every_claw_has_pair_leaf = false;
                    if (distinct_sources && distinct_targets) {
                        Realizability::Claw claw;
                        claw.center = g.labels[static_cast<std::size_t>(c)];
                        claw.leaves = {g.labels[static_cast<std::size_t>(x)],
                                       g.labels[static_cast<std::size_t>(y)],
                                       g.labels[static_cast<std::size_t>(z)]};
                        claw.has_endpoint_pair_leaf = pair_leaf;
                        rep.claw_findings.push_back(std::move(claw));
                    }
                }
    }
    return rep;
}

} // namespace diforest
