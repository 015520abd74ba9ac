#include "diforest/multidigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace diforest {

namespace {

int popcount(EdgeMask m) { return std::popcount(m); }

void check_edge_space(const Multidigraph& d) {
    if (d.edge_count() > 32)
        throw CapExceeded("edge-set operations support at most 32 edges, got " +
                          std::to_string(d.edge_count()));
}

} // namespace

int Multidigraph::add_vertex(const std::string& id) {
    auto it = vertex_lookup_.find(id);
    if (it != vertex_lookup_.end()) return it->second;
    int idx = vertex_count();
    vertex_ids_.push_back(id);
    vertex_lookup_.emplace(id, idx);
    return idx;
}

int Multidigraph::add_edge(const std::string& id, const std::string& src_id,
                           const std::string& dst_id) {
    if (edge_lookup_.count(id))
        throw InvalidInput("duplicate edge identifier '" + id + "'");
    if (src_id == dst_id)
        throw InvalidInput("loop edge '" + id + "' (source equals target) is not supported");
    int s = add_vertex(src_id);
    int t = add_vertex(dst_id);
    int idx = edge_count();
    edges_.push_back(Edge{id, s, t});
    edge_lookup_.emplace(id, idx);
    return idx;
}

int Multidigraph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    return it == vertex_lookup_.end() ? -1 : it->second;
}

int Multidigraph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    return it == edge_lookup_.end() ? -1 : it->second;
}

int Multidigraph::require_vertex(const std::string& id) const {
    int v = vertex_index(id);
    if (v < 0) throw InvalidInput("unknown vertex identifier '" + id + "'");
    return v;
}

int Multidigraph::require_edge(const std::string& id) const {
    int e = edge_index(id);
    if (e < 0) throw InvalidInput("unknown edge identifier '" + id + "'");
    return e;
}

EdgeMask full_edge_mask(const Multidigraph& d) {
    check_edge_space(d);
    if (d.edge_count() == 32) return ~EdgeMask{0};
    return (EdgeMask{1} << d.edge_count()) - 1;
}

EdgeMask edge_mask(const Multidigraph& d, const std::vector<std::string>& edge_ids) {
    check_edge_space(d);
    EdgeMask m = 0;
    for (const auto& id : edge_ids) m |= EdgeMask{1} << d.require_edge(id);
    return m;
}

std::vector<std::string> edge_ids_of(const Multidigraph& d, EdgeMask mask) {
    std::vector<std::string> out;
    for (int e = 0; e < d.edge_count(); ++e)
        if (mask >> e & 1) out.push_back(d.edge(e).id);
    return out;
}

Multidigraph induced_by_edges(const Multidigraph& d, EdgeMask sigma) {
    check_edge_space(d);
    std::vector<bool> used(static_cast<std::size_t>(d.vertex_count()), false);
    for (int e = 0; e < d.edge_count(); ++e) {
        if (!(sigma >> e & 1)) continue;
        used[static_cast<std::size_t>(d.source(e))] = true;
        used[static_cast<std::size_t>(d.target(e))] = true;
    }
    Multidigraph out;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (used[static_cast<std::size_t>(v)]) out.add_vertex(d.vertex_id(v));
    for (int e = 0; e < d.edge_count(); ++e)
        if (sigma >> e & 1)
            out.add_edge(d.edge(e).id, d.vertex_id(d.source(e)), d.vertex_id(d.target(e)));
    return out;
}

Multidigraph induced_on_vertices(const Multidigraph& d, const std::vector<int>& vertices) {
    std::vector<bool> in(static_cast<std::size_t>(d.vertex_count()), false);
    for (int v : vertices) in[static_cast<std::size_t>(v)] = true;
    Multidigraph out;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (in[static_cast<std::size_t>(v)]) out.add_vertex(d.vertex_id(v));
    for (int e = 0; e < d.edge_count(); ++e)
        if (in[static_cast<std::size_t>(d.source(e))] && in[static_cast<std::size_t>(d.target(e))])
            out.add_edge(d.edge(e).id, d.vertex_id(d.source(e)), d.vertex_id(d.target(e)));
    return out;
}

Degrees degrees(const Multidigraph& d, const std::string& vertex) {
    int v = d.require_vertex(vertex);
    Degrees deg;
    for (int e = 0; e < d.edge_count(); ++e) {
        if (d.target(e) == v) ++deg.in;
        if (d.source(e) == v) ++deg.out;
    }
    return deg;
}

namespace {

/// Kahn peeling restricted to the edges of sigma; true iff a directed cycle
/// survives.
bool subset_has_directed_cycle(const Multidigraph& d, EdgeMask sigma) {
    std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<bool> alive(static_cast<std::size_t>(d.edge_count()), false);
    int remaining = 0;
    for (int e = 0; e < d.edge_count(); ++e) {
        if (!(sigma >> e & 1)) continue;
        alive[static_cast<std::size_t>(e)] = true;
        ++indeg[static_cast<std::size_t>(d.target(e))];
        ++remaining;
    }
    bool changed = true;
    while (changed && remaining > 0) {
        changed = false;
        for (int e = 0; e < d.edge_count(); ++e) {
            if (!alive[static_cast<std::size_t>(e)]) continue;
            if (indeg[static_cast<std::size_t>(d.source(e))] == 0) {
                alive[static_cast<std::size_t>(e)] = false;
                --indeg[static_cast<std::size_t>(d.target(e))];
                --remaining;
                changed = true;
            }
        }
    }
    return remaining > 0;
}

} // namespace

SubsetClass classify_subset(const Multidigraph& d, EdgeMask sigma) {
    check_edge_space(d);
    if (sigma & ~full_edge_mask(d)) throw InvalidInput("edge subset outside host multidigraph");
    std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int e = 0; e < d.edge_count(); ++e) {
        if (!(sigma >> e & 1)) continue;
        ++outdeg[static_cast<std::size_t>(d.source(e))];
        ++indeg[static_cast<std::size_t>(d.target(e))];
    }
    bool in_ok = std::all_of(indeg.begin(), indeg.end(), [](int x) { return x <= 1; });
    bool out_ok = std::all_of(outdeg.begin(), outdeg.end(), [](int x) { return x <= 1; });
    if (!in_ok) return SubsetClass::NotForest;
    if (subset_has_directed_cycle(d, sigma)) return SubsetClass::NotForest;
    // in-degree <= 1 already excludes parallel pairs
    return out_ok ? SubsetClass::LinearForest : SubsetClass::DirectedForest;
}

std::vector<EdgeMask> directed_cycles(const Multidigraph& d) {
    check_edge_space(d);
    std::vector<EdgeMask> out;
    std::vector<std::vector<int>> out_edges(static_cast<std::size_t>(d.vertex_count()));
    for (int e = 0; e < d.edge_count(); ++e)
        out_edges[static_cast<std::size_t>(d.source(e))].push_back(e);

    // A directed cycle visits distinct vertices once, so from its minimal-index
    // edge the edge sequence is forced by the vertex path; enumerating paths
    // that only use edges of larger index finds each cycle exactly once.
    std::vector<bool> visited(static_cast<std::size_t>(d.vertex_count()), false);
    for (int e0 = 0; e0 < d.edge_count(); ++e0) {
        int home = d.source(e0);
        visited.assign(visited.size(), false);
        visited[static_cast<std::size_t>(home)] = true;
        visited[static_cast<std::size_t>(d.target(e0))] = true;
        EdgeMask path = EdgeMask{1} << e0;

        auto dfs = [&](auto&& self, int cur) -> void {
            for (int f : out_edges[static_cast<std::size_t>(cur)]) {
                if (f <= e0) continue;
                int w = d.target(f);
                if (w == home) {
                    out.push_back(path | (EdgeMask{1} << f));
                } else if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = true;
                    path |= EdgeMask{1} << f;
                    self(self, w);
                    path &= ~(EdgeMask{1} << f);
                    visited[static_cast<std::size_t>(w)] = false;
                }
            }
        };
        dfs(dfs, d.target(e0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Acyclicity acyclicity(const Multidigraph& d) {
    Acyclicity a{true, true};
    for (EdgeMask c : directed_cycles(d)) {
        a.acyclic = false;
        if (popcount(c) >= 3) a.two_acyclic = false;
    }
    return a;
}

namespace {

Multidigraph link_common(const Multidigraph& d, int e, bool drop_source_side) {
    if (e < 0 || e >= d.edge_count()) throw InvalidInput("unknown edge index");
    int s = d.source(e), t = d.target(e);
    const std::string merged =
        std::min(d.vertex_id(s), d.vertex_id(t));

    auto dropped = [&](int f) {
        int fs = d.source(f), ft = d.target(f);
        if (ft == t) return true;
        if (drop_source_side && fs == s) return true;
        bool same_pair = (fs == s && ft == t) || (fs == t && ft == s);
        return same_pair;
    };

    Multidigraph out;
    bool merged_emitted = false;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == s || v == t) {
            if (!merged_emitted) {
                out.add_vertex(merged);
                merged_emitted = true;
            }
        } else {
            out.add_vertex(d.vertex_id(v));
        }
    }
    auto remap = [&](int v) { return (v == s || v == t) ? merged : d.vertex_id(v); };
    for (int f = 0; f < d.edge_count(); ++f) {
        if (dropped(f)) continue;
        out.add_edge(d.edge(f).id, remap(d.source(f)), remap(d.target(f)));
    }
    return out;
}

} // namespace

Multidigraph link_lf(const Multidigraph& d, int e) { return link_common(d, e, true); }
Multidigraph link_dt(const Multidigraph& d, int e) { return link_common(d, e, false); }

Multidigraph delete_edge(const Multidigraph& d, int e) {
    if (e < 0 || e >= d.edge_count()) throw InvalidInput("unknown edge index");
    Multidigraph out;
    for (int v = 0; v < d.vertex_count(); ++v) out.add_vertex(d.vertex_id(v));
    for (int f = 0; f < d.edge_count(); ++f) {
        if (f == e) continue;
        out.add_edge(d.edge(f).id, d.vertex_id(d.source(f)), d.vertex_id(d.target(f)));
    }
    return out;
}

std::vector<std::vector<int>> alternating_closed_trails(const Multidigraph& d, int max_len) {
    if (max_len < 3) throw InvalidInput("alternating closed trails require max_len >= 3");
    check_edge_space(d);
    const int n = d.edge_count();
    auto related = [&](int a, int b) {
        return d.source(a) == d.source(b) || d.target(a) == d.target(b);
    };

    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    EdgeMask used = 0;

    auto dfs = [&](auto&& self) -> void {
        int last = seq.back();
        int e0 = seq.front();
        if (static_cast<int>(seq.size()) >= 3 && related(last, e0)) {
            // rotation is fixed by starting at the minimal edge; keep the
            // lexicographically smaller of the two traversal directions
            if (seq[1] < seq.back()) out.push_back(seq);
        }
        if (static_cast<int>(seq.size()) >= max_len) return;
        for (int g = e0 + 1; g < n; ++g) {
            if (used >> g & 1) continue;
            if (!related(last, g)) continue;
            used |= EdgeMask{1} << g;
            seq.push_back(g);
            self(self);
            seq.pop_back();
            used &= ~(EdgeMask{1} << g);
        }
    };

    for (int e0 = 0; e0 < n; ++e0) {
        seq.assign(1, e0);
        used = EdgeMask{1} << e0;
        dfs(dfs);
    }
    return out;
}

namespace {

/// Multiplicity of ordered vertex pairs, the edge-level fingerprint used by
/// the isomorphism search.
std::map<std::pair<int, int>, int> pair_multiplicities(const Multidigraph& d) {
    std::map<std::pair<int, int>, int> m;
    for (int e = 0; e < d.edge_count(); ++e) ++m[{d.source(e), d.target(e)}];
    return m;
}

} // namespace

bool are_isomorphic(const Multidigraph& a, const Multidigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    if (n == 0) return true;

    auto degree_key = [](const Multidigraph& d, int v) {
        Degrees g = degrees(d, d.vertex_id(v));
        return std::pair<int, int>{g.in, g.out};
    };
    std::vector<std::pair<int, int>> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        da[static_cast<std::size_t>(v)] = degree_key(a, v);
        db[static_cast<std::size_t>(v)] = degree_key(b, v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    auto ma = pair_multiplicities(a);
    auto mb = pair_multiplicities(b);

    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);

    auto mult_a = [&](int u, int v) {
        auto it = ma.find({u, v});
        return it == ma.end() ? 0 : it->second;
    };
    auto mult_b = [&](int u, int v) {
        auto it = mb.find({u, v});
        return it == mb.end() ? 0 : it->second;
    };

    auto backtrack = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (taken[static_cast<std::size_t>(w)]) continue;
            if (da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                int pu = phi[static_cast<std::size_t>(u)];
                if (mult_a(v, u) != mult_b(w, pu) || mult_a(u, v) != mult_b(pu, w)) ok = false;
            }
            if (!ok) continue;
            phi[static_cast<std::size_t>(v)] = w;
            taken[static_cast<std::size_t>(w)] = true;
            if (self(self, v + 1)) return true;
            taken[static_cast<std::size_t>(w)] = false;
            phi[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

bool is_ln_free(const Multidigraph& d, int n) {
    if (n < 1) throw InvalidInput("L_n requires n >= 1");
    // A subgraph induced by an edge subset is a double directed string exactly
    // when its underlying pairs form a simple path that is doubly oriented in
    // the host, so search the both-directions graph for a path on n+1 vertices.
    const int nv = d.vertex_count();
    std::vector<std::vector<bool>> forward(static_cast<std::size_t>(nv),
                                           std::vector<bool>(static_cast<std::size_t>(nv), false));
    for (int e = 0; e < d.edge_count(); ++e)
        forward[static_cast<std::size_t>(d.source(e))][static_cast<std::size_t>(d.target(e))] =
            true;
    auto both_ways = [&](int u, int v) {
        return forward[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
               forward[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    };

    std::vector<bool> used(static_cast<std::size_t>(nv), false);
    auto extend = [&](auto&& self, int cur, int remaining) -> bool {
        if (remaining == 0) return true;
        for (int w = 0; w < nv; ++w) {
            if (used[static_cast<std::size_t>(w)] || !both_ways(cur, w)) continue;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, w, remaining - 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    for (int v = 0; v < nv; ++v) {
        used.assign(used.size(), false);
        used[static_cast<std::size_t>(v)] = true;
        if (extend(extend, v, n)) return false;
    }
    return true;
}

std::vector<int> cycle_piercing_edges(const Multidigraph& d) {
    auto cycles = directed_cycles(d);
    std::vector<int> out;
    for (int e = 0; e < d.edge_count(); ++e) {
        bool piercing = false;
        for (EdgeMask sigma : cycles) {
            for (int f = 0; f < d.edge_count() && !piercing; ++f) {
                if (!(sigma >> f & 1)) continue;
                if (d.target(e) == d.target(f) && d.source(e) != d.source(f)) piercing = true;
            }
            if (piercing) break;
        }
        if (piercing) out.push_back(e);
    }
    return out;
}

std::vector<int> simplicial_edges(const Multidigraph& d) {
    auto cycles = directed_cycles(d);
    std::vector<std::vector<bool>> on_cycle_vertices;
    for (EdgeMask sigma : cycles) {
        std::vector<bool> verts(static_cast<std::size_t>(d.vertex_count()), false);
        for (int f = 0; f < d.edge_count(); ++f) {
            if (!(sigma >> f & 1)) continue;
            verts[static_cast<std::size_t>(d.source(f))] = true;
            verts[static_cast<std::size_t>(d.target(f))] = true;
        }
        on_cycle_vertices.push_back(std::move(verts));
    }

    std::vector<int> out;
    for (int e = 0; e < d.edge_count(); ++e) {
        bool witness = false;
        for (std::size_t ci = 0; ci < cycles.size() && !witness; ++ci) {
            if (!(cycles[ci] >> e & 1)) continue;
            for (int f = 0; f < d.edge_count() && !witness; ++f) {
                if (d.target(f) != d.target(e) || d.source(f) == d.source(e)) continue;
                if (!on_cycle_vertices[ci][static_cast<std::size_t>(d.source(f))]) witness = true;
            }
        }
        if (!witness) out.push_back(e);
    }
    return out;
}

Multidigraph disjoint_union(const Multidigraph& a, const Multidigraph& b) {
    Multidigraph out;
    for (int v = 0; v < a.vertex_count(); ++v) out.add_vertex("1:" + a.vertex_id(v));
    for (int v = 0; v < b.vertex_count(); ++v) out.add_vertex("2:" + b.vertex_id(v));
    for (const Edge& e : a.edges())
        out.add_edge("1:" + e.id, "1:" + a.vertex_id(e.src), "1:" + a.vertex_id(e.dst));
    for (const Edge& e : b.edges())
        out.add_edge("2:" + e.id, "2:" + b.vertex_id(e.src), "2:" + b.vertex_id(e.dst));
    return out;
}

namespace {

/// Union-find over d's vertices following every edge (directions ignored).
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

bool underlying_is_forest(const Multidigraph& d) {
    Dsu dsu(d.vertex_count());
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < d.edge_count(); ++e) {
        std::pair<int, int> key{std::min(d.source(e), d.target(e)),
                                std::max(d.source(e), d.target(e))};
        if (!seen.insert(key).second) continue; // multi-edges over one pair don't add cycles
        if (!dsu.unite(key.first, key.second)) return false;
    }
    return true;
}

bool underlying_is_cycle(const Multidigraph& d) {
    const int n = d.vertex_count();
    if (n < 3) return false;
    std::set<std::pair<int, int>> pairs;
    for (int e = 0; e < d.edge_count(); ++e)
        pairs.insert({std::min(d.source(e), d.target(e)), std::max(d.source(e), d.target(e))});
    if (static_cast<int>(pairs.size()) != n) return false;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    Dsu dsu(n);
    for (auto [u, v] : pairs) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        dsu.unite(u, v);
    }
    if (!std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) return false;
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0)) return false;
    return true;
}

std::vector<EdgeMask> weak_components_edges(const Multidigraph& d) {
    check_edge_space(d);
    Dsu dsu(d.vertex_count());
    for (int e = 0; e < d.edge_count(); ++e) dsu.unite(d.source(e), d.target(e));
    std::map<int, EdgeMask> comps;
    for (int e = 0; e < d.edge_count(); ++e)
        comps[dsu.find(d.source(e))] |= EdgeMask{1} << e;
    std::vector<EdgeMask> out;
    for (auto& [root, mask] : comps) out.push_back(mask);
    std::sort(out.begin(), out.end(), [](EdgeMask a, EdgeMask b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return out;
}

} // namespace diforest
