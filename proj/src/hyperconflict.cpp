#include "diforest/hyperconflict.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace diforest {

namespace {

std::vector<std::uint32_t> minimal_antichain(std::vector<std::uint32_t> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < sets.size() && minimal; ++j) {
            if (i == j) continue;
            if ((sets[i] & sets[j]) == sets[j] && sets[i] != sets[j]) minimal = false;
        }
        if (minimal) out.push_back(sets[i]);
    }
    return out;
}

} // namespace

ConflictHypergraph::ConflictHypergraph(std::vector<std::string> ids, std::uint32_t alive,
                                       std::vector<std::uint32_t> hyperedges,
                                       ConflictFlavor flavor)
    : ids_(std::move(ids)), alive_(alive), hyperedges_(minimal_antichain(std::move(hyperedges))),
      flavor_(flavor) {}

std::vector<std::string> ConflictHypergraph::vertex_ids() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < ids_.size(); ++v)
        if (alive_ >> v & 1) out.push_back(ids_[v]);
    return out;
}

std::vector<std::vector<std::string>> ConflictHypergraph::hyperedges_as_ids() const {
    std::vector<std::vector<std::string>> out;
    for (std::uint32_t h : hyperedges_) {
        std::vector<std::string> ids;
        for (std::size_t v = 0; v < ids_.size(); ++v)
            if (h >> v & 1) ids.push_back(ids_[v]);
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ConflictHypergraph::index_of(const std::string& id) const {
    for (std::size_t v = 0; v < ids_.size(); ++v)
        if ((alive_ >> v & 1) && ids_[v] == id) return static_cast<int>(v);
    return -1;
}

ConflictHypergraph ConflictHypergraph::deletion(int v) const {
    if (v < 0 || !(alive_ >> v & 1)) throw InvalidInput("deletion of a vertex not in hypergraph");
    std::uint32_t bit = std::uint32_t{1} << v;
    std::vector<std::uint32_t> kept;
    for (std::uint32_t h : hyperedges_)
        if (!(h & bit)) kept.push_back(h);
    return ConflictHypergraph(ids_, alive_ & ~bit, std::move(kept), flavor_);
}

ConflictHypergraph ConflictHypergraph::contraction(int v) const {
    if (v < 0 || !(alive_ >> v & 1))
        throw InvalidInput("contraction of a vertex not in hypergraph");
    std::uint32_t bit = std::uint32_t{1} << v;
    std::vector<std::uint32_t> stripped;
    for (std::uint32_t h : hyperedges_) stripped.push_back(h & ~bit);
    return ConflictHypergraph(ids_, alive_ & ~bit, std::move(stripped), flavor_);
}

bool ConflictHypergraph::is_simplicial_vertex(int v) const {
    std::uint32_t bit = std::uint32_t{1} << v;
    std::vector<std::uint32_t> through;
    for (std::uint32_t h : hyperedges_)
        if (h & bit) through.push_back(h);
    for (std::size_t i = 0; i < through.size(); ++i)
        for (std::size_t j = i + 1; j < through.size(); ++j) {
            std::uint32_t room = (through[i] | through[j]) & ~bit;
            bool ok = false;
            for (std::uint32_t h : hyperedges_)
                if ((h & room) == h) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    return true;
}

std::vector<std::string> ConflictHypergraph::simplicial_vertices() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < ids_.size(); ++v)
        if ((alive_ >> v & 1) && is_simplicial_vertex(static_cast<int>(v))) out.push_back(ids_[v]);
    return out;
}

std::vector<std::uint32_t> ConflictHypergraph::canonical_key() const {
    const int n = static_cast<int>(ids_.size());
    std::vector<int> alive_list;
    for (int v = 0; v < n; ++v)
        if (alive_ >> v & 1) alive_list.push_back(v);

    // degree profile: sorted sizes of the hyperedges through each vertex
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
    for (std::uint32_t h : hyperedges_) {
        int size = std::popcount(h);
        for (int v = 0; v < n; ++v)
            if (h >> v & 1) profile[static_cast<std::size_t>(v)].push_back(size);
    }
    for (auto& p : profile) std::sort(p.begin(), p.end());

    std::vector<int> order = alive_list;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (profile[static_cast<std::size_t>(a)] != profile[static_cast<std::size_t>(b)])
            return profile[static_cast<std::size_t>(a)] < profile[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<std::uint32_t> key;
    key.push_back(static_cast<std::uint32_t>(alive_list.size()));
    bool has_empty = false;
    for (std::uint32_t h : hyperedges_) {
        if (h == 0) has_empty = true;
        std::uint32_t nh = 0;
        for (int v = 0; v < n; ++v)
            if (h >> v & 1) nh |= std::uint32_t{1} << pos[static_cast<std::size_t>(v)];
        key.push_back(nh);
    }
    key.push_back(has_empty ? 1u : 0u);
    std::sort(key.begin() + 1, key.end() - 1);
    return key;
}

namespace {

ConflictHypergraph build_hypergraph(const Multidigraph& d, bool include_source_rule) {
    if (d.edge_count() > 32) throw CapExceeded("conflict hypergraphs support at most 32 edges");
    std::vector<std::string> ids;
    for (const Edge& e : d.edges()) ids.push_back(e.id);
    std::vector<std::uint32_t> hyper = directed_cycles(d);
    const int n = d.edge_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool parallel = d.source(a) == d.source(b) && d.target(a) == d.target(b);
            bool shared_target = d.target(a) == d.target(b) && d.source(a) != d.source(b);
            bool shared_source = d.source(a) == d.source(b) && d.target(a) != d.target(b);
            bool conflict =
                parallel || shared_target || (include_source_rule && shared_source);
            if (conflict) hyper.push_back((std::uint32_t{1} << a) | (std::uint32_t{1} << b));
        }
    std::uint32_t alive = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return ConflictHypergraph(std::move(ids), alive, std::move(hyper),
                              include_source_rule ? ConflictFlavor::LinearForest
                                                  : ConflictFlavor::Tree);
}

} // namespace

ConflictHypergraph conflict_hypergraph_dt(const Multidigraph& d) {
    return build_hypergraph(d, false);
}

ConflictHypergraph conflict_hypergraph_lf(const Multidigraph& d) {
    return build_hypergraph(d, true);
}

WChordality is_w_chordal(const ConflictHypergraph& h, int vertex_cap) {
    WChordality res;
    if (h.alive_count() > vertex_cap) {
        res.status = DecisionStatus::Capped;
        return res;
    }

    std::map<std::vector<std::uint32_t>, bool> memo;
    std::vector<std::string> path;

    auto explore = [&](auto&& self, const ConflictHypergraph& cur) -> bool {
        if (cur.alive_count() == 0) return true;
        auto key = cur.canonical_key();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        ++res.states_explored;
        if (cur.simplicial_vertices().empty()) {
            res.witness = cur;
            res.witness_path = path;
            memo[key] = false;
            return false;
        }
        for (std::size_t v = 0; v < cur.id_table().size(); ++v) {
            if (!(cur.alive_mask() >> v & 1)) continue;
            path.push_back("del:" + cur.id_table()[v]);
            bool ok = self(self, cur.deletion(static_cast<int>(v)));
            path.pop_back();
            if (!ok) {
                memo[key] = false;
                return false;
            }
            path.push_back("contract:" + cur.id_table()[v]);
            ok = self(self, cur.contraction(static_cast<int>(v)));
            path.pop_back();
            if (!ok) {
                memo[key] = false;
                return false;
            }
        }
        memo[key] = true;
        return true;
    };

    res.status = explore(explore, h) ? DecisionStatus::True : DecisionStatus::False;
    return res;
}

SimplicialComplex independence_complex_h(const ConflictHypergraph& h, int vertex_cap) {
    const int n = static_cast<int>(h.id_table().size());
    if (h.alive_count() > vertex_cap)
        throw CapExceeded("hypergraph independence complex cap of " +
                          std::to_string(vertex_cap) + " vertices exceeded");

    std::vector<int> alive_list;
    for (int v = 0; v < n; ++v)
        if (h.alive_mask() >> v & 1) alive_list.push_back(v);
    const int k = static_cast<int>(alive_list.size());

    // compress hyperedges into the alive coordinate space
    std::vector<std::uint32_t> hyper;
    bool has_empty = false;
    for (std::uint32_t he : h.hyperedges()) {
        std::uint32_t m = 0;
        for (int i = 0; i < k; ++i)
            if (he >> alive_list[static_cast<std::size_t>(i)] & 1) m |= std::uint32_t{1} << i;
        hyper.push_back(m);
        if (m == 0) has_empty = true;
    }
    if (has_empty) return SimplicialComplex::make_void(); // no independent sets at all

    auto independent = [&](std::uint32_t m) {
        for (std::uint32_t he : hyper)
            if ((he & m) == he) return false;
        return true;
    };

    std::vector<std::string> labels;
    for (int v : alive_list) labels.push_back(h.id_table()[static_cast<std::size_t>(v)]);

    std::vector<std::vector<std::string>> facet_sets;
    const std::uint32_t limit = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    for (std::uint32_t m = 0;; ++m) {
        if (independent(m)) {
            bool maximal = true;
            for (int v = 0; v < k && maximal; ++v)
                if (!(m >> v & 1) && independent(m | (std::uint32_t{1} << v))) maximal = false;
            if (maximal) {
                std::vector<std::string> fs;
                for (int v = 0; v < k; ++v)
                    if (m >> v & 1) fs.push_back(labels[static_cast<std::size_t>(v)]);
                facet_sets.push_back(std::move(fs));
            }
        }
        if (m == limit) break;
    }
    // vertices hit by a singleton hyperedge sit in no independent set, so the
    // vertex set of the complex is the union of the facets, nothing more
    return SimplicialComplex({}, facet_sets);
}

} // namespace diforest
