#include "diforest/forest.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "diforest/conflict.hpp"
#include "diforest/homology.hpp"
#include "diforest/hyperconflict.hpp"

namespace diforest {

SimplicialComplex build_complex(const Multidigraph& d, ComplexKind kind, int edge_cap) {
    const int n = d.edge_count();
    if (n > edge_cap)
        throw CapExceeded("complex construction cap of " + std::to_string(edge_cap) +
                          " edges exceeded (" + std::to_string(n) + ")");

    auto allowed = [&](EdgeMask m) {
        SubsetClass c = classify_subset(d, m);
        if (kind == ComplexKind::Dlf) return c == SubsetClass::LinearForest;
        return c != SubsetClass::NotForest;
    };

    // the face predicate is hereditary, so DFS over increasing edge indices
    // with pruning enumerates the whole complex
    std::vector<EdgeMask> faces;
    auto dfs = [&](auto&& self, EdgeMask m, int next) -> void {
        faces.push_back(m);
        for (int e = next; e < n; ++e) {
            EdgeMask m2 = m | (EdgeMask{1} << e);
            if (allowed(m2)) self(self, m2, e + 1);
        }
    };
    dfs(dfs, 0, 0);

    std::set<EdgeMask> face_set(faces.begin(), faces.end());
    std::vector<std::vector<std::string>> facet_sets;
    for (EdgeMask m : faces) {
        bool maximal = true;
        for (int e = 0; e < n && maximal; ++e)
            if (!(m >> e & 1) && face_set.count(m | (EdgeMask{1} << e))) maximal = false;
        if (maximal) facet_sets.push_back(edge_ids_of(d, m));
    }
    std::vector<std::string> declared;
    for (const Edge& e : d.edges()) declared.push_back(e.id);
    return SimplicialComplex(declared, facet_sets);
}

const char* identity_name(IdentityName which) {
    switch (which) {
        case IdentityName::IndLf: return "ind-lf";
        case IdentityName::IndDt: return "ind-dt";
        case IdentityName::IndHLf: return "ind-hlf";
        case IdentityName::IndHDt: return "ind-hdt";
        case IdentityName::LinkDelLf: return "link-del-lf";
        case IdentityName::LinkDelDt: return "link-del-dt";
        case IdentityName::Join: return "join";
        case IdentityName::HyperDelContr: return "hyper-del-contr";
    }
    return "?";
}

std::vector<IdentityName> all_identities() {
    return {IdentityName::IndLf,     IdentityName::IndDt,     IdentityName::IndHLf,
            IdentityName::IndHDt,    IdentityName::LinkDelLf, IdentityName::LinkDelDt,
            IdentityName::Join,      IdentityName::HyperDelContr};
}

bool parse_identity(const std::string& text, IdentityName& out) {
    for (IdentityName id : all_identities())
        if (text == identity_name(id)) {
            out = id;
            return true;
        }
    return false;
}

const char* theorem_name(TheoremName which) {
    switch (which) {
        case TheoremName::VdDlf: return "vd-dlf";
        case TheoremName::VdDlfForest: return "vd-dlf-forest";
        case TheoremName::VdDt: return "vd-dt";
        case TheoremName::ChordalDt: return "chordal-dt";
        case TheoremName::VdDtCycle: return "vd-dt-cycle";
        case TheoremName::WChordalDt: return "wchordal-dt";
    }
    return "?";
}

std::vector<TheoremName> all_theorems() {
    return {TheoremName::VdDlf,     TheoremName::VdDlfForest, TheoremName::VdDt,
            TheoremName::ChordalDt, TheoremName::VdDtCycle,   TheoremName::WChordalDt};
}

bool parse_theorem(const std::string& text, TheoremName& out) {
    for (TheoremName th : all_theorems())
        if (text == theorem_name(th)) {
            out = th;
            return true;
        }
    return false;
}

namespace {

/// Smallest face of a (then not of b), or of b (then not of a).
std::string complex_diff_witness(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto fa = a.all_faces();
    auto fb = b.all_faces();
    std::set<std::vector<std::string>> sa, sb;
    for (FaceMask f : fa) sa.insert(a.ids_of(f));
    for (FaceMask f : fb) sb.insert(b.ids_of(f));
    std::vector<std::vector<std::string>> only_a, only_b;
    for (const auto& f : sa)
        if (!sb.count(f)) only_a.push_back(f);
    for (const auto& f : sb)
        if (!sa.count(f)) only_b.push_back(f);
    auto by_size = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    };
    std::sort(only_a.begin(), only_a.end(), by_size);
    std::sort(only_b.begin(), only_b.end(), by_size);
    auto render = [](const std::vector<std::string>& f) {
        std::string s = "{";
        for (const auto& id : f) s += (s.size() > 1 ? "," : "") + id;
        return s + "}";
    };
    if (!only_a.empty()) return "face " + render(only_a.front()) + " only on the left";
    if (!only_b.empty()) return "face " + render(only_b.front()) + " only on the right";
    return "facet structure differs";
}

IdentityResult compare_complexes(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
    IdentityResult res;
    if (lhs == rhs) {
        res.status = IdentityResult::Status::Pass;
    } else {
        res.status = IdentityResult::Status::Fail;
        res.witness = complex_diff_witness(lhs, rhs);
    }
    return res;
}

IdentityResult verify_link_del(const Multidigraph& d, ComplexKind kind) {
    SimplicialComplex whole = build_complex(d, kind);
    for (int e = 0; e < d.edge_count(); ++e) {
        FaceMask bit = whole.mask_of({d.edge(e).id});
        Multidigraph linked = kind == ComplexKind::Dlf ? link_lf(d, e) : link_dt(d, e);
        IdentityResult r = compare_complexes(whole.link(bit), build_complex(linked, kind));
        if (r.status == IdentityResult::Status::Fail) {
            r.witness = "link at " + d.edge(e).id + ": " + r.witness;
            return r;
        }
        r = compare_complexes(whole.deletion(bit), build_complex(delete_edge(d, e), kind));
        if (r.status == IdentityResult::Status::Fail) {
            r.witness = "deletion at " + d.edge(e).id + ": " + r.witness;
            return r;
        }
    }
    IdentityResult ok;
    ok.status = IdentityResult::Status::Pass;
    return ok;
}

IdentityResult verify_join(const Multidigraph& d) {
    IdentityResult res;
    res.status = IdentityResult::Status::Pass;
    auto comps = weak_components_edges(d);
    for (ComplexKind kind : {ComplexKind::Dlf, ComplexKind::Dt}) {
        SimplicialComplex whole = build_complex(d, kind);
        if (comps.size() <= 1) continue;
        SimplicialComplex assembled = build_complex(induced_by_edges(d, comps[0]), kind);
        for (std::size_t i = 1; i < comps.size(); ++i)
            assembled = join(assembled, build_complex(induced_by_edges(d, comps[i]), kind));
        IdentityResult r = compare_complexes(whole, assembled);
        if (r.status == IdentityResult::Status::Fail) {
            r.witness = std::string(kind == ComplexKind::Dlf ? "dlf" : "dt") + ": " + r.witness;
            return r;
        }
    }
    return res;
}

bool same_hypergraph(const ConflictHypergraph& a, const ConflictHypergraph& b,
                     std::string& witness) {
    auto va = a.vertex_ids();
    auto vb = b.vertex_ids();
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) {
        witness = "vertex sets differ";
        return false;
    }
    auto ha = a.hyperedges_as_ids();
    auto hb = b.hyperedges_as_ids();
    if (ha != hb) {
        std::set<std::vector<std::string>> sb(hb.begin(), hb.end());
        for (const auto& h : ha)
            if (!sb.count(h)) {
                std::string s;
                for (const auto& id : h) s += (s.empty() ? "" : ",") + id;
                witness = "hyperedge {" + s + "} only on the left";
                return false;
            }
        std::set<std::vector<std::string>> sa(ha.begin(), ha.end());
        for (const auto& h : hb)
            if (!sa.count(h)) {
                std::string s;
                for (const auto& id : h) s += (s.empty() ? "" : ",") + id;
                witness = "hyperedge {" + s + "} only on the right";
                return false;
            }
        witness = "hyperedge sets differ";
        return false;
    }
    return true;
}

IdentityResult verify_hyper_del_contr(const Multidigraph& d) {
    IdentityResult res;
    res.status = IdentityResult::Status::Pass;
    for (bool lf : {false, true}) {
        auto make = lf ? conflict_hypergraph_lf : conflict_hypergraph_dt;
        ConflictHypergraph h = make(d);
        for (int e = 0; e < d.edge_count(); ++e) {
            const std::string& id = d.edge(e).id;
            int v = h.index_of(id);

            // deletion identity
            ConflictHypergraph lhs = h.deletion(v);
            ConflictHypergraph rhs = make(delete_edge(d, e));
            std::string w;
            if (!same_hypergraph(lhs, rhs, w)) {
                res.status = IdentityResult::Status::Fail;
                res.witness = std::string(lf ? "lf" : "t") + " deletion at " + id + ": " + w;
                return res;
            }

            // contraction identity: H/e equals the link-graph hypergraph plus
            // singletons from pair hyperedges through e
            ConflictHypergraph contracted = h.contraction(v);
            Multidigraph linked = lf ? link_lf(d, e) : link_dt(d, e);
            ConflictHypergraph linked_h = make(linked);

            std::map<std::string, int> rhs_index;
            std::vector<std::string> rhs_ids;
            for (int f = 0; f < d.edge_count(); ++f) {
                if (f == e) continue;
                rhs_index[d.edge(f).id] = static_cast<int>(rhs_ids.size());
                rhs_ids.push_back(d.edge(f).id);
            }
            std::vector<std::uint32_t> rhs_edges;
            for (const auto& he : linked_h.hyperedges_as_ids()) {
                std::uint32_t m = 0;
                for (const auto& x : he) m |= std::uint32_t{1} << rhs_index.at(x);
                rhs_edges.push_back(m);
            }
            std::uint32_t ebit = std::uint32_t{1} << v;
            for (std::uint32_t he : h.hyperedges())
                if ((he & ebit) && std::popcount(he) == 2) {
                    std::uint32_t other = he & ~ebit;
                    int f = std::countr_zero(other);
                    rhs_edges.push_back(std::uint32_t{1} << rhs_index.at(d.edge(f).id));
                }
            std::uint32_t rhs_alive =
                rhs_ids.size() == 32 ? ~std::uint32_t{0}
                                     : (std::uint32_t{1} << rhs_ids.size()) - 1;
            ConflictHypergraph rhs2(rhs_ids, rhs_alive, std::move(rhs_edges),
                                    lf ? ConflictFlavor::LinearForest : ConflictFlavor::Tree);
            if (!same_hypergraph(contracted, rhs2, w)) {
                res.status = IdentityResult::Status::Fail;
                res.witness = std::string(lf ? "lf" : "t") + " contraction at " + id + ": " + w;
                return res;
            }
        }
    }
    return res;
}

} // namespace

IdentityResult verify_identity(const Multidigraph& d, IdentityName which, bool force) {
    switch (which) {
        case IdentityName::IndLf:
        case IdentityName::IndDt: {
            if (!acyclicity(d).two_acyclic && !force) {
                IdentityResult r;
                r.status = IdentityResult::Status::Skip;
                r.witness = "not 2-acyclic; identity not claimed";
                return r;
            }
            bool lf = which == IdentityName::IndLf;
            SimplicialComplex direct =
                build_complex(d, lf ? ComplexKind::Dlf : ComplexKind::Dt);
            SimplicialComplex via_graph = independence_complex(
                lf ? conflict_graph_lf(d) : conflict_graph_dt(d));
            return compare_complexes(direct, via_graph);
        }
        case IdentityName::IndHLf: {
            return compare_complexes(build_complex(d, ComplexKind::Dlf),
                                     independence_complex_h(conflict_hypergraph_lf(d)));
        }
        case IdentityName::IndHDt: {
            return compare_complexes(build_complex(d, ComplexKind::Dt),
                                     independence_complex_h(conflict_hypergraph_dt(d)));
        }
        case IdentityName::LinkDelLf: return verify_link_del(d, ComplexKind::Dlf);
        case IdentityName::LinkDelDt: return verify_link_del(d, ComplexKind::Dt);
        case IdentityName::Join: return verify_join(d);
        case IdentityName::HyperDelContr: return verify_hyper_del_contr(d);
    }
    throw InvalidInput("unknown identity");
}

TheoremResult verify_theorem(const Multidigraph& d, TheoremName which) {
    TheoremResult res;
    auto conclude_vd = [&](const SimplicialComplex& c, const std::string& what) {
        VdResult vd = is_vertex_decomposable(c);
        switch (vd.status) {
            case DecisionStatus::True:
                res.status = TheoremResult::Status::Pass;
                res.detail = what + " vertex decomposable";
                break;
            case DecisionStatus::Capped:
                res.status = TheoremResult::Status::Capped;
                res.detail = what + " decision capped";
                break;
            case DecisionStatus::False:
                res.status = TheoremResult::Status::Fail;
                res.detail = what + " not vertex decomposable: " + vd.witness;
                break;
        }
    };

    switch (which) {
        case TheoremName::VdDlf: {
            Acyclicity a = acyclicity(d);
            bool act_free =
                d.edge_count() < 3 || alternating_closed_trails(d, d.edge_count()).empty();
            if (!a.acyclic || !act_free) {
                res.detail = !a.acyclic ? "not acyclic" : "has an alternating closed trail";
                return res;
            }
            conclude_vd(build_complex(d, ComplexKind::Dlf), "Dlf");
            return res;
        }
        case TheoremName::VdDlfForest: {
            if (!is_ln_free(d, 2) || !underlying_is_forest(d)) {
                res.detail = !underlying_is_forest(d) ? "underlying graph is not a forest"
                                                      : "contains an induced L2";
                return res;
            }
            conclude_vd(build_complex(d, ComplexKind::Dlf), "Dlf");
            return res;
        }
        case TheoremName::VdDt: {
            if (!acyclicity(d).two_acyclic) {
                res.detail = "not 2-acyclic";
                return res;
            }
            conclude_vd(build_complex(d, ComplexKind::Dt), "DT");
            return res;
        }
        case TheoremName::ChordalDt: {
            if (!acyclicity(d).two_acyclic) {
                res.detail = "not 2-acyclic";
                return res;
            }
            Chordality c = chordality(conflict_graph_dt(d));
            if (c.chordal) {
                res.status = TheoremResult::Status::Pass;
                res.detail = "tree conflict graph chordal";
            } else {
                res.status = TheoremResult::Status::Fail;
                std::string hole;
                for (const auto& v : c.hole) hole += (hole.empty() ? "" : ",") + v;
                res.detail = "hole {" + hole + "} in tree conflict graph";
            }
            return res;
        }
        case TheoremName::VdDtCycle: {
            if (!underlying_is_cycle(d)) {
                res.detail = "underlying graph is not a cycle";
                return res;
            }
            std::set<std::pair<int, int>> present;
            for (int e = 0; e < d.edge_count(); ++e) present.insert({d.source(e), d.target(e)});
            bool one_way_pair = false;
            for (auto [u, v] : present)
                if (!present.count({v, u})) one_way_pair = true;
            if (!one_way_pair) {
                res.detail = "every adjacent pair is doubly oriented";
                return res;
            }
            conclude_vd(build_complex(d, ComplexKind::Dt), "DT");
            return res;
        }
        case TheoremName::WChordalDt: {
            if (!cycle_piercing_edges(d).empty()) {
                res.detail = "has a cycle-piercing edge";
                return res;
            }
            WChordality w = is_w_chordal(conflict_hypergraph_dt(d));
            if (w.status == DecisionStatus::Capped) {
                res.status = TheoremResult::Status::Capped;
                res.detail = "W-chordality exploration capped";
                return res;
            }
            if (w.status == DecisionStatus::False) {
                res.status = TheoremResult::Status::Fail;
                res.detail = "tree conflict hypergraph is not W-chordal";
                return res;
            }
            SimplicialComplex dt = build_complex(d, ComplexKind::Dt);
            // a decomposition yields a replayable shelling regardless of the
            // facet count; fall back to the bounded search otherwise
            std::vector<FaceMask> order = shelling_from_decomposition(dt);
            if (!order.empty() && replay_shelling(dt, order)) {
                res.status = TheoremResult::Status::Pass;
                res.detail = "W-chordal and DT shellable";
                return res;
            }
            ShellResult sh = is_shellable(dt);
            if (sh.status == DecisionStatus::False) {
                res.status = TheoremResult::Status::Fail;
                res.detail = "W-chordal but DT not shellable";
                return res;
            }
            res.status = TheoremResult::Status::Pass;
            res.detail = sh.status == DecisionStatus::True
                             ? "W-chordal and DT shellable"
                             : "W-chordal; shellability search capped";
            return res;
        }
    }
    throw InvalidInput("unknown theorem");
}

} // namespace diforest
