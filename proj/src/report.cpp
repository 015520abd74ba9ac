#include "diforest/report.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <thread>

#include "diforest/conflict.hpp"
#include "diforest/homology.hpp"
#include "diforest/hyperconflict.hpp"

namespace diforest {

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Json json_of_caps(const Caps& caps) {
    return Json{{"edges", caps.edges},
                {"shell_facets", caps.shell_facets},
                {"wchordal_vertices", caps.wchordal_vertices},
                {"homology_faces", caps.homology_faces}};
}

Json json_of_complex(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (FaceMask f : c.facets()) facets.push_back(c.ids_of(f));
    return Json{{"vertices", c.labels()},
                {"facets", facets},
                {"void", c.is_void()},
                {"dimension", c.is_void() ? Json() : Json(c.dim())}};
}

Json json_of_digraph(const Multidigraph& d) {
    Json edges = Json::array();
    for (const Edge& e : d.edges())
        edges.push_back(Json::array({e.id, d.vertex_id(e.src), d.vertex_id(e.dst)}));
    return Json{{"vertices", d.vertex_ids()}, {"edges", edges}};
}

namespace {

const char* status_text(DecisionStatus s) {
    switch (s) {
        case DecisionStatus::True: return "true";
        case DecisionStatus::False: return "false";
        case DecisionStatus::Capped: return "capped";
    }
    return "?";
}

Json json_of_shedding(const SheddingNode& node) {
    if (node.leaf) return Json{{"simplex", true}};
    return Json{{"vertex", node.vertex},
                {"link", json_of_shedding(*node.link_child)},
                {"del", json_of_shedding(*node.del_child)}};
}

struct CheckContext {
    const Multidigraph& d;
    const Caps& caps;
    AnalyzeResult& out;

    void set(const std::string& key, Json value, const std::string& summary_value) {
        out.report["checks"][key] = std::move(value);
        out.summary[key] = summary_value;
        if (summary_value == "capped") out.any_capped = true;
    }

    SimplicialComplex complex_of(ComplexKind kind) {
        return build_complex(d, kind, caps.edges);
    }
};

void run_check(CheckContext& ctx, const std::string& name) {
    const Multidigraph& d = ctx.d;
    auto bool_text = [](bool b) { return b ? "true" : "false"; };

    auto guarded = [&](auto&& body) {
        try {
            body();
        } catch (const CapExceeded& e) {
            ctx.set(name, Json{{"status", "capped"}, {"reason", e.what()}}, "capped");
        }
    };

    if (name == "acyclicity") {
        Acyclicity a = acyclicity(d);
        ctx.set(name, Json{{"acyclic", a.acyclic}, {"two_acyclic", a.two_acyclic}},
                std::string(bool_text(a.acyclic)) + "/" + bool_text(a.two_acyclic));
        ctx.out.summary["acyclic"] = bool_text(a.acyclic);
        ctx.out.summary["2-acyclic"] = bool_text(a.two_acyclic);
    } else if (name == "act") {
        guarded([&] {
            Json trails = Json::array();
            if (d.edge_count() >= 3)
                for (const auto& t : alternating_closed_trails(d, d.edge_count())) {
                    std::vector<std::string> ids;
                    for (int e : t) ids.push_back(d.edge(e).id);
                    trails.push_back(ids);
                }
            ctx.set(name, Json{{"trails", trails}}, std::to_string(trails.size()));
        });
    } else if (name == "l2-free") {
        bool free2 = is_ln_free(d, 2);
        ctx.set(name, Json{{"l2_free", free2}}, bool_text(free2));
    } else if (name == "cycle-piercing") {
        std::vector<std::string> ids;
        for (int e : cycle_piercing_edges(d)) ids.push_back(d.edge(e).id);
        ctx.set(name, Json{{"edges", ids}}, std::to_string(ids.size()));
    } else if (name == "simplicial-edges") {
        std::vector<std::string> ids;
        for (int e : simplicial_edges(d)) ids.push_back(d.edge(e).id);
        ctx.set(name, Json{{"edges", ids}}, std::to_string(ids.size()));
    } else if (name == "conflict-lf" || name == "conflict-dt") {
        ConflictGraph g = name == "conflict-lf" ? conflict_graph_lf(d) : conflict_graph_dt(d);
        Json adj = Json::array();
        for (int a = 0; a < g.size(); ++a)
            for (int b = a + 1; b < g.size(); ++b)
                if (g.adjacent(a, b))
                    adj.push_back(Json::array({g.labels[static_cast<std::size_t>(a)],
                                               g.labels[static_cast<std::size_t>(b)]}));
        ctx.set(name, Json{{"vertices", g.labels}, {"adjacencies", adj}},
                std::to_string(g.edge_pair_count()));
    } else if (name == "chordal-lf" || name == "chordal-dt") {
        ConflictGraph g = name == "chordal-lf" ? conflict_graph_lf(d) : conflict_graph_dt(d);
        Chordality c = chordality(g);
        Json j{{"chordal", c.chordal}};
        if (c.chordal)
            j["elimination_order"] = c.elimination_order;
        else
            j["hole"] = c.hole;
        ctx.set(name, std::move(j), bool_text(c.chordal));
    } else if (name == "woodroofe-lf" || name == "woodroofe-dt") {
        guarded([&] {
            ConflictGraph g =
                name == "woodroofe-lf" ? conflict_graph_lf(d) : conflict_graph_dt(d);
            bool ok = woodroofe_condition(g);
            ctx.set(name, Json{{"only_3_and_5_holes", ok}}, bool_text(ok));
        });
    } else if (name == "realizability") {
        Realizability r = realizability_checks(d);
        Json claws = Json::array();
        for (const auto& c : r.claw_findings)
            claws.push_back(Json{{"center", c.center},
                                 {"leaves", c.leaves},
                                 {"has_endpoint_pair_leaf", c.has_endpoint_pair_leaf}});
        bool ok = r.clique_cover_ok && r.neighborhood_cover_ok && r.every_claw_has_pair_leaf;
        ctx.set(name,
                Json{{"clique_cover_ok", r.clique_cover_ok},
                     {"neighborhood_cover_ok", r.neighborhood_cover_ok},
                     {"every_claw_has_pair_leaf", r.every_claw_has_pair_leaf},
                     {"claw_findings", claws}},
                ok ? "true" : "false");
    } else if (name == "hypergraph-lf" || name == "hypergraph-dt") {
        ConflictHypergraph h =
            name == "hypergraph-lf" ? conflict_hypergraph_lf(d) : conflict_hypergraph_dt(d);
        Json edges = Json::array();
        for (const auto& he : h.hyperedges_as_ids()) edges.push_back(he);
        ctx.set(name, Json{{"vertices", h.vertex_ids()}, {"hyperedges", edges}},
                std::to_string(h.hyperedges().size()));
    } else if (name == "wchordal-lf" || name == "wchordal-dt") {
        ConflictHypergraph h =
            name == "wchordal-lf" ? conflict_hypergraph_lf(d) : conflict_hypergraph_dt(d);
        WChordality w = is_w_chordal(h, ctx.caps.wchordal_vertices);
        Json j{{"status", status_text(w.status)}, {"states_explored", w.states_explored}};
        if (w.status == DecisionStatus::False && w.witness) {
            Json hyper = Json::array();
            for (const auto& he : w.witness->hyperedges_as_ids()) hyper.push_back(he);
            j["witness_minor"] =
                Json{{"vertices", w.witness->vertex_ids()}, {"hyperedges", hyper}};
            j["witness_path"] = w.witness_path;
        }
        ctx.set(name, std::move(j), status_text(w.status));
    } else if (name == "facets-dlf" || name == "facets-dt") {
        guarded([&] {
            auto c = ctx.complex_of(name == "facets-dlf" ? ComplexKind::Dlf : ComplexKind::Dt);
            ctx.set(name, json_of_complex(c), std::to_string(c.facets().size()));
        });
    } else if (name == "homology-dlf" || name == "homology-dt") {
        guarded([&] {
            auto c = ctx.complex_of(name == "homology-dlf" ? ComplexKind::Dlf : ComplexKind::Dt);
            HomologyReport h = reduced_homology(c, ctx.caps.homology_faces);
            Json betti = Json::object();
            Json torsion = Json::object();
            for (const auto& [dim, b] : h.betti) betti[std::to_string(dim)] = b;
            for (const auto& [dim, t] : h.torsion)
                if (!t.empty()) torsion[std::to_string(dim)] = t;
            ctx.set(name, Json{{"betti", betti}, {"torsion", torsion}}, "computed");
        });
    } else if (name == "vd-dlf" || name == "vd-dt") {
        guarded([&] {
            auto c = ctx.complex_of(name == "vd-dlf" ? ComplexKind::Dlf : ComplexKind::Dt);
            VdResult vd = is_vertex_decomposable(c);
            Json j{{"status", status_text(vd.status)}};
            if (vd.status == DecisionStatus::True) j["certificate"] = json_of_shedding(*vd.certificate);
            if (vd.status == DecisionStatus::False) j["witness"] = vd.witness;
            ctx.set(name, std::move(j), status_text(vd.status));
        });
    } else if (name == "shellable-dlf" || name == "shellable-dt") {
        guarded([&] {
            auto c = ctx.complex_of(name == "shellable-dlf" ? ComplexKind::Dlf : ComplexKind::Dt);
            // a decomposition certifies a shelling without the facet cap
            std::vector<FaceMask> order;
            try {
                order = shelling_from_decomposition(c);
            } catch (const CapExceeded&) {
            }
            Json j;
            if (!order.empty() && replay_shelling(c, order)) {
                j["status"] = "true";
                j["via"] = "decomposition";
            } else {
                ShellResult sh = is_shellable(c, ShellOptions{ctx.caps.shell_facets});
                j["status"] = status_text(sh.status);
                if (sh.status == DecisionStatus::True) {
                    j["via"] = "search";
                    order = sh.order;
                }
            }
            if (j["status"] == "true") {
                Json jorder = Json::array();
                for (FaceMask f : order) jorder.push_back(c.ids_of(f));
                j["shelling_order"] = jorder;
            }
            std::string summary = j["status"];
            ctx.set(name, std::move(j), summary);
        });
    } else if (name == "cm-dlf" || name == "cm-dt" || name == "scm-dlf" || name == "scm-dt") {
        guarded([&] {
            bool dlf = name == "cm-dlf" || name == "scm-dlf";
            bool seq = name.rfind("scm", 0) == 0;
            auto c = ctx.complex_of(dlf ? ComplexKind::Dlf : ComplexKind::Dt);
            CmResult r = seq ? is_sequentially_cm(c, ctx.caps.homology_faces)
                             : is_cohen_macaulay(c, ctx.caps.homology_faces);
            Json j{{"status", status_text(r.status)}};
            if (r.status == DecisionStatus::False) j["witness"] = r.witness;
            ctx.set(name, std::move(j), status_text(r.status));
        });
    } else {
        throw InvalidInput("unknown check '" + name + "'");
    }
}

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "acyclicity",   "act",           "l2-free",      "cycle-piercing",
        "simplicial-edges", "conflict-lf", "conflict-dt", "chordal-lf",
        "chordal-dt",   "woodroofe-lf",  "woodroofe-dt", "realizability",
        "hypergraph-lf", "hypergraph-dt", "wchordal-lf", "wchordal-dt",
        "facets-dlf",   "facets-dt",     "homology-dlf", "homology-dt",
        "vd-dlf",       "vd-dt",         "shellable-dlf", "shellable-dt",
        "cm-dlf",       "cm-dt",         "scm-dlf",      "scm-dt"};
    return names;
}

std::vector<std::string> default_checks() {
    return {"acyclicity",   "act",        "l2-free",      "cycle-piercing", "simplicial-edges",
            "conflict-lf",  "conflict-dt", "chordal-lf",  "chordal-dt",     "woodroofe-lf",
            "woodroofe-dt", "realizability", "hypergraph-lf", "hypergraph-dt"};
}

AnalyzeResult analyze_digraph(const Multidigraph& d, const std::string& input_name,
                              const std::string& input_text,
                              const std::vector<std::string>& checks, const Caps& caps) {
    AnalyzeResult out;
    out.report = Json{{"schema", 1},
                      {"command", "analyze"},
                      {"input", Json{{"name", input_name},
                                     {"fnv1a64", fnv1a64_hex(input_text)},
                                     {"vertices", d.vertex_count()},
                                     {"edges", d.edge_count()},
                                     {"digraph", json_of_digraph(d)}}},
                      {"caps", json_of_caps(caps)},
                      {"checks", Json::object()}};
    CheckContext ctx{d, caps, out};
    for (const auto& name : checks) run_check(ctx, name);
    return out;
}

namespace {

Json identity_result_json(const IdentityResult& r) {
    Json j;
    switch (r.status) {
        case IdentityResult::Status::Pass: j["status"] = "pass"; break;
        case IdentityResult::Status::Fail: j["status"] = "fail"; break;
        case IdentityResult::Status::Skip: j["status"] = "skip"; break;
    }
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json theorem_result_json(const TheoremResult& r) {
    Json j;
    switch (r.status) {
        case TheoremResult::Status::Pass: j["status"] = "pass"; break;
        case TheoremResult::Status::Fail: j["status"] = "fail"; break;
        case TheoremResult::Status::NotApplicable: j["status"] = "not-applicable"; break;
        case TheoremResult::Status::Capped: j["status"] = "capped"; break;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

} // namespace

VerifyResult verify_corpus(const std::vector<std::pair<std::string, Multidigraph>>& corpus,
                           const std::vector<IdentityName>& identities,
                           const std::vector<TheoremName>& theorems, bool force,
                           const Caps& caps, int threads) {
    (void)caps;
    VerifyResult out;
    struct Cell {
        Json instance;
        int failures = 0;
        bool capped = false;
        std::string error;
    };
    std::vector<Cell> cells(corpus.size());

    auto work = [&](std::size_t i) {
        const auto& [name, d] = corpus[i];
        Cell& cell = cells[i];
        cell.instance = Json{{"name", name},
                             {"vertices", d.vertex_count()},
                             {"edges", d.edge_count()},
                             {"identities", Json::object()},
                             {"theorems", Json::object()}};
        for (IdentityName id : identities) {
            IdentityResult r = verify_identity(d, id, force);
            cell.instance["identities"][identity_name(id)] = identity_result_json(r);
            if (r.status == IdentityResult::Status::Fail) ++cell.failures;
        }
        for (TheoremName th : theorems) {
            TheoremResult r = verify_theorem(d, th);
            cell.instance["theorems"][theorem_name(th)] = theorem_result_json(r);
            if (r.status == TheoremResult::Status::Fail) ++cell.failures;
            if (r.status == TheoremResult::Status::Capped) cell.capped = true;
        }
    };
    std::vector<char> cap_flags(corpus.size(), 0);
    auto guarded_work = [&](std::size_t i) {
        // rethrown on the main thread below
        try {
            work(i);
        } catch (const CapExceeded& e) {
            cells[i].error = e.what();
            cap_flags[i] = 1;
        } catch (const std::exception& e) {
            cells[i].error = e.what();
        }
    };

    threads = std::max(1, threads);
    if (threads == 1 || corpus.size() <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) guarded_work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = static_cast<std::size_t>(threads);
        for (std::size_t t = 0; t < stride; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < corpus.size(); i += stride) guarded_work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!cells[i].error.empty()) {
            if (cap_flags[i]) throw CapExceeded(cells[i].error);
            throw Error(cells[i].error);
        }

    Json instances = Json::array();
    int pass = 0, fail = 0, skip = 0, na = 0, capped = 0;
    for (auto& cell : cells) {
        for (const auto& [k, v] : cell.instance["identities"].items()) {
            std::string s = v["status"];
            if (s == "pass") ++pass;
            else if (s == "fail") ++fail;
            else ++skip;
        }
        for (const auto& [k, v] : cell.instance["theorems"].items()) {
            std::string s = v["status"];
            if (s == "pass") ++pass;
            else if (s == "fail") ++fail;
            else if (s == "capped") ++capped;
            else ++na;
        }
        out.failures += cell.failures;
        out.any_capped = out.any_capped || cell.capped;
        instances.push_back(std::move(cell.instance));
    }
    out.report = Json{{"schema", 1},
                      {"command", "verify"},
                      {"instances", instances},
                      {"summary", Json{{"pass", pass},
                                       {"fail", fail},
                                       {"skip", skip},
                                       {"not_applicable", na},
                                       {"capped", capped}}}};
    return out;
}

} // namespace diforest
