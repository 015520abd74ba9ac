#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diforest/digraph_io.hpp"
#include "diforest/generators.hpp"
#include "diforest/homology.hpp"
#include "diforest/report.hpp"

namespace {

using namespace diforest;

int env_threads() {
    const char* v = std::getenv("DIFOREST_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n < 1 ? 1 : n;
}

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << text;
    }
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

/// Corpus spec: "exhaustive:<V>v<E>e[m<M>]" or "named:all" / "named:<id,...>".
std::vector<std::pair<std::string, Multidigraph>> parse_corpus(const std::string& spec) {
    std::vector<std::pair<std::string, Multidigraph>> corpus;
    if (spec.rfind("exhaustive:", 0) == 0) {
        std::string rest = spec.substr(11);
        int v = 0, e = 0, m = 2;
        char cv = 0, ce = 0;
        std::istringstream ss(rest);
        if (!(ss >> v >> cv >> e >> ce) || cv != 'v' || ce != 'e')
            throw InvalidInput("bad corpus spec '" + spec + "' (want exhaustive:<V>v<E>e[m<M>])");
        char cm = 0;
        if (ss >> cm) {
            if (cm != 'm' || !(ss >> m)) throw InvalidInput("bad multiplicity in '" + spec + "'");
        }
        int i = 0;
        for (auto& d : enumerate_all(v, e, m))
            corpus.emplace_back("exhaustive-" + std::to_string(i++), std::move(d));
        return corpus;
    }
    if (spec.rfind("named:", 0) == 0) {
        std::string rest = spec.substr(6);
        auto all = named_corpus();
        if (rest == "all") return all;
        for (const auto& want : split_list(rest)) {
            bool hit = false;
            for (auto& [name, d] : all)
                if (name == want) {
                    corpus.emplace_back(name, d);
                    hit = true;
                }
            if (!hit) throw InvalidInput("unknown named instance '" + want + "'");
        }
        return corpus;
    }
    throw InvalidInput("bad corpus spec '" + spec + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed linear forest and directed tree complex toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a digraph file for a named family");
    std::string g_family, g_out;
    int g_n = 0, g_m = 0, g_edges = 6, g_mult = 2;
    std::uint64_t g_seed = 0;
    std::string g_filter = "none";
    gen->add_option("--family", g_family,
                    "ln | pn | cycle | path | kmn | random | demo-a | demo-b | demo-c")
        ->required();
    gen->add_option("--n", g_n, "family size parameter");
    gen->add_option("--m", g_m, "second parameter (kmn)");
    gen->add_option("--edges", g_edges, "edge count (random)");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("--multiplicity-cap", g_mult, "parallel-copy cap (random)");
    gen->add_option("--filter", g_filter, "none | acyclic | 2-acyclic (random)");
    gen->add_option("--out", g_out, "output path (stdout when omitted)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "run predicate/decision checks on a digraph file");
    std::string a_in, a_checks = "default", a_out;
    std::vector<std::string> a_expect;
    bool a_strict_caps = false;
    Caps a_caps;
    ana->add_option("file", a_in, "digraph file")->required();
    ana->add_option("--check", a_checks, "comma list of checks, 'default', or 'all'");
    ana->add_option("--expect", a_expect, "key=value assertions against the summary");
    ana->add_option("--out", a_out, "write the JSON report here instead of stdout");
    ana->add_flag("--strict-caps", a_strict_caps, "exit 3 when any check was capped");
    bool a_timing = false;
    ana->add_flag("--timing", a_timing, "include wall-clock timing (breaks byte determinism)");
    ana->add_option("--cap-edges", a_caps.edges);
    ana->add_option("--cap-shell-facets", a_caps.shell_facets);
    ana->add_option("--cap-wchordal", a_caps.wchordal_vertices);
    ana->add_option("--cap-faces", a_caps.homology_faces);

    // complex
    auto* cpx = app.add_subcommand("complex", "print the Dlf or DT complex of a digraph file");
    std::string c_in, c_kind = "dlf", c_out;
    int c_skeleton = -2;
    bool c_homology = false;
    Caps c_caps;
    cpx->add_option("file", c_in, "digraph file")->required();
    cpx->add_option("--kind", c_kind, "dlf | dt");
    cpx->add_option("--skeleton", c_skeleton, "restrict to the pure d-skeleton");
    cpx->add_flag("--homology", c_homology, "include reduced homology");
    cpx->add_option("--cap-edges", c_caps.edges);
    cpx->add_option("--out", c_out, "write the JSON report here instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "check lemma-level identities and theorems");
    std::string v_in, v_corpus, v_out;
    std::string v_identities, v_theorems;
    bool v_all_identities = false, v_all_theorems = false, v_force = false,
         v_strict_caps = false;
    Caps v_caps;
    ver->add_option("file", v_in, "digraph file");
    ver->add_option("--corpus", v_corpus, "exhaustive:<V>v<E>e[m<M>] or named:all|named:<ids>");
    ver->add_option("--identity", v_identities, "comma list of identity names");
    ver->add_option("--theorem", v_theorems, "comma list of theorem names");
    ver->add_flag("--all-identities", v_all_identities);
    ver->add_flag("--all-theorems", v_all_theorems);
    ver->add_flag("--force", v_force, "run hypothesis-gated identities even when gated off");
    ver->add_flag("--strict-caps", v_strict_caps, "exit 3 when any theorem check was capped");
    bool v_timing = false;
    ver->add_flag("--timing", v_timing, "include wall-clock timing (breaks byte determinism)");
    ver->add_option("--out", v_out, "write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            FamilySpec spec;
            spec.family = g_family;
            spec.n = g_n;
            spec.m = g_m;
            spec.random.vertices = g_n;
            spec.random.edges = g_edges;
            spec.random.multiplicity_cap = g_mult;
            spec.random.seed = g_seed;
            if (g_filter == "acyclic")
                spec.random.filter = RandomSpec::Filter::Acyclic;
            else if (g_filter == "2-acyclic")
                spec.random.filter = RandomSpec::Filter::TwoAcyclic;
            else if (g_filter != "none")
                throw InvalidInput("unknown filter '" + g_filter + "'");

            Multidigraph d = generate(spec);
            std::string text = render_digraph(d);
            if (g_out.empty()) {
                std::cout << text;
            } else {
                save_digraph(d, g_out);
                std::cout << "wrote " << g_out << " (" << d.edge_count() << " edges, "
                          << d.vertex_count() << " vertices)\n";
            }
            return 0;
        }

        if (ana->parsed()) {
            std::ifstream in(a_in);
            if (!in) throw Error("cannot open '" + a_in + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            Multidigraph d = parse_digraph(buf.str());

            std::vector<std::string> checks;
            if (a_checks == "default")
                checks = default_checks();
            else if (a_checks == "all")
                checks = known_checks();
            else
                checks = split_list(a_checks);

            auto t0 = std::chrono::steady_clock::now();
            AnalyzeResult res = analyze_digraph(d, a_in, buf.str(), checks, a_caps);
            if (a_timing)
                res.report["timing"] = Json{
                    {"seconds",
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count()}};
            emit(res.report, a_out);

            bool expect_failed = false;
            for (const auto& ex : a_expect) {
                auto eq = ex.find('=');
                if (eq == std::string::npos) throw InvalidInput("--expect wants key=value");
                std::string key = ex.substr(0, eq), want = ex.substr(eq + 1);
                auto it = res.summary.find(key);
                std::string got = it == res.summary.end() ? "<missing>" : it->second;
                if (got != want) {
                    std::cerr << "expect failed: " << key << " = " << got << ", wanted " << want
                              << "\n";
                    expect_failed = true;
                }
            }
            if (expect_failed) return 1;
            if (a_strict_caps && res.any_capped) return 3;
            return 0;
        }

        if (cpx->parsed()) {
            Multidigraph d = load_digraph(c_in);
            ComplexKind kind;
            if (c_kind == "dlf")
                kind = ComplexKind::Dlf;
            else if (c_kind == "dt")
                kind = ComplexKind::Dt;
            else
                throw InvalidInput("unknown kind '" + c_kind + "'");
            SimplicialComplex c = build_complex(d, kind, c_caps.edges);
            if (c_skeleton >= -1) c = c.pure_skeleton(c_skeleton);
            Json j{{"schema", 1},
                   {"command", "complex"},
                   {"kind", c_kind},
                   {"complex", json_of_complex(c)}};
            if (c_homology) {
                HomologyReport h = reduced_homology(c, c_caps.homology_faces);
                Json betti = Json::object(), torsion = Json::object();
                for (const auto& [dim, b] : h.betti) betti[std::to_string(dim)] = b;
                for (const auto& [dim, t] : h.torsion)
                    if (!t.empty()) torsion[std::to_string(dim)] = t;
                j["homology"] = Json{{"betti", betti}, {"torsion", torsion}};
            }
            emit(j, c_out);
            return 0;
        }

        if (ver->parsed()) {
            std::vector<std::pair<std::string, Multidigraph>> corpus;
            if (!v_corpus.empty())
                corpus = parse_corpus(v_corpus);
            else if (!v_in.empty())
                corpus.emplace_back(v_in, load_digraph(v_in));
            else
                throw InvalidInput("verify needs a file or --corpus");

            std::vector<IdentityName> ids;
            std::vector<TheoremName> ths;
            if (v_all_identities) ids = all_identities();
            for (const auto& s : split_list(v_identities)) {
                IdentityName id;
                if (!parse_identity(s, id)) throw InvalidInput("unknown identity '" + s + "'");
                ids.push_back(id);
            }
            if (v_all_theorems) ths = all_theorems();
            for (const auto& s : split_list(v_theorems)) {
                TheoremName th;
                if (!parse_theorem(s, th)) throw InvalidInput("unknown theorem '" + s + "'");
                ths.push_back(th);
            }
            if (ids.empty() && ths.empty()) {
                ids = all_identities();
                ths = all_theorems();
            }

            auto t0 = std::chrono::steady_clock::now();
            VerifyResult res = verify_corpus(corpus, ids, ths, v_force, v_caps, env_threads());
            if (v_timing)
                res.report["timing"] = Json{
                    {"seconds",
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count()}};
            emit(res.report, v_out);
            if (res.failures > 0) return 1;
            if (v_strict_caps && res.any_capped) return 3;
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
