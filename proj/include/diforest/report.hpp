#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "diforest/forest.hpp"
#include "diforest/multidigraph.hpp"
#include "diforest/simplicial.hpp"

namespace diforest {

using Json = nlohmann::json;

std::string fnv1a64_hex(const std::string& data);

struct Caps {
    int edges = 16;
    int shell_facets = 12;
    int wchordal_vertices = 12;
    std::size_t homology_faces = 20000;
};

Json json_of_caps(const Caps& caps);
Json json_of_complex(const SimplicialComplex& c);
Json json_of_digraph(const Multidigraph& d);

/// The check battery behind `analyze`. Every boolean outcome carries a
/// certificate or witness, and capped computations are marked "capped".
struct AnalyzeResult {
    Json report;
    std::map<std::string, std::string> summary; // flat values for --expect
    bool any_capped = false;
};

const std::vector<std::string>& known_checks();
std::vector<std::string> default_checks();

AnalyzeResult analyze_digraph(const Multidigraph& d, const std::string& input_name,
                              const std::string& input_text,
                              const std::vector<std::string>& checks, const Caps& caps);

struct VerifyResult {
    Json report;
    int failures = 0;
    bool any_capped = false;
};

/// Identity/theorem matrix over a corpus. DIFOREST_THREADS (or the threads
/// argument) bounds the fan-out; output order is independent of it.
VerifyResult verify_corpus(const std::vector<std::pair<std::string, Multidigraph>>& corpus,
                           const std::vector<IdentityName>& identities,
                           const std::vector<TheoremName>& theorems, bool force,
                           const Caps& caps, int threads);

} // namespace diforest
