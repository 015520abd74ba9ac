#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diforest/multidigraph.hpp"

namespace diforest {

/// Double directed string L_n: vertices 1..n+1, edges e_i: i->i+1 and
/// e_i': i+1->i. Requires n >= 2.
Multidigraph double_string(int n);

/// Double directed cycle P_n: vertices 0..n-1, edges e_i: (i-1)->(i mod n)
/// and e_i': (i mod n)->(i-1), i = 1..n. Requires n >= 3.
Multidigraph double_cycle(int n);

/// Directed cycle on n vertices, edges e_i: (i-1)->(i mod n). Requires n >= 3.
Multidigraph directed_cycle(int n);

/// Directed path with n edges, vertices 0..n. Requires n >= 1.
Multidigraph directed_path(int n);

/// Multidigraph whose linear-forest conflict graph is the complete bipartite
/// graph K_{m,n}. Defined for 1 <= m, n <= 3; larger parts are impossible
/// since an edge's conflicts split into at most three cliques.
Multidigraph bipartite_conflict_realizer(int m, int n);

/// Demo instances used across the verification corpus.
/// demo_a: 4 vertices, 7 edges; a parallel pair, a 2-cycle and a 3-cycle.
Multidigraph demo_a();
/// demo_b: 4 vertices, 7 edges with a doubled edge; link/deletion showcase.
Multidigraph demo_b();
/// demo_c: 8 vertices, 11 edges; two pendant cycles, parallel edges, and no
/// cycle-piercing edge.
Multidigraph demo_c();

struct RandomSpec {
    int vertices = 4;
    int edges = 6;
    int multiplicity_cap = 2;
    enum class Filter { None, Acyclic, TwoAcyclic } filter = Filter::None;
    std::uint64_t seed = 0;
};

/// Seeded and platform-independent; rejection sampling for the filters.
Multidigraph random_multidigraph(const RandomSpec& spec);

/// All multidigraphs up to isomorphism with edge-count in [1, max_edges], at
/// most max_vertices vertices all of which are edge endpoints, and at most
/// multiplicity_cap parallel copies of any ordered pair — plus the
/// single-vertex edgeless instance. Deterministic order.
std::vector<Multidigraph> enumerate_all(int max_vertices, int max_edges, int multiplicity_cap);

struct FamilySpec {
    std::string family; // ln | pn | cycle | path | kmn | random
    int n = 0;
    int m = 0; // kmn only
    RandomSpec random;
};

Multidigraph generate(const FamilySpec& spec);

/// Built-in corpus instances by name (ln2, pn3, cycle3, demo-a, ...).
std::vector<std::pair<std::string, Multidigraph>> named_corpus();

} // namespace diforest
