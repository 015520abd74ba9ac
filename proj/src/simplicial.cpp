#include "diforest/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace diforest {

namespace {

int popcount(FaceMask m) { return std::popcount(m); }

/// Drops duplicates and non-maximal sets.
std::vector<FaceMask> maximal_antichain(std::vector<FaceMask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j)
            if (i != j && (faces[i] & faces[j]) == faces[i] && faces[i] != faces[j])
                maximal = false;
        if (maximal) out.push_back(faces[i]);
    }
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::make_void() { return SimplicialComplex{}; }

SimplicialComplex SimplicialComplex::make_empty() {
    SimplicialComplex c;
    c.facets_ = {0};
    return c;
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> vertices) {
    if (vertices.empty()) return make_empty();
    return SimplicialComplex(vertices, {vertices});
}

void SimplicialComplex::normalize(std::vector<FaceMask> faces, bool add_uncovered_singletons) {
    if (add_uncovered_singletons) {
        FaceMask covered = 0;
        for (FaceMask f : faces) covered |= f;
        for (int v = 0; v < vertex_count(); ++v)
            if (!(covered >> v & 1)) faces.push_back(FaceMask{1} << v);
    }
    facets_ = maximal_antichain(std::move(faces));
    // drop labels that ended up in no facet (possible when built from masks)
    FaceMask covered = 0;
    for (FaceMask f : facets_) covered |= f;
    if (!add_uncovered_singletons && covered != (vertex_count() >= 32
                                                     ? ~FaceMask{0}
                                                     : (FaceMask{1} << vertex_count()) - 1)) {
        std::vector<std::string> kept;
        std::vector<int> remap(static_cast<std::size_t>(vertex_count()), -1);
        for (int v = 0; v < vertex_count(); ++v) {
            if (covered >> v & 1) {
                remap[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
                kept.push_back(labels_[static_cast<std::size_t>(v)]);
            }
        }
        for (FaceMask& f : facets_) {
            FaceMask nf = 0;
            for (int v = 0; v < vertex_count(); ++v)
                if (f >> v & 1) nf |= FaceMask{1} << remap[static_cast<std::size_t>(v)];
            f = nf;
        }
        labels_ = std::move(kept);
        std::sort(facets_.begin(), facets_.end());
    }
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> declared_vertices,
                                     const std::vector<std::vector<std::string>>& facet_sets) {
    std::set<std::string> label_set(declared_vertices.begin(), declared_vertices.end());
    for (const auto& fs : facet_sets) label_set.insert(fs.begin(), fs.end());
    labels_.assign(label_set.begin(), label_set.end());
    if (labels_.size() > 32) throw CapExceeded("complexes support at most 32 vertices");

    std::map<std::string, int> index;
    for (int v = 0; v < vertex_count(); ++v) index[labels_[static_cast<std::size_t>(v)]] = v;

    std::vector<FaceMask> faces;
    for (const auto& fs : facet_sets) {
        FaceMask m = 0;
        for (const auto& id : fs) m |= FaceMask{1} << index[id];
        faces.push_back(m);
    }
    if (faces.empty() && labels_.empty()) return; // void
    normalize(std::move(faces), true);
}

SimplicialComplex SimplicialComplex::from_masks(const std::vector<std::string>& parent_labels,
                                                std::vector<FaceMask> faces) {
    SimplicialComplex c;
    c.labels_ = parent_labels;
    c.normalize(std::move(faces), false);
    return c;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw InvalidInput("the void complex has no dimension");
    int d = -1;
    for (FaceMask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

FaceMask SimplicialComplex::mask_of(const std::vector<std::string>& vertex_ids) const {
    FaceMask m = 0;
    for (const auto& id : vertex_ids) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
        if (it == labels_.end() || *it != id)
            throw InvalidInput("unknown complex vertex '" + id + "'");
        m |= FaceMask{1} << (it - labels_.begin());
    }
    return m;
}

std::vector<std::string> SimplicialComplex::ids_of(FaceMask m) const {
    std::vector<std::string> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (m >> v & 1) out.push_back(labels_[static_cast<std::size_t>(v)]);
    return out;
}

bool SimplicialComplex::contains(FaceMask face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](FaceMask f) { return (face & f) == face; });
}

std::vector<FaceMask> SimplicialComplex::all_faces(std::size_t face_cap) const {
    std::unordered_set<FaceMask> seen;
    for (FaceMask f : facets_) {
        FaceMask sub = f;
        while (true) {
            seen.insert(sub);
            if (seen.size() > face_cap)
                throw CapExceeded("face enumeration exceeds cap of " + std::to_string(face_cap));
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<FaceMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaceMask> SimplicialComplex::faces_of_dim(int d, std::size_t face_cap) const {
    std::vector<FaceMask> out;
    for (FaceMask f : all_faces(face_cap))
        if (popcount(f) == d + 1) out.push_back(f);
    return out;
}

SimplicialComplex SimplicialComplex::link(FaceMask face) const {
    if (!contains(face)) throw InvalidInput("link of a non-face");
    std::vector<FaceMask> fs;
    for (FaceMask f : facets_)
        if ((face & f) == face) fs.push_back(f & ~face);
    return from_masks(labels_, std::move(fs));
}

SimplicialComplex SimplicialComplex::deletion(FaceMask face) const {
    if (!contains(face)) throw InvalidInput("deletion of a non-face");
    std::vector<FaceMask> fs;
    for (FaceMask f : facets_) fs.push_back(f & ~face);
    return from_masks(labels_, std::move(fs));
}

SimplicialComplex SimplicialComplex::pure_skeleton(int d) const {
    if (d < -1) throw InvalidInput("skeleton dimension must be >= -1");
    if (is_void()) return make_void();
    std::vector<FaceMask> fs = faces_of_dim(d);
    if (fs.empty()) return make_void();
    return from_masks(labels_, std::move(fs));
}

SimplicialComplex SimplicialComplex::with_label_prefix(const std::string& prefix) const {
    std::vector<std::string> relabeled;
    relabeled.reserve(labels_.size());
    for (const auto& l : labels_) relabeled.push_back(prefix + l);
    // prefixing preserves relative order of equal-prefix labels, but re-sort
    // defensively and remap masks
    std::vector<int> order(labels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return relabeled[static_cast<std::size_t>(a)] < relabeled[static_cast<std::size_t>(b)];
    });
    std::vector<int> pos(labels_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    SimplicialComplex c;
    c.labels_.resize(labels_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        c.labels_[i] = relabeled[static_cast<std::size_t>(order[i])];
    for (FaceMask f : facets_) {
        FaceMask nf = 0;
        for (int v = 0; v < vertex_count(); ++v)
            if (f >> v & 1) nf |= FaceMask{1} << pos[static_cast<std::size_t>(v)];
        c.facets_.push_back(nf);
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
}

std::vector<std::string> SimplicialComplex::shedding_vertices() const {
    if (is_void()) throw InvalidInput("the void complex has no vertices to shed");
    std::set<FaceMask> facet_set(facets_.begin(), facets_.end());
    std::vector<std::string> out;
    for (int v = 0; v < vertex_count(); ++v) {
        FaceMask bit = FaceMask{1} << v;
        std::vector<FaceMask> del;
        for (FaceMask f : facets_) del.push_back(f & ~bit);
        bool shedding = true;
        for (FaceMask f : maximal_antichain(std::move(del)))
            if (!facet_set.count(f)) {
                shedding = false;
                break;
            }
        if (shedding) out.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    return out;
}

int SimplicialComplex::component_count() const {
    if (vertex_count() == 0) return 0;
    std::vector<int> parent(static_cast<std::size_t>(vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (FaceMask f : facets_) {
        int first = -1;
        for (int v = 0; v < vertex_count(); ++v) {
            if (!(f >> v & 1)) continue;
            if (first < 0)
                first = v;
            else
                parent[static_cast<std::size_t>(find(v))] = find(first);
        }
    }
    std::set<int> roots;
    for (int v = 0; v < vertex_count(); ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

std::vector<FaceMask> SimplicialComplex::canonical_key() const {
    std::vector<int> degree(static_cast<std::size_t>(vertex_count()), 0);
    for (FaceMask f : facets_)
        for (int v = 0; v < vertex_count(); ++v)
            if (f >> v & 1) ++degree[static_cast<std::size_t>(v)];
    std::vector<int> order(static_cast<std::size_t>(vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)])
            return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> pos(static_cast<std::size_t>(vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<FaceMask> key;
    key.push_back(static_cast<FaceMask>(vertex_count()));
    for (FaceMask f : facets_) {
        FaceMask nf = 0;
        for (int v = 0; v < vertex_count(); ++v)
            if (f >> v & 1) nf |= FaceMask{1} << pos[static_cast<std::size_t>(v)];
        key.push_back(nf);
    }
    std::sort(key.begin() + 1, key.end());
    return key;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& l : a.labels())
        if (std::binary_search(b.labels().begin(), b.labels().end(), l))
            throw InvalidInput("join requires disjoint vertex sets ('" + l + "' is shared)");
    if (a.is_void() || b.is_void()) return SimplicialComplex::make_void();

    std::vector<std::string> labels;
    labels.reserve(a.labels().size() + b.labels().size());
    labels.insert(labels.end(), a.labels().begin(), a.labels().end());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::sort(labels.begin(), labels.end());
    if (labels.size() > 32) throw CapExceeded("join exceeds 32 vertices");

    auto remap = [&](const SimplicialComplex& src) {
        std::vector<int> pos(src.labels().size());
        for (std::size_t i = 0; i < src.labels().size(); ++i)
            pos[i] = static_cast<int>(
                std::lower_bound(labels.begin(), labels.end(), src.labels()[i]) - labels.begin());
        return pos;
    };
    auto pa = remap(a);
    auto pb = remap(b);
    auto lift = [](FaceMask f, const std::vector<int>& pos) {
        FaceMask out = 0;
        for (std::size_t v = 0; v < pos.size(); ++v)
            if (f >> v & 1) out |= FaceMask{1} << pos[v];
        return out;
    };

    std::vector<FaceMask> facets;
    for (FaceMask fa : a.facets())
        for (FaceMask fb : b.facets()) facets.push_back(lift(fa, pa) | lift(fb, pb));
    return SimplicialComplex::from_masks(labels, std::move(facets));
}

namespace {

struct VdSearch {
    std::map<std::vector<FaceMask>, bool> memo;
    int cap;

    bool decide(const SimplicialComplex& c) {
        if (c.is_simplex()) return true;
        if (c.vertex_count() > cap)
            throw CapExceeded("vertex decomposability cap of " + std::to_string(cap) +
                              " vertices exceeded");
        auto key = c.canonical_key();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& v : c.shedding_vertices()) {
            FaceMask bit = c.mask_of({v});
            if (decide(c.link(bit)) && decide(c.deletion(bit))) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    }

    std::unique_ptr<SheddingNode> certify(const SimplicialComplex& c) {
        auto node = std::make_unique<SheddingNode>();
        if (c.is_simplex()) return node;
        for (const auto& v : c.shedding_vertices()) {
            FaceMask bit = c.mask_of({v});
            auto lk = c.link(bit);
            auto del = c.deletion(bit);
            if (decide(lk) && decide(del)) {
                node->leaf = false;
                node->vertex = v;
                node->link_child = certify(lk);
                node->del_child = certify(del);
                return node;
            }
        }
        throw Error("internal: certificate requested for a non-decomposable complex");
    }
};

} // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& complex, const VdOptions& opts) {
    VdSearch search;
    search.cap = opts.vertex_cap;
    VdResult res;
    try {
        if (search.decide(complex)) {
            res.status = DecisionStatus::True;
            res.certificate = std::shared_ptr<SheddingNode>(search.certify(complex).release());
            return res;
        }
    } catch (const CapExceeded&) {
        res.status = DecisionStatus::Capped;
        return res;
    }
    res.status = DecisionStatus::False;
    auto shed = complex.shedding_vertices();
    if (shed.empty()) {
        res.witness = "not a simplex and no shedding vertex exists";
    } else {
        std::string w = "every shedding vertex fails:";
        for (const auto& v : shed) {
            FaceMask bit = complex.mask_of({v});
            bool lk_ok = search.decide(complex.link(bit));
            w += " " + v + (lk_ok ? "(deletion not VD)" : "(link not VD)");
        }
        res.witness = w;
    }
    return res;
}

bool replay_shedding_certificate(const SimplicialComplex& complex, const SheddingNode& node) {
    if (node.leaf) return complex.is_simplex();
    auto shed = complex.shedding_vertices();
    if (std::find(shed.begin(), shed.end(), node.vertex) == shed.end()) return false;
    if (!node.link_child || !node.del_child) return false;
    FaceMask bit = complex.mask_of({node.vertex});
    return replay_shedding_certificate(complex.link(bit), *node.link_child) &&
           replay_shedding_certificate(complex.deletion(bit), *node.del_child);
}

namespace {

/// Shelling step condition: for every previously placed facet, the
/// intersection with the candidate must extend to an intersection of
/// codimension one inside the candidate.
bool shelling_step_ok(FaceMask cand, const std::vector<FaceMask>& placed) {
    int want = popcount(cand) - 1;
    for (FaceMask p : placed) {
        FaceMask inter = cand & p;
        bool extended = false;
        for (FaceMask q : placed) {
            FaceMask big = cand & q;
            if (popcount(big) == want && (inter & big) == inter) {
                extended = true;
                break;
            }
        }
        if (!extended) return false;
    }
    return true;
}

} // namespace

ShellResult is_shellable(const SimplicialComplex& complex, const ShellOptions& opts) {
    ShellResult res;
    const auto& facets = complex.facets();
    const int n = static_cast<int>(facets.size());
    if (n > opts.facet_cap) {
        res.status = DecisionStatus::Capped;
        return res;
    }
    if (n <= 1) {
        res.status = DecisionStatus::True;
        res.order = facets;
        return res;
    }

    // any shellable complex admits a dimension-nonincreasing shelling, so the
    // search only places facets of maximal remaining dimension
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::unordered_set<std::uint32_t> dead;
    std::vector<FaceMask> placed;
    std::uint32_t used = 0;

    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(placed.size()) == n) return true;
        if (dead.count(used)) return false;
        int best_dim = -2;
        for (int i = 0; i < n; ++i)
            if (!(used >> i & 1))
                best_dim = std::max(best_dim, popcount(facets[static_cast<std::size_t>(i)]) - 1);
        for (int i = 0; i < n; ++i) {
            if (used >> i & 1) continue;
            FaceMask f = facets[static_cast<std::size_t>(i)];
            if (popcount(f) - 1 != best_dim) continue;
            if (!placed.empty() && !shelling_step_ok(f, placed)) continue;
            used |= std::uint32_t{1} << i;
            placed.push_back(f);
            if (self(self)) return true;
            placed.pop_back();
            used &= ~(std::uint32_t{1} << i);
        }
        dead.insert(used);
        return false;
    };

    if (dfs(dfs)) {
        res.status = DecisionStatus::True;
        res.order = placed;
    } else {
        res.status = DecisionStatus::False;
    }
    return res;
}

namespace {

/// Facet ids of the complex in a shelling order, assuming search.decide holds.
std::vector<std::vector<std::string>> vd_shelling_ids(VdSearch& search,
                                                      const SimplicialComplex& c) {
    std::vector<std::vector<std::string>> out;
    if (c.is_simplex()) {
        for (FaceMask f : c.facets()) out.push_back(c.ids_of(f));
        return out;
    }
    for (const auto& v : c.shedding_vertices()) {
        FaceMask bit = c.mask_of({v});
        auto lk = c.link(bit);
        auto del = c.deletion(bit);
        if (!search.decide(lk) || !search.decide(del)) continue;
        out = vd_shelling_ids(search, del);
        for (auto ids : vd_shelling_ids(search, lk)) {
            ids.push_back(v);
            out.push_back(std::move(ids));
        }
        return out;
    }
    throw Error("internal: shelling requested for a non-decomposable complex");
}

} // namespace

std::vector<FaceMask> shelling_from_decomposition(const SimplicialComplex& complex,
                                                  const VdOptions& opts) {
    VdSearch search;
    search.cap = opts.vertex_cap;
    if (!search.decide(complex)) return {};
    std::vector<FaceMask> order;
    for (const auto& ids : vd_shelling_ids(search, complex)) order.push_back(complex.mask_of(ids));
    return order;
}

bool replay_shelling(const SimplicialComplex& complex, const std::vector<FaceMask>& order) {
    std::vector<FaceMask> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != complex.facets()) return false;
    std::vector<FaceMask> placed;
    for (FaceMask f : order) {
        if (!placed.empty() && !shelling_step_ok(f, placed)) return false;
        placed.push_back(f);
    }
    return true;
}

} // namespace diforest
