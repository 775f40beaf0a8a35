#include "bes/constructors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "bes/error.hpp"
#include "bes/rng.hpp"

namespace bes {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Kruskal over `order`, skipping edges flagged in `taken`.
std::vector<BipartiteEdge> greedy_forest(std::uint32_t s, std::uint32_t t, const std::vector<BipartiteEdge>& order,
                                         const std::vector<bool>* taken) {
    DisjointSets sets(s + t);
    std::vector<BipartiteEdge> out;
    for (const auto& [i, j] : order) {
        if (taken && (*taken)[i * t + j]) continue;
        if (sets.unite(i, s + j)) out.push_back({i, j});
    }
    return out;
}

std::optional<SpanningTreePair> pack_by_rotations(std::uint32_t s, std::uint32_t t) {
    std::vector<BipartiteEdge> all;
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = 0; j < t; ++j) all.push_back({i, j});
    }
    const std::size_t need = s + t - 1;
    for (std::uint64_t rotation = 0; rotation < 256; ++rotation) {
        auto order = all;
        if (rotation > 0) {
            Rng rng(derive_seed(0x5eedULL, rotation));
            rng.shuffle(order);
        }
        auto first = greedy_forest(s, t, order, nullptr);
        std::vector<bool> taken(std::size_t{s} * t, false);
        for (const auto& [i, j] : first) taken[i * t + j] = true;
        // Walk the remaining edges in reverse so the second tree leans on
        // edges the first one reached last.
        std::reverse(order.begin(), order.end());
        auto second = greedy_forest(s, t, order, &taken);
        if (first.size() == need && second.size() == need) return SpanningTreePair{first, second};
    }
    return std::nullopt;
}

// Enumerates spanning trees of K_{s,t} and returns the first whose complement
// still spans. Only used for small, tight parameters.
class ExhaustivePacking {
public:
    ExhaustivePacking(std::uint32_t s, std::uint32_t t) : s_(s), t_(t), taken_(std::size_t{s} * t, false) {}

    std::optional<SpanningTreePair> run() {
        std::vector<std::uint32_t> component(s_ + t_);
        std::iota(component.begin(), component.end(), 0);
        if (search(0, component)) return result_;
        return std::nullopt;
    }

private:
    bool search(std::size_t next, const std::vector<std::uint32_t>& component) {
        const std::size_t need = s_ + t_ - 1;
        if (tree_.size() == need) {
            std::vector<BipartiteEdge> order;
            for (std::uint32_t i = 0; i < s_; ++i) {
                for (std::uint32_t j = 0; j < t_; ++j) order.push_back({i, j});
            }
            auto second = greedy_forest(s_, t_, order, &taken_);
            if (second.size() != need) return false;
            result_ = SpanningTreePair{tree_, second};
            return true;
        }
        const std::size_t total = std::size_t{s_} * t_;
        if (total - next < need - tree_.size()) return false;
        for (std::size_t id = next; id < total; ++id) {
            const auto i = static_cast<std::uint32_t>(id / t_);
            const auto j = static_cast<std::uint32_t>(id % t_);
            const auto ci = component[i];
            const auto cj = component[s_ + j];
            if (ci == cj) continue;
            auto merged = component;
            for (auto& c : merged) {
                if (c == cj) c = ci;
            }
            tree_.push_back({i, j});
            taken_[id] = true;
            if (search(id + 1, merged)) return true;
            taken_[id] = false;
            tree_.pop_back();
        }
        return false;
    }

    std::uint32_t s_;
    std::uint32_t t_;
    std::vector<bool> taken_;
    std::vector<BipartiteEdge> tree_;
    SpanningTreePair result_;
};

Vertex copy_label(std::size_t n, std::size_t a_size, std::uint32_t copy, std::size_t rank) {
    return static_cast<Vertex>(n + (copy - 1) * (n - a_size) + rank);
}

}  // namespace

bool is_spanning_tree(std::uint32_t s, std::uint32_t t, const std::vector<BipartiteEdge>& edges) {
    if (edges.size() + 1 != std::size_t{s} + t) return false;
    DisjointSets sets(s + t);
    for (const auto& [i, j] : edges) {
        if (i >= s || j >= t) return false;
        if (!sets.unite(i, s + j)) return false;
    }
    return true;
}

SpanningTreePair two_edge_disjoint_spanning_trees(std::uint32_t s, std::uint32_t t) {
    if (s < 2 || t < 2) {
        throw ConstructionError("spanning tree packing needs s, t >= 2 (got " + std::to_string(s) + ", " +
                                std::to_string(t) + ")");
    }
    if (std::uint64_t{s} * t < 2 * (std::uint64_t{s} + t - 1)) {
        throw ConstructionError("K_{" + std::to_string(s) + "," + std::to_string(t) + "} has " +
                                std::to_string(std::uint64_t{s} * t) +
                                " edges, fewer than two spanning trees need");
    }
    auto packing = pack_by_rotations(s, t);
    if (!packing && std::uint64_t{s} * t <= 36) packing = ExhaustivePacking(s, t).run();
    if (!packing) {
        throw ConstructionError("no edge-disjoint spanning tree pair found for K_{" + std::to_string(s) + "," +
                                std::to_string(t) + "}");
    }
    std::vector<bool> seen(std::size_t{s} * t, false);
    for (const auto& [i, j] : packing->first) seen[i * t + j] = true;
    for (const auto& [i, j] : packing->second) {
        if (seen[i * t + j]) throw InternalError("spanning trees share an edge");
    }
    if (!is_spanning_tree(s, t, packing->first) || !is_spanning_tree(s, t, packing->second)) {
        throw InternalError("tree packing produced a non-tree");
    }
    std::sort(packing->first.begin(), packing->first.end());
    std::sort(packing->second.begin(), packing->second.end());
    return *packing;
}

Hypergraph3 kst_plus_hypergraph(std::uint32_t s, std::uint32_t t) {
    std::vector<Edge> edges;
    edges.reserve(std::size_t{s} * t);
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = 0; j < t; ++j) edges.push_back({kst_left(i), kst_right(s, j), kst_apex(s, t, i, j)});
    }
    return Hypergraph3::from_edges(std::size_t{s} + t + std::size_t{s} * t, std::move(edges));
}

GluedHypergraph build_kst_plus(std::uint32_t s, std::uint32_t t) {
    const auto trees = two_edge_disjoint_spanning_trees(s, t);
    GluedHypergraph out;
    out.hypergraph = kst_plus_hypergraph(s, t);
    const auto n = out.hypergraph.vertex_count();
    EligibilityWitness w;
    w.a = VertexSubset(n);
    w.b = VertexSubset(n);
    for (const auto& [i, j] : trees.first) w.a.insert(kst_apex(s, t, i, j));
    for (const auto& [i, j] : trees.second) w.b.insert(kst_apex(s, t, i, j));
    w.u = kst_left(0);
    w.v = kst_left(1);
    w.k = deficiency(out.hypergraph);
    out.witness = std::move(w);
    return out;
}

std::optional<std::string> witness_structure_problem(const Hypergraph3& f, const EligibilityWitness& w) {
    const auto n = f.vertex_count();
    if (w.a.universe() != n || w.b.universe() != n) return "witness sets do not range over V(F)";
    if (w.u >= n || w.v >= n) return "spare vertex out of range";
    if (w.k != deficiency(f)) {
        return "witness k=" + std::to_string(w.k) + " differs from deficiency " + std::to_string(deficiency(f));
    }
    if (w.k < 1) return "deficiency below 1";
    const auto want = static_cast<std::size_t>(w.k - 1);
    if (w.a.size() != want || w.b.size() != want) return "A and B must have size k-1";
    if (w.a.intersects(w.b)) return "A and B intersect";
    if (w.u == w.v) return "u equals v";
    if (w.a.contains(w.u) || w.a.contains(w.v) || w.b.contains(w.u) || w.b.contains(w.v)) {
        return "u or v lies in A or B";
    }
    return std::nullopt;
}

GluedHypergraph glue_m(const GluedHypergraph& f, std::uint32_t m) {
    if (m < 2) throw InputError("glue_m needs m >= 2 (got " + std::to_string(m) + ")");
    if (!f.witness) throw InputError("gluing needs an eligibility witness");
    if (auto problem = witness_structure_problem(f.hypergraph, *f.witness)) {
        throw InputError("invalid witness: " + *problem);
    }
    const auto& w = *f.witness;
    const auto& h = f.hypergraph;
    const auto n = h.vertex_count();
    const auto a_size = w.a.size();

    auto step = std::make_shared<GlueStep>();
    step->copies = m;
    step->copy_maps.assign(m, std::vector<Vertex>(n));
    std::iota(step->copy_maps[0].begin(), step->copy_maps[0].end(), Vertex{0});
    for (std::uint32_t c = 1; c < m; ++c) {
        std::size_t rank = 0;
        for (Vertex x = 0; x < n; ++x) {
            step->copy_maps[c][x] = w.a.contains(x) ? x : copy_label(n, a_size, c, rank++);
        }
    }

    const std::size_t total = n + (m - 1) * (n - a_size);
    std::vector<Edge> edges;
    edges.reserve(h.edge_count() * m);
    for (std::uint32_t c = 0; c < m; ++c) {
        const auto& map = step->copy_maps[c];
        for (const auto& e : h.edges()) edges.push_back({map[e[0]], map[e[1]], map[e[2]]});
    }

    GluedHypergraph out;
    out.hypergraph = Hypergraph3::from_edges(total, std::move(edges));
    out.provenance = f.provenance;
    out.provenance.push_back(step);
    if (m == 2) {
        const auto& second = step->copy_maps[1];
        EligibilityWitness glued;
        glued.a = VertexSubset(total);
        glued.b = VertexSubset(total);
        for (auto x : w.b.members()) {
            glued.a.insert(x);
            glued.b.insert(second[x]);
        }
        glued.a.insert(second[w.v]);
        glued.b.insert(w.v);
        glued.u = w.u;
        glued.v = second[w.u];
        glued.k = w.k + 1;
        out.witness = std::move(glued);
    }
    return out;
}

GluedHypergraph glue_pair(const GluedHypergraph& f) { return glue_m(f, 2); }

std::uint32_t TowerConfig::ell() const {
    const std::uint64_t st = std::uint64_t{s} * t;
    if (st == 0 || target_e < 2 * st) return 0;
    std::uint32_t j = 0;
    while ((st << (j + 2)) <= target_e) ++j;
    return j;
}

std::vector<GluedHypergraph> build_tower(const TowerConfig& cfg) {
    if (cfg.s > cfg.t) throw InputError("tower needs s <= t");
    if (cfg.target_e == 0) throw InputError("tower needs a positive target edge count");
    const auto ell = cfg.ell();
    std::vector<GluedHypergraph> tower;
    tower.reserve(ell + 1);
    tower.push_back(build_kst_plus(cfg.s, cfg.t));
    for (std::uint32_t j = 1; j <= ell; ++j) tower.push_back(glue_pair(tower.back()));
    const std::uint64_t st = std::uint64_t{cfg.s} * cfg.t;
    for (std::uint32_t j = 0; j <= ell; ++j) {
        const auto& level = tower[j].hypergraph;
        if (deficiency(level) != cfg.k0() + j || level.edge_count() != (st << j)) {
            throw InternalError("tower level " + std::to_string(j) + " has deficiency " +
                                std::to_string(deficiency(level)) + " and " + std::to_string(level.edge_count()) +
                                " edges");
        }
    }
    return tower;
}

}  // namespace bes
