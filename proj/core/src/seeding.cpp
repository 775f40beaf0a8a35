#include "bes/seeding.hpp"

#include <algorithm>
#include <string>

#include "bes/constructors.hpp"
#include "bes/embedding.hpp"
#include "bes/error.hpp"
#include "bes/rng.hpp"

namespace bes {

LinearizeResult reduce_to_linear(const Hypergraph3& h, std::int64_t e) {
    if (e < 3) throw InputError("reduce_to_linear needs e >= 3");
    LinearizeResult out;
    const auto need = static_cast<std::size_t>(e);
    for (const auto& edge : h.edges()) {
        for (auto [a, b] : {std::pair{edge[0], edge[1]}, {edge[0], edge[2]}, {edge[1], edge[2]}}) {
            const auto thirds = h.third_vertices(a, b);
            if (thirds.size() < need) continue;
            ConfigurationCertificate cert;
            cert.host_hash = h.content_hash();
            cert.vertices = VertexSubset(h.vertex_count());
            cert.vertices.insert(a);
            cert.vertices.insert(b);
            for (std::size_t i = 0; i < need; ++i) cert.vertices.insert(thirds[i]);
            cert.v = e + 2;
            cert.e = e;
            out.heavy_pair = std::move(cert);
            out.linear = h;
            return out;
        }
    }
    std::vector<Edge> kept;
    auto key = [](Vertex a, Vertex b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
    std::vector<std::uint64_t> used;
    for (const auto& edge : h.edges()) {
        const std::uint64_t pairs[3] = {key(edge[0], edge[1]), key(edge[0], edge[2]), key(edge[1], edge[2])};
        bool clash = false;
        for (auto p : pairs) {
            if (std::binary_search(used.begin(), used.end(), p)) clash = true;
        }
        if (clash) continue;
        kept.push_back(edge);
        for (auto p : pairs) used.insert(std::upper_bound(used.begin(), used.end(), p), p);
    }
    out.linear = Hypergraph3::from_edges(h.vertex_count(), std::move(kept));
    return out;
}

Tripartition tripartition(const Hypergraph3& h, std::size_t trials, std::uint64_t seed) {
    const auto n = h.vertex_count();
    if (n < 12) throw InputError("tripartition needs at least 12 vertices");
    std::optional<std::vector<std::uint8_t>> best;
    std::size_t best_count = 0;
    std::size_t best_trial = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, trial));
        std::vector<std::uint8_t> colour(n);
        std::size_t sizes[3] = {0, 0, 0};
        for (auto& c : colour) {
            c = static_cast<std::uint8_t>(rng.below(3));
            ++sizes[c];
        }
        if (4 * sizes[0] < n || 4 * sizes[1] < n || 4 * sizes[2] < n) continue;
        std::size_t count = 0;
        for (const auto& e : h.edges()) {
            const auto a = colour[e[0]];
            const auto b = colour[e[1]];
            const auto c = colour[e[2]];
            count += a != b && b != c && a != c;
        }
        if (!best || count > best_count) {
            best = std::move(colour);
            best_count = count;
            best_trial = trial;
        }
    }
    if (!best) throw PreconditionError("tripartition: no trial gave every class n/4 vertices");
    Tripartition out{VertexSubset(n), VertexSubset(n), VertexSubset(n), {}, best_trial};
    for (Vertex v = 0; v < n; ++v) {
        if ((*best)[v] == 0) out.x.insert(v);
        if ((*best)[v] == 1) out.y.insert(v);
        if ((*best)[v] == 2) out.z.insert(v);
    }
    std::vector<Edge> crossing;
    for (const auto& e : h.edges()) {
        const auto a = (*best)[e[0]];
        const auto b = (*best)[e[1]];
        const auto c = (*best)[e[2]];
        if (a != b && b != c && a != c) crossing.push_back(e);
    }
    out.crossing = Hypergraph3::from_edges(n, std::move(crossing));
    return out;
}

ColoredBipartiteGraph::ColoredBipartiteGraph(std::size_t vertices, VertexSubset x, VertexSubset y)
    : x_(std::move(x)), y_(std::move(y)), adjacency_(vertices) {}

void ColoredBipartiteGraph::add(Vertex x, Vertex y, Vertex color) {
    adjacency_[x].push_back({y, color});
    adjacency_[y].push_back({x, color});
    ++edges_;
}

void ColoredBipartiteGraph::finish() {
    for (Vertex v = 0; v < adjacency_.size(); ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        for (std::size_t i = 1; i < list.size(); ++i) {
            if (list[i].to == list[i - 1].to) {
                throw InputError("link graph pair (" + std::to_string(v) + "," + std::to_string(list[i].to) +
                                 ") has two colours; the host is not linear");
            }
        }
    }
}

std::optional<Vertex> ColoredBipartiteGraph::color(Vertex a, Vertex b) const {
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), Arc{b, 0});
    if (it == list.end() || it->to != b) return std::nullopt;
    return it->color;
}

ColoredBipartiteGraph colored_link_graph(const Hypergraph3& crossing, const VertexSubset& x, const VertexSubset& y,
                                         const VertexSubset& z) {
    const auto n = crossing.vertex_count();
    require_subset_of(crossing, x, "colored_link_graph");
    require_subset_of(crossing, y, "colored_link_graph");
    require_subset_of(crossing, z, "colored_link_graph");
    ColoredBipartiteGraph g(n, x, y);
    for (const auto& e : crossing.edges()) {
        std::optional<Vertex> a, b, c;
        for (auto v : e) {
            if (x.contains(v)) a = v;
            else if (y.contains(v)) b = v;
            else if (z.contains(v)) c = v;
        }
        if (!a || !b || !c) throw InputError("colored_link_graph: an edge is not split across X, Y and Z");
        g.add(*a, *b, *c);
    }
    g.finish();
    return g;
}

namespace {

class RainbowSearch {
public:
    RainbowSearch(const ColoredBipartiteGraph& g, std::uint32_t s, std::uint32_t t, std::size_t limit,
                  std::vector<RainbowCopy>& out)
        : g_(g), s_(s), t_(t), limit_(limit), out_(out) {}

    void run(const VertexSubset& left_side, bool swapped) {
        swapped_ = swapped;
        left_pool_ = left_side.members();
        pick_left(0, {});
    }

private:
    std::vector<Vertex> neighbours(Vertex v) const {
        std::vector<Vertex> out;
        for (const auto& arc : g_.arcs(v)) out.push_back(arc.to);
        return out;
    }

    void pick_left(std::size_t from, const std::vector<Vertex>& common) {
        if (out_.size() >= limit_) return;
        if (left_.size() == s_) {
            colours_.clear();
            pick_right(common, 0);
            return;
        }
        for (std::size_t i = from; i < left_pool_.size(); ++i) {
            if (left_pool_.size() - i < s_ - left_.size()) return;
            const auto v = left_pool_[i];
            auto next = neighbours(v);
            if (!left_.empty()) {
                std::vector<Vertex> meet;
                std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                                      std::back_inserter(meet));
                next = std::move(meet);
            }
            if (next.size() < t_) continue;
            left_.push_back(v);
            pick_left(i + 1, next);
            left_.pop_back();
            if (out_.size() >= limit_) return;
        }
    }

    void pick_right(const std::vector<Vertex>& common, std::size_t from) {
        if (out_.size() >= limit_) return;
        if (right_.size() == t_) {
            out_.push_back(RainbowCopy{left_, right_});
            return;
        }
        for (std::size_t i = from; i < common.size(); ++i) {
            if (common.size() - i < t_ - right_.size()) return;
            const auto y = common[i];
            std::vector<Vertex> added;
            bool ok = true;
            for (auto x : left_) {
                const auto c = *g_.color(x, y);
                if (std::find(colours_.begin(), colours_.end(), c) != colours_.end() ||
                    std::find(added.begin(), added.end(), c) != added.end()) {
                    ok = false;
                    break;
                }
                added.push_back(c);
            }
            if (!ok) continue;
            colours_.insert(colours_.end(), added.begin(), added.end());
            right_.push_back(y);
            pick_right(common, i + 1);
            right_.pop_back();
            colours_.resize(colours_.size() - added.size());
            if (out_.size() >= limit_) return;
        }
    }

    const ColoredBipartiteGraph& g_;
    std::uint32_t s_;
    std::uint32_t t_;
    std::size_t limit_;
    std::vector<RainbowCopy>& out_;
    bool swapped_ = false;
    std::vector<Vertex> left_pool_;
    std::vector<Vertex> left_;
    std::vector<Vertex> right_;
    std::vector<Vertex> colours_;
};

}  // namespace

std::vector<RainbowCopy> find_rainbow_kst(const ColoredBipartiteGraph& g, std::uint32_t s, std::uint32_t t,
                                          std::size_t limit) {
    if (s == 0 || t == 0) throw InputError("find_rainbow_kst needs s, t >= 1");
    for (Vertex v = 0; v < g.side_x().universe(); ++v) {
        std::vector<Vertex> colours;
        for (const auto& arc : g.arcs(v)) colours.push_back(arc.color);
        std::sort(colours.begin(), colours.end());
        if (std::adjacent_find(colours.begin(), colours.end()) != colours.end()) {
            throw InputError("find_rainbow_kst: colouring is not proper at vertex " + std::to_string(v));
        }
    }
    std::vector<RainbowCopy> out;
    RainbowSearch search(g, s, t, limit, out);
    search.run(g.side_x(), false);
    if (s != t) search.run(g.side_y(), true);
    return out;
}

Embedding lift_rainbow(const RainbowCopy& copy, const ColoredBipartiteGraph& g, const Hypergraph3& host) {
    const auto s = static_cast<std::uint32_t>(copy.left.size());
    const auto t = static_cast<std::uint32_t>(copy.right.size());
    Embedding phi(std::size_t{s} + t + std::size_t{s} * t);
    for (std::uint32_t i = 0; i < s; ++i) phi[kst_left(i)] = copy.left[i];
    for (std::uint32_t j = 0; j < t; ++j) phi[kst_right(s, j)] = copy.right[j];
    for (std::uint32_t i = 0; i < s; ++i) {
        for (std::uint32_t j = 0; j < t; ++j) {
            const auto c = g.color(copy.left[i], copy.right[j]);
            if (!c) throw InternalError("lift_rainbow: copy uses a missing link edge");
            phi[kst_apex(s, t, i, j)] = *c;
        }
    }
    if (!is_embedding(host, kst_plus_hypergraph(s, t), phi)) {
        throw InternalError("lift_rainbow: lifted map is not an embedding");
    }
    return phi;
}

}  // namespace bes
