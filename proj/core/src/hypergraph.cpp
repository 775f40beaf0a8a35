#include "bes/hypergraph.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "bes/error.hpp"

namespace bes {

namespace detail {

struct HypergraphIndex {
    std::once_flag once;
    std::vector<std::uint32_t> incidence_offsets;
    std::vector<std::uint32_t> incidence;
    std::vector<std::uint32_t> neighbor_offsets;
    std::vector<Vertex> neighbor_list;
    // Sorted pair keys with the matching third vertex at the same position.
    std::vector<std::uint64_t> pair_keys;
    std::vector<Vertex> pair_thirds;
};

}  // namespace detail

namespace {

constexpr std::uint64_t pair_key(Vertex a, Vertex b) noexcept {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

void build_index(detail::HypergraphIndex& ix, std::size_t n, std::span<const Edge> edges) {
    ix.incidence_offsets.assign(n + 1, 0);
    for (const auto& e : edges) {
        for (auto v : e) ++ix.incidence_offsets[v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) ix.incidence_offsets[v + 1] += ix.incidence_offsets[v];
    ix.incidence.resize(edges.size() * 3);
    std::vector<std::uint32_t> fill(ix.incidence_offsets.begin(), ix.incidence_offsets.end() - 1);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        for (auto v : edges[i]) ix.incidence[fill[v]++] = i;
    }

    ix.neighbor_offsets.assign(n + 1, 0);
    std::vector<Vertex> scratch;
    for (std::size_t v = 0; v < n; ++v) {
        scratch.clear();
        for (auto k = ix.incidence_offsets[v]; k < ix.incidence_offsets[v + 1]; ++k) {
            for (auto w : edges[ix.incidence[k]]) {
                if (w != v) scratch.push_back(w);
            }
        }
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        ix.neighbor_list.insert(ix.neighbor_list.end(), scratch.begin(), scratch.end());
        ix.neighbor_offsets[v + 1] = static_cast<std::uint32_t>(ix.neighbor_list.size());
    }

    std::vector<std::pair<std::uint64_t, Vertex>> pairs;
    pairs.reserve(edges.size() * 3);
    for (const auto& e : edges) {
        pairs.emplace_back(pair_key(e[0], e[1]), e[2]);
        pairs.emplace_back(pair_key(e[0], e[2]), e[1]);
        pairs.emplace_back(pair_key(e[1], e[2]), e[0]);
    }
    std::sort(pairs.begin(), pairs.end());
    ix.pair_keys.reserve(pairs.size());
    ix.pair_thirds.reserve(pairs.size());
    for (const auto& [key, third] : pairs) {
        ix.pair_keys.push_back(key);
        ix.pair_thirds.push_back(third);
    }
}

}  // namespace

Hypergraph3::Hypergraph3(std::size_t vertex_count)
    : vertex_count_(vertex_count), index_(std::make_shared<detail::HypergraphIndex>()) {}

Hypergraph3 Hypergraph3::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
    if (vertex_count > (std::size_t{1} << 31)) {
        throw InputError("vertex count " + std::to_string(vertex_count) + " is too large");
    }
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) {
            throw InputError("edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                             std::to_string(e[2]) + "} repeats a vertex");
        }
        if (e[2] >= vertex_count) {
            throw InputError("edge vertex " + std::to_string(e[2]) + " out of range for " +
                             std::to_string(vertex_count) + " vertices");
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw InputError("duplicate edge {" + std::to_string((*dup)[0]) + "," +
                         std::to_string((*dup)[1]) + "," + std::to_string((*dup)[2]) + "}");
    }
    Hypergraph3 h(vertex_count);
    h.edges_ = std::move(edges);
    return h;
}

const detail::HypergraphIndex& Hypergraph3::index() const {
    std::call_once(index_->once, [this] { build_index(*index_, vertex_count_, edges_); });
    return *index_;
}

std::optional<std::size_t> Hypergraph3::find_edge(Vertex a, Vertex b, Vertex c) const {
    Edge e{a, b, c};
    std::sort(e.begin(), e.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Hypergraph3::has_edge(Vertex a, Vertex b, Vertex c) const {
    return find_edge(a, b, c).has_value();
}

std::span<const std::uint32_t> Hypergraph3::incident_edges(Vertex v) const {
    const auto& ix = index();
    return {ix.incidence.data() + ix.incidence_offsets[v],
            ix.incidence_offsets[v + 1] - ix.incidence_offsets[v]};
}

std::span<const Vertex> Hypergraph3::neighbors(Vertex v) const {
    const auto& ix = index();
    return {ix.neighbor_list.data() + ix.neighbor_offsets[v],
            ix.neighbor_offsets[v + 1] - ix.neighbor_offsets[v]};
}

std::span<const Vertex> Hypergraph3::third_vertices(Vertex a, Vertex b) const {
    const auto& ix = index();
    const auto key = pair_key(a, b);
    auto [lo, hi] = std::equal_range(ix.pair_keys.begin(), ix.pair_keys.end(), key);
    const auto first = static_cast<std::size_t>(lo - ix.pair_keys.begin());
    return {ix.pair_thirds.data() + first, static_cast<std::size_t>(hi - lo)};
}

std::uint64_t Hypergraph3::content_hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed("h3 " + std::to_string(vertex_count_) + " " + std::to_string(edges_.size()) + "\n");
    for (const auto& e : edges_) {
        feed(std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n");
    }
    return h;
}

std::size_t DegreeProfile::count_with_degree(std::size_t d) const {
    return static_cast<std::size_t>(std::count(degree.begin(), degree.end(), d));
}

std::size_t DegreeProfile::count_with_degree_above(std::size_t d) const {
    return static_cast<std::size_t>(
        std::count_if(degree.begin(), degree.end(), [d](std::size_t x) { return x > d; }));
}

void require_subset_of(const Hypergraph3& h, const VertexSubset& u, const char* what) {
    if (u.universe() != h.vertex_count()) {
        throw InputError(std::string(what) + ": subset universe " + std::to_string(u.universe()) +
                         " does not match vertex count " + std::to_string(h.vertex_count()));
    }
}

std::int64_t deficiency(const Hypergraph3& h) {
    return static_cast<std::int64_t>(h.vertex_count()) - static_cast<std::int64_t>(h.edge_count());
}

std::size_t induced_edge_count(const Hypergraph3& h, const VertexSubset& u) {
    require_subset_of(h, u, "induced_edge_count");
    std::size_t count = 0;
    for (auto v : u.members()) {
        for (auto id : h.incident_edges(v)) {
            const auto& e = h.edge(id);
            if (e[0] == v && u.contains(e[1]) && u.contains(e[2])) ++count;
        }
    }
    return count;
}

std::int64_t induced_deficiency(const Hypergraph3& h, const VertexSubset& u) {
    return static_cast<std::int64_t>(u.size()) - static_cast<std::int64_t>(induced_edge_count(h, u));
}

Hypergraph3 induced_subhypergraph(const Hypergraph3& h, const VertexSubset& u) {
    require_subset_of(h, u, "induced_subhypergraph");
    const auto members = u.members();
    std::vector<Vertex> relabel(h.vertex_count(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) relabel[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
        if (u.contains(e[0]) && u.contains(e[1]) && u.contains(e[2])) {
            edges.push_back({relabel[e[0]], relabel[e[1]], relabel[e[2]]});
        }
    }
    return Hypergraph3::from_edges(members.size(), std::move(edges));
}

LinearityReport is_linear(const Hypergraph3& h) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
    pairs.reserve(h.edge_count() * 3);
    for (std::uint32_t i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        pairs.emplace_back(pair_key(e[0], e[1]), i);
        pairs.emplace_back(pair_key(e[0], e[2]), i);
        pairs.emplace_back(pair_key(e[1], e[2]), i);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i - 1].first) {
            LinearityReport report;
            report.linear = false;
            report.pair = std::make_pair(static_cast<Vertex>(pairs[i].first >> 32),
                                         static_cast<Vertex>(pairs[i].first & 0xffffffffU));
            report.edges = std::make_pair(h.edge(pairs[i - 1].second), h.edge(pairs[i].second));
            return report;
        }
    }
    return {};
}

bool is_independent(const Hypergraph3& h, const VertexSubset& u) {
    return induced_edge_count(h, u) == 0;
}

DegreeProfile degree_profile(const Hypergraph3& h) {
    DegreeProfile profile;
    profile.degree.assign(h.vertex_count(), 0);
    for (const auto& e : h.edges()) {
        for (auto v : e) ++profile.degree[v];
    }
    return profile;
}

}  // namespace bes
