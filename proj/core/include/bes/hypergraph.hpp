#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bes/vertex_subset.hpp"

namespace bes {

using Edge = std::array<Vertex, 3>;

namespace detail {
struct HypergraphIndex;
}

/// A 3-uniform hypergraph on the labels [0, vertex_count).
///
/// Always stored in canonical form: each triple sorted ascending and the edge
/// list sorted lexicographically, so equal hypergraphs compare and serialize
/// identically. Immutable after construction; the incidence, neighbour and
/// pair indices are built on first use and shared between copies, which makes
/// concurrent readers safe.
class Hypergraph3 {
public:
    Hypergraph3() : Hypergraph3(0) {}
    explicit Hypergraph3(std::size_t vertex_count);

    /// Sorts every triple and the list. Throws InputError on repeated vertices
    /// inside an edge, labels >= vertex_count, or duplicate edges.
    static Hypergraph3 from_edges(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    bool has_edge(Vertex a, Vertex b, Vertex c) const;
    std::optional<std::size_t> find_edge(Vertex a, Vertex b, Vertex c) const;

    /// Ids of edges containing v, ascending.
    std::span<const std::uint32_t> incident_edges(Vertex v) const;
    /// Vertices sharing an edge with v, ascending and without repeats.
    std::span<const Vertex> neighbors(Vertex v) const;
    /// Third vertices w of the edges {a, b, w}, ascending.
    std::span<const Vertex> third_vertices(Vertex a, Vertex b) const;

    std::size_t degree(Vertex v) const { return incident_edges(v).size(); }

    /// FNV-1a 64 of the canonical text serialization.
    std::uint64_t content_hash() const;

    friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    const detail::HypergraphIndex& index() const;

    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::shared_ptr<detail::HypergraphIndex> index_;
};

/// Per-vertex degrees; the sum is always 3 * edge_count.
struct DegreeProfile {
    std::vector<std::size_t> degree;

    std::size_t count_with_degree(std::size_t d) const;
    std::size_t count_with_degree_above(std::size_t d) const;
};

struct LinearityReport {
    bool linear = true;
    std::optional<std::pair<Vertex, Vertex>> pair;
    std::optional<std::pair<Edge, Edge>> edges;
};

std::int64_t deficiency(const Hypergraph3& h);
std::size_t induced_edge_count(const Hypergraph3& h, const VertexSubset& u);
std::int64_t induced_deficiency(const Hypergraph3& h, const VertexSubset& u);

/// Relabels the members of u to [0, |u|) preserving order.
Hypergraph3 induced_subhypergraph(const Hypergraph3& h, const VertexSubset& u);

LinearityReport is_linear(const Hypergraph3& h);
bool is_independent(const Hypergraph3& h, const VertexSubset& u);
DegreeProfile degree_profile(const Hypergraph3& h);

/// Throws InputError unless u ranges over exactly h's vertex labels.
void require_subset_of(const Hypergraph3& h, const VertexSubset& u, const char* what);

}  // namespace bes
