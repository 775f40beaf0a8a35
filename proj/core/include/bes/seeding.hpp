#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bes/hypergraph.hpp"
#include "bes/sunflower.hpp"

namespace bes {

struct LinearizeResult {
    /// Set when some pair lies in >= e edges: that pair plus e third vertices.
    std::optional<ConfigurationCertificate> heavy_pair;
    /// Greedy pair-disjoint subhypergraph (canonical edge order), same labels.
    Hypergraph3 linear;
};

/// Throws InputError when e < 3.
LinearizeResult reduce_to_linear(const Hypergraph3& h, std::int64_t e);

struct Tripartition {
    VertexSubset x;
    VertexSubset y;
    VertexSubset z;
    /// Edges with one vertex in each class, original labels.
    Hypergraph3 crossing;
    std::size_t trial = 0;
};

/// Best of `trials` random 3-colourings with every class of size >= n/4.
/// Throws InputError when n < 12 and PreconditionError when no trial meets
/// the size floor.
Tripartition tripartition(const Hypergraph3& h, std::size_t trials, std::uint64_t seed);

/// Bipartite graph between X and Y where xy carries colour z for the unique
/// crossing edge xyz.
class ColoredBipartiteGraph {
public:
    struct Arc {
        Vertex to;
        Vertex color;
        friend bool operator<(const Arc& a, const Arc& b) { return a.to < b.to; }
    };

    ColoredBipartiteGraph() = default;
    ColoredBipartiteGraph(std::size_t vertices, VertexSubset x, VertexSubset y);

    void add(Vertex x, Vertex y, Vertex color);
    /// Sorts adjacency lists; throws InputError on a repeated pair.
    void finish();

    const VertexSubset& side_x() const noexcept { return x_; }
    const VertexSubset& side_y() const noexcept { return y_; }
    std::span<const Arc> arcs(Vertex v) const { return adjacency_[v]; }
    std::optional<Vertex> color(Vertex a, Vertex b) const;
    std::size_t edge_count() const noexcept { return edges_; }

private:
    VertexSubset x_;
    VertexSubset y_;
    std::vector<std::vector<Arc>> adjacency_;
    std::size_t edges_ = 0;
};

/// Throws InputError when two crossing edges share an XY pair or the input is
/// not tripartite over (X, Y, Z).
ColoredBipartiteGraph colored_link_graph(const Hypergraph3& crossing, const VertexSubset& x, const VertexSubset& y,
                                         const VertexSubset& z);

/// left has s vertices, right has t; both sorted.
struct RainbowCopy {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    friend bool operator==(const RainbowCopy&, const RainbowCopy&) = default;
};

/// Rainbow K_{s,t} copies, left side drawn from X then (when s != t) from Y.
/// Throws InputError when the colouring is not proper.
std::vector<RainbowCopy> find_rainbow_kst(const ColoredBipartiteGraph& g, std::uint32_t s, std::uint32_t t,
                                          std::size_t limit);

/// Embedding of K_{s,t}^+ (kst_* labels) for a rainbow copy. Throws
/// InternalError when the result is not an embedding into `host`.
Embedding lift_rainbow(const RainbowCopy& copy, const ColoredBipartiteGraph& g, const Hypergraph3& host);

}  // namespace bes
