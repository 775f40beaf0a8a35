#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

/// Pattern vertex x maps to host vertex embedding[x].
using Embedding = std::vector<Vertex>;

struct SunflowerCertificate {
    Hypergraph3 pattern;
    VertexSubset core;  // over V(pattern)
    std::vector<Embedding> embeddings;

    std::size_t r() const noexcept { return embeddings.size(); }
};

struct SunflowerReport {
    bool valid = true;
    std::string violation;  // empty when valid
};

/// Checks that each embedding is injective and edge-preserving, that copies
/// meet exactly on the core images, that the core is proper and that
/// Δ(core) >= Δ(pattern). Throws InputError for malformed certificates (wrong
/// sizes, out-of-range labels, no embeddings).
SunflowerReport verify_sunflower(const Hypergraph3& host, const SunflowerCertificate& cert);

/// Δ(F) + (r - 1)(Δ(F) - Δ(U)).
std::int64_t sunflower_deficiency(const SunflowerCertificate& cert);

/// Union of the images of the first `count` embeddings (all when absent).
struct SunflowerUnion {
    VertexSubset vertices;
    std::vector<Edge> edges;  // sorted, no repeats

    std::int64_t deficiency() const {
        return static_cast<std::int64_t>(vertices.size()) - static_cast<std::int64_t>(edges.size());
    }
};

SunflowerUnion sunflower_union(const SunflowerCertificate& cert, std::size_t host_vertices,
                               std::optional<std::size_t> count = std::nullopt);

struct BuiltSunflower {
    Hypergraph3 host;
    SunflowerCertificate certificate;
};

/// r copies of F identified on U. Copy 0 keeps F's labels; copy c >= 1 sends
/// the i-th petal vertex to v(F) + (c - 1)|P| + i. Throws PreconditionError
/// when U is not proper or Δ(U) < Δ(F), InputError when r < 1.
BuiltSunflower build_sunflower(const Hypergraph3& f, const VertexSubset& u, std::size_t r);

/// At most v vertices spanning at least e edges of the host.
struct ConfigurationCertificate {
    std::uint64_t host_hash = 0;
    VertexSubset vertices;
    std::int64_t v = 0;
    std::int64_t e = 0;
};

/// True iff the hash matches, |W| <= v and the host induces >= e edges on W.
bool verify_configuration(const Hypergraph3& host, const ConfigurationCertificate& cert);

struct CleaningPlan {
    std::int64_t e_u = 0;
    std::int64_t e_p = 0;
    std::int64_t petal_size = 0;
    std::int64_t p = 0;
    /// Degree-1 vertices of the pattern sub-sunflower: v_U + p * v_P.
    std::int64_t degree_one_supply = 0;
    /// Removals needed to get down to e + Δ(F) vertices.
    std::int64_t vertex_removals = 0;
    /// Every removal made, in order; trimming continues to exactly e edges.
    std::vector<Vertex> removals;
};

struct CleaningOptions {
    /// Skip the bound on vertices of degree > 1 (patterns that do not meet it).
    bool relaxed_degree_conditions = false;
    /// Recompute every degree from scratch after each removal and compare.
    bool debug_recount = false;
};

struct CleaningResult {
    ConfigurationCertificate certificate;
    CleaningPlan plan;
};

/// Turns a sunflower with at least e edges into a configuration with exactly e
/// sunflower edges and at most e + Δ(F) vertices by taking the first
/// p = ceil((e - e_U) / e_P) petals and deleting degree-1 vertices, smallest
/// label first. Throws PreconditionError naming the failed hypothesis.
CleaningResult clean_sunflower(const Hypergraph3& host, const SunflowerCertificate& cert, std::int64_t e,
                               const CleaningOptions& options = {});

/// Deletes degree-1 vertices of H[W] (smallest label first) until exactly e
/// induced edges remain. Throws PreconditionError when H[W] has fewer than e
/// edges or the degree-1 supply runs out.
ConfigurationCertificate trim_to_edges(const VertexSubset& host_subset, const Hypergraph3& host, std::int64_t e);

}  // namespace bes
