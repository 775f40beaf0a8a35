#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bes/hypergraph.hpp"
#include "bes/sunflower.hpp"

namespace bes {

/// Host vertex x may only receive pattern vertex klass[x].
struct PartitionScheme {
    std::vector<std::uint32_t> klass;
    std::uint32_t classes = 0;
    std::uint64_t seed = 0;
};

/// Uniform random assignment of host vertices to `classes` classes.
PartitionScheme random_scheme(std::size_t host_vertices, std::uint32_t classes, std::uint64_t seed);

bool is_embedding(const Hypergraph3& host, const Hypergraph3& pattern, const Embedding& phi);
bool is_proper(const Embedding& phi, const PartitionScheme& scheme);

struct EmbeddingList {
    std::vector<Embedding> embeddings;
    bool truncated = false;
};

/// Labeled embeddings of `pattern` into `host`, restricted to proper ones when
/// a scheme is given. Order is fixed by the pattern, host and scheme alone;
/// `threads` only changes speed. Stops after `limit` results and sets
/// `truncated` when more exist. `per_root_limit` caps the results sharing one
/// image of the first placed pattern vertex, which spreads a capped list over
/// the whole host; hitting it also sets `truncated`.
EmbeddingList enumerate_embeddings(const Hypergraph3& host, const Hypergraph3& pattern,
                                   const PartitionScheme* scheme, std::size_t limit, unsigned threads = 1,
                                   std::size_t per_root_limit = static_cast<std::size_t>(-1));

/// {x : phi1[x] == phi2[x]} over the pattern's vertices.
VertexSubset intersection_pattern(const Embedding& phi1, const Embedding& phi2);

/// Sorted image set of an embedding.
std::vector<Vertex> image_set(const Embedding& phi);

}  // namespace bes
