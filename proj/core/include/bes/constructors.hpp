#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bes/hypergraph.hpp"
#include "bes/structure.hpp"

namespace bes {

/// An edge of K_{s,t} as (left index in [0,s), right index in [0,t)).
using BipartiteEdge = std::pair<std::uint32_t, std::uint32_t>;

struct SpanningTreePair {
    std::vector<BipartiteEdge> first;
    std::vector<BipartiteEdge> second;
};

/// True iff `edges` form a spanning tree of K_{s,t}.
bool is_spanning_tree(std::uint32_t s, std::uint32_t t, const std::vector<BipartiteEdge>& edges);

/// Two edge-disjoint spanning trees of K_{s,t}. Deterministic; every result is
/// checked before it is returned. Throws ConstructionError unless s, t >= 2
/// and st >= 2(s + t - 1).
SpanningTreePair two_edge_disjoint_spanning_trees(std::uint32_t s, std::uint32_t t);

/// Labels of K_{s,t}^+: left i is i, right j is s + j, apex of (i, j) is
/// s + t + i*t + j.
constexpr Vertex kst_left(std::uint32_t i) noexcept { return i; }
constexpr Vertex kst_right(std::uint32_t s, std::uint32_t j) noexcept { return s + j; }
constexpr Vertex kst_apex(std::uint32_t s, std::uint32_t t, std::uint32_t i, std::uint32_t j) noexcept {
    return s + t + i * t + j;
}

/// K_{s,t} with a private apex added to every edge. No packing threshold.
Hypergraph3 kst_plus_hypergraph(std::uint32_t s, std::uint32_t t);

/// One gluing step: copy_maps[c][x] is the label of pattern vertex x in copy c.
struct GlueStep {
    std::uint32_t copies = 0;
    std::vector<std::vector<Vertex>> copy_maps;
};

struct GluedHypergraph {
    Hypergraph3 hypergraph;
    /// Absent for glue_m with m > 2.
    std::optional<EligibilityWitness> witness;
    /// Glue steps from the seed onwards; steps are shared between tower levels.
    std::vector<std::shared_ptr<const GlueStep>> provenance;
};

/// K_{s,t}^+ with A and B the apexes of two edge-disjoint spanning trees and
/// u = 0, v = 1.
GluedHypergraph build_kst_plus(std::uint32_t s, std::uint32_t t);

/// Two copies of F identified on A. Throws InputError when the witness is
/// missing or structurally invalid.
GluedHypergraph glue_pair(const GluedHypergraph& f);

/// m copies of F identified on A. For m == 2 the result equals glue_pair(f)
/// including its witness; for m > 2 no witness is produced.
GluedHypergraph glue_m(const GluedHypergraph& f, std::uint32_t m);

/// Checks sizes, disjointness, spare vertices and k = deficiency(F); no
/// goodness test. Returns an explanation on failure.
std::optional<std::string> witness_structure_problem(const Hypergraph3& f, const EligibilityWitness& w);

struct TowerConfig {
    std::uint32_t s = 16;
    std::uint32_t t = 16;
    std::uint64_t target_e = 512;

    /// max j with st * 2^(j+1) <= target_e, or 0 when target_e < 2st.
    std::uint32_t ell() const;
    std::int64_t k0() const { return static_cast<std::int64_t>(s) + t; }
};

/// F_0 = build_kst_plus(s, t) and F_{j+1} = glue_pair(F_j) for j < ell.
/// Checks Δ(F_j) = k0 + j and e(F_j) = 2^j st at every level.
std::vector<GluedHypergraph> build_tower(const TowerConfig& cfg);

}  // namespace bes
