#pragma once

#include <cstdint>

#include "bes/hypergraph.hpp"

namespace bes {

/// Random linear hypergraph on n vertices. Uniform triples are drawn and kept
/// when they share no pair with a kept edge, until density * n(n-1)/6 edges
/// are kept or 20 draws per target edge have been spent. density in [0, 1].
Hypergraph3 random_linear(std::size_t n, double density, std::uint64_t seed);

struct PlantedConfig {
    std::size_t n = 0;        // background vertices
    double density = 0.05;    // background density, as for random_linear
    std::uint32_t s = 3;      // seed pattern K_{s,t}^+
    std::uint32_t t = 4;
    std::uint64_t e = 12;     // tower target
    std::uint32_t copies = 4; // glue_m multiplicity of the tower top
    std::uint64_t seed = 0;
};

/// Random linear background plus one glue_m(F_ell, copies) structure from
/// the (s, t, e) tower on fresh labels, with all labels randomly permuted.
Hypergraph3 planted_host(const PlantedConfig& cfg);

}  // namespace bes
