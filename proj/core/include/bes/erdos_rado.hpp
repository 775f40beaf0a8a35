#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

struct SetSunflower {
    std::vector<Vertex> core;          // sorted
    std::vector<std::size_t> indices;  // ascending positions in the input list
};

/// Finds r distinct sets whose pairwise intersections all equal one core.
/// Each set must be sorted without repeats; repeated sets count once (the
/// first occurrence). Greedy disjoint extraction with recursion on the most
/// frequent element, then an exhaustive search over r-subsets when the family
/// has at most `exhaustive_limit` distinct sets. Throws InputError on unequal
/// cardinalities or r < 2.
std::optional<SetSunflower> erdos_rado(const std::vector<std::vector<Vertex>>& sets, std::size_t r,
                                       std::size_t exhaustive_limit = 24);

/// True iff the chosen sets are distinct and every pair meets exactly in core.
bool is_set_sunflower(const std::vector<std::vector<Vertex>>& sets, const SetSunflower& s);

}  // namespace bes
