#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

/// Integers in [1, N] with no three-term arithmetic progression.
struct AP3FreeSet {
    std::int64_t n = 0;
    std::vector<std::int64_t> members;  // sorted
    /// Parameters of the winning construction; dimension 0 means the base-3
    /// set of numbers whose digits are all 0 or 1.
    std::int64_t base = 3;
    std::int64_t dimension = 0;
};

/// True iff the sorted list has no x < y < z with x + z = 2y.
bool is_ap3_free(std::span<const std::int64_t> sorted);

/// Largest of the sphere constructions (digits at most (d - 1) / 2 in base d,
/// one squared norm) over a small grid of bases and dimensions, and the
/// base-3 digit set. Shifted by one into [1, N]. Verified before returning.
/// Throws InputError when N < 1.
AP3FreeSet behrend_set(std::int64_t n);

/// Vertex classes X = [1, N], Y = [1, 2N], Z = [1, 3N] labelled x - 1,
/// N + y - 1 and 3N + z - 1; one edge (x, x + b, x + 2b) per x in [1, N] and
/// b in B. Throws InputError when B leaves [1, N] and PreconditionError when
/// B has a progression, unless `check_progressions` is false.
Hypergraph3 rs_hypergraph(std::int64_t n, std::span<const std::int64_t> b, bool check_progressions = true);

inline Hypergraph3 rs_hypergraph(const AP3FreeSet& b) { return rs_hypergraph(b.n, b.members); }

}  // namespace bes
