#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bes/constructors.hpp"
#include "bes/sunflower.hpp"

namespace bes {

/// Informational record of the density exponent; no branch reads it.
struct EpsilonNote {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
};

struct SearchConfig {
    std::size_t r = 2;
    std::uint32_t m = 2;
    /// 0 selects 2 r v(F).
    std::size_t degree_threshold = 0;
    std::size_t copy_limit = 4096;
    std::size_t trial_count = 16;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    EpsilonNote epsilon_note;

    /// Throws InputError unless r, m >= 2 and copy_limit, trial_count >= 1.
    void validate() const;
};

struct GluedCopies {
    GluedHypergraph glued;
    std::vector<Embedding> embeddings;
};

struct IterationExhausted {
    /// Bucket size -> number of A-image buckets of that size among the
    /// independent copies.
    std::map<std::size_t, std::size_t> bucket_histogram;
    std::size_t max_degree = 0;
    std::string reason;
};

using IterationResult = std::variant<SunflowerCertificate, GluedCopies, IterationExhausted>;

/// Copies meet on more than A when they share the A-image and agree on some
/// other pattern vertex. A copy with at least degree_threshold such
/// neighbours seeds an Erdős–Rado search; otherwise m-tuples of pairwise
/// non-adjacent copies with a common A-image are glued. The sunflower search
/// is retried with threshold r - 1 before reporting exhaustion. Every
/// returned object is verified against the host. Throws InputError when the
/// pattern has no witness or a copy is not an embedding.
IterationResult iteration_step(const Hypergraph3& host, const std::vector<Embedding>& copies,
                               const GluedHypergraph& pattern, const SearchConfig& cfg);

/// |image vertices| - |image edges| of one embedding.
std::int64_t image_deficiency(const Hypergraph3& pattern, const Embedding& phi);

}  // namespace bes
