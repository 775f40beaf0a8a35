#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bes/hypergraph.hpp"
#include "bes/sunflower.hpp"
#include "bes/trace.hpp"

namespace bes {

struct DriverConfig {
    /// Seed pattern K_{s,t}^+ for the tower path. Setting either forces the
    /// tower path even when e is below direct_threshold.
    std::optional<std::uint32_t> seed_s;
    std::optional<std::uint32_t> seed_t;
    /// Sunflower size; e when absent.
    std::optional<std::size_t> r;
    /// Skip the high-degree count when cleaning (needed for small seeds).
    bool relaxed_degree_conditions = false;
    std::int64_t direct_threshold = 512;
    std::size_t embedding_limit = 50000;
    /// Cap per image of the first placed pattern vertex.
    std::size_t per_root_limit = 256;
    std::size_t copy_limit = 4096;
    std::size_t trial_count = 16;
    /// Partition schemes tried per tower level; the glued copies of all of
    /// them seed the next level.
    std::size_t scheme_attempts = 8;
    std::size_t tripartition_trials = 64;
    std::size_t rainbow_limit = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct DriverResult {
    std::optional<ConfigurationCertificate> certificate;
    /// heavy-pair, direct, sunflower or glue when found; the exhausted stage
    /// otherwise.
    std::string route;
    RunTrace trace;

    bool found() const noexcept { return certificate.has_value(); }
};

/// floor(log2 e) + 38.
std::int64_t bes_deficiency_bound(std::int64_t e);

/// Looks for at most e + floor(log2 e) + 38 vertices spanning at least e
/// edges: heavy pair, then a direct K_{c,c}^+ copy (c = ceil(sqrt e)) when
/// e < direct_threshold, otherwise a tower of glued copies seeded by
/// K_{s,t}^+ (16 x 16 by default) that ends in a cleaned sunflower or a
/// fourfold glue trimmed to e edges. Exhaustion is a result. Throws
/// InputError when e < 3 or the seed cannot meet the deficiency bound, and
/// InternalError when a certificate fails its recount.
DriverResult find_bes(const Hypergraph3& h, std::int64_t e, const DriverConfig& cfg = {});

}  // namespace bes
