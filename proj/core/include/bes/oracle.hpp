#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "bes/hypergraph.hpp"
#include "bes/sunflower.hpp"

namespace bes {

enum class OracleStatus { found, exhausted, timeout };

const char* to_string(OracleStatus s) noexcept;

struct OracleResult {
    OracleStatus status = OracleStatus::exhausted;
    /// Set iff status == found: exactly e edges of the host inside W.
    std::optional<ConfigurationCertificate> certificate;
    std::uint64_t nodes = 0;
};

struct OracleOptions {
    /// Zero means no budget.
    std::chrono::milliseconds time_budget{0};
    unsigned threads = 1;
};

/// Decides whether some e edges of H span at most v vertices. Connected edge
/// sets are enumerated once each from their smallest edge, pruned when the
/// vertex union exceeds v; solutions with several components are assembled
/// from vertex-disjoint connected pieces with increasing smallest edges,
/// guided by the smallest union each piece size can reach. The reported
/// certificate is the one from the smallest root edge, independent of
/// `threads`. Throws InputError when e < 1.
OracleResult brute_force_configuration(const Hypergraph3& h, std::int64_t v, std::int64_t e,
                                       const OracleOptions& options = {});

}  // namespace bes
