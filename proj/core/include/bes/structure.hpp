#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bes/hypergraph.hpp"

namespace bes {

/// Certificate for the four eligibility conditions: two disjoint good sets
/// a and b of size k-1, two spare vertices u and v outside them, and the
/// claimed deficiency k of the owning hypergraph.
struct EligibilityWitness {
    VertexSubset a;
    VertexSubset b;
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t k = 0;

    friend bool operator==(const EligibilityWitness&, const EligibilityWitness&) = default;
};

struct GoodSetVerdict {
    bool is_good = true;
    /// Present iff !is_good: a strict superset of A with deficiency <= |A|.
    std::optional<VertexSubset> violating_superset;
    std::optional<std::int64_t> violating_deficiency;
};

enum class Verdict { holds, violated, inconclusive };

const char* to_string(Verdict v) noexcept;

enum class SearchMethod {
    automatic,     // exhaustive when small, otherwise min_cut
    exhaustive,    // every vertex subset (Gray-code order)
    edge_closure,  // A plus the vertices of every edge subset, plus single vertices
    connected,     // connected edge subsets only (condition (iv) search)
    min_cut,       // maximum-weight closure via s-t minimum cut; exact at any size
};

struct AnalysisOptions {
    SearchMethod method = SearchMethod::automatic;
    unsigned threads = 1;
    /// Largest number of free vertices the exhaustive route accepts.
    std::size_t exhaustive_limit = 34;
    /// Free-vertex count up to which `automatic` picks the exhaustive route.
    std::size_t automatic_exhaustive_limit = 22;
    /// Edge cap for edge_closure and connected searches.
    std::size_t edge_search_limit = 40;
    /// Node budget for the connected search; exceeding it is inconclusive.
    std::uint64_t node_budget = 50'000'000;
};

/// Decides whether every U with A ⊊ U has Δ(U) >= |A| + 1.
///
/// Throws PreconditionError when A is not independent and InputError when A
/// is not a subset of V(F). Methods that cannot run at this size (exhaustive
/// above exhaustive_limit free vertices, edge_closure above edge_search_limit
/// edges) throw PreconditionError; `automatic` never does.
GoodSetVerdict is_good_set(const Hypergraph3& f, const VertexSubset& a,
                           const AnalysisOptions& options = {});

/// Checks that A' ⊆ A is still good. Throws InputError if A' ⊄ A.
bool subset_closure_check(const Hypergraph3& f, const VertexSubset& a, const VertexSubset& a_sub,
                          const AnalysisOptions& options = {});

struct ConditionIvReport {
    Verdict verdict = Verdict::holds;
    /// Present iff violated: |U| >= 2 and Δ(U) <= 1.
    std::optional<VertexSubset> witness;
    std::optional<std::int64_t> witness_deficiency;
};

/// Searches for U with |U| >= 2 and Δ(U) <= 1.
ConditionIvReport check_condition_iv(const Hypergraph3& f, const AnalysisOptions& options = {});

struct DegreeConditionReport {
    bool holds = true;
    std::size_t high_degree_vertices = 0;  // vertices of degree > 1
    /// 4 * (e(F)/4 - k), kept integral.
    std::int64_t bound_times_four = 0;
    bool high_degree_count_ok = true;
    std::optional<Edge> edge_with_two_degree_one;
    std::optional<Vertex> isolated_vertex;
};

DegreeConditionReport check_degree_conditions(const Hypergraph3& f, std::int64_t k);

struct EligibilityReport {
    // (i)
    bool condition_i = false;
    bool witness_sets_well_formed = false;  // sizes k-1, disjoint
    GoodSetVerdict a_verdict;
    GoodSetVerdict b_verdict;
    // (ii)
    bool condition_ii = false;
    // (iii)
    DegreeConditionReport condition_iii;
    // (iv)
    ConditionIvReport condition_iv;

    std::string detail;

    /// Tri-state because condition (iv) may be inconclusive.
    Verdict eligible() const noexcept;
};

/// Evaluates each condition independently. Throws InputError on labels out of
/// range or when w.k differs from deficiency(F).
EligibilityReport is_eligible(const Hypergraph3& f, const EligibilityWitness& w,
                              const AnalysisOptions& options = {});

}  // namespace bes
