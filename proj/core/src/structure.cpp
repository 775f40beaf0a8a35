#include "bes/structure.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "bes/error.hpp"
#include "detail/max_flow.hpp"
#include "detail/parallel.hpp"

namespace bes {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// A set found by a search, as a bitmask over the search's local bit positions.
struct MaskHit {
    std::uint64_t chunk = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t mask = 0;
};

// Walks every subset of `bits` local positions in Gray-code order and returns
// the first mask for which accept(size, edges) holds. Each edge is a mask of
// the local bits it needs; the count of edges inside the current mask is kept
// incrementally. The top chunk bits are fixed per work item so the answer does
// not depend on the thread count.
template <typename Accept>
std::optional<std::uint64_t> gray_search(std::size_t bits, const std::vector<std::uint64_t>& edge_masks,
                                         unsigned threads, Accept accept) {
    std::vector<std::vector<std::uint64_t>> by_bit(bits);
    for (auto m : edge_masks) {
        for (auto rest = m; rest != 0; rest &= rest - 1) {
            by_bit[static_cast<std::size_t>(std::countr_zero(rest))].push_back(m);
        }
    }
    const std::size_t chunk_bits = std::min<std::size_t>(bits, 6);
    const std::size_t low_bits = bits - chunk_bits;
    const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;

    std::mutex best_mutex;
    MaskHit best;
    std::atomic<std::uint64_t> best_chunk{std::numeric_limits<std::uint64_t>::max()};

    detail::parallel_for(chunks, threads, [&](std::size_t c) {
        if (c > best_chunk.load()) return;
        std::uint64_t cur = static_cast<std::uint64_t>(c) << low_bits;
        std::int64_t inside = 0;
        for (auto m : edge_masks) {
            if ((m & cur) == m) ++inside;
        }
        auto size = static_cast<std::int64_t>(std::popcount(cur));
        auto record = [&] {
            std::lock_guard lock(best_mutex);
            if (c < best.chunk) {
                best.chunk = c;
                best.mask = cur;
                best_chunk.store(c);
            }
        };
        if (accept(size, inside, cur)) {
            record();
            return;
        }
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t i = 1; i < steps; ++i) {
            if ((i & 0xfffff) == 0 && c > best_chunk.load()) return;
            const auto bit = static_cast<std::size_t>(std::countr_zero(i));
            const std::uint64_t flag = std::uint64_t{1} << bit;
            const auto& incident = by_bit[bit];
            if ((cur & flag) == 0) {
                cur |= flag;
                ++size;
                for (auto m : incident) inside += (m & cur) == m;
            } else {
                for (auto m : incident) inside -= (m & cur) == m;
                cur &= ~flag;
                --size;
            }
            if (accept(size, inside, cur)) {
                record();
                return;
            }
        }
    });
    if (best.chunk == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return best.mask;
}

void require_independent(const Hypergraph3& f, const VertexSubset& a) {
    require_subset_of(f, a, "is_good_set");
    if (!is_independent(f, a)) throw PreconditionError("is_good_set: A is not independent");
}

std::vector<Vertex> complement_members(const Hypergraph3& f, const VertexSubset& a) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
        if (!a.contains(x)) out.push_back(x);
    }
    return out;
}

GoodSetVerdict violation(const Hypergraph3& f, VertexSubset u) {
    GoodSetVerdict verdict;
    verdict.is_good = false;
    verdict.violating_deficiency = induced_deficiency(f, u);
    verdict.violating_superset = std::move(u);
    return verdict;
}

GoodSetVerdict good_exhaustive(const Hypergraph3& f, const VertexSubset& a, unsigned threads) {
    const auto free = complement_members(f, a);
    std::vector<int> position(f.vertex_count(), -1);
    for (std::size_t i = 0; i < free.size(); ++i) position[free[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> masks;
    masks.reserve(f.edge_count());
    for (const auto& e : f.edges()) {
        std::uint64_t m = 0;
        for (auto x : e) {
            if (position[x] >= 0) m |= std::uint64_t{1} << position[x];
        }
        masks.push_back(m);
    }
    auto hit = gray_search(free.size(), masks, threads,
                           [](std::int64_t size, std::int64_t inside, std::uint64_t) {
                               return size > 0 && inside >= size;
                           });
    if (!hit) return {};
    VertexSubset u = a;
    for (std::size_t i = 0; i < free.size(); ++i) {
        if ((*hit >> i) & 1U) u.insert(free[i]);
    }
    return violation(f, std::move(u));
}

GoodSetVerdict good_edge_closure(const Hypergraph3& f, const VertexSubset& a) {
    // Single-vertex augmentations first.
    for (Vertex w = 0; w < f.vertex_count(); ++w) {
        if (a.contains(w)) continue;
        auto u = a;
        u.insert(w);
        if (induced_deficiency(f, u) <= static_cast<std::int64_t>(a.size())) return violation(f, u);
    }
    // Edge subsets S with |V(S) \ A| <= |S| give e(A ∪ V(S)) >= |S| >= |V(S) \ A|.
    const auto m = f.edge_count();
    std::vector<int> cover(f.vertex_count(), 0);
    std::int64_t outside = 0;
    std::uint64_t chosen = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        const auto flag = std::uint64_t{1} << bit;
        const int step = (chosen & flag) ? -1 : 1;
        chosen ^= flag;
        for (auto x : f.edge(bit)) {
            if (a.contains(x)) continue;
            if (step > 0 && cover[x]++ == 0) ++outside;
            if (step < 0 && --cover[x] == 0) --outside;
        }
        if (outside <= std::popcount(chosen)) {
            auto u = a;
            for (std::size_t j = 0; j < m; ++j) {
                if ((chosen >> j) & 1U) {
                    for (auto x : f.edge(j)) u.insert(x);
                }
            }
            return violation(f, std::move(u));
        }
    }
    return {};
}

// Maximum of e(S) - |S \ A| over vertex sets S ⊇ A ∪ forced_vertex and
// containing forced_edge, solved as a closure problem. Returns the value and
// the maximising set.
struct ClosureResult {
    std::int64_t value;
    VertexSubset set;
};

ClosureResult max_closure(const Hypergraph3& f, const VertexSubset& a, std::optional<Vertex> forced_vertex,
                          std::optional<std::size_t> forced_edge) {
    const auto n = f.vertex_count();
    const auto m = f.edge_count();
    const std::size_t source = m + n;
    const std::size_t sink = source + 1;
    detail::MaxFlow flow(sink + 1);
    for (std::size_t i = 0; i < m; ++i) {
        flow.add_arc(source, i, forced_edge == i ? detail::MaxFlow::infinity : 1);
        for (auto x : f.edge(i)) {
            if (!a.contains(x)) flow.add_arc(i, m + x, detail::MaxFlow::infinity);
        }
    }
    for (Vertex x = 0; x < n; ++x) {
        if (a.contains(x)) continue;
        flow.add_arc(m + x, sink, 1);
        if (forced_vertex == x) flow.add_arc(source, m + x, detail::MaxFlow::infinity);
    }
    const auto cut = flow.run(source, sink);
    const auto side = flow.source_side(source);
    VertexSubset set = a;
    for (Vertex x = 0; x < n; ++x) {
        if (side[m + x]) set.insert(x);
    }
    return {static_cast<std::int64_t>(m) - cut, std::move(set)};
}

GoodSetVerdict good_min_cut(const Hypergraph3& f, const VertexSubset& a, unsigned threads) {
    const auto free = complement_members(f, a);
    std::atomic<std::size_t> first{free.size()};
    std::vector<std::optional<VertexSubset>> found(free.size());
    detail::parallel_for(free.size(), threads, [&](std::size_t i) {
        if (i > first.load()) return;
        auto result = max_closure(f, a, free[i], std::nullopt);
        // e(S) >= |S \ A| means Δ(S) <= |A|.
        if (result.value >= 0) {
            found[i] = std::move(result.set);
            auto cur = first.load();
            while (i < cur && !first.compare_exchange_weak(cur, i)) {
            }
        }
    });
    const auto i = first.load();
    if (i == free.size()) return {};
    return violation(f, std::move(*found[i]));
}

}  // namespace

GoodSetVerdict is_good_set(const Hypergraph3& f, const VertexSubset& a, const AnalysisOptions& options) {
    require_independent(f, a);
    const auto free_count = f.vertex_count() - a.size();
    switch (options.method) {
        case SearchMethod::automatic:
            if (free_count <= options.automatic_exhaustive_limit) {
                return good_exhaustive(f, a, options.threads);
            }
            return good_min_cut(f, a, options.threads);
        case SearchMethod::exhaustive:
            if (free_count > options.exhaustive_limit || free_count > 63) {
                throw PreconditionError("is_good_set: " + std::to_string(free_count) +
                                        " free vertices exceed the exhaustive limit");
            }
            return good_exhaustive(f, a, options.threads);
        case SearchMethod::edge_closure:
            if (f.edge_count() > options.edge_search_limit || f.edge_count() > 63) {
                throw PreconditionError("is_good_set: " + std::to_string(f.edge_count()) +
                                        " edges exceed the edge search limit");
            }
            return good_edge_closure(f, a);
        case SearchMethod::connected:
            throw PreconditionError("is_good_set: the connected search applies to condition (iv) only");
        case SearchMethod::min_cut:
            return good_min_cut(f, a, options.threads);
    }
    throw InternalError("is_good_set: unknown search method");
}

bool subset_closure_check(const Hypergraph3& f, const VertexSubset& a, const VertexSubset& a_sub,
                          const AnalysisOptions& options) {
    require_subset_of(f, a, "subset_closure_check");
    require_subset_of(f, a_sub, "subset_closure_check");
    if (!a_sub.is_subset_of(a)) throw InputError("subset_closure_check: A' is not a subset of A");
    return is_good_set(f, a_sub, options).is_good;
}

namespace {

ConditionIvReport iv_violation(const Hypergraph3& f, VertexSubset u) {
    ConditionIvReport report;
    report.verdict = Verdict::violated;
    report.witness_deficiency = induced_deficiency(f, u);
    report.witness = std::move(u);
    return report;
}

ConditionIvReport iv_exhaustive(const Hypergraph3& f, unsigned threads) {
    std::vector<std::uint64_t> masks;
    for (const auto& e : f.edges()) {
        masks.push_back((std::uint64_t{1} << e[0]) | (std::uint64_t{1} << e[1]) | (std::uint64_t{1} << e[2]));
    }
    auto hit = gray_search(f.vertex_count(), masks, threads,
                           [](std::int64_t size, std::int64_t inside, std::uint64_t) {
                               return size >= 2 && size - inside <= 1;
                           });
    if (!hit) return {};
    VertexSubset u(f.vertex_count());
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
        if ((*hit >> x) & 1U) u.insert(x);
    }
    return iv_violation(f, std::move(u));
}

ConditionIvReport iv_min_cut(const Hypergraph3& f, unsigned threads) {
    const VertexSubset none(f.vertex_count());
    const auto m = f.edge_count();
    std::atomic<std::size_t> first{m};
    std::vector<std::optional<VertexSubset>> found(m);
    detail::parallel_for(m, threads, [&](std::size_t i) {
        if (i > first.load()) return;
        auto result = max_closure(f, none, std::nullopt, i);
        if (result.value >= -1) {
            found[i] = std::move(result.set);
            auto cur = first.load();
            while (i < cur && !first.compare_exchange_weak(cur, i)) {
            }
        }
    });
    const auto i = first.load();
    if (i == m) return {};
    return iv_violation(f, std::move(*found[i]));
}

// Enumerates connected edge subsets (each exactly once, rooted at its
// smallest edge) and stops at the first whose vertex union has at most
// |S| + 1 vertices.
class ConnectedSearch {
public:
    ConnectedSearch(const Hypergraph3& f, std::uint64_t budget) : f_(f), budget_(budget) {
        const auto m = f.edge_count();
        adjacent_.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (auto x : f.edge(i)) {
                for (auto j : f.incident_edges(x)) {
                    if (j != i) adjacent_[i] |= std::uint64_t{1} << j;
                }
            }
        }
        cover_.assign(f.vertex_count(), 0);
    }

    ConditionIvReport run() {
        for (std::size_t root = 0; root < f_.edge_count(); ++root) {
            const std::uint64_t above = ~((std::uint64_t{2} << root) - 1);
            add(root);
            const bool hit = extend(std::uint64_t{1} << root, adjacent_[root] & above, adjacent_[root], above);
            if (hit) return iv_violation(f_, witness_);
            remove(root);
            if (exhausted_) {
                ConditionIvReport report;
                report.verdict = Verdict::inconclusive;
                return report;
            }
        }
        return {};
    }

private:
    void add(std::size_t e) {
        for (auto x : f_.edge(e)) {
            if (cover_[x]++ == 0) ++vertices_;
        }
    }
    void remove(std::size_t e) {
        for (auto x : f_.edge(e)) {
            if (--cover_[x] == 0) --vertices_;
        }
    }

    bool extend(std::uint64_t chosen, std::uint64_t extension, std::uint64_t seen, std::uint64_t above) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (vertices_ <= std::popcount(chosen) + 1) {
            witness_ = VertexSubset(f_.vertex_count());
            for (Vertex x = 0; x < f_.vertex_count(); ++x) {
                if (cover_[x] > 0) witness_.insert(x);
            }
            return true;
        }
        while (extension != 0) {
            const auto w = static_cast<std::size_t>(std::countr_zero(extension));
            extension &= extension - 1;
            const std::uint64_t fresh = adjacent_[w] & above & ~seen & ~chosen;
            add(w);
            const bool hit = extend(chosen | (std::uint64_t{1} << w), extension | fresh, seen | fresh, above);
            remove(w);
            if (hit) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    const Hypergraph3& f_;
    std::uint64_t budget_;
    std::vector<std::uint64_t> adjacent_;
    std::vector<int> cover_;
    int vertices_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    VertexSubset witness_;
};

}  // namespace

ConditionIvReport check_condition_iv(const Hypergraph3& f, const AnalysisOptions& options) {
    switch (options.method) {
        case SearchMethod::automatic:
            if (f.vertex_count() <= options.automatic_exhaustive_limit) return iv_exhaustive(f, options.threads);
            return iv_min_cut(f, options.threads);
        case SearchMethod::exhaustive:
            if (f.vertex_count() > options.exhaustive_limit || f.vertex_count() > 63) {
                throw PreconditionError("check_condition_iv: " + std::to_string(f.vertex_count()) +
                                        " vertices exceed the exhaustive limit");
            }
            return iv_exhaustive(f, options.threads);
        case SearchMethod::edge_closure:
        case SearchMethod::connected:
            if (f.edge_count() > options.edge_search_limit || f.edge_count() > 64) {
                ConditionIvReport report;
                report.verdict = Verdict::inconclusive;
                return report;
            }
            return ConnectedSearch(f, options.node_budget).run();
        case SearchMethod::min_cut:
            return iv_min_cut(f, options.threads);
    }
    throw InternalError("check_condition_iv: unknown search method");
}

DegreeConditionReport check_degree_conditions(const Hypergraph3& f, std::int64_t k) {
    DegreeConditionReport report;
    const auto profile = degree_profile(f);
    report.high_degree_vertices = profile.count_with_degree_above(1);
    report.bound_times_four = static_cast<std::int64_t>(f.edge_count()) - 4 * k;
    report.high_degree_count_ok =
        4 * static_cast<std::int64_t>(report.high_degree_vertices) <= report.bound_times_four;
    for (const auto& e : f.edges()) {
        int ones = 0;
        for (auto x : e) ones += profile.degree[x] == 1;
        if (ones > 1) {
            report.edge_with_two_degree_one = e;
            break;
        }
    }
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
        if (profile.degree[x] == 0) {
            report.isolated_vertex = x;
            break;
        }
    }
    report.holds = report.high_degree_count_ok && !report.edge_with_two_degree_one && !report.isolated_vertex;
    return report;
}

Verdict EligibilityReport::eligible() const noexcept {
    if (!condition_i || !condition_ii || !condition_iii.holds) return Verdict::violated;
    return condition_iv.verdict;
}

EligibilityReport is_eligible(const Hypergraph3& f, const EligibilityWitness& w, const AnalysisOptions& options) {
    require_subset_of(f, w.a, "is_eligible");
    require_subset_of(f, w.b, "is_eligible");
    if (w.u >= f.vertex_count() || w.v >= f.vertex_count()) {
        throw InputError("is_eligible: spare vertex out of range");
    }
    if (w.k != deficiency(f)) {
        throw InputError("is_eligible: witness k=" + std::to_string(w.k) + " but the deficiency is " +
                         std::to_string(deficiency(f)));
    }
    EligibilityReport report;
    const auto want = static_cast<std::size_t>(std::max<std::int64_t>(w.k - 1, 0));
    report.witness_sets_well_formed =
        w.k >= 1 && w.a.size() == want && w.b.size() == want && !w.a.intersects(w.b);

    auto judge = [&](const VertexSubset& s, const char* name) {
        if (!is_independent(f, s)) {
            report.detail += std::string(name) + " is not independent; ";
            GoodSetVerdict v;
            v.is_good = false;
            return v;
        }
        auto v = is_good_set(f, s, options);
        if (!v.is_good) report.detail += std::string(name) + " is not good; ";
        return v;
    };
    report.a_verdict = judge(w.a, "A");
    report.b_verdict = judge(w.b, "B");
    report.condition_i = report.witness_sets_well_formed && report.a_verdict.is_good && report.b_verdict.is_good;
    if (!report.witness_sets_well_formed) report.detail += "A and B are not disjoint sets of size k-1; ";

    report.condition_ii = w.u != w.v && !w.a.contains(w.u) && !w.a.contains(w.v) && !w.b.contains(w.u) &&
                          !w.b.contains(w.v);
    if (!report.condition_ii) report.detail += "u and v are not distinct spare vertices; ";

    report.condition_iii = check_degree_conditions(f, w.k);
    if (!report.condition_iii.holds) report.detail += "degree conditions fail; ";

    report.condition_iv = check_condition_iv(f, options);
    if (report.condition_iv.verdict == Verdict::violated) report.detail += "a set of size >= 2 has deficiency <= 1; ";
    if (report.condition_iv.verdict == Verdict::inconclusive) report.detail += "condition (iv) is inconclusive; ";
    return report;
}

}  // namespace bes
