#include "bes/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "bes/error.hpp"
#include "detail/parallel.hpp"

namespace bes {

const char* to_string(OracleStatus s) noexcept {
    switch (s) {
        case OracleStatus::found: return "found";
        case OracleStatus::exhausted: return "exhausted";
        case OracleStatus::timeout: return "timeout";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

struct Shared {
    const Hypergraph3& h;
    std::optional<Clock::time_point> deadline;
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> found_root{std::numeric_limits<std::size_t>::max()};
};

// Connected edge sets grown from one root edge; each set is produced once,
// by its smallest edge.
class Grower {
public:
    Grower(Shared& shared, const std::vector<std::uint32_t>& blocked)
        : s_(shared), blocked_(blocked), covered_(shared.h.vertex_count(), 0),
          mark_(shared.h.edge_count(), 0) {}

    template <class Visit>
    bool run(std::uint32_t root, std::size_t max_size, std::int64_t budget, std::size_t root_rank, Visit&& visit) {
        root_ = root;
        max_size_ = max_size;
        budget_ = budget;
        rank_ = root_rank;
        if (touches_blocked(root)) return false;
        std::vector<std::uint32_t> ext;
        exclusive(root, ext);
        add(root);
        bool stop = false;
        if (union_ <= budget_) {
            stop = visit(*this);
            if (!stop) stop = extend(ext, visit);
        }
        remove(root);
        return stop;
    }

    std::size_t size() const noexcept { return chosen_.size(); }
    std::int64_t union_size() const noexcept { return union_; }
    const std::vector<std::uint32_t>& chosen() const noexcept { return chosen_; }
    const std::vector<std::uint32_t>& covered() const noexcept { return covered_; }

private:
    bool touches_blocked(std::uint32_t id) const {
        const auto& e = s_.h.edge(id);
        return blocked_[e[0]] || blocked_[e[1]] || blocked_[e[2]];
    }

    void add(std::uint32_t id) {
        for (auto x : s_.h.edge(id)) union_ += covered_[x]++ == 0;
        chosen_.push_back(id);
    }

    void remove(std::uint32_t id) {
        for (auto x : s_.h.edge(id)) union_ -= --covered_[x] == 0;
        chosen_.pop_back();
    }

    // Edges through w above the root that avoid every covered vertex. Call
    // before w is added.
    void exclusive(std::uint32_t w, std::vector<std::uint32_t>& out) {
        const auto start = out.size();
        for (auto x : s_.h.edge(w)) {
            if (covered_[x]) continue;
            for (auto f : s_.h.incident_edges(x)) {
                if (f <= root_ || f == w || mark_[f]) continue;
                const auto& fe = s_.h.edge(f);
                if (covered_[fe[0]] || covered_[fe[1]] || covered_[fe[2]]) continue;
                if (touches_blocked(f)) continue;
                mark_[f] = 1;
                out.push_back(f);
            }
        }
        for (auto i = start; i < out.size(); ++i) mark_[out[i]] = 0;
    }

    bool should_abort() {
        if (s_.found_root.load(std::memory_order_relaxed) < rank_) return true;
        if ((++local_nodes_ & 1023U) == 0) {
            s_.nodes.fetch_add(1024, std::memory_order_relaxed);
            if (s_.deadline && Clock::now() > *s_.deadline) s_.timed_out = true;
        }
        return s_.timed_out.load(std::memory_order_relaxed);
    }

    template <class Visit>
    bool extend(const std::vector<std::uint32_t>& ext, Visit& visit) {
        if (chosen_.size() >= max_size_) return false;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            if (should_abort()) return true;
            const auto w = ext[i];
            std::int64_t added = 0;
            for (auto x : s_.h.edge(w)) added += covered_[x] == 0;
            if (union_ + added > budget_) continue;
            std::vector<std::uint32_t> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
            exclusive(w, next);
            add(w);
            bool stop = visit(*this);
            if (!stop) stop = extend(next, visit);
            remove(w);
            if (stop) return true;
        }
        return false;
    }

    Shared& s_;
    const std::vector<std::uint32_t>& blocked_;
    std::vector<std::uint32_t> covered_;
    std::vector<char> mark_;
    std::vector<std::uint32_t> chosen_;
    std::int64_t union_ = 0;
    std::uint32_t root_ = 0;
    std::size_t max_size_ = 0;
    std::int64_t budget_ = 0;
    std::size_t rank_ = 0;
    std::uint64_t local_nodes_ = 0;
};

VertexSubset vertices_of(const Hypergraph3& h, const std::vector<std::uint32_t>& ids) {
    VertexSubset w(h.vertex_count());
    for (auto id : ids) {
        for (auto x : h.edge(id)) w.insert(x);
    }
    return w;
}

// Vertex-disjoint connected pieces with increasing roots, `rem` edges in
// total on at most `budget` vertices.
class Assembler {
public:
    Assembler(Shared& shared, const std::vector<std::int64_t>& g) : s_(shared), g_(g) {
        blocked_.assign(shared.h.vertex_count(), 0);
    }

    std::optional<std::vector<std::uint32_t>> from_root(std::uint32_t root, std::size_t rem, std::int64_t budget,
                                                        std::size_t rank) {
        rank_ = rank;
        if (piece(root, rem, budget)) return edges_;
        return std::nullopt;
    }

private:
    bool pieces_after(std::uint32_t first_root, std::size_t rem, std::int64_t budget) {
        for (auto r = first_root; r < s_.h.edge_count(); ++r) {
            if (s_.timed_out || s_.found_root.load() < rank_) return false;
            if (piece(r, rem, budget)) return true;
        }
        return false;
    }

    bool piece(std::uint32_t root, std::size_t rem, std::int64_t budget) {
        Grower grower(s_, blocked_);
        bool found = false;
        grower.run(root, rem, budget, rank_, [&](Grower& gr) {
            const auto j = gr.size();
            const auto u = gr.union_size();
            if (j == rem) {
                edges_.insert(edges_.end(), gr.chosen().begin(), gr.chosen().end());
                found = true;
                return true;
            }
            if (u + g_[rem - j] > budget) return false;
            for (auto id : gr.chosen()) {
                for (auto x : s_.h.edge(id)) ++blocked_[x];
            }
            const bool ok = pieces_after(root + 1, rem - j, budget - u);
            for (auto id : gr.chosen()) {
                for (auto x : s_.h.edge(id)) --blocked_[x];
            }
            if (ok) {
                edges_.insert(edges_.end(), gr.chosen().begin(), gr.chosen().end());
                found = true;
            }
            return ok || s_.timed_out.load();
        });
        return found;
    }

    Shared& s_;
    const std::vector<std::int64_t>& g_;
    std::vector<std::uint32_t> blocked_;
    std::vector<std::uint32_t> edges_;
    std::size_t rank_ = 0;
};

ConfigurationCertificate make_certificate(const Hypergraph3& h, const std::vector<std::uint32_t>& ids,
                                          std::int64_t v, std::int64_t e) {
    ConfigurationCertificate cert;
    cert.host_hash = h.content_hash();
    cert.vertices = vertices_of(h, ids);
    cert.v = v;
    cert.e = e;
    return cert;
}

}  // namespace

OracleResult brute_force_configuration(const Hypergraph3& h, std::int64_t v, std::int64_t e,
                                       const OracleOptions& options) {
    if (e < 1) throw InputError("brute_force_configuration needs e >= 1");
    OracleResult out;
    const auto m = h.edge_count();
    if (static_cast<std::int64_t>(m) < e || v < 3) return out;
    const auto need = static_cast<std::size_t>(e);
    if (v >= 3 * e) {
        std::vector<std::uint32_t> ids(need);
        for (std::uint32_t i = 0; i < need; ++i) ids[i] = i;
        out.status = OracleStatus::found;
        out.certificate = make_certificate(h, ids, v, e);
        return out;
    }

    Shared shared{h, std::nullopt};
    if (options.time_budget.count() > 0) shared.deadline = Clock::now() + options.time_budget;
    const std::vector<std::uint32_t> no_block(h.vertex_count(), 0);

    // Single connected piece; also records the smallest union per piece size.
    std::vector<std::vector<std::int64_t>> best_union(m);
    std::vector<std::optional<std::vector<std::uint32_t>>> hit(m);
    detail::parallel_for(m, options.threads, [&](std::size_t root) {
        if (shared.found_root.load() < root || shared.timed_out) return;
        auto& best = best_union[root];
        best.assign(need + 1, kUnreachable);
        Grower grower(shared, no_block);
        grower.run(static_cast<std::uint32_t>(root), need, v, root, [&](Grower& gr) {
            best[gr.size()] = std::min(best[gr.size()], gr.union_size());
            if (gr.size() == need) {
                hit[root] = gr.chosen();
                auto cur = shared.found_root.load();
                while (root < cur && !shared.found_root.compare_exchange_weak(cur, root)) {
                }
                return true;
            }
            return false;
        });
    });
    auto finish_nodes = [&] { out.nodes = shared.nodes.load(); };
    for (std::size_t root = 0; root < m; ++root) {
        if (hit[root]) {
            out.status = OracleStatus::found;
            out.certificate = make_certificate(h, *hit[root], v, e);
            finish_nodes();
            return out;
        }
    }
    if (shared.timed_out) {
        out.status = OracleStatus::timeout;
        finish_nodes();
        return out;
    }

    std::vector<std::int64_t> f(need + 1, kUnreachable);
    for (const auto& best : best_union) {
        for (std::size_t j = 1; j < best.size(); ++j) f[j] = std::min(f[j], best[j]);
    }
    std::vector<std::int64_t> g(need + 1, kUnreachable);
    g[0] = 0;
    for (std::size_t k = 1; k <= need; ++k) {
        for (std::size_t j = 1; j <= k; ++j) {
            if (f[j] < kUnreachable && g[k - j] < kUnreachable) g[k] = std::min(g[k], f[j] + g[k - j]);
        }
    }
    if (g[need] > v) {
        finish_nodes();
        return out;
    }

    std::vector<std::optional<std::vector<std::uint32_t>>> multi(m);
    detail::parallel_for(m, options.threads, [&](std::size_t root) {
        if (shared.found_root.load() < root || shared.timed_out) return;
        Assembler assembler(shared, g);
        if (auto ids = assembler.from_root(static_cast<std::uint32_t>(root), need, v, root)) {
            multi[root] = std::move(ids);
            auto cur = shared.found_root.load();
            while (root < cur && !shared.found_root.compare_exchange_weak(cur, root)) {
            }
        }
    });
    for (std::size_t root = 0; root < m; ++root) {
        if (multi[root]) {
            out.status = OracleStatus::found;
            out.certificate = make_certificate(h, *multi[root], v, e);
            finish_nodes();
            return out;
        }
    }
    if (shared.timed_out) out.status = OracleStatus::timeout;
    finish_nodes();
    return out;
}

}  // namespace bes
