#include "bes/embedding.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <string>

#include "bes/error.hpp"
#include "bes/rng.hpp"
#include "detail/parallel.hpp"

namespace bes {

PartitionScheme random_scheme(std::size_t host_vertices, std::uint32_t classes, std::uint64_t seed) {
    if (classes == 0) throw InputError("a partition scheme needs at least one class");
    PartitionScheme scheme;
    scheme.classes = classes;
    scheme.seed = seed;
    scheme.klass.resize(host_vertices);
    Rng rng(seed);
    for (auto& c : scheme.klass) c = static_cast<std::uint32_t>(rng.below(classes));
    return scheme;
}

bool is_embedding(const Hypergraph3& host, const Hypergraph3& pattern, const Embedding& phi) {
    if (phi.size() != pattern.vertex_count()) return false;
    auto sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!sorted.empty() && sorted.back() >= host.vertex_count()) return false;
    for (const auto& e : pattern.edges()) {
        if (!host.has_edge(phi[e[0]], phi[e[1]], phi[e[2]])) return false;
    }
    return true;
}

bool is_proper(const Embedding& phi, const PartitionScheme& scheme) {
    for (std::size_t x = 0; x < phi.size(); ++x) {
        if (phi[x] >= scheme.klass.size() || scheme.klass[phi[x]] != x) return false;
    }
    return true;
}

VertexSubset intersection_pattern(const Embedding& phi1, const Embedding& phi2) {
    if (phi1.size() != phi2.size()) throw InputError("intersection_pattern: embeddings of different patterns");
    VertexSubset u(phi1.size());
    for (std::size_t x = 0; x < phi1.size(); ++x) {
        if (phi1[x] == phi2[x]) u.insert(static_cast<Vertex>(x));
    }
    return u;
}

std::vector<Vertex> image_set(const Embedding& phi) {
    auto out = phi;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Step {
    Vertex vertex = 0;
    std::size_t degree = 0;
    std::optional<std::pair<std::size_t, std::size_t>> pair_anchor;  // depths
    std::optional<std::size_t> anchor;                               // depth
    std::vector<std::pair<std::size_t, std::size_t>> checks;        // depths of the other two
};

class EmbeddingSearch {
public:
    EmbeddingSearch(const Hypergraph3& host, const Hypergraph3& pattern, const PartitionScheme* scheme)
        : host_(host), pattern_(pattern), scheme_(scheme) {
        if (scheme_) {
            if (scheme_->klass.size() != host.vertex_count() || scheme_->classes != pattern.vertex_count()) {
                throw InputError("partition scheme does not match the host and pattern");
            }
            members_.resize(scheme_->classes);
            for (Vertex x = 0; x < host.vertex_count(); ++x) members_[scheme_->klass[x]].push_back(x);
        } else {
            all_.resize(host.vertex_count());
            for (Vertex x = 0; x < all_.size(); ++x) all_[x] = x;
        }
        plan();
    }

    std::size_t depth_count() const { return steps_.size(); }

    std::vector<Vertex> first_candidates() const {
        if (steps_.empty()) return {};
        std::vector<Vertex> out;
        const auto& step = steps_.front();
        for (auto c : pool(step.vertex)) {
            if (host_.degree(c) >= step.degree && (!scheme_ || scheme_->klass[c] == step.vertex)) out.push_back(c);
        }
        return out;
    }

    /// Embeddings whose first placed vertex maps to `root`, at most `cap`.
    std::vector<Embedding> run_from(Vertex root, std::size_t cap) const {
        Worker w{std::vector<Vertex>(steps_.size()), std::vector<char>(host_.vertex_count(), 0), {}, cap};
        w.chosen[0] = root;
        w.used[root] = 1;
        descend(w, 1);
        return std::move(w.found);
    }

private:
    struct Worker {
        std::vector<Vertex> chosen;  // by depth
        std::vector<char> used;
        std::vector<Embedding> found;
        std::size_t cap;
    };

    std::span<const Vertex> pool(Vertex x) const {
        if (scheme_) return members_[x];
        return all_;
    }

    void plan() {
        const auto n = pattern_.vertex_count();
        std::vector<int> depth(n, -1);
        for (std::size_t d = 0; d < n; ++d) {
            // Prefer vertices closing edges, then touching placed vertices,
            // then small classes, then high degree, then small labels.
            Vertex best = 0;
            std::tuple<std::size_t, std::size_t, long long, std::size_t> best_key{0, 0, 0, 0};
            bool have = false;
            for (Vertex x = 0; x < n; ++x) {
                if (depth[x] >= 0) continue;
                std::size_t closes = 0;
                std::size_t touches = 0;
                for (auto id : pattern_.incident_edges(x)) {
                    int placed = 0;
                    for (auto y : pattern_.edge(id)) placed += (y != x && depth[y] >= 0);
                    closes += placed == 2;
                    touches += placed >= 1;
                }
                const long long small = scheme_ ? -static_cast<long long>(members_[x].size()) : 0;
                std::tuple<std::size_t, std::size_t, long long, std::size_t> key{closes, touches, small,
                                                                                 pattern_.degree(x)};
                if (!have || key > best_key) {
                    best = x;
                    best_key = key;
                    have = true;
                }
            }
            depth[best] = static_cast<int>(d);
            Step step;
            step.vertex = best;
            step.degree = pattern_.degree(best);
            for (auto id : pattern_.incident_edges(best)) {
                std::vector<std::size_t> others;
                for (auto y : pattern_.edge(id)) {
                    if (y != best && depth[y] >= 0 && static_cast<std::size_t>(depth[y]) < d) {
                        others.push_back(static_cast<std::size_t>(depth[y]));
                    }
                }
                if (others.size() == 2) {
                    step.checks.emplace_back(others[0], others[1]);
                    if (!step.pair_anchor) step.pair_anchor = std::make_pair(others[0], others[1]);
                }
                if (!others.empty() && !step.anchor) step.anchor = others.front();
            }
            steps_.push_back(std::move(step));
        }
    }

    void descend(Worker& w, std::size_t d) const {
        if (w.found.size() >= w.cap) return;
        if (d == steps_.size()) {
            Embedding phi(steps_.size());
            for (std::size_t i = 0; i < steps_.size(); ++i) phi[steps_[i].vertex] = w.chosen[i];
            w.found.push_back(std::move(phi));
            return;
        }
        const auto& step = steps_[d];
        std::span<const Vertex> candidates;
        if (step.pair_anchor) {
            candidates = host_.third_vertices(w.chosen[step.pair_anchor->first], w.chosen[step.pair_anchor->second]);
        } else if (step.anchor) {
            candidates = host_.neighbors(w.chosen[*step.anchor]);
        } else {
            candidates = pool(step.vertex);
        }
        for (auto c : candidates) {
            if (w.used[c]) continue;
            if (scheme_ && scheme_->klass[c] != step.vertex) continue;
            if (host_.degree(c) < step.degree) continue;
            bool ok = true;
            for (const auto& [a, b] : step.checks) {
                if (!host_.has_edge(c, w.chosen[a], w.chosen[b])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            w.chosen[d] = c;
            w.used[c] = 1;
            descend(w, d + 1);
            w.used[c] = 0;
            if (w.found.size() >= w.cap) return;
        }
    }

    const Hypergraph3& host_;
    const Hypergraph3& pattern_;
    const PartitionScheme* scheme_;
    std::vector<std::vector<Vertex>> members_;
    std::vector<Vertex> all_;
    std::vector<Step> steps_;
};

}  // namespace

EmbeddingList enumerate_embeddings(const Hypergraph3& host, const Hypergraph3& pattern,
                                   const PartitionScheme* scheme, std::size_t limit, unsigned threads,
                                   std::size_t per_root_limit) {
    EmbeddingList out;
    if (pattern.vertex_count() == 0) {
        if (limit > 0) out.embeddings.emplace_back();
        return out;
    }
    if (pattern.vertex_count() > host.vertex_count()) return out;
    EmbeddingSearch search(host, pattern, scheme);
    const auto roots = search.first_candidates();
    const std::size_t cap = limit == static_cast<std::size_t>(-1) ? limit : limit + 1;
    const std::size_t root_cap =
        std::min(cap, per_root_limit == static_cast<std::size_t>(-1) ? per_root_limit : per_root_limit + 1);

    std::vector<std::vector<Embedding>> per_root(roots.size());
    std::vector<char> done(roots.size(), 0);
    std::mutex progress;
    detail::parallel_for(roots.size(), threads, [&](std::size_t i) {
        {
            std::lock_guard lock(progress);
            std::size_t before = 0;
            bool prefix_done = true;
            for (std::size_t j = 0; j < i && prefix_done; ++j) {
                prefix_done = done[j] != 0;
                before += std::min(per_root[j].size(), per_root_limit);
            }
            if (prefix_done && before >= cap) {
                done[i] = 1;
                return;
            }
        }
        auto found = search.run_from(roots[i], root_cap);
        std::lock_guard lock(progress);
        per_root[i] = std::move(found);
        done[i] = 1;
    });
    for (auto& batch : per_root) {
        if (batch.size() > per_root_limit) {
            batch.resize(per_root_limit);
            out.truncated = true;
        }
        for (auto& phi : batch) {
            if (out.embeddings.size() == limit) {
                out.truncated = true;
                return out;
            }
            out.embeddings.push_back(std::move(phi));
        }
    }
    return out;
}

}  // namespace bes
