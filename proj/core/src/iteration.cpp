#include "bes/iteration.hpp"

#include <algorithm>
#include <string>

#include "bes/embedding.hpp"
#include "bes/erdos_rado.hpp"
#include "bes/error.hpp"
#include "detail/parallel.hpp"

namespace bes {

void SearchConfig::validate() const {
    if (r < 2) throw InputError("search config needs r >= 2");
    if (m < 2) throw InputError("search config needs m >= 2");
    if (copy_limit < 1 || trial_count < 1) throw InputError("search config limits must be >= 1");
}

std::int64_t image_deficiency(const Hypergraph3& pattern, const Embedding& phi) {
    auto vertices = image_set(phi);
    std::vector<Edge> edges;
    for (const auto& e : pattern.edges()) {
        Edge img{phi[e[0]], phi[e[1]], phi[e[2]]};
        std::sort(img.begin(), img.end());
        edges.push_back(img);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return static_cast<std::int64_t>(vertices.size()) - static_cast<std::int64_t>(edges.size());
}

namespace {

class Step {
public:
    Step(const Hypergraph3& host, const std::vector<Embedding>& copies, const GluedHypergraph& pattern,
         const SearchConfig& cfg)
        : host_(host), copies_(copies), pattern_(pattern), cfg_(cfg) {
        if (!pattern.witness) throw InputError("iteration_step needs a pattern with a witness");
        a_ = pattern.witness->a.members();
        const auto& f = pattern.hypergraph;
        VertexSubset in_a = pattern.witness->a;
        for (Vertex x = 0; x < f.vertex_count(); ++x) {
            if (!in_a.contains(x)) rest_.push_back(x);
        }
        for (std::size_t i = 0; i < copies.size(); ++i) {
            if (!is_embedding(host, f, copies[i])) {
                throw InputError("iteration_step: copy " + std::to_string(i) + " is not an embedding");
            }
            std::vector<Vertex> key;
            for (auto x : a_) key.push_back(copies[i][x]);
            buckets_[key].push_back(i);
        }
        build_graph();
    }

    IterationResult run() {
        const auto threshold =
            cfg_.degree_threshold ? cfg_.degree_threshold : 2 * cfg_.r * pattern_.hypergraph.vertex_count();
        if (auto s = sunflower_phase(threshold)) return std::move(*s);
        if (auto g = glue_phase()) return std::move(*g);
        if (cfg_.r - 1 < threshold) {
            if (auto s = sunflower_phase(cfg_.r - 1)) return std::move(*s);
        }
        IterationExhausted ex;
        ex.bucket_histogram = histogram_;
        for (const auto& list : adjacency_) ex.max_degree = std::max(ex.max_degree, list.size());
        ex.reason = copies_.empty() ? "no copies" : "no sunflower and no bucket of size " + std::to_string(cfg_.m);
        return ex;
    }

private:
    bool adjacent(std::size_t i, std::size_t j) const {
        for (auto x : rest_) {
            if (copies_[i][x] == copies_[j][x]) return true;
        }
        return false;
    }

    void build_graph() {
        adjacency_.assign(copies_.size(), {});
        std::vector<const std::vector<std::size_t>*> lists;
        for (const auto& [key, ids] : buckets_) lists.push_back(&ids);
        // Each copy lies in one bucket, so workers write disjoint lists.
        detail::parallel_for(lists.size(), cfg_.threads, [&](std::size_t b) {
            const auto& ids = *lists[b];
            for (std::size_t p = 0; p < ids.size(); ++p) {
                for (std::size_t q = p + 1; q < ids.size(); ++q) {
                    if (adjacent(ids[p], ids[q])) {
                        adjacency_[ids[p]].push_back(ids[q]);
                        adjacency_[ids[q]].push_back(ids[p]);
                    }
                }
            }
        });
        for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    }

    std::optional<SunflowerCertificate> sunflower_phase(std::size_t threshold) {
        const auto& f = pattern_.hypergraph;
        for (std::size_t i = 0; i < copies_.size(); ++i) {
            if (adjacency_[i].size() < threshold || adjacency_[i].size() + 1 < cfg_.r) continue;
            std::map<std::vector<Vertex>, std::vector<std::size_t>> groups;
            for (auto j : adjacency_[i]) groups[intersection_pattern(copies_[i], copies_[j]).members()].push_back(j);
            for (const auto& [u0, ids] : groups) {
                if (ids.size() + 1 < cfg_.r) continue;
                std::vector<std::size_t> family{i};
                family.insert(family.end(), ids.begin(), ids.end());
                std::vector<std::vector<Vertex>> images;
                for (auto id : family) images.push_back(image_set(copies_[id]));
                auto found = erdos_rado(images, cfg_.r, 16);
                if (!found) continue;
                SunflowerCertificate cert;
                cert.pattern = f;
                for (auto pos : found->indices) cert.embeddings.push_back(copies_[family[pos]]);
                cert.core = VertexSubset::full(f.vertex_count());
                for (std::size_t c = 1; c < cert.embeddings.size(); ++c) {
                    cert.core &= intersection_pattern(cert.embeddings[0], cert.embeddings[c]);
                }
                const auto u0_set = VertexSubset::from_members(f.vertex_count(), u0);
                if (!u0_set.is_subset_of(cert.core) || cert.core.size() <= a_.size()) continue;
                if (!pattern_.witness->a.is_subset_of(cert.core)) continue;
                if (!verify_sunflower(host_, cert).valid) continue;
                return cert;
            }
        }
        return std::nullopt;
    }

    std::optional<GluedCopies> glue_phase() {
        std::vector<char> taken(copies_.size(), 0);
        std::map<std::vector<Vertex>, std::vector<std::size_t>> independent;
        for (const auto& [key, ids] : buckets_) {
            for (auto i : ids) {
                bool free = std::none_of(adjacency_[i].begin(), adjacency_[i].end(), [&](auto j) { return taken[j]; });
                if (!free) continue;
                taken[i] = 1;
                independent[key].push_back(i);
            }
        }
        histogram_.clear();
        for (const auto& [key, ids] : independent) ++histogram_[ids.size()];

        const auto m = cfg_.m;
        GluedCopies out{glue_m(pattern_, m), {}};
        const auto& step = *out.glued.provenance.back();
        const auto& fprime = out.glued.hypergraph;
        const auto want = static_cast<std::int64_t>(pattern_.witness->k) + m - 1;
        for (const auto& [key, ids] : independent) {
            if (ids.size() < m) continue;
            std::vector<std::size_t> pick;
            std::vector<char> used(ids.size(), 0);
            collect(ids, pick, used, step, fprime, want, out.embeddings);
            if (out.embeddings.size() >= cfg_.copy_limit) break;
        }
        if (out.embeddings.empty()) return std::nullopt;
        return out;
    }

    void collect(const std::vector<std::size_t>& ids, std::vector<std::size_t>& pick, std::vector<char>& used,
                 const GlueStep& step, const Hypergraph3& fprime, std::int64_t want, std::vector<Embedding>& out) {
        if (out.size() >= cfg_.copy_limit) return;
        if (pick.size() == cfg_.m) {
            Embedding psi(fprime.vertex_count());
            for (std::size_t c = 0; c < pick.size(); ++c) {
                const auto& phi = copies_[ids[pick[c]]];
                for (std::size_t x = 0; x < phi.size(); ++x) psi[step.copy_maps[c][x]] = phi[x];
            }
            if (!is_embedding(host_, fprime, psi)) return;
            if (image_deficiency(fprime, psi) != want) {
                throw InternalError("iteration_step: glued copy has deficiency " +
                                    std::to_string(image_deficiency(fprime, psi)) + ", expected " +
                                    std::to_string(want));
            }
            out.push_back(std::move(psi));
            return;
        }
        for (std::size_t p = 0; p < ids.size(); ++p) {
            if (used[p]) continue;
            used[p] = 1;
            pick.push_back(p);
            collect(ids, pick, used, step, fprime, want, out);
            pick.pop_back();
            used[p] = 0;
            if (out.size() >= cfg_.copy_limit) return;
        }
    }

    const Hypergraph3& host_;
    const std::vector<Embedding>& copies_;
    const GluedHypergraph& pattern_;
    const SearchConfig& cfg_;
    std::vector<Vertex> a_;
    std::vector<Vertex> rest_;
    std::map<std::vector<Vertex>, std::vector<std::size_t>> buckets_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::map<std::size_t, std::size_t> histogram_;
};

}  // namespace

IterationResult iteration_step(const Hypergraph3& host, const std::vector<Embedding>& copies,
                               const GluedHypergraph& pattern, const SearchConfig& cfg) {
    cfg.validate();
    Step step(host, copies, pattern, cfg);
    return step.run();
}

}  // namespace bes
