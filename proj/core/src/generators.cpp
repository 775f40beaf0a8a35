#include "bes/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bes/constructors.hpp"
#include "bes/error.hpp"
#include "bes/rng.hpp"

namespace bes {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

Hypergraph3 random_linear(std::size_t n, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
    if (n > (std::size_t{1} << 20)) throw InputError("random_linear: n is too large");
    const auto target = n < 3 ? 0 : static_cast<std::size_t>(density * static_cast<double>(n * (n - 1)) / 6.0);
    Rng rng(derive_seed(seed, 0x11ea7));
    std::unordered_set<std::uint64_t> used;
    std::vector<Edge> edges;
    for (std::size_t draws = 0; edges.size() < target && draws < 20 * target; ++draws) {
        Edge e{static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n))};
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) continue;
        const std::uint64_t keys[3] = {pair_key(e[0], e[1]), pair_key(e[0], e[2]), pair_key(e[1], e[2])};
        if (used.count(keys[0]) || used.count(keys[1]) || used.count(keys[2])) continue;
        used.insert(keys, keys + 3);
        edges.push_back(e);
    }
    return Hypergraph3::from_edges(n, std::move(edges));
}

Hypergraph3 planted_host(const PlantedConfig& cfg) {
    if (cfg.copies < 2) throw InputError("planted_host needs at least 2 copies");
    auto levels = build_tower(TowerConfig{cfg.s, cfg.t, cfg.e});
    auto planted = glue_m(levels.back(), cfg.copies).hypergraph;
    auto background = random_linear(cfg.n, cfg.density, cfg.seed);

    const auto total = cfg.n + planted.vertex_count();
    std::vector<Vertex> perm(total);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    Rng rng(derive_seed(cfg.seed, 0x91a7));
    rng.shuffle(perm);

    std::vector<Edge> edges;
    edges.reserve(background.edge_count() + planted.edge_count());
    for (const auto& e : background.edges()) edges.push_back({perm[e[0]], perm[e[1]], perm[e[2]]});
    const auto off = static_cast<Vertex>(cfg.n);
    for (const auto& e : planted.edges()) edges.push_back({perm[off + e[0]], perm[off + e[1]], perm[off + e[2]]});
    return Hypergraph3::from_edges(total, std::move(edges));
}

}  // namespace bes
