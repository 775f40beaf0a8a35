#include <doctest.h>

#include "bes/constructors.hpp"
#include "bes/error.hpp"
#include "oracles.hpp"

using namespace bes;

TEST_CASE("spanning tree packing") {
    CHECK_THROWS_AS(two_edge_disjoint_spanning_trees(2, 2), ConstructionError);
    CHECK_THROWS_AS(two_edge_disjoint_spanning_trees(1, 9), ConstructionError);
    for (auto [s, t] : {std::pair{3u, 4u}, {4u, 3u}, {4u, 4u}, {3u, 5u}, {5u, 7u}, {9u, 9u}, {16u, 16u}}) {
        auto p = two_edge_disjoint_spanning_trees(s, t);
        CHECK(p.first.size() == s + t - 1);
        CHECK(oracle::spans_as_tree(s, t, p.first));
        CHECK(oracle::spans_as_tree(s, t, p.second));
        for (const auto& e : p.first) {
            CHECK(std::find(p.second.begin(), p.second.end(), e) == p.second.end());
        }
        auto again = two_edge_disjoint_spanning_trees(s, t);
        CHECK(again.first == p.first);
        CHECK(again.second == p.second);
    }
}

TEST_CASE("K_{s,t}^+ seed") {
    auto f = build_kst_plus(16, 16);
    CHECK(f.hypergraph.vertex_count() == 288);
    CHECK(f.hypergraph.edge_count() == 256);
    CHECK(deficiency(f.hypergraph) == 32);
    CHECK_FALSE(witness_structure_problem(f.hypergraph, *f.witness).has_value());
    for (std::uint32_t s = 3; s <= 6; ++s) {
        for (std::uint32_t t = s + 1; t <= 7; ++t) {
            CHECK(deficiency(build_kst_plus(s, t).hypergraph) == static_cast<std::int64_t>(s + t));
        }
    }
}

TEST_CASE("K_{4,4}^+ tree apexes are good by plain superset scan") {
    auto f = build_kst_plus(4, 4);
    CHECK(oracle::good(f.hypergraph, oracle::mask_of(f.witness->a)));
    CHECK(oracle::good(f.hypergraph, oracle::mask_of(f.witness->b)));
}

TEST_CASE("glue_pair arithmetic and witness") {
    auto f = build_kst_plus(4, 4);
    auto g = glue_pair(f);
    CHECK(g.hypergraph.edge_count() == 32);
    CHECK(g.hypergraph.vertex_count() == 2 * 24 - 7);
    CHECK(deficiency(g.hypergraph) == 9);
    REQUIRE(g.witness.has_value());
    CHECK_FALSE(witness_structure_problem(g.hypergraph, *g.witness).has_value());
    CHECK(g.witness->u == f.witness->u);
    CHECK(g.witness->b.contains(f.witness->v));
    CHECK(g.provenance.size() == 1);

    auto big = glue_pair(build_kst_plus(16, 16));
    CHECK(big.hypergraph.edge_count() == 512);
    CHECK(big.hypergraph.vertex_count() == 545);
    CHECK(deficiency(big.hypergraph) == 33);
}

TEST_CASE("glue_m shares only the A images and each copy is a faithful image") {
    auto f = build_kst_plus(3, 4);
    for (std::uint32_t m : {2u, 3u, 4u}) {
        auto g = glue_m(f, m);
        CHECK(deficiency(g.hypergraph) == deficiency(f.hypergraph) + m - 1);
        CHECK(g.hypergraph.edge_count() == m * f.hypergraph.edge_count());
        CHECK(g.witness.has_value() == (m == 2));
        const auto& maps = g.provenance.back()->copy_maps;
        for (std::uint32_t c = 0; c < m; ++c) {
            for (const auto& e : f.hypergraph.edges()) {
                CHECK(g.hypergraph.has_edge(maps[c][e[0]], maps[c][e[1]], maps[c][e[2]]));
            }
            for (std::uint32_t d = c + 1; d < m; ++d) {
                for (Vertex x = 0; x < f.hypergraph.vertex_count(); ++x) {
                    for (Vertex y = 0; y < f.hypergraph.vertex_count(); ++y) {
                        if (maps[c][x] == maps[d][y]) {
                            CHECK(x == y);
                            CHECK(f.witness->a.contains(x));
                        }
                    }
                }
            }
        }
    }
    CHECK(glue_m(f, 2).hypergraph == glue_pair(f).hypergraph);
    CHECK(glue_m(f, 2).witness == glue_pair(f).witness);
    CHECK_THROWS_AS(glue_m(f, 1), InputError);
    GluedHypergraph bare{Hypergraph3::from_edges(3, {{0, 1, 2}}), std::nullopt, {}};
    CHECK_THROWS_AS(glue_m(bare, 3), InputError);
    bare.witness = EligibilityWitness{VertexSubset::from_members(3, std::vector<Vertex>{0}),
                                      VertexSubset::from_members(3, std::vector<Vertex>{1}), 2, 2, 2};
    CHECK_THROWS_AS(glue_m(bare, 3), InputError);
}

TEST_CASE("degree-above-one count after gluing") {
    auto f = build_kst_plus(16, 16);
    auto g = glue_pair(f);
    const auto high = [](const Hypergraph3& h) {
        return static_cast<std::int64_t>(degree_profile(h).count_with_degree_above(1));
    };
    const std::int64_t e = 256;
    const std::int64_t k = 32;
    // 4 * (2(e/4 - k) + k - 1) kept integral.
    CHECK(4 * high(g.hypergraph) <= 2 * (e - 4 * k) + 4 * (k - 1));
}

TEST_CASE("tower parameters") {
    CHECK(TowerConfig{16, 16, 512}.ell() == 0);
    CHECK(TowerConfig{16, 16, 1023}.ell() == 0);
    CHECK(TowerConfig{16, 16, 2048}.ell() == 2);
    CHECK(TowerConfig{16, 16, 4096}.ell() == 3);
    CHECK(TowerConfig{16, 16, 100}.ell() == 0);
    auto tower = build_tower({16, 16, 4096});
    REQUIRE(tower.size() == 4);
    CHECK(tower[3].hypergraph.edge_count() == 2048);
    CHECK(deficiency(tower[3].hypergraph) == 35);
    CHECK(build_tower({16, 16, 2048})[2].hypergraph.edge_count() * 2 <= 2048);
    CHECK_THROWS_AS(build_tower({5, 4, 100}), InputError);
}
