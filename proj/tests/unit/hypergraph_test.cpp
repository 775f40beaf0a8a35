#include <doctest.h>

#include "bes/constructors.hpp"
#include "bes/error.hpp"
#include "bes/hypergraph.hpp"
#include "oracles.hpp"

using namespace bes;

TEST_CASE("edges are normalized and duplicates rejected") {
    auto h = Hypergraph3::from_edges(5, {{4, 2, 0}, {1, 3, 2}});
    CHECK(h.edge(0) == Edge{0, 2, 4});
    CHECK(h.edge(1) == Edge{1, 2, 3});
    CHECK_THROWS_AS(Hypergraph3::from_edges(5, {{0, 1, 2}, {2, 1, 0}}), InputError);
    CHECK_THROWS_AS(Hypergraph3::from_edges(3, {{0, 1, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph3::from_edges(3, {{0, 1, 3}}), InputError);
}

TEST_CASE("deficiency basics") {
    CHECK(deficiency(Hypergraph3(5)) == 5);
    auto one = Hypergraph3::from_edges(3, {{0, 1, 2}});
    CHECK(deficiency(one) == 2);
    CHECK(induced_deficiency(one, VertexSubset::full(3)) == 2);
    CHECK(deficiency(kst_plus_hypergraph(16, 16)) == 32);
    std::vector<Vertex> four{0, 1, 2, 3};
    CHECK(induced_deficiency(Hypergraph3(6), VertexSubset::from_members(6, four)) == 4);
}

TEST_CASE("tree apexes plus the bipartite side have deficiency s+t") {
    auto f = build_kst_plus(4, 4);
    auto u = f.witness->a;
    for (Vertex x = 0; x < 8; ++x) u.insert(x);
    CHECK(induced_deficiency(f.hypergraph, u) == 8);
}

TEST_CASE("induced subhypergraph relabels in order") {
    auto h = Hypergraph3::from_edges(6, {{0, 2, 4}, {1, 3, 5}, {2, 4, 5}});
    std::vector<Vertex> keep{2, 4, 5, 0};
    auto sub = induced_subhypergraph(h, VertexSubset::from_members(6, keep));
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.edge(0) == Edge{0, 1, 2});
    CHECK(sub.edge(1) == Edge{1, 2, 3});
    CHECK(induced_subhypergraph(h, VertexSubset(6)).vertex_count() == 0);
    CHECK(induced_subhypergraph(h, VertexSubset::full(6)) == h);
}

TEST_CASE("linearity") {
    auto h = Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}});
    auto r = is_linear(h);
    CHECK_FALSE(r.linear);
    CHECK(r.pair == std::make_pair(Vertex{0}, Vertex{1}));
    CHECK(is_linear(kst_plus_hypergraph(3, 3)).linear);
    CHECK(is_linear(Hypergraph3::from_edges(6, {{0, 1, 2}, {3, 4, 5}})).linear);
}

TEST_CASE("independence and degrees") {
    auto k = kst_plus_hypergraph(3, 3);
    auto p = degree_profile(k);
    CHECK(p.count_with_degree(1) == 9);
    CHECK(p.count_with_degree(3) == 6);
    std::size_t sum = 0;
    for (auto d : p.degree) sum += d;
    CHECK(sum == 3 * k.edge_count());
    std::vector<Vertex> apexes;
    for (Vertex x = 6; x < 15; ++x) apexes.push_back(x);
    CHECK(is_independent(k, VertexSubset::from_members(15, apexes)));
    std::vector<Vertex> edge{0, 3, 6};
    CHECK_FALSE(is_independent(k, VertexSubset::from_members(15, edge)));
}

TEST_CASE("indices agree with a plain scan") {
    oracle::Gen g(11);
    for (int round = 0; round < 20; ++round) {
        auto h = oracle::random_hypergraph(g, 9, 0.15);
        for (Vertex a = 0; a < 9; ++a) {
            std::size_t deg = 0;
            for (const auto& e : h.edges()) deg += (e[0] == a || e[1] == a || e[2] == a);
            CHECK(h.degree(a) == deg);
            for (Vertex b = a + 1; b < 9; ++b) {
                std::vector<Vertex> thirds;
                for (const auto& e : h.edges()) {
                    bool ha = e[0] == a || e[1] == a || e[2] == a;
                    bool hb = e[0] == b || e[1] == b || e[2] == b;
                    if (ha && hb) thirds.push_back(e[0] + e[1] + e[2] - a - b);
                }
                std::sort(thirds.begin(), thirds.end());
                auto got = h.third_vertices(a, b);
                CHECK(std::vector<Vertex>(got.begin(), got.end()) == thirds);
            }
        }
    }
}

TEST_CASE("removing vertices never lowers deficiency by more than the count removed") {
    oracle::Gen g(5);
    for (int round = 0; round < 200; ++round) {
        auto h = oracle::random_hypergraph(g, 10, 0.2);
        const std::uint64_t w = g.below(1024);
        const std::uint64_t u = w & g.below(1024);
        CHECK(oracle::deficiency_of(h, u) >= oracle::deficiency_of(h, w) - __builtin_popcountll(w & ~u));
        VertexSubset us(10);
        for (Vertex x = 0; x < 10; ++x) {
            if ((u >> x) & 1U) us.insert(x);
        }
        CHECK(induced_deficiency(h, us) == oracle::deficiency_of(h, u));
        CHECK(induced_subhypergraph(h, us).edge_count() ==
              static_cast<std::size_t>(static_cast<std::int64_t>(us.size()) - induced_deficiency(h, us)));
    }
}

TEST_CASE("vertex subsets reject bad members") {
    std::vector<Vertex> bad{1, 7};
    CHECK_THROWS_AS(VertexSubset::from_members(5, bad), InputError);
    std::vector<Vertex> twice{1, 1};
    CHECK_THROWS_AS(VertexSubset::from_members(5, twice), InputError);
    CHECK_THROWS_AS(induced_deficiency(Hypergraph3(4), VertexSubset(5)), InputError);
}
