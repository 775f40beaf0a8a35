#include <doctest.h>

#include <set>

#include "bes/constructors.hpp"
#include "bes/embedding.hpp"
#include "bes/erdos_rado.hpp"
#include "bes/error.hpp"
#include "bes/iteration.hpp"
#include "bes/oracle.hpp"
#include "bes/seeding.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

// Scheme sending phi's image vertices to their roles, the rest to class 0.
PartitionScheme scheme_from(std::size_t n, std::uint32_t classes, const std::vector<Embedding>& copies) {
    PartitionScheme s;
    s.classes = classes;
    s.klass.assign(n, 0);
    for (const auto& phi : copies) {
        for (std::uint32_t x = 0; x < phi.size(); ++x) s.klass[phi[x]] = x;
    }
    return s;
}

Embedding copy_map(const GluedHypergraph& g, std::size_t copy) {
    return g.provenance.back()->copy_maps[copy];
}

}  // namespace

TEST_CASE("embedding enumeration matches brute-force counts") {
    oracle::Gen gen(11);
    const auto path = Hypergraph3::from_edges(5, {{0, 1, 2}, {2, 3, 4}});
    const auto pair = Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}});
    for (int round = 0; round < 40; ++round) {
        auto host = oracle::random_with_edges(gen, 7, 3 + gen.below(10));
        for (const auto* pattern : {&path, &pair}) {
            auto list = enumerate_embeddings(host, *pattern, nullptr, static_cast<std::size_t>(-1));
            CHECK(list.embeddings.size() == oracle::count_embeddings(host, *pattern));
            std::set<Embedding> distinct(list.embeddings.begin(), list.embeddings.end());
            CHECK(distinct.size() == list.embeddings.size());
            for (const auto& phi : list.embeddings) CHECK(is_embedding(host, *pattern, phi));
        }
    }
}

TEST_CASE("embedding enumeration is thread-count independent and truncates") {
    oracle::Gen gen(5);
    auto host = oracle::random_with_edges(gen, 12, 40);
    const auto pattern = Hypergraph3::from_edges(5, {{0, 1, 2}, {2, 3, 4}});
    auto one = enumerate_embeddings(host, pattern, nullptr, 50, 1);
    auto four = enumerate_embeddings(host, pattern, nullptr, 50, 4);
    CHECK(one.embeddings == four.embeddings);
    auto all = enumerate_embeddings(host, pattern, nullptr, static_cast<std::size_t>(-1), 3);
    if (all.embeddings.size() > 50) {
        CHECK(one.truncated);
        CHECK(std::equal(one.embeddings.begin(), one.embeddings.end(), all.embeddings.begin()));
    }
}

TEST_CASE("proper embeddings of planted disjoint copies") {
    const auto f = kst_plus_hypergraph(3, 4);
    auto host = oracle::disjoint_union(f, oracle::disjoint_union(f, f));
    std::vector<Embedding> planted;
    for (Vertex c = 0; c < 3; ++c) {
        Embedding phi(f.vertex_count());
        for (Vertex x = 0; x < phi.size(); ++x) phi[x] = x + c * static_cast<Vertex>(f.vertex_count());
        planted.push_back(phi);
    }
    auto scheme = scheme_from(host.vertex_count(), static_cast<std::uint32_t>(f.vertex_count()), planted);
    auto list = enumerate_embeddings(host, f, &scheme, 100);
    CHECK(list.embeddings == planted);
    for (const auto& phi : list.embeddings) CHECK(is_proper(phi, scheme));

    const auto single = Hypergraph3::from_edges(3, {{0, 1, 2}});
    PartitionScheme identity{{0, 1, 2}, 3, 0};
    CHECK(enumerate_embeddings(single, single, &identity, 10).embeddings.size() == 1);
    CHECK(enumerate_embeddings(Hypergraph3::from_edges(5, {}), single, nullptr, 10).embeddings.empty());
}

TEST_CASE("proper copies meet exactly on their agreement set") {
    auto g = glue_m(build_kst_plus(3, 4), 3);
    const auto& f = build_kst_plus(3, 4).hypergraph;
    std::vector<Embedding> copies;
    for (std::size_t c = 0; c < 3; ++c) copies.push_back(copy_map(g, c));
    auto scheme = scheme_from(g.hypergraph.vertex_count(), static_cast<std::uint32_t>(f.vertex_count()), copies);
    auto list = enumerate_embeddings(g.hypergraph, f, &scheme, 1000);
    REQUIRE(list.embeddings.size() >= 3);
    for (const auto& p : list.embeddings) {
        for (const auto& q : list.embeddings) {
            auto u = intersection_pattern(p, q);
            std::set<Vertex> meet;
            for (auto x : p) {
                if (std::find(q.begin(), q.end(), x) != q.end()) meet.insert(x);
            }
            std::set<Vertex> mapped;
            for (auto x : u.members()) mapped.insert(p[x]);
            CHECK(meet == mapped);
        }
    }
    CHECK(intersection_pattern(copies[0], copies[1]) == build_kst_plus(3, 4).witness->a);
    CHECK_THROWS_AS(intersection_pattern(copies[0], Embedding{0}), InputError);
}

TEST_CASE("linearization") {
    std::vector<Edge> fan;
    for (Vertex z = 2; z < 7; ++z) fan.push_back({0, 1, z});
    auto heavy = reduce_to_linear(Hypergraph3::from_edges(7, fan), 5);
    REQUIRE(heavy.heavy_pair);
    CHECK(heavy.heavy_pair->vertices.size() == 7);
    CHECK(verify_configuration(Hypergraph3::from_edges(7, fan), *heavy.heavy_pair));

    const auto linear = kst_plus_hypergraph(3, 3);
    CHECK(reduce_to_linear(linear, 5).linear.edge_count() == linear.edge_count());

    oracle::Gen gen(3);
    auto h = oracle::random_with_edges(gen, 30, 200);
    auto out = reduce_to_linear(h, 5);
    if (!out.heavy_pair) {
        CHECK(is_linear(out.linear).linear);
        CHECK(out.linear.edge_count() * 13 >= h.edge_count());
    }
    CHECK_THROWS_AS(reduce_to_linear(h, 2), InputError);
}

TEST_CASE("tripartition keeps crossing edges with large classes") {
    std::vector<Edge> edges;
    for (Vertex x = 0; x < 6; ++x) {
        for (Vertex y = 6; y < 12; ++y) {
            for (Vertex z = 12; z < 18; ++z) edges.push_back({x, y, z});
        }
    }
    auto h = Hypergraph3::from_edges(18, edges);
    auto t = tripartition(h, 64, 9);
    CHECK(4 * t.x.size() >= 18);
    CHECK(4 * t.y.size() >= 18);
    CHECK(4 * t.z.size() >= 18);
    CHECK(t.crossing.edge_count() * 9 >= h.edge_count());
    for (const auto& e : t.crossing.edges()) CHECK(h.has_edge(e[0], e[1], e[2]));
    CHECK_THROWS_AS(tripartition(Hypergraph3::from_edges(11, {}), 4, 1), InputError);
    auto single = tripartition(Hypergraph3::from_edges(12, {{0, 1, 2}}), 32, 2);
    CHECK(single.crossing.edge_count() <= 1);
}

TEST_CASE("colored link graph and rainbow copies") {
    VertexSubset x = VertexSubset::from_members(3, std::vector<Vertex>{0});
    VertexSubset y = VertexSubset::from_members(3, std::vector<Vertex>{1});
    VertexSubset z = VertexSubset::from_members(3, std::vector<Vertex>{2});
    auto g = colored_link_graph(Hypergraph3::from_edges(3, {{0, 1, 2}}), x, y, z);
    CHECK(g.edge_count() == 1);
    CHECK(g.color(0, 1) == Vertex{2});

    auto xx = VertexSubset::from_members(4, std::vector<Vertex>{0});
    auto yy = VertexSubset::from_members(4, std::vector<Vertex>{1});
    auto zz = VertexSubset::from_members(4, std::vector<Vertex>{2, 3});
    CHECK_THROWS_AS(colored_link_graph(Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}}), xx, yy, zz), InputError);

    // K_{2,2} coloured z1 z2 z2 z1 around the cycle has no rainbow copy.
    ColoredBipartiteGraph cyc(6, VertexSubset::from_members(6, std::vector<Vertex>{0, 1}),
                              VertexSubset::from_members(6, std::vector<Vertex>{2, 3}));
    cyc.add(0, 2, 4);
    cyc.add(0, 3, 5);
    cyc.add(1, 3, 4);
    cyc.add(1, 2, 5);
    cyc.finish();
    CHECK(find_rainbow_kst(cyc, 2, 2, 10).empty());

    // Complete bipartite with distinct colours: every copy is rainbow.
    const std::uint32_t a = 4, b = 5;
    ColoredBipartiteGraph full(a + b + a * b, VertexSubset(a + b + a * b), VertexSubset(a + b + a * b));
    {
        VertexSubset sx(a + b + a * b), sy(a + b + a * b);
        for (Vertex i = 0; i < a; ++i) sx.insert(i);
        for (Vertex j = 0; j < b; ++j) sy.insert(a + j);
        full = ColoredBipartiteGraph(a + b + a * b, sx, sy);
        for (Vertex i = 0; i < a; ++i) {
            for (Vertex j = 0; j < b; ++j) full.add(i, a + j, a + b + i * b + j);
        }
        full.finish();
    }
    CHECK(find_rainbow_kst(full, 2, 3, 100000).size() == 6 * 10 + 10 * 4);
    CHECK(find_rainbow_kst(full, 2, 2, 100000).size() == 6 * 10);
    CHECK(find_rainbow_kst(full, 2, 2, 7).size() == 7);
}

TEST_CASE("planted K_{s,t}^+ round-trips through seeding") {
    const std::uint32_t s = 3, t = 4;
    const auto f = kst_plus_hypergraph(s, t);
    auto host = oracle::disjoint_union(f, f);
    const auto n = host.vertex_count();
    VertexSubset x(n), y(n), z(n);
    for (Vertex c = 0; c < 2; ++c) {
        const Vertex off = c * static_cast<Vertex>(f.vertex_count());
        for (std::uint32_t i = 0; i < s; ++i) x.insert(off + kst_left(i));
        for (std::uint32_t j = 0; j < t; ++j) y.insert(off + kst_right(s, j));
        for (std::uint32_t i = 0; i < s; ++i) {
            for (std::uint32_t j = 0; j < t; ++j) z.insert(off + kst_apex(s, t, i, j));
        }
    }
    auto g = colored_link_graph(host, x, y, z);
    auto copies = find_rainbow_kst(g, s, t, 100);
    REQUIRE(copies.size() == 2);
    auto phi0 = lift_rainbow(copies[0], g, host);
    auto phi1 = lift_rainbow(copies[1], g, host);
    for (Vertex v = 0; v < f.vertex_count(); ++v) CHECK(phi0[v] == v);
    std::set<Vertex> a(phi0.begin(), phi0.end());
    for (auto v : phi1) CHECK(a.count(v) == 0);

    auto tiny = colored_link_graph(Hypergraph3::from_edges(3, {{0, 1, 2}}),
                                   VertexSubset::from_members(3, std::vector<Vertex>{0}),
                                   VertexSubset::from_members(3, std::vector<Vertex>{1}),
                                   VertexSubset::from_members(3, std::vector<Vertex>{2}));
    auto one = find_rainbow_kst(tiny, 1, 1, 5);
    REQUIRE(one.size() == 1);
    CHECK(lift_rainbow(one[0], tiny, Hypergraph3::from_edges(3, {{0, 1, 2}})) == Embedding{0, 1, 2});
}

TEST_CASE("erdos-rado extraction") {
    std::vector<std::vector<Vertex>> disjoint{{0, 1}, {2, 3}, {4, 5}};
    auto s = erdos_rado(disjoint, 3);
    REQUIRE(s);
    CHECK(s->core.empty());

    std::vector<std::vector<Vertex>> same{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK_FALSE(erdos_rado(same, 2));

    std::vector<std::vector<Vertex>> triples;
    for (Vertex a = 0; a < 6; ++a) {
        for (Vertex b = a + 1; b < 6; ++b) {
            for (Vertex c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
        }
    }
    auto t = erdos_rado(triples, 3);
    REQUIRE(t);
    CHECK(is_set_sunflower(triples, *t));
    CHECK(oracle::has_set_sunflower(triples, 3));

    CHECK_THROWS_AS(erdos_rado({{0}, {0, 1}}, 2), InputError);
    CHECK_THROWS_AS(erdos_rado({{0}}, 1), InputError);
}

TEST_CASE("erdos-rado agrees with exhaustive search on small families") {
    oracle::Gen gen(21);
    for (int round = 0; round < 300; ++round) {
        const std::size_t kappa = 1 + gen.below(3);
        const std::size_t count = 2 + gen.below(19);
        const std::size_t r = 2 + gen.below(3);
        const std::size_t universe = kappa + 1 + gen.below(6);
        std::vector<std::vector<Vertex>> family;
        for (std::size_t i = 0; i < count; ++i) {
            std::set<Vertex> s;
            while (s.size() < kappa) s.insert(static_cast<Vertex>(gen.below(universe)));
            family.emplace_back(s.begin(), s.end());
        }
        auto found = erdos_rado(family, r);
        CHECK(found.has_value() == oracle::has_set_sunflower(family, r));
        if (found) CHECK(is_set_sunflower(family, *found));
    }
}

TEST_CASE("configuration oracle basics") {
    std::vector<Edge> k5;
    for (Vertex a = 0; a < 5; ++a) {
        for (Vertex b = a + 1; b < 5; ++b) {
            for (Vertex c = b + 1; c < 5; ++c) k5.push_back({a, b, c});
        }
    }
    auto h = Hypergraph3::from_edges(5, k5);
    auto r = brute_force_configuration(h, 5, 3);
    CHECK(r.status == OracleStatus::found);
    REQUIRE(r.certificate);
    CHECK(verify_configuration(h, *r.certificate));

    auto two = Hypergraph3::from_edges(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK(brute_force_configuration(two, 5, 2).status == OracleStatus::exhausted);
    CHECK(brute_force_configuration(two, 6, 2).status == OracleStatus::found);
    CHECK_THROWS_AS(brute_force_configuration(two, 6, 0), InputError);
}

TEST_CASE("configuration oracle agrees with the plain subset walk") {
    oracle::Gen gen(99);
    const std::pair<std::int64_t, std::int64_t> targets[] = {{6, 3}, {7, 4}, {8, 5}, {9, 5}, {5, 2}, {10, 6}};
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = 6 + gen.below(8);
        const std::size_t m = 1 + gen.below(15);
        auto h = oracle::random_with_edges(gen, n, std::min<std::size_t>(m, n * (n - 1) * (n - 2) / 6));
        const auto [v, e] = targets[gen.below(6)];
        auto got = brute_force_configuration(h, v, e, {std::chrono::milliseconds{0}, 1 + static_cast<unsigned>(gen.below(3))});
        const bool want = oracle::configuration(h, v, e);
        CHECK((got.status == OracleStatus::found) == want);
        if (got.certificate) {
            CHECK(verify_configuration(h, *got.certificate));
            CHECK(static_cast<std::int64_t>(got.certificate->vertices.size()) <= v);
        }
    }
}

TEST_CASE("configuration oracle finds split solutions and respects budgets") {
    // Two triangles of a Fano-free sort: each pair of edges on 5 vertices.
    auto h = Hypergraph3::from_edges(12, {{0, 1, 2}, {0, 3, 4}, {6, 7, 8}, {6, 9, 10}});
    auto r = brute_force_configuration(h, 10, 4);
    CHECK(r.status == OracleStatus::found);
    CHECK(oracle::configuration(h, 10, 4));
    CHECK(brute_force_configuration(h, 9, 4).status == OracleStatus::exhausted);

    oracle::Gen gen(4);
    auto big = oracle::random_with_edges(gen, 200, 3000);
    auto t = brute_force_configuration(big, 12, 9, {std::chrono::milliseconds{1}, 1});
    CHECK(t.status != OracleStatus::exhausted);
}

TEST_CASE("oracle certificate does not depend on thread count") {
    oracle::Gen gen(8);
    for (int round = 0; round < 20; ++round) {
        auto h = oracle::random_with_edges(gen, 14, 25);
        auto a = brute_force_configuration(h, 8, 5, {std::chrono::milliseconds{0}, 1});
        auto b = brute_force_configuration(h, 8, 5, {std::chrono::milliseconds{0}, 4});
        CHECK(a.status == b.status);
        if (a.certificate && b.certificate) CHECK(a.certificate->vertices == b.certificate->vertices);
    }
}

TEST_CASE("iteration step on a planted sunflower") {
    auto f = build_kst_plus(3, 4);
    auto core = f.witness->a;
    Vertex extra = 0;
    for (Vertex x = 7; x < f.hypergraph.vertex_count(); ++x) {
        if (!core.contains(x)) {
            extra = x;
            break;
        }
    }
    core.insert(extra);
    auto built = build_sunflower(f.hypergraph, core, 5);
    SearchConfig cfg;
    cfg.r = 5;
    auto result = iteration_step(built.host, built.certificate.embeddings, f, cfg);
    REQUIRE(std::holds_alternative<SunflowerCertificate>(result));
    const auto& cert = std::get<SunflowerCertificate>(result);
    CHECK(verify_sunflower(built.host, cert).valid);
    CHECK(cert.r() == 5);
    CHECK(cert.core == core);
}

TEST_CASE("iteration step glues copies sharing one A-image") {
    for (std::uint32_t m : {2U, 4U}) {
        auto f = build_kst_plus(3, 4);
        auto host = glue_m(f, 5);
        std::vector<Embedding> copies;
        for (std::size_t c = 0; c < 5; ++c) copies.push_back(copy_map(host, c));
        SearchConfig cfg;
        cfg.r = 6;
        cfg.m = m;
        auto result = iteration_step(host.hypergraph, copies, f, cfg);
        REQUIRE(std::holds_alternative<GluedCopies>(result));
        const auto& glued = std::get<GluedCopies>(result);
        CHECK(glued.embeddings.size() == (m == 2 ? 20U : 120U));
        for (const auto& psi : glued.embeddings) {
            CHECK(is_embedding(host.hypergraph, glued.glued.hypergraph, psi));
            CHECK(image_deficiency(glued.glued.hypergraph, psi) == f.witness->k + m - 1);
        }
    }
}

TEST_CASE("iteration step on vertex-disjoint copies is exhausted") {
    auto f = build_kst_plus(3, 4);
    auto host = oracle::disjoint_union(f.hypergraph, f.hypergraph);
    Embedding second(f.hypergraph.vertex_count());
    for (Vertex x = 0; x < second.size(); ++x) second[x] = x + static_cast<Vertex>(f.hypergraph.vertex_count());
    Embedding first(f.hypergraph.vertex_count());
    for (Vertex x = 0; x < first.size(); ++x) first[x] = x;
    SearchConfig cfg;
    auto result = iteration_step(host, {first, second}, f, cfg);
    REQUIRE(std::holds_alternative<IterationExhausted>(result));
    CHECK(std::get<IterationExhausted>(result).bucket_histogram.at(1) == 2);
    cfg.r = 1;
    CHECK_THROWS_AS(iteration_step(host, {first}, f, cfg), InputError);
}
