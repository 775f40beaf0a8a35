#include <doctest.h>

#include "bes/constructors.hpp"
#include "bes/driver.hpp"
#include "bes/error.hpp"
#include "bes/generators.hpp"
#include "bes/oracle.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

DriverConfig small_seed() {
    DriverConfig cfg;
    cfg.seed_s = 3;
    cfg.seed_t = 4;
    cfg.relaxed_degree_conditions = true;
    cfg.seed = 7;
    return cfg;
}

void check_certificate(const Hypergraph3& h, const DriverResult& r, std::int64_t e) {
    REQUIRE(r.found());
    const auto& w = r.certificate->vertices;
    const auto induced = static_cast<std::int64_t>(oracle::edges_inside_subset(h, w.members()));
    CHECK(induced >= e);
    CHECK(static_cast<std::int64_t>(w.size()) - induced <= bes_deficiency_bound(e));
    CHECK(verify_configuration(h, *r.certificate));
}

}  // namespace

TEST_CASE("deficiency bound") {
    CHECK(bes_deficiency_bound(1) == 38);
    CHECK(bes_deficiency_bound(12) == 41);
    CHECK(bes_deficiency_bound(512) == 47);
    CHECK(bes_deficiency_bound(511) == 46);
}

TEST_CASE("heavy pair exits early") {
    std::vector<Edge> fan;
    for (Vertex z = 2; z < 10; ++z) fan.push_back({0, 1, z});
    auto h = Hypergraph3::from_edges(10, fan);
    auto r = find_bes(h, 6);
    CHECK(r.route == "heavy-pair");
    check_certificate(h, r, 6);
    CHECK(r.certificate->vertices.size() == 8);
    CHECK_THROWS_AS(find_bes(h, 2), InputError);
}

TEST_CASE("empty host is exhausted with a trace") {
    auto h = Hypergraph3::from_edges(40, {});
    auto r = find_bes(h, 12, small_seed());
    CHECK_FALSE(r.found());
    CHECK(r.trace.records().back().outcome == "none: no F0 copies");
    auto d = find_bes(h, 12);
    CHECK_FALSE(d.found());
    CHECK(d.route == "direct");
}

TEST_CASE("direct path finds a planted K_{c,c}^+") {
    oracle::Gen gen(3);
    auto noise = oracle::random_with_edges(gen, 40, 30);
    auto h = oracle::disjoint_union(noise, kst_plus_hypergraph(4, 4));
    auto r = find_bes(h, 14);
    CHECK(r.route == "direct");
    check_certificate(h, r, 14);
}

TEST_CASE("tower path on glue-planted hosts") {
    for (std::int64_t e : {12, 24, 48}) {
        auto levels = build_tower(TowerConfig{3, 4, static_cast<std::uint64_t>(e)});
        auto planted = glue_m(levels.back(), 4);
        auto r = find_bes(planted.hypergraph, e, small_seed());
        CAPTURE(e);
        CHECK(r.route == "glue");
        check_certificate(planted.hypergraph, r, e);
    }
}

TEST_CASE("tower path on permuted planted hosts with noise") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        for (std::uint64_t e : {12, 24, 48}) {
            PlantedConfig pc;
            pc.n = 150;
            pc.density = 0.2;
            pc.e = e;
            pc.seed = seed;
            auto h = planted_host(pc);
            auto r = find_bes(h, static_cast<std::int64_t>(e), small_seed());
            CAPTURE(seed);
            CAPTURE(e);
            CHECK(r.route == "glue");
            check_certificate(h, r, static_cast<std::int64_t>(e));
        }
    }
}

TEST_CASE("driver output does not depend on threads") {
    PlantedConfig pc;
    pc.n = 100;
    pc.density = 0.2;
    pc.e = 48;
    pc.seed = 4;
    auto h = planted_host(pc);
    auto one = small_seed();
    auto four = small_seed();
    four.threads = 4;
    auto a = find_bes(h, 48, one);
    auto b = find_bes(h, 48, four);
    REQUIRE(a.found());
    REQUIRE(b.found());
    CHECK(a.certificate->vertices == b.certificate->vertices);
    CHECK(a.route == b.route);
}

TEST_CASE("tower path on sunflower-planted hosts") {
    for (std::int64_t e : {24, 48}) {
        auto f = build_kst_plus(3, 4);
        auto core = f.witness->a;
        for (Vertex x = 7; x < f.hypergraph.vertex_count() && core.size() < 7; ++x) core.insert(x);
        REQUIRE(core.size() == 7);
        auto built = build_sunflower(f.hypergraph, core, static_cast<std::size_t>(e));
        auto r = find_bes(built.host, e, small_seed());
        CAPTURE(e);
        CHECK(r.route == "sunflower");
        check_certificate(built.host, r, e);
        CHECK(static_cast<std::int64_t>(r.certificate->vertices.size()) <= e + deficiency(f.hypergraph));
    }
}

TEST_CASE("driver certificates survive the exact oracle") {
    auto levels = build_tower(TowerConfig{3, 4, 12});
    auto planted = glue_m(levels.back(), 4);
    auto r = find_bes(planted.hypergraph, 12, small_seed());
    REQUIRE(r.found());
    const auto& w = r.certificate->vertices;
    auto sub = induced_subhypergraph(planted.hypergraph, w);
    auto check = brute_force_configuration(sub, static_cast<std::int64_t>(w.size()), 12);
    CHECK(check.status == OracleStatus::found);
}

TEST_CASE("oversized seeds are rejected") {
    DriverConfig cfg;
    cfg.seed_s = 30;
    cfg.seed_t = 30;
    CHECK_THROWS_AS(find_bes(Hypergraph3::from_edges(12, {{0, 1, 2}}), 12, cfg), InputError);
}
