#include <doctest.h>

#include "bes/constructors.hpp"
#include "bes/error.hpp"
#include "bes/generators.hpp"

using namespace bes;

TEST_CASE("random linear hypergraphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_linear(40, 0.3, seed);
        CHECK(is_linear(h).linear);
        CHECK(h.vertex_count() == 40);
        CHECK(h.edge_count() <= 78);  // 0.3 * 40 * 39 / 6
        CHECK(h.edge_count() > 0);
        CHECK(random_linear(40, 0.3, seed) == h);
    }
    CHECK(random_linear(40, 0.3, 1) != random_linear(40, 0.3, 2));
    CHECK(random_linear(2, 1.0, 0).edge_count() == 0);
    CHECK(random_linear(30, 0.0, 0).edge_count() == 0);
    CHECK_THROWS_AS(random_linear(10, 1.5, 0), InputError);
    CHECK_THROWS_AS(random_linear(10, -0.1, 0), InputError);
}

TEST_CASE("planted hosts") {
    PlantedConfig pc;
    pc.n = 50;
    pc.density = 0.1;
    pc.e = 48;
    pc.seed = 9;
    auto h = planted_host(pc);
    auto planted = glue_m(build_tower(TowerConfig{3, 4, 48}).back(), 4).hypergraph;
    auto background = random_linear(50, 0.1, 9);
    CHECK(h.vertex_count() == 50 + planted.vertex_count());
    CHECK(h.edge_count() == background.edge_count() + planted.edge_count());
    CHECK(deficiency(h) == deficiency(background) + deficiency(planted));
    CHECK(planted_host(pc) == h);

    pc.copies = 1;
    CHECK_THROWS_AS(planted_host(pc), InputError);
}
