#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "bes/trace.hpp"

using namespace bes;

TEST_CASE("empty trace serializes to nothing") {
    RunTrace t;
    CHECK(t.empty());
    CHECK(t.to_jsonl().empty());
}

TEST_CASE("records become ordered json lines") {
    RunTrace t;
    StageTimer(t, "seed", 7).param("s", std::int64_t{3}).param("mode", std::string("rainbow")).finish("ok");
    t.add({"level", {{"j", std::int64_t{0}}}, "exhausted", 1.5, 7});

    std::istringstream in(t.to_jsonl());
    std::string line;
    std::vector<nlohmann::ordered_json> rows;
    while (std::getline(in, line)) rows.push_back(nlohmann::ordered_json::parse(line));
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].begin().key() == "version");
    CHECK(rows[0]["version"] == 1);
    CHECK(rows[0]["stage"] == "seed");
    CHECK(rows[0]["params"]["s"] == 3);
    CHECK(rows[0]["params"]["mode"] == "rainbow");
    CHECK(rows[0]["outcome"] == "ok");
    CHECK(rows[0]["seed"] == 7);
    CHECK(rows[0]["wall_ms"].get<double>() >= 0.0);

    CHECK(rows[1]["stage"] == "level");
    CHECK(rows[1]["wall_ms"] == 1.5);
    CHECK(rows[1]["outcome"] == "exhausted");
}

TEST_CASE("params keep insertion order") {
    RunTrace t;
    t.add({"x", {{"zeta", std::int64_t{1}}, {"alpha", std::int64_t{2}}}, "", 0.0, 0});
    auto row = nlohmann::ordered_json::parse(t.to_jsonl());
    CHECK(row["params"].begin().key() == "zeta");
}
