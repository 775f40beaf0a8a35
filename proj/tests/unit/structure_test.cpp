#include <doctest.h>

#include "bes/constructors.hpp"
#include "bes/error.hpp"
#include "bes/structure.hpp"
#include "oracles.hpp"

using namespace bes;

namespace {

VertexSubset subset_from_mask(std::size_t n, std::uint64_t mask) {
    VertexSubset s(n);
    for (Vertex x = 0; x < n; ++x) {
        if ((mask >> x) & 1U) s.insert(x);
    }
    return s;
}

AnalysisOptions with(SearchMethod m) {
    AnalysisOptions o;
    o.method = m;
    return o;
}

void check_violation(const Hypergraph3& f, const VertexSubset& a, const GoodSetVerdict& v) {
    REQUIRE(v.violating_superset.has_value());
    CHECK(a.is_subset_of(*v.violating_superset));
    CHECK(v.violating_superset->size() > a.size());
    CHECK(*v.violating_deficiency == induced_deficiency(f, *v.violating_superset));
    CHECK(*v.violating_deficiency <= static_cast<std::int64_t>(a.size()));
}

}  // namespace

TEST_CASE("single edge: a pair inside it is not good") {
    auto f = Hypergraph3::from_edges(3, {{0, 1, 2}});
    std::vector<Vertex> ab{0, 1};
    auto a = VertexSubset::from_members(3, ab);
    for (auto m : {SearchMethod::exhaustive, SearchMethod::edge_closure, SearchMethod::min_cut}) {
        auto v = is_good_set(f, a, with(m));
        CHECK_FALSE(v.is_good);
        check_violation(f, a, v);
        CHECK(*v.violating_deficiency == 2);
    }
}

TEST_CASE("non-independent sets are a precondition error") {
    auto f = Hypergraph3::from_edges(3, {{0, 1, 2}});
    CHECK_THROWS_AS(is_good_set(f, VertexSubset::full(3)), PreconditionError);
    CHECK_THROWS_AS(is_good_set(f, VertexSubset(4)), InputError);
}

TEST_CASE("every method agrees with the oracle on random small hypergraphs") {
    oracle::Gen g(2024);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 4 + g.below(11);
        auto f = oracle::random_hypergraph(g, n, 0.04 + 0.2 * static_cast<double>(g.below(100)) / 100.0);
        if (f.edge_count() > 24) continue;
        const auto am = oracle::random_independent(g, f, g.below(n));
        const auto a = subset_from_mask(n, am);
        const bool expected = oracle::good(f, am);
        for (auto m : {SearchMethod::automatic, SearchMethod::exhaustive, SearchMethod::edge_closure,
                       SearchMethod::min_cut}) {
            auto v = is_good_set(f, a, with(m));
            CHECK(v.is_good == expected);
            if (!v.is_good) check_violation(f, a, v);
        }
        const bool iv = oracle::condition_iv(f);
        for (auto m : {SearchMethod::automatic, SearchMethod::exhaustive, SearchMethod::connected,
                       SearchMethod::min_cut}) {
            auto r = check_condition_iv(f, with(m));
            CHECK(r.verdict == (iv ? Verdict::holds : Verdict::violated));
            if (r.verdict == Verdict::violated) {
                CHECK(r.witness->size() >= 2);
                CHECK(*r.witness_deficiency <= 1);
                CHECK(*r.witness_deficiency == induced_deficiency(f, *r.witness));
            }
        }
    }
}

TEST_CASE("exhaustive answers do not depend on the thread count") {
    oracle::Gen g(7);
    for (int round = 0; round < 40; ++round) {
        auto f = oracle::random_hypergraph(g, 16, 0.05);
        const auto a = subset_from_mask(16, oracle::random_independent(g, f, 4));
        auto o1 = with(SearchMethod::exhaustive);
        auto o4 = o1;
        o4.threads = 4;
        auto v1 = is_good_set(f, a, o1);
        auto v4 = is_good_set(f, a, o4);
        CHECK(v1.is_good == v4.is_good);
        CHECK(v1.violating_superset == v4.violating_superset);
        auto m1 = with(SearchMethod::min_cut);
        auto m4 = m1;
        m4.threads = 4;
        CHECK(is_good_set(f, a, m1).violating_superset == is_good_set(f, a, m4).violating_superset);
        CHECK(check_condition_iv(f, m1).witness == check_condition_iv(f, m4).witness);
    }
}

TEST_CASE("the empty set is good iff no nonempty set spans as many edges as vertices") {
    oracle::Gen g(99);
    for (int round = 0; round < 100; ++round) {
        auto f = oracle::random_hypergraph(g, 8, 0.1);
        bool expected = true;
        for (std::uint64_t m = 1; m < 256; ++m) {
            if (oracle::edges_inside(f, m) >= __builtin_popcountll(m)) expected = false;
        }
        CHECK(is_good_set(f, VertexSubset(8)).is_good == expected);
    }
}

TEST_CASE("good sets bound the deficiency of every set they do not contain") {
    oracle::Gen g(31);
    int seen = 0;
    for (int round = 0; round < 400 && seen < 60; ++round) {
        auto f = oracle::random_hypergraph(g, 9, 0.06);
        const auto am = oracle::random_independent(g, f, 5);
        if (!is_good_set(f, subset_from_mask(9, am)).is_good) continue;
        ++seen;
        for (std::uint64_t u = 0; u < 512; ++u) {
            if ((u & ~am) == 0) continue;
            CHECK(oracle::deficiency_of(f, u) >= __builtin_popcountll(u & am) + 1);
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("condition (iv) examples") {
    auto bad = Hypergraph3::from_edges(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    auto r = check_condition_iv(bad);
    CHECK(r.verdict == Verdict::violated);
    CHECK(r.witness->size() == 4);
    CHECK(*r.witness_deficiency == 1);
    auto matching = Hypergraph3::from_edges(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    CHECK(check_condition_iv(matching).verdict == Verdict::holds);
    CHECK(check_condition_iv(kst_plus_hypergraph(5, 6)).verdict == Verdict::holds);
    CHECK(check_condition_iv(kst_plus_hypergraph(3, 5), with(SearchMethod::connected)).verdict == Verdict::holds);
}

TEST_CASE("condition (iv) implies the empty set is good and pairs have deficiency 2") {
    oracle::Gen g(404);
    for (int round = 0; round < 150; ++round) {
        auto f = oracle::random_hypergraph(g, 9, 0.05);
        if (check_condition_iv(f).verdict != Verdict::holds) continue;
        CHECK(is_good_set(f, VertexSubset(9)).is_good);
    }
}

TEST_CASE("connected search reports inconclusive past its caps") {
    auto f = kst_plus_hypergraph(7, 7);
    auto o = with(SearchMethod::connected);
    CHECK(check_condition_iv(f, o).verdict == Verdict::inconclusive);
    o.edge_search_limit = 64;
    o.node_budget = 1000;
    CHECK(check_condition_iv(f, o).verdict == Verdict::inconclusive);
}

TEST_CASE("subset closure") {
    auto f = build_kst_plus(4, 4);
    const auto& a = f.witness->a;
    CHECK(subset_closure_check(f.hypergraph, a, a));
    CHECK(subset_closure_check(f.hypergraph, a, VertexSubset(a.universe())));
    oracle::Gen g(3);
    auto members = a.members();
    for (int round = 0; round < 10; ++round) {
        VertexSubset sub(a.universe());
        for (auto x : members) {
            if (g.coin(0.5)) sub.insert(x);
        }
        CHECK(subset_closure_check(f.hypergraph, a, sub));
    }
    CHECK_THROWS_AS(subset_closure_check(f.hypergraph, a, f.witness->b), InputError);
}

TEST_CASE("eligibility of K_{4,4}^+ fails only the degree condition") {
    auto f = build_kst_plus(4, 4);
    auto rep = is_eligible(f.hypergraph, *f.witness);
    CHECK(rep.condition_i);
    CHECK(rep.condition_ii);
    CHECK_FALSE(rep.condition_iii.holds);
    CHECK_FALSE(rep.condition_iii.high_degree_count_ok);
    CHECK(rep.condition_iii.high_degree_vertices == 8);
    CHECK(rep.condition_iv.verdict == Verdict::holds);
    CHECK(rep.eligible() == Verdict::violated);
}

TEST_CASE("eligibility of a single edge") {
    auto f = Hypergraph3::from_edges(3, {{0, 1, 2}});
    EligibilityWitness w{VertexSubset::from_members(3, std::vector<Vertex>{0}),
                         VertexSubset::from_members(3, std::vector<Vertex>{1}), 2, 2, 2};
    auto rep = is_eligible(f, w);
    CHECK(rep.condition_i);
    CHECK_FALSE(rep.condition_ii);
    CHECK_FALSE(rep.condition_iii.holds);
    CHECK(rep.condition_iv.verdict == Verdict::holds);
    w.k = 1;
    CHECK_THROWS_AS(is_eligible(f, w), InputError);
}

TEST_CASE("degree condition arithmetic stays integral") {
    auto k = kst_plus_hypergraph(16, 16);
    auto d = check_degree_conditions(k, 32);
    CHECK(d.high_degree_vertices == 32);
    CHECK(d.bound_times_four == 256 - 128);
    CHECK(d.holds);
    CHECK_FALSE(check_degree_conditions(k, 57).high_degree_count_ok);
}
