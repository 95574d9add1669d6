#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "emn/graph.hpp"
#include "emn/harness.hpp"
#include "emn/matching.hpp"
#include "oracles.hpp"

using namespace emn;

namespace {
Graph family(const std::string& name, std::vector<int> params = {}) {
    return generate_family(name, params);
}
Matching match(std::vector<Edge> edges) { return Matching{std::move(edges)}; }
} // namespace

TEST_CASE("maximum matching on the named examples") {
    CHECK(max_matching(family("cycle", {6})).size() == 3);
    CHECK(max_matching(family("complete-bipartite", {1, 4})).size() == 1);
    CHECK(max_matching(family("petersen")).size() == 5);
    CHECK(max_matching(Graph::from_edges(3, {})).size() == 0);
}

TEST_CASE("blossom agrees with brute force on every small connected graph") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            Matching m = max_matching(g);
            CHECK(is_matching_in(g, m.edges));
            CHECK(m.size() == oracles::brute_max_matching_size(g));
        }
}

TEST_CASE("blossom agrees with brute force on random graphs up to 12 vertices") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        std::vector<Edge> edges;
        int density = 20 + static_cast<int>(rng() % 60);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<int>(rng() % 100) < density) edges.push_back(Edge{u, v});
        Graph g = Graph::from_edges(n, std::move(edges));
        Matching m = max_matching(g);
        CHECK(is_matching_in(g, m.edges));
        CHECK(m.size() == oracles::brute_max_matching_size(g));
    }
}

TEST_CASE("constrained perfect matching follows the deletion contract") {
    Graph c6 = family("cycle", {6});
    auto f = constrained_perfect_matching(c6, match({{0, 1}}), {{3, 4}});
    REQUIRE(f.has_value());
    CHECK(f->edges == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});

    Graph k4 = family("complete", {4});
    CHECK_FALSE(constrained_perfect_matching(k4, match({{0, 1}}), {{2, 3}}).has_value());

    auto any = constrained_perfect_matching(k4, match({}), {});
    REQUIRE(any.has_value());
    CHECK(any->size() == 2);
    CHECK(is_matching_in(k4, any->edges));
}

TEST_CASE("constrained perfect matching validates its inputs") {
    Graph k4 = family("complete", {4});
    CHECK_THROWS_AS(constrained_perfect_matching(k4, match({{0, 1}, {1, 2}}), {}),
                    std::invalid_argument); // forced shares a vertex
    CHECK_THROWS_AS(constrained_perfect_matching(family("cycle", {6}), match({{0, 2}}), {}),
                    std::invalid_argument); // forced not an edge
    CHECK_THROWS_AS(constrained_perfect_matching(k4, match({}), {{0, 4}}),
                    std::invalid_argument); // forbidden not an edge
    CHECK_THROWS_AS(constrained_perfect_matching(k4, match({{0, 1}}), {{0, 1}}),
                    std::invalid_argument); // overlap
}

TEST_CASE("E(m,n) verdicts on the named examples") {
    CHECK(has_property_emn(family("complete", {4}), {0, 0}).outcome == EmnOutcome::Holds);
    CHECK(has_property_emn(family("cycle", {6}), {1, 0}).outcome == EmnOutcome::Holds);

    EmnVerdict v = has_property_emn(family("cycle", {6}), {2, 0});
    REQUIRE(v.outcome == EmnOutcome::Fails);
    REQUIRE(v.witness.has_value());
    // lexicographically first failing pair: deleting 0,1,3,4 leaves 2 and 5 bare
    CHECK(v.witness->forced.edges == std::vector<Edge>{{0, 1}, {3, 4}});
    CHECK(v.witness->forbidden.edges.empty());

    Graph j2 = family("join-counterexample", {2});
    CHECK(has_property_emn(j2, {1, 1}).outcome == EmnOutcome::Holds);
    CHECK(has_property_emn(j2, {2, 0}).outcome == EmnOutcome::Fails);
}

TEST_CASE("degenerate graphs route through NotApplicable") {
    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    EmnVerdict v = has_property_emn(two_edges, {0, 0});
    CHECK(v.outcome == EmnOutcome::NotApplicable);
    CHECK(v.reason == "disconnected");

    v = has_property_emn(family("complete", {4}), {1, 1});
    CHECK(v.outcome == EmnOutcome::NotApplicable);
    CHECK(v.reason == "too few vertices");

    v = has_property_emn(family("complete", {5}), {0, 0});
    CHECK(v.outcome == EmnOutcome::NotApplicable);
    CHECK(v.reason == "odd vertex count");

    // disconnected takes precedence over the size condition
    v = has_property_emn(Graph::from_edges(3, {{0, 1}}), {2, 2});
    CHECK(v.reason == "disconnected");

    CHECK_THROWS_AS(has_property_emn(family("complete", {4}), {-1, 0}),
                    std::invalid_argument);
}

TEST_CASE("witness audit") {
    Graph c6 = family("cycle", {6});
    CHECK(verify_witness(c6, match({{0, 1}, {3, 4}}), match({})));
    Graph k4 = family("complete", {4});
    CHECK_FALSE(verify_witness(k4, match({{0, 1}}), match({})));
    CHECK(verify_witness(k4, match({{0, 1}}), match({{2, 3}})));
    // sharing a vertex is not a legal witness
    CHECK_FALSE(verify_witness(k4, match({{0, 1}}), match({{1, 2}})));
    CHECK_THROWS_AS(verify_witness(k4, match({{0, 1}, {1, 2}}), match({})),
                    std::invalid_argument);
}

TEST_CASE("perfect matching enumeration") {
    CHECK(enumerate_perfect_matchings(family("cycle", {6})).size() == 2);
    CHECK(enumerate_perfect_matchings(family("complete", {4})).size() == 3);
    CHECK(enumerate_perfect_matchings(family("complete", {5})).empty());
    CHECK(enumerate_perfect_matchings(family("petersen")).size() == 6);
    for (int n = 2; n <= 6; n += 2)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            auto mine = enumerate_perfect_matchings(g);
            auto ref = oracles::brute_perfect_matchings(g);
            CHECK(mine.size() == ref.size());
        }
}

TEST_CASE("decision procedure agrees with the brute-force oracle at unit scale") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            for (int m = 0; m <= 2; ++m)
                for (int k = 0; k + m <= 2; ++k) {
                    EmnVerdict mine = has_property_emn(g, {m, k});
                    oracles::BruteEmn ref = oracles::brute_emn(g, m, k);
                    REQUIRE(mine.outcome == ref.outcome);
                    if (mine.outcome == EmnOutcome::NotApplicable)
                        CHECK(mine.reason == ref.reason);
                    if (mine.outcome == EmnOutcome::Fails) {
                        CHECK(mine.witness->forced.edges == ref.witness_m);
                        CHECK(mine.witness->forbidden.edges == ref.witness_n);
                        CHECK(verify_witness(g, mine.witness->forced,
                                             mine.witness->forbidden));
                    }
                }
}
