#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "emcover/constructions.hpp"
#include "emcover/random.hpp"
#include "emcover/setsys.hpp"
#include "emcover/solver.hpp"

using namespace emcover;

TEST_CASE("make_hypergraph sorts, dedups and validates") {
    auto h = make_hypergraph(3, 3, {{3, 1, 2}});
    CHECK(h.edges() == std::vector<VertexSet>{{1, 2, 3}});

    h = make_hypergraph(5, 2, {{1, 2}, {2, 1}});
    CHECK(h.size() == 1);
    CHECK(h.edges().front() == VertexSet{1, 2});

    try {
        make_hypergraph(4, 3, {{1, 2, 5}});
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("vertex out of range") != std::string::npos);
    }
    CHECK_THROWS_AS(make_hypergraph(4, 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 3, {{1, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_hypergraph(4, 3, {{0, 1, 2}}), std::out_of_range);

    // the empty system is valid
    CHECK(make_hypergraph(6, 4, {}).empty());
}

TEST_CASE("edges kept in lexicographic order with a consistent mask mirror") {
    auto h = make_hypergraph(5, 2, {{4, 5}, {1, 3}, {2, 5}, {1, 2}});
    CHECK(h.edges() == std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 5}, {4, 5}});
    CHECK(h.contains(VertexSet{2, 5}));
    CHECK_FALSE(h.contains(VertexSet{2, 4}));
    auto h2 = h.with_edge(VertexSet{3, 4});
    CHECK(h2.size() == 5);
    CHECK(h2.without_edge(VertexSet{3, 4}) == h);
    CHECK(from_masks(5, 2, h.edge_masks()) == h);
}

TEST_CASE("shadow") {
    CHECK(shadow(make_hypergraph(3, 3, {{1, 2, 3}})).edges() == std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}});

    const auto k5 = complete_hypergraph(5, 3);
    CHECK(k5.size() == 10);
    CHECK(shadow(k5) == complete_hypergraph(5, 2));

    const auto sh = shadow(make_hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}}));
    CHECK(sh.size() == 5);
    CHECK(sh.edges() == std::vector<VertexSet>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("degree_sequence") {
    CHECK(degree_sequence(complete_hypergraph(5, 3)) == std::vector<int>{6, 6, 6, 6, 6});
    CHECK(degree_sequence(make_hypergraph(4, 3, {{1, 2, 3}})) == std::vector<int>{1, 1, 1, 0});

    SUBCASE("G(9,4,3) with an exact inner covering has two full-degree vertices") {
        const auto g = build_G(9, 4, 3, ExactCovering{}).graph;
        const auto ds = degree_sequence(g);
        CHECK(ds[0] == 28);
        CHECK(ds[1] == 28);
        CHECK(ds[2] < 28);
    }
}

TEST_CASE("canonical_form") {
    CHECK(canonical_form(make_hypergraph(3, 2, {{1, 2}})) == canonical_form(make_hypergraph(3, 2, {{2, 3}})));
    CHECK(canonical_form(make_hypergraph(3, 2, {{1, 2}, {2, 3}})) !=
          canonical_form(make_hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK(canonical_form(make_hypergraph(4, 2, {{1, 2}, {3, 4}})) ==
          canonical_form(make_hypergraph(4, 2, {{1, 3}, {2, 4}})));

    // the key's hypergraph is isomorphic to the input
    const auto h = make_hypergraph(5, 3, {{1, 4, 5}, {2, 3, 5}});
    const auto form = canonical_form(h);
    CHECK(canonical_form(canonical_hypergraph(form)) == form);
    CHECK(canonical_hypergraph(form).size() == 2);

    // digraphs: a directed path and its reverse are isomorphic, a 3-cycle is not a path
    const Digraph p1(3, {{1, 2}, {2, 3}});
    const Digraph p2(3, {{3, 2}, {2, 1}});
    const Digraph c3(3, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(canonical_form(p1) == canonical_form(p2));
    CHECK(canonical_form(p1) != canonical_form(c3));
    CHECK(canonical_form(p1) != canonical_form(make_hypergraph(3, 2, {{1, 2}, {2, 3}})));

    CHECK_THROWS(canonical_form(complete_hypergraph(11, 2)));
}

TEST_CASE("k_subsets") {
    const auto s42 = k_subsets(4, 2);
    CHECK(s42.size() == 6);
    CHECK(s42.front() == VertexSet{1, 2});
    CHECK(s42.back() == VertexSet{3, 4});

    const auto s50 = k_subsets(5, 0);
    REQUIRE(s50.size() == 1);
    CHECK(s50.front().empty());

    const auto s55 = k_subsets(5, 5);
    REQUIRE(s55.size() == 1);
    CHECK(s55.front() == VertexSet{1, 2, 3, 4, 5});

    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto all = k_subsets(n, k);
            CHECK(all.size() == binom(n, k));
            CHECK(std::set<VertexSet>(all.begin(), all.end()).size() == all.size());
            CHECK(std::is_sorted(all.begin(), all.end()));
        }
}

TEST_CASE("colex_rank is a bijection onto [0, C(n,k))") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            std::set<std::uint64_t> seen;
            for_each_k_subset(n, k, [&](const VertexSet& s) {
                seen.insert(colex_rank(to_mask(s)));
                return true;
            });
            CHECK(seen.size() == binom(n, k));
            CHECK(*seen.rbegin() == binom(n, k) - 1);
        }
}

TEST_CASE("Digraph validation") {
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{1, 4}}), std::out_of_range);
    CHECK_THROWS_AS(Digraph(3, {{1, 2}, {2, 1}}, true), std::invalid_argument);
    const Digraph d(3, {{2, 1}, {1, 2}, {1, 2}});
    CHECK(d.size() == 2);
    CHECK_FALSE(d.is_orientation());
    CHECK(d.indegree(1) == 1);
    CHECK(d.outdegree(1) == 1);
    CHECK(indegrees(d) == std::vector<int>{1, 1, 0});
}

TEST_CASE("property: handshake identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        const int r = std::uniform_int_distribution<int>(1, std::min(n, 5))(rng);
        const int m = std::uniform_int_distribution<int>(0, static_cast<int>(std::min<std::uint64_t>(binom(n, r), 60)))(rng);
        const auto h = random_hypergraph(n, r, m, rng);
        const auto ds = degree_sequence(h);
        CHECK(std::accumulate(ds.begin(), ds.end(), 0) == r * m);
        CHECK(std::is_sorted(ds.rbegin(), ds.rend()));
        if (r >= 2) {
            CHECK(shadow(h).size() <= static_cast<std::size_t>(r) * h.size());
        }
    }
}

TEST_CASE("property: shadow of a shadow-complete system is complete") {
    for (int n = 3; n <= 9; ++n) {
        const auto g = greedy_covering(n, 3);
        CHECK(shadow(g) == complete_hypergraph(n, 2));
        CHECK(shadow(shadow(g)) == complete_hypergraph(n, 1));
    }
}

TEST_CASE("property: canonical form is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        const int r = std::uniform_int_distribution<int>(2, 3)(rng);
        const int m = std::uniform_int_distribution<int>(0, static_cast<int>(binom(n, r)))(rng);
        const auto h = random_hypergraph(n, r, m, rng);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(h, perm)) == canonical_form(h));

        const auto d = random_oriented(n, 0.5, rng);
        CHECK(canonical_form(relabel(d, perm)) == canonical_form(d));
    }
}
