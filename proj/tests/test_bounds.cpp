#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "emcover/bounds.hpp"
#include "emcover/random.hpp"
#include "emcover/setsys.hpp"

using namespace emcover;

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// plain long arithmetic, independent of the big-integer path
long binom_l(long n, long k) {
    if (k < 0 || k > n) return 0;
    long c = 1;
    for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

TEST_CASE("erdos_moser_f") {
    CHECK(erdos_moser_f(5, 2) == 6);
    CHECK(erdos_moser_f(6, 3) == 11);
    CHECK(erdos_moser_f(4, 3) == 6);
    CHECK(erdos_moser_f(5, 3) == 9);
    for (long n = 3; n <= 40; ++n)
        for (long k = 2; k < n; ++k)
            CHECK(erdos_moser_f(n, k) == (k - 1) * (n - 1) - binom_l(k - 1, 2) + ceil_div(n - k + 1, 2));
    CHECK_THROWS(erdos_moser_f(4, 4));
    CHECK_THROWS(erdos_moser_f(4, 1));
}

TEST_CASE("g_value") {
    CHECK(g_value(9, 4, 3, 7) == 56);
    CHECK(g_value(6, 3, 3, 4) == 14);  // inner D(5,3) = 4
    for (long n = 3; n <= 30; ++n)
        for (long k = 2; k < n; ++k) CHECK(g_value(n, k, 2, ceil_div(n - k + 1, 2)) == erdos_moser_f(n, k));
    // inner value below the trivial bound is rejected
    CHECK_THROWS(g_value(9, 4, 3, 6));
    CHECK_THROWS(g_value(6, 3, 3, 3));
    CHECK_THROWS(g_value(4, 4, 3, 3));
}

TEST_CASE("g_steiner") {
    const auto fano = g_steiner(9, 4, 3);
    CHECK(fano.integral);
    CHECK(fano.value == 56);

    const auto s843 = g_steiner(8, 4, 3);
    CHECK(s843.integral);
    CHECK(s843.candidate());
    CHECK(s843.value == 41);

    CHECK_FALSE(g_steiner(6, 3, 3).integral);  // inner 5 vertices, C(5,2) = 10
    CHECK(g_steiner(8, 3, 3).integral);        // inner 7 vertices, Fano again
    for (long n = 3; n <= 30; ++n)
        for (long k = 2; k < n; ++k) {
            const auto sv = g_steiner(n, k, 2);
            CHECK(sv.integral == ((n - k + 1) % 2 == 0));
            if (sv.integral) CHECK(sv.value == erdos_moser_f(n, k));
        }
}

TEST_CASE("covering_lb") {
    CHECK(covering_lb(7, 3) == 7);
    CHECK(covering_lb(4, 3) == 2);
    for (long r = 2; r <= 8; ++r) CHECK(covering_lb(r, r) == 1);
    for (long n = 3; n <= 20; ++n)
        for (long r = 2; r <= n; ++r) CHECK(covering_lb(n, r) == ceil_div(binom_l(n, r - 1), r));
}

TEST_CASE("big_binom agrees with the word-size table") {
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(big_binom(n, k) == binom(n, k));
    CHECK(big_binom(100, 50) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("fractional_binomial") {
    CHECK(fractional_binomial(5, 3) == doctest::Approx(10));
    CHECK(fractional_binomial(3, 3) == doctest::Approx(1));
    CHECK(fractional_binomial(3.5, 2) == doctest::Approx(4.375));
    for (int r = 1; r <= 6; ++r) {
        double prev = fractional_binomial(r - 1, r);
        for (double x = r - 1 + 0.25; x < r + 20; x += 0.25) {
            const double cur = fractional_binomial(x, r);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("lovasz_x and kk_shadow_lb") {
    CHECK(lovasz_x(10, 3).x == doctest::Approx(5).epsilon(1e-9));
    for (int r = 1; r <= 6; ++r) CHECK(lovasz_x(1, r).x == doctest::Approx(r).epsilon(1e-9));
    const double root = (1 + std::sqrt(33.0)) / 2;  // x(x-1) = 8
    CHECK(lovasz_x(4, 2).x == doctest::Approx(root).epsilon(1e-9));
    CHECK(root == doctest::Approx(3.3722813).epsilon(1e-7));

    CHECK(kk_shadow_lb(10, 3) == doctest::Approx(10));
    CHECK(kk_shadow_lb(1, 3) == doctest::Approx(3));
    CHECK(kk_shadow_lb(4, 2) == doctest::Approx(root).epsilon(1e-9));
    CHECK_THROWS(lovasz_x(0, 3));

    SUBCASE("round trip") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 500; ++i) {
            const int r = std::uniform_int_distribution<int>(1, 6)(rng);
            const double x = std::uniform_real_distribution<double>(r, r + 40)(rng);
            CHECK(lovasz_x(fractional_binomial(x, r), r).x == doctest::Approx(x).epsilon(1e-8));
        }
    }
}

TEST_CASE("property: Kruskal-Katona lower bound never exceeds the shadow") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(4, 12)(rng);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        const int m = std::uniform_int_distribution<int>(1, static_cast<int>(std::min<std::uint64_t>(binom(n, r), 150)))(rng);
        const auto h = random_hypergraph(n, r, m, rng);
        CHECK(static_cast<double>(shadow(h).size()) >= kk_shadow_lb(m, r) - 1e-6);
    }
    for (int n = 3; n <= 12; ++n)
        for (int r = 2; r <= 4 && r <= n; ++r)
            CHECK(static_cast<double>(shadow(complete_hypergraph(n, r)).size()) ==
                  doctest::Approx(kk_shadow_lb(static_cast<double>(binom(n, r)), r)).epsilon(1e-9));
}

TEST_CASE("loomis_whitney_check") {
    const std::vector<std::vector<int>> single{{1, 1}};
    auto lw = loomis_whitney_check(single);
    CHECK(lw.holds);
    CHECK(lw.projections_product == 1);
    CHECK(lw.set_power == 1);

    // product set in three coordinates: equality
    std::vector<std::vector<int>> grid;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 4; ++c) grid.push_back({a, b, c});
    lw = loomis_whitney_check(grid);
    CHECK(lw.holds);
    CHECK(lw.set_power == 24 * 24);
    CHECK(lw.projections_product == lw.set_power);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<std::vector<int>> s;
        const int size = std::uniform_int_distribution<int>(1, 125)(rng);
        std::uniform_int_distribution<int> coord(1, 5);
        while (static_cast<int>(s.size()) < size) s.insert({coord(rng), coord(rng), coord(rng)});
        const std::vector<std::vector<int>> tuples(s.begin(), s.end());
        const auto res = loomis_whitney_check(tuples);
        CHECK(res.holds);
        // independent recount of the projection sizes
        std::set<std::vector<int>> p0, p1, p2;
        for (const auto& t : tuples) {
            p0.insert({t[1], t[2]});
            p1.insert({t[0], t[2]});
            p2.insert({t[0], t[1]});
        }
        CHECK(res.projections_product == BigInt(p0.size() * p1.size() * p2.size()));
        CHECK(res.set_power == BigInt(tuples.size() * tuples.size()));
    }

    const std::vector<std::vector<int>> ragged{{1, 2}, {1, 2, 3}};
    CHECK_THROWS(loomis_whitney_check(ragged));
    const std::vector<std::vector<int>> unary{{1}};
    CHECK_THROWS(loomis_whitney_check(unary));
}
