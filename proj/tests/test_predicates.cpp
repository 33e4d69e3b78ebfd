#include <doctest.h>

#include "ntucore/harness.hpp"
#include "ntucore/predicates.hpp"
#include "support.hpp"

using namespace ntu;
using namespace ntu::testing;

namespace {

// Independent domination scan: every coalition, every generator, coordinates compared one by one.
bool blocked_by_scan(const NTUGame& game, const Point& x)
{
    for (std::uint32_t bits = 1; bits < (1U << game.size()); ++bits) {
        const Coalition s(bits);
        for (const auto& g : game.generators(s).points()) {
            bool strict = true;
            std::size_t k = 0;
            for (std::size_t i = 0; i < game.size(); ++i)
                if (s.contains(i)) strict = strict && x[i] < g[k++];
            if (strict) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("contains and interior_contains on Game A")
{
    const auto a = game_a();
    const auto n = a.grand();
    CHECK(contains(a, n, over_n(a, {1, 1})));
    CHECK_FALSE(contains(a, n, over_n(a, {1, 2})));
    CHECK(contains(a, n, over_n(a, {-5, 1})));
    CHECK(interior_contains(a, n, over_n(a, {0, 0})));
    CHECK_FALSE(interior_contains(a, n, over_n(a, {1, 0})));
    const auto s1 = Coalition::of({0});
    CHECK(interior_contains(a, s1, PayoffVector(s1, {-1})));
    CHECK_THROWS_AS(contains(a, s1, over_n(a, {0, 0})), std::invalid_argument);
}

TEST_CASE("dominates on Game A")
{
    const auto a = game_a();
    CHECK(dominates(a, over_n(a, {1, 1}), over_n(a, {0, 0}), a.grand()));
    CHECK_FALSE(dominates(a, over_n(a, {1, 1}), over_n(a, {1, 0}), a.grand()));
    // Coordinates outside S are ignored.
    CHECK(dominates(a, over_n(a, {0, 99}), over_n(a, {-5, 100}), Coalition::of({0})));
}

TEST_CASE("find_domination on Game A")
{
    const auto a = game_a();
    const auto w = find_domination(a, over_n(a, {0, 0}));
    REQUIRE(w);
    CHECK(w->coalition == a.grand());
    CHECK(w->generator.values() == Point{1, 1});
    CHECK_FALSE(find_domination(a, over_n(a, {1, 0})));
    const auto w2 = find_domination(a, over_n(a, {1, -5}));
    REQUIRE(w2);
    CHECK(w2->coalition == Coalition::of({1}));
    CHECK(w2->generator.values() == Point{0});
    for (const Point& x : {Point{0, 0}, Point{1, 0}, Point{1, -5}})
        CHECK(blocked_by_scan(a, x) == find_domination(a, over_n(a, x)).has_value());
}

TEST_CASE("find_domination agrees with an independent scan")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_players = 1 + seed % 4;
        const auto g = random_game(cfg);
        for (int k = 0; k < 20; ++k) {
            Point x = random_point(rng, g.size());
            for (auto& v : x) v += 2;
            REQUIRE(blocked_by_scan(g, x) == find_domination(g, over_n(g, x)).has_value());
        }
    }
}

TEST_CASE("core, Pareto and individual rationality on Game A")
{
    const auto a = game_a();
    CHECK(in_core(a, over_n(a, {1, 1})));
    CHECK(in_core(a, over_n(a, {1, 0})));
    CHECK_FALSE(in_core(a, over_n(a, {0, 0})));
    CHECK(is_pareto(a, over_n(a, {1, 0})));
    CHECK(is_pareto(a, over_n(a, {1, -5})));
    CHECK_FALSE(is_pareto(a, over_n(a, {0, 0})));
    CHECK(is_individually_rational(a, over_n(a, {1, 0})));
    CHECK_FALSE(is_individually_rational(a, over_n(a, {1, -5})));
    CHECK(is_individually_rational(a, over_n(a, {1, 1})));
    CHECK_FALSE(in_core(a, over_n(a, {2, 0})));
}

TEST_CASE("find_c2_violation")
{
    const auto a = game_a();
    const auto v = find_c2_violation(a);
    REQUIRE(v);
    CHECK(v->coalition == a.grand());
    CHECK(v->boundary_point.values() == Point{1, 1});
    CHECK(v->lower_point.values() == Point{1, 0});
    CHECK_FALSE(find_c2_violation(single(5)));

    // The witness must be a genuine levelness failure: y <= x, y != x, y on the boundary of V(S).
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_players = 2 + seed % 3;
        const auto g = random_game(cfg);
        const auto w = find_c2_violation(g);
        REQUIRE(w);
        const auto s = w->coalition;
        REQUIRE(s.size() >= 2);
        const auto& x = w->boundary_point;
        const auto& y = w->lower_point;
        REQUIRE(weakly_below(y.values(), x.values()));
        REQUIRE(y.values() != x.values());
        REQUIRE(contains(g, s, x));
        REQUIRE(contains(g, s, y));
        REQUIRE_FALSE(interior_contains(g, s, y));
    }
}
