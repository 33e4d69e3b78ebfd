#include <doctest.h>

#include "ntucore/harness.hpp"
#include "ntucore/predicates.hpp"
#include "ntucore/reductions.hpp"
#include "support.hpp"

using namespace ntu;
using namespace ntu::testing;

namespace {

const std::vector<Point>& top_of(const NTUGame& g)
{
    return g.generators(g.grand()).points();
}

} // namespace

TEST_CASE("ss_reduced on Game A")
{
    const auto a = game_a();
    const auto r1 = ss_reduced(a, Coalition::of({0}), over_n(a, {1, 1}));
    CHECK(r1.labels() == std::vector<int>{1});
    CHECK(top_of(r1) == std::vector<Point>{{1}});
    CHECK(top_of(ss_reduced(a, Coalition::of({1}), over_n(a, {0, 1}))) == std::vector<Point>{{1}});
    CHECK(top_of(ss_reduced(a, Coalition::of({0}), over_n(a, {0, 1}))) == std::vector<Point>{{0}});
}

TEST_CASE("ws_reduced on Game A and a 3-player game")
{
    const auto a = game_a();
    CHECK(top_of(ws_reduced(a, Coalition::of({0}), over_n(a, {1, 1}))) == std::vector<Point>{{1}});
    CHECK(top_of(ws_reduced(a, Coalition::of({1}), over_n(a, {1, 0}))) == std::vector<Point>{{0}});

    GenConfig cfg;
    cfg.seed = 3;
    const auto g = random_game(cfg);
    const auto x = over_n(g, g.generators(g.grand()).points().front());
    const auto s = Coalition::of({0, 1});
    const auto r = ws_reduced(g, s, x);
    CHECK(top_of(r) == std::vector<Point>{x.restrict(s).values()});
    CHECK(r.generators(Coalition::of({0})) == g.generators(Coalition::of({0})));
    CHECK(r.generators(Coalition::of({1})) == g.generators(Coalition::of({1})));
}

TEST_CASE("reduction input validation")
{
    const auto a = game_a();
    CHECK_THROWS_AS(ss_reduced(a, a.grand(), over_n(a, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ws_reduced(a, Coalition(), over_n(a, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ss_reduced(a, Coalition::of({0}), over_n(a, {0, 0})), std::invalid_argument);
    CHECK_NOTHROW(ss_reduced(a, Coalition::of({0}), over_n(a, {0, 0}), ParetoCheck::skip));
}

TEST_CASE("reduced games keep parent labels through subgames")
{
    const auto g = new_game({3, 5, 9}, {{Coalition::of({0}), {{0}}},
                                        {Coalition::of({1}), {{0}}},
                                        {Coalition::of({2}), {{0}}},
                                        {Coalition::of({0, 1}), {{1, 1}}},
                                        {Coalition::of({0, 2}), {{2, 0}}},
                                        {Coalition::of({1, 2}), {{0, 2}}},
                                        {Coalition::of({0, 1, 2}), {{2, 2, 2}}}});
    const auto r = ss_reduced(g, Coalition::of({0, 2}), over_n(g, {2, 2, 2}));
    CHECK(r.labels() == std::vector<int>{3, 9});
    CHECK(top_of(r) == std::vector<Point>{{2, 2}});
    CHECK(r.generators(Coalition::of({1})).points() == std::vector<Point>{{0}});
}

TEST_CASE("x_epsilon")
{
    CHECK(x_epsilon(PayoffVector(Coalition::grand(2), {1, 1}), Epsilon(1)).values() == Point{q(3, 2), q(3, 2)});
    CHECK(x_epsilon(PayoffVector(Coalition::grand(3), {0, 0, 0}), Epsilon(3)).values() == Point{1, 1, 1});
    CHECK(x_epsilon(PayoffVector(Coalition::grand(2), {1, 1}), Epsilon(q(1, 4))).values() == Point{q(9, 8), q(9, 8)});
    CHECK_THROWS_AS(Epsilon(0), std::invalid_argument);
    CHECK_THROWS_AS(Epsilon(-1), std::invalid_argument);
}

TEST_CASE("epsilon_game")
{
    const auto a = game_a();
    CHECK(top_of(epsilon_game(a, over_n(a, {1, 1}), Epsilon(1))) == std::vector<Point>{{q(3, 2), q(3, 2)}});
    CHECK(top_of(epsilon_game(a, over_n(a, {1, 0}), Epsilon(1))) == std::vector<Point>{{1, 1}, {q(3, 2), q(1, 2)}});
    // x^eps below an existing generator is absorbed.
    CHECK(epsilon_game(a, over_n(a, {-2, -2}), Epsilon(1)) == a);
}

TEST_CASE("epsilon_x_game")
{
    const auto a = game_a();
    const auto v = epsilon_x_game(a, over_n(a, {1, 1}), Epsilon(1));
    CHECK(v.generators(Coalition::of({0})).points() == std::vector<Point>{{q(3, 2)}});
    CHECK(v.generators(Coalition::of({1})).points() == std::vector<Point>{{q(3, 2)}});
    CHECK(top_of(v) == std::vector<Point>{{q(3, 2), q(3, 2)}});
}

TEST_CASE("epsilon_sequence halves epsilon")
{
    const auto a = game_a();
    const auto x = over_n(a, {1, 1});
    const auto seq = epsilon_sequence(a, x, Epsilon(1), 3);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].second.values() == Point{q(3, 2), q(3, 2)});
    CHECK(seq[1].second.values() == Point{q(5, 4), q(5, 4)});
    // Last point: x + (1/2^(k-1)) * (1/|N|).
    CHECK(seq[2].second.values() == Point{q(9, 8), q(9, 8)});
    CHECK_THROWS(epsilon_sequence(a, x, Epsilon(1), 0));
}
