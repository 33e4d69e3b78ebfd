#include <doctest.h>

#include <algorithm>

#include "ntucore/harness.hpp"
#include "ntucore/predicates.hpp"
#include "ntucore/reductions.hpp"
#include "support.hpp"

using namespace ntu;
using namespace ntu::testing;

namespace {

bool has_point(const std::vector<Point>& pts, const Point& p)
{
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

std::vector<Point> quarter_grid_2d()
{
    std::vector<Point> out;
    for (long i = -8; i <= 8; ++i)
        for (long j = -8; j <= 8; ++j) out.push_back({q(i, 4), q(j, 4)});
    return out;
}

} // namespace

TEST_CASE("interval basics")
{
    CHECK(Interval::open(0L, 1L).contains(q(1, 2)));
    CHECK_FALSE(Interval::open(0L, 1L).contains(0));
    CHECK(Interval::open(1L, 1L).empty());
    CHECK_FALSE(Interval::point(1).empty());
    CHECK(representative(Interval::open(0L, 1L)) == q(1, 2));
    CHECK(representative(Interval::at_most(3)) == 2);
    CHECK(representative(Interval::at_least(3)) == 4);
    CHECK(representative(Interval::all()) == 0);
}

TEST_CASE("set algebra basics")
{
    const Box unit{Interval::closed(0, 1), Interval::closed(0, 1)};
    const auto a = Region::from_box(unit);
    CHECK(region_complement(region_complement(a)) == a);
    CHECK(region_is_empty(region_intersect(a, region_complement(a))));

    const Box right{Interval::closed(1, 2), Interval::closed(0, 1)};
    const auto u = region_union(a, Region::from_box(right));
    CHECK(u.box_count() == 1);
    const Box merged{Interval::closed(0, 2), Interval::closed(0, 1)};
    CHECK(u == Region::from_box(merged));
    const auto boxes = u.boxes();
    const auto hits = std::count_if(boxes.begin(), boxes.end(), [](const Box& b) {
        return b[0].contains(1) && b[1].contains(q(1, 2));
    });
    CHECK(hits == 1);

    CHECK(region_is_empty(Region::from_boxes(2, std::vector<Box>{})));
    const auto open_box = Region::from_box({Interval::open(0L, 1L), Interval::open(0L, 1L)});
    CHECK_FALSE(region_contains_point(open_box, over_n(game_a(), {0, q(1, 2)})));
    CHECK(region_subset(Region::from_box({Interval::closed(0, 1)}), Region::from_box({Interval::closed(0, 2)})));
    CHECK_THROWS_AS(region_union(a, Region::full(3)), RegionMismatch);
}

TEST_CASE("sample_points")
{
    CHECK(sample_points(Region::from_box({Interval::point(1), Interval::point(1)})) == std::vector<Point>{{1, 1}});
    const auto cell = sample_points(Region::from_box({Interval::point(1), Interval::closed(0, 1)}));
    CHECK(has_point(cell, {1, 0}));
    CHECK(has_point(cell, {1, 1}));
    CHECK(has_point(cell, {1, q(1, 2)}));
    const auto open = sample_points(Region::from_box({Interval::open(0L, 1L)}));
    CHECK(open == std::vector<Point>{{q(1, 2)}});
    CHECK(sample_points(Region(2)).empty());

    // Every sample is a member.
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        const auto r = random_region(rng, 1 + k % 3);
        for (const auto& p : sample_points(r)) REQUIRE(r.contains(p));
    }
}

TEST_CASE("feasible_region")
{
    const auto a = game_a();
    CHECK(feasible_region(a) == Region::from_box({Interval::at_most(1), Interval::at_most(1)}));
    const auto two = new_game({1, 2}, {{Coalition::of({0}), {{0}}},
                                       {Coalition::of({1}), {{0}}},
                                       {Coalition::of({0, 1}), {{2, 0}, {0, 2}}}});
    const std::vector<Box> orthants{{Interval::at_most(2), Interval::at_most(0)},
                                    {Interval::at_most(0), Interval::at_most(2)}};
    CHECK(feasible_region(two) == Region::from_boxes(2, orthants));
}

TEST_CASE("core, Pareto and IR regions of Game A")
{
    const auto a = game_a();
    const std::vector<Box> core_boxes{{Interval::point(1), Interval::closed(0, 1)},
                                      {Interval::closed(0, 1), Interval::point(1)}};
    CHECK(core_region(a) == Region::from_boxes(2, core_boxes));
    CHECK(ir_region(a) == Region::from_box({Interval::closed(0, 1), Interval::closed(0, 1)}));
    const std::vector<Box> pareto_boxes{{Interval::point(1), Interval::at_most(1)},
                                        {Interval::at_most(1), Interval::point(1)}};
    CHECK(pareto_region(a) == Region::from_boxes(2, pareto_boxes));

    // Grid oracle with endpoint values included.
    const auto core = core_region(a), pareto = pareto_region(a), ir = ir_region(a);
    for (const auto& p : quarter_grid_2d()) {
        const auto x = over_n(a, p);
        REQUIRE(core.contains(p) == in_core(a, x));
        REQUIRE(pareto.contains(p) == is_pareto(a, x));
        REQUIRE(ir.contains(p) == is_individually_rational(a, x));
    }
}

TEST_CASE("core_region of small games")
{
    CHECK(core_region(single(5)) == Region::from_box({Interval::point(5)}));
    CHECK(pareto_region(single(5)) == Region::from_box({Interval::point(5)}));
    const auto pinned = new_game({1, 2}, {{Coalition::of({0}), {{1}}},
                                          {Coalition::of({1}), {{1}}},
                                          {Coalition::of({0, 1}), {{1, 1}}}});
    CHECK(core_region(pinned) == Region::from_box({Interval::point(1), Interval::point(1)}));
    for (const auto& p : quarter_grid_2d())
        REQUIRE(core_region(pinned).contains(p) == in_core(pinned, over_n(pinned, p)));
}

TEST_CASE("region containments on random games")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_players = 1 + seed % 4;
        const auto g = random_game(cfg);
        const auto core = core_region(g);
        REQUIRE(region_subset(core, pareto_region(g)));
        REQUIRE(region_subset(core, ir_region(g)));
        // IR is bounded: every box has finite ends.
        for (const auto& box : ir_region(g).boxes())
            for (const auto& iv : box) REQUIRE((iv.lower.is_finite() && iv.upper.is_finite()));
    }
}

TEST_CASE("hausdorff_linf")
{
    const auto a = game_a();
    const auto lifted = with_generators(a, {{a.grand(), {{q(3, 2), q(3, 2)}}}});
    CHECK(hausdorff_linf(a, lifted) == ExtRational(q(1, 2)));
    CHECK(hausdorff_linf(a, a) == ExtRational(0L));
    const auto side = with_generators(a, {{a.grand(), {{1, 1}, {q(3, 2), q(1, 2)}}}});
    CHECK(hausdorff_linf(a, side) == ExtRational(q(1, 2)));
    CHECK_THROWS_AS(hausdorff_linf(a, single(1)), RegionMismatch);
}

TEST_CASE("hausdorff_linf is a metric on random grand-coalition sets")
{
    const auto a = game_a();
    std::mt19937_64 rng(9);
    auto random_top = [&] {
        std::vector<Point> pts(1 + rng() % 3);
        for (auto& p : pts) p = random_point(rng, 2);
        return with_generators(a, {{a.grand(), pts}});
    };
    for (int k = 0; k < 200; ++k) {
        const auto x = random_top(), y = random_top(), z = random_top();
        const auto xy = hausdorff_linf(x, y), yz = hausdorff_linf(y, z), xz = hausdorff_linf(x, z);
        REQUIRE(xy == hausdorff_linf(y, x));
        REQUIRE(xy >= ExtRational(0L));
        REQUIRE((xy == ExtRational(0L)) == (feasible_region(x) == feasible_region(y)));
        REQUIRE(xz <= ExtRational(Rational(xy.value() + yz.value())));
    }
}

TEST_CASE("coordinate extrema")
{
    const auto n = Coalition::grand(2);
    const auto point = Region::from_box({Interval::point(1), Interval::point(1)});
    CHECK(inf_max_coordinate(point, n).value == ExtRational(1L));
    CHECK(sup_min_coordinate(point, n).value == ExtRational(1L));
    const auto core = core_region(game_a());
    CHECK(sup_min_coordinate(core, n).value == ExtRational(1L));
    CHECK(sup_min_coordinate(core, n).attained);
    CHECK(inf_max_coordinate(core, n).value == ExtRational(1L));
    const auto open = sup_min_coordinate(Region::from_box({Interval::open(0L, 1L)}), Coalition::grand(1));
    CHECK(open.value == ExtRational(1L));
    CHECK_FALSE(open.attained);
    CHECK(inf_max_coordinate(core, Coalition::of({0})).value == ExtRational(0L));
    CHECK_THROWS_AS(inf_max_coordinate(Region(2), n), EmptyRegionError);
}
