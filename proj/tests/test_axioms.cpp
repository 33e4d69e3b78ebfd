#include <doctest.h>

#include "ntucore/axioms.hpp"
#include "ntucore/harness.hpp"
#include "ntucore/predicates.hpp"
#include "ntucore/reductions.hpp"
#include "support.hpp"

using namespace ntu;
using namespace ntu::testing;

TEST_CASE("axiom identifiers")
{
    for (auto a : all_axioms()) CHECK(parse_axiom(to_string(a)) == a);
    CHECK_FALSE(parse_axiom("xyz"));
    CHECK(all_axioms().size() == 9);
    CHECK(builtin_solutions().size() == 6);
    CHECK(builtin_solution("IR_PARETO"));
    CHECK_FALSE(builtin_solution("core"));
}

TEST_CASE("member predicates agree with evaluate on random games")
{
    std::mt19937_64 rng(2);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_players = 1 + seed % 3;
        const auto g = random_game(cfg);
        for (const auto& sol : builtin_solutions()) {
            const auto region = sol.evaluate(g);
            std::vector<Point> pts = sample_points(region, sampling_breakpoints(g));
            for (int k = 0; k < 10; ++k) {
                Point p = random_point(rng, g.size());
                for (auto& v : p) v += 2;
                pts.push_back(p);
            }
            for (const auto& p : pts) REQUIRE(sol.member(g, over_n(g, p)) == region.contains(p));
        }
    }
}

TEST_CASE("check_po")
{
    const auto a = game_a();
    CHECK(check_po(core_solution(), a).verdict == Verdict::pass);
    const auto r = check_po(feasible_solution(), a);
    REQUIRE(r.verdict == Verdict::violated);
    REQUIRE(r.witness);
    CHECK_FALSE(is_pareto(a, *r.witness->x));
    CHECK(revalidate(r, feasible_solution()));
    CHECK(check_po(empty_solution(), a).verdict == Verdict::pass);
}

TEST_CASE("check_nespg")
{
    CHECK(check_nespg(core_solution(), single(5)).verdict == Verdict::pass);
    CHECK(core_region(single(5)) == Region::from_box({Interval::point(5)}));
    CHECK(check_nespg(empty_solution(), single(5)).verdict == Verdict::violated);
    CHECK(check_nespg(core_solution(), game_a()).verdict == Verdict::not_applicable);
}

TEST_CASE("check_irec")
{
    const auto a = game_a();
    CHECK(check_irec(core_solution(), a).verdict == Verdict::pass);
    const auto r = check_irec(empty_solution(), a);
    CHECK(r.verdict == Verdict::violated);
    CHECK(revalidate(r, empty_solution()));

    GenConfig cfg;
    cfg.n_players = 3;
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 20; ++seed) {
        cfg.seed = seed;
        const auto g = anchor_core(random_game(cfg), seed);
        const auto x = some_core_point(g);
        REQUIRE(x);
        const auto v = epsilon_x_game(g, *x, Epsilon(1));
        CHECK(check_irec(core_solution(), v).verdict == Verdict::pass);
        ++checked;
    }
}

TEST_CASE("check_ssc")
{
    const auto a = game_a();
    CHECK(check_ssc(core_solution(), a).verdict == Verdict::pass);

    const auto r = check_ssc(pareto_solution(), a);
    REQUIRE(r.verdict == Verdict::violated);
    CHECK(r.sampled);
    CHECK(revalidate(r, pareto_solution()));

    // Hand witness: x = (1,-5), S = {2}; the reduced game keeps V({2}) whose Pareto set is {0}.
    const auto x = over_n(a, {1, -5});
    const auto s = Coalition::of({1});
    const auto reduced = ss_reduced(a, s, x);
    CHECK(reduced.generators(reduced.grand()).points() == std::vector<Point>{{0}});
    CHECK_FALSE(pareto_solution().contains(reduced, x.restrict(s)));
    const AxiomReport hand{Axiom::ssc, Verdict::violated, true, "", Witness{a, reduced, s, x, std::nullopt, std::nullopt}};
    CHECK(revalidate(hand, pareto_solution()));
    CHECK_FALSE(revalidate(hand, core_solution()));

    const auto pinned = new_game({1, 2}, {{Coalition::of({0}), {{1}}},
                                          {Coalition::of({1}), {{1}}},
                                          {Coalition::of({0, 1}), {{1, 1}}}});
    CHECK(check_ssc(core_solution(), pinned).verdict == Verdict::pass);
    CHECK(check_ssc(empty_solution(), pinned).verdict == Verdict::pass);
}

TEST_CASE("check_cssc")
{
    const auto a = game_a();
    CHECK(check_cssc(core_solution(), a).verdict == Verdict::pass);
    CHECK(check_cssc(empty_solution(), a).verdict == Verdict::pass);
    // Premise fails at S = {2} for x = (1,-5).
    const auto x = over_n(a, {1, -5});
    const auto reduced = ss_reduced(a, Coalition::of({1}), x);
    CHECK_FALSE(core_solution().contains(reduced, x.restrict(Coalition::of({1}))));
    CHECK(check_cssc(core_solution(), single(5)).verdict == Verdict::not_applicable);
}

TEST_CASE("check_wsc")
{
    const auto a = game_a();
    CHECK(check_wsc(core_solution(), a).verdict == Verdict::pass);

    const auto x = over_n(a, {1, 0});
    const auto s = Coalition::of({1});
    const auto r = ws_reduced(a, s, x);
    CHECK(r.generators(r.grand()).points() == std::vector<Point>{{0}});
    CHECK(ir_solution().contains(r, x.restrict(s)));

    // Weak secession keeps PARETO's (1,-5): the reduced grand set is down(-5).
    const auto y = over_n(a, {1, -5});
    CHECK(pareto_solution().contains(ws_reduced(a, s, y), y.restrict(s)));
}

TEST_CASE("check_am")
{
    const auto a = game_a();
    const auto poorer = with_generators(a, {{Coalition::of({1}), {{-1}}}});
    CHECK(check_am(core_solution(), a, poorer).verdict == Verdict::pass);
    CHECK(region_subset(core_region(a), core_region(poorer)));
    CHECK(core_region(poorer).contains(Point{1, -1}));
    CHECK(check_am(core_solution(), a, a).verdict == Verdict::pass);
    CHECK(check_am(ir_solution(), a, poorer).verdict == Verdict::pass);

    const auto changed_top = with_generators(a, {{a.grand(), {{2, 2}}}});
    CHECK(check_am(core_solution(), a, changed_top).verdict == Verdict::not_applicable);
    const auto richer = with_generators(a, {{Coalition::of({1}), {{1}}}});
    CHECK(check_am(core_solution(), a, richer).verdict == Verdict::not_applicable);
}

TEST_CASE("check_wispc")
{
    const auto a = game_a();
    CHECK(check_wispc(core_solution(), a).verdict == Verdict::pass);
    CHECK(check_wispc(empty_solution(), a).verdict == Verdict::pass);

    const auto r = check_wispc(pareto_solution(), a);
    REQUIRE(r.verdict == Verdict::violated);
    REQUIRE(r.witness);
    REQUIRE(r.witness->coalition);
    REQUIRE(r.witness->x);
    REQUIRE(r.witness->y);
    CHECK_FALSE(r.sampled);
    CHECK(revalidate(r, pareto_solution()));
    // The witness x sits strictly below y on every member of S.
    const auto s = *r.witness->coalition;
    const auto xs = r.witness->x->restrict(s).values();
    CHECK(strictly_below(xs, r.witness->y->values()));
}

TEST_CASE("wc_probe")
{
    const auto a = game_a();
    const auto x = over_n(a, {1, 1});
    const auto seq = epsilon_sequence(a, x, Epsilon(1), 4);
    CHECK(wc_probe(seq, a, x, core_solution()).verdict == Verdict::pass);

    const std::vector<std::pair<NTUGame, PayoffVector>> one{{a, x}};
    CHECK(wc_probe(one, a, x, core_solution()).verdict == Verdict::pass);
    // A one-element sequence reduces to a membership test of the limit point.
    CHECK(wc_probe(one, a, over_n(a, {0, 0}), core_solution()).verdict == Verdict::violated);
    const std::vector<std::pair<NTUGame, PayoffVector>> outside{{a, over_n(a, {0, 0})}};
    CHECK(wc_probe(outside, a, x, core_solution()).verdict == Verdict::not_applicable);

    // Limit game with G(N) pushed down to (1/2,1/2): the sequence's points (1,1) leave its core.
    const auto lowered = with_generators(a, {{a.grand(), {{q(1, 2), q(1, 2)}}}});
    const std::vector<std::pair<NTUGame, PayoffVector>> steady(4, {a, x});
    const auto r = wc_probe(steady, lowered, x, core_solution());
    CHECK(r.verdict == Verdict::violated);
    REQUIRE(r.witness);
    CHECK(r.witness->index == std::size_t{3});
    CHECK(revalidate(r, core_solution()));

    const std::vector<std::pair<NTUGame, PayoffVector>> wrong{{with_generators(a, {{Coalition::of({0}), {{1}}}}), x}};
    CHECK_THROWS_AS(wc_probe(wrong, a, x, core_solution()), std::invalid_argument);
}

TEST_CASE("CORE passes every checker on random games")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_players = 1 + seed % 4;
        auto g = random_game(cfg);
        if (seed % 2) g = anchor_core(g, seed);
        for (auto axiom : all_axioms()) {
            const auto r = run_axiom(core_solution(), axiom, g, seed);
            INFO("seed ", seed, " axiom ", to_string(axiom), " note ", r.note);
            REQUIRE(r.verdict != Verdict::violated);
        }
    }
}
