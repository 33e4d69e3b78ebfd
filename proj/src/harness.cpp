#include "ntucore/harness.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "ntucore/io.hpp"
#include "ntucore/predicates.hpp"
#include "ntucore/region.hpp"

namespace ntu {

using nlohmann::json;

namespace {

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long denominator_bound)
{
    std::uniform_int_distribution<long> den_dist(1, denominator_bound);
    const long d = den_dist(rng);
    const Rational a = lo * d;
    const Rational b = hi * d;
    mpz_class lo_num, hi_num;
    mpz_cdiv_q(lo_num.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(hi_num.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (lo_num > hi_num) return lo;
    std::uniform_int_distribution<long> num_dist(lo_num.get_si(), hi_num.get_si());
    Rational out(num_dist(rng), d);
    out.canonicalize();
    return out;
}

PayoffVector over_n(const NTUGame& game, Point p)
{
    return {game.grand(), std::move(p)};
}

ClaimResult claim(std::string name)
{
    return ClaimResult{std::move(name), true, {}, json()};
}

void fail(ClaimResult& c, const std::string& why, json bundle)
{
    if (c.passed) {
        c.passed = false;
        c.detail = why;
        c.bundle = std::move(bundle);
    } else {
        c.detail += "; " + why;
    }
}

json bundle_for(const NTUGame& game, json inputs = json::object())
{
    return {{"game", game_to_json(game)}, {"inputs", std::move(inputs)}};
}

json bundle_for(const NTUGame& game, const AxiomReport& report, json inputs = json::object())
{
    auto out = bundle_for(game, std::move(inputs));
    out["report"] = report_to_json(report);
    return out;
}

std::vector<Coalition> all_coalitions(const NTUGame& game)
{
    return nonempty_subsets(game.grand());
}

/// Claims (a)-(d) of the perturbation construction, shared by Theorems 2 and 3.
void perturbation_claims(const NTUGame& game, const PayoffVector& x, const Epsilon& eps, const std::string& prefix,
                         std::vector<ClaimResult>& out)
{
    const json inputs{{"x", point_to_json(x.values())}, {"epsilon", to_string(eps.value())}};
    const NTUGame vx = epsilon_x_game(game, x, eps);
    const NTUGame ve = epsilon_game(game, x, eps);
    const PayoffVector xe = x_epsilon(x, eps);
    const std::size_t n = game.size();

    auto a = claim(prefix + "intermediate-subgame-cores-empty");
    for (auto s : all_coalitions(vx)) {
        if (s.size() < 2 || s.size() >= n) continue;
        if (!core_region(subgame(vx, s)).is_empty())
            fail(a, "core of the perturbed subgame on " + game.describe(s) + " is nonempty", bundle_for(game, inputs));
    }
    out.push_back(std::move(a));

    auto b = claim(prefix + "perturbed-core-is-shifted-point");
    Box point;
    for (const auto& v : xe.values()) point.push_back(Interval::point(v));
    const Region core_vx = core_region(vx);
    if (!region_equals(core_vx, Region::from_box(point)))
        fail(b, "core is " + to_string(core_vx) + ", expected " + to_string(xe), bundle_for(game, inputs));
    const auto irec = check_irec(core_solution(), vx);
    if (irec.verdict != Verdict::pass) fail(b, "irec on the perturbed game: " + irec.note, bundle_for(game, irec, inputs));
    out.push_back(std::move(b));

    auto c = claim(prefix + "shifted-point-in-epsilon-core");
    if (!region_contains_point(core_region(ve), xe) || !in_core(ve, xe))
        fail(c, to_string(xe) + " is not in the core of the epsilon game", bundle_for(game, inputs));
    out.push_back(std::move(c));

    auto d = claim(prefix + "hausdorff-sequence");
    const auto seq = epsilon_sequence(game, x, eps, 6);
    Rational eps_j = eps.value();
    std::optional<ExtRational> previous;
    for (std::size_t j = 0; j < seq.size(); ++j, eps_j /= 2) {
        const ExtRational dist = hausdorff_linf(seq[j].first, game);
        const ExtRational bound(Rational(eps_j / Rational(static_cast<long>(n))));
        if (!(dist > ExtRational(0L)))
            fail(d, "distance at step " + std::to_string(j) + " is not positive", bundle_for(game, inputs));
        if (dist > bound)
            fail(d, "distance " + to_string(dist) + " exceeds " + to_string(bound), bundle_for(game, inputs));
        if (previous && dist > *previous)
            fail(d, "distance increases at step " + std::to_string(j), bundle_for(game, inputs));
        previous = dist;
    }
    const auto probe = wc_probe(seq, game, x, core_solution());
    if (probe.verdict != Verdict::pass)
        fail(d, "weak continuity probe: " + std::string(to_string(probe.verdict)) + " " + probe.note,
             bundle_for(game, probe, inputs));
    out.push_back(std::move(d));
}

void expect_not_violated(ClaimResult& c, const AxiomReport& r, const NTUGame& game)
{
    if (r.verdict == Verdict::violated)
        fail(c, std::string(to_string(r.axiom)) + " violated on game with players " + game.describe(game.grand()),
             bundle_for(game, r));
}

} // namespace

void GenConfig::validate() const
{
    if (n_players < 1 || n_players > 5) throw std::invalid_argument("n_players must be in 1..5");
    if (max_generators_per_coalition < 1 || max_generators_per_coalition > 6)
        throw std::invalid_argument("max_generators_per_coalition must be in 1..6");
    if (value_low > value_high) throw std::invalid_argument("empty value range");
    if (denominator_bound < 1) throw std::invalid_argument("denominator_bound must be positive");
}

NTUGame random_game(const GenConfig& cfg)
{
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> count_dist(1, cfg.max_generators_per_coalition);
    std::map<Coalition, std::vector<Point>> sets;
    for (auto s : nonempty_subsets(Coalition::grand(cfg.n_players))) {
        std::vector<Point> gens(count_dist(rng));
        for (auto& g : gens)
            for (std::size_t i = 0; i < s.size(); ++i)
                g.push_back(random_rational(rng, cfg.value_low, cfg.value_high, cfg.denominator_bound));
        sets.emplace(s, std::move(gens));
    }
    std::vector<int> labels(cfg.n_players);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
    return new_game(std::move(labels), std::move(sets));
}

NTUGame impoverish(const NTUGame& game, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(0.5);
    std::map<Coalition, std::vector<Point>> replacements;
    for (auto s : nonempty_subsets(game.grand())) {
        if (s == game.grand() || keep(rng)) continue;
        const Rational shift = random_rational(rng, 0, 2, 4);
        auto gens = game.generators(s).points();
        for (auto& g : gens)
            for (auto& v : g) v -= shift;
        replacements.emplace(s, std::move(gens));
    }
    NTUGame out = with_generators(game, replacements);
    for (auto s : nonempty_subsets(game.grand()))
        if (s != game.grand() && !region_subset(hull_region(out, s), hull_region(game, s)))
            throw std::logic_error("impoverished game enlarges " + game.describe(s));
    return out;
}

NTUGame anchor_core(const NTUGame& game, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto& top = game.generators(game.grand()).points();
    std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
    const PayoffVector p(game.grand(), top[pick(rng)]);
    std::map<Coalition, std::vector<Point>> replacements;
    for (auto s : nonempty_subsets(game.grand())) {
        if (s == game.grand()) continue;
        const auto ps = p.restrict(s).values();
        auto gens = game.generators(s).points();
        bool changed = false;
        for (auto& g : gens) {
            if (!strictly_below(ps, g)) continue;
            Rational gap = g[0] - ps[0];
            for (std::size_t i = 1; i < g.size(); ++i) gap = std::min<Rational>(gap, g[i] - ps[i]);
            for (auto& v : g) v -= gap;
            changed = true;
        }
        if (changed) replacements.emplace(s, std::move(gens));
    }
    return with_generators(game, replacements);
}

bool TheoremCheckResult::passed() const
{
    for (const auto& c : claims)
        if (!c.passed) return false;
    return true;
}

std::optional<AxiomReport> replay_core_containment(const Solution& sol, const NTUGame& game)
{
    const Region excess = region_difference(sol.evaluate(game), core_region(game));
    if (excess.is_empty()) return std::nullopt;
    const auto x = over_n(game, sample_points(excess).front());

    if (!is_pareto(game, x))
        return AxiomReport{Axiom::po, Verdict::violated, false, "solution point is not Pareto-efficient",
                           Witness{game, std::nullopt, game.grand(), x, std::nullopt, std::nullopt}};

    // x is Pareto but blocked, so some proper coalition can do strictly better on its own.
    const auto blocking = find_domination(game, x);
    const Coalition s = blocking->coalition;
    NTUGame reduced = ss_reduced(game, s, x);
    const auto xs = x.restrict(s);
    if (sol.contains(reduced, xs))
        return AxiomReport{Axiom::po, Verdict::violated, false,
                           "x_S is kept by the reduced game but lies in the interior of V(S)",
                           Witness{reduced, game, reduced.grand(), PayoffVector(reduced.grand(), xs.values()), std::nullopt,
                                   std::nullopt}};
    return AxiomReport{Axiom::ssc, Verdict::violated, false, "x_S dropped by the strong secession reduced game",
                       Witness{game, std::move(reduced), s, x, std::nullopt, std::nullopt}};
}

std::optional<AxiomReport> replay_individual_rationality(const Solution& sol, const NTUGame& game,
                                                         const std::optional<PayoffVector>& planted)
{
    PayoffVector x;
    if (planted) {
        x = *planted;
    } else {
        const Region excess = region_difference(sol.evaluate(game), ir_region(game));
        if (excess.is_empty()) return std::nullopt;
        x = over_n(game, sample_points(excess).front());
    }
    if (!is_pareto(game, x))
        return AxiomReport{Axiom::po, Verdict::violated, false, "solution point is not Pareto-efficient",
                           Witness{game, std::nullopt, game.grand(), x, std::nullopt, std::nullopt}};

    const auto b = b_vector(game);
    PlayerId deficient = 0;
    while (deficient < game.size() && x.at(deficient) >= b.at(deficient)) ++deficient;
    if (deficient == game.size())
        return AxiomReport{Axiom::wispc, Verdict::pass, false, "point is individually rational", std::nullopt};

    // The single-player subgame must be solved by exactly {b_i}, or IREC / PO already fail there.
    const NTUGame single = subgame(game, Coalition::singleton(deficient));
    if (auto r = check_irec(sol, single); r.verdict == Verdict::violated) return r;
    if (auto r = check_po(sol, single); r.verdict == Verdict::violated) return r;
    if (game.size() == 1)
        return AxiomReport{Axiom::wispc, Verdict::pass, false, "single-player game", std::nullopt};

    NTUGame target = game;
    if (game.size() > 2) {
        const PlayerId partner = deficient == 0 ? 1 : 0;
        const Coalition pair = Coalition::singleton(deficient) | Coalition::singleton(partner);
        NTUGame reduced = ws_reduced(game, pair, x);
        if (!sol.contains(reduced, x.restrict(pair)))
            return AxiomReport{Axiom::wsc, Verdict::violated, false, "x_S dropped by the weak secession reduced game",
                               Witness{game, std::move(reduced), pair, x, std::nullopt, std::nullopt}};
        target = std::move(reduced);
    }
    return check_wispc(sol, target);
}

std::optional<PayoffVector> some_core_point(const NTUGame& game)
{
    const auto points = sample_points(core_region(game));
    if (points.empty()) return std::nullopt;
    return over_n(game, points.front());
}

TheoremCheckResult check_theorem1(const NTUGame& game)
{
    const auto start = std::chrono::steady_clock::now();
    TheoremCheckResult result;
    result.theorem = 1;
    const auto core = core_solution();

    auto a = claim("core-satisfies-po-nespg-ssc-cssc");
    for (auto t : all_coalitions(game)) {
        const NTUGame sub = subgame(game, t);
        expect_not_violated(a, check_po(core, sub), sub);
        if (sub.size() == 1) {
            auto r = check_nespg(core, sub);
            if (r.verdict != Verdict::pass) fail(a, "nespg fails on a single-player subgame", bundle_for(sub, r));
        }
        expect_not_violated(a, check_ssc(core, sub), sub);
        expect_not_violated(a, check_cssc(core, sub), sub);
    }
    result.claims.push_back(std::move(a));

    auto b = claim("solutions-outside-core-fail-po-or-ssc");
    for (const auto& sol : builtin_solutions()) {
        if (sol.name == "CORE") continue;
        const auto r = replay_core_containment(sol, game);
        if (!r) continue;
        if (r->verdict != Verdict::violated || !revalidate(*r, sol))
            fail(b, sol.name + " exceeds the core without a confirmed po/ssc failure", bundle_for(game, *r));
        else
            b.detail += (b.detail.empty() ? "" : ", ") + sol.name + ": " + std::string(to_string(r->axiom));
    }
    result.claims.push_back(std::move(b));

    auto c = claim("core-points-stay-in-reduced-cores");
    const Region core_n = core_region(game);
    for (auto& p : sample_points(core_n, sampling_breakpoints(game))) {
        const auto x = over_n(game, std::move(p));
        for (auto s : all_coalitions(game)) {
            if (s == game.grand()) continue;
            const NTUGame reduced = ss_reduced(game, s, x);
            const auto xs = PayoffVector(reduced.grand(), x.restrict(s).values());
            if (!in_core(reduced, xs) || !region_contains_point(core_region(reduced), xs))
                fail(c, to_string(xs) + " is not in the core of the reduced game on " + game.describe(s),
                     bundle_for(game, {{"x", point_to_json(x.values())}}));
        }
    }
    if (game.size() == 1) {
        const Region pinned = Region::from_box({Interval::point(b_vector(game).values()[0])});
        if (!region_equals(core_n, pinned)) fail(c, "single-player core is not {b_1}", bundle_for(game));
    }
    result.claims.push_back(std::move(c));

    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

TheoremCheckResult check_theorem2(const NTUGame& game, const PayoffVector& x, const Epsilon& eps)
{
    if (!in_core(game, x)) throw std::invalid_argument(to_string(x) + " is not a core point");
    const auto start = std::chrono::steady_clock::now();
    TheoremCheckResult result;
    result.theorem = 2;
    perturbation_claims(game, x, eps, "", result.claims);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

TheoremCheckResult check_theorem3(const NTUGame& game, const PayoffVector& x, const Epsilon& eps)
{
    if (!in_core(game, x)) throw std::invalid_argument(to_string(x) + " is not a core point");
    const auto start = std::chrono::steady_clock::now();
    TheoremCheckResult result;
    result.theorem = 3;
    const auto core = core_solution();

    auto a = claim("core-satisfies-po-irec-wsc-wispc-am");
    std::uint64_t seed = 1;
    for (auto t : all_coalitions(game)) {
        const NTUGame sub = subgame(game, t);
        expect_not_violated(a, check_po(core, sub), sub);
        expect_not_violated(a, check_irec(core, sub), sub);
        expect_not_violated(a, check_wsc(core, sub), sub);
        expect_not_violated(a, check_wispc(core, sub), sub);
        const NTUGame poorer = impoverish(sub, seed++);
        auto am = check_am(core, sub, poorer);
        if (am.verdict != Verdict::pass) fail(a, "am: " + std::string(to_string(am.verdict)) + " " + am.note, bundle_for(sub, am));
    }
    result.claims.push_back(std::move(a));

    auto b = claim("non-ir-solutions-fail-po-irec-wsc-or-wispc");
    for (const auto& sol : builtin_solutions()) {
        const auto r = replay_individual_rationality(sol, game);
        if (!r) continue;
        if (r->verdict != Verdict::violated || !revalidate(*r, sol))
            fail(b, sol.name + " leaves I(N,V) without a confirmed failure", bundle_for(game, *r));
        else
            b.detail += (b.detail.empty() ? "" : ", ") + sol.name + ": " + std::string(to_string(r->axiom));
    }
    result.claims.push_back(std::move(b));

    perturbation_claims(game, x, eps, "containment-", result.claims);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

json to_json(const TheoremCheckResult& result)
{
    json claims = json::array();
    for (const auto& c : result.claims) {
        json cj{{"claim", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (!c.bundle.is_null()) cj["bundle"] = c.bundle;
        claims.push_back(std::move(cj));
    }
    return {{"theorem", result.theorem}, {"passed", result.passed()}, {"seconds", result.seconds},
            {"claims", std::move(claims)}};
}

std::string to_text(const TheoremCheckResult& result)
{
    std::ostringstream out;
    out << "theorem " << result.theorem << ": " << (result.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : result.claims) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    return out.str();
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t t)
{
    return base + t;
}

AxiomReport run_axiom(const Solution& sol, Axiom axiom, const NTUGame& game, std::uint64_t seed)
{
    switch (axiom) {
    case Axiom::po: return check_po(sol, game);
    case Axiom::nespg: return check_nespg(sol, game);
    case Axiom::irec: return check_irec(sol, game);
    case Axiom::ssc: return check_ssc(sol, game);
    case Axiom::cssc: return check_cssc(sol, game);
    case Axiom::wsc: return check_wsc(sol, game);
    case Axiom::wispc: return check_wispc(sol, game);
    case Axiom::am: return check_am(sol, game, impoverish(game, seed));
    case Axiom::wc: {
        const auto points = sample_points(sol.evaluate(game));
        if (points.empty()) return AxiomReport{Axiom::wc, Verdict::not_applicable, false, "solution is empty", std::nullopt};
        const auto x = over_n(game, points.front());
        return wc_probe(epsilon_sequence(game, x, Epsilon(1), 4), game, x, sol);
    }
    }
    throw std::logic_error("unknown axiom");
}

SearchReport counterexample_search(const Solution& sol, const std::vector<Axiom>& axioms, const GenConfig& cfg,
                                   std::size_t trials)
{
    cfg.validate();
    SearchReport report{sol.name, axioms, cfg, trials, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        GenConfig trial_cfg = cfg;
        trial_cfg.seed = trial_seed(cfg.seed, t);
        const NTUGame game = random_game(trial_cfg);
        for (auto axiom : axioms) {
            auto r = run_axiom(sol, axiom, game, trial_cfg.seed);
            if (r.verdict == Verdict::violated) report.violations.push_back({t, trial_cfg.seed, std::move(r)});
        }
    }
    return report;
}

json to_json(const SearchReport& report)
{
    json axioms = json::array();
    for (auto a : report.axioms) axioms.push_back(std::string(to_string(a)));
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"trial", v.trial}, {"game_seed", v.game_seed}, {"report", report_to_json(v.report)}});
    return {{"solution", report.solution},
            {"axioms", std::move(axioms)},
            {"seed", report.config.seed},
            {"players", report.config.n_players},
            {"max_generators", report.config.max_generators_per_coalition},
            {"trials", report.trials},
            {"violations", std::move(violations)}};
}

std::string to_text(const SearchReport& report)
{
    std::ostringstream out;
    out << "solution " << report.solution << ", " << report.trials << " trials from seed " << report.config.seed
        << ": " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) {
        out << "  trial " << v.trial << " (seed " << v.game_seed << "): " << to_string(v.report.axiom);
        if (v.report.witness) {
            const auto& w = *v.report.witness;
            if (w.coalition) out << " S=" << w.game.describe(*w.coalition);
            if (w.x) out << " x=" << to_string(*w.x);
            if (w.y) out << " y=" << to_string(*w.y);
        }
        if (!v.report.note.empty()) out << " -- " << v.report.note;
        out << "\n";
    }
    return out.str();
}

} // namespace ntu
