#include "ntucore/axioms.hpp"

#include <algorithm>
#include <array>

#include "ntucore/predicates.hpp"
#include "ntucore/reductions.hpp"

namespace ntu {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 9> axiom_names{{
    {Axiom::po, "po"},
    {Axiom::nespg, "nespg"},
    {Axiom::irec, "irec"},
    {Axiom::ssc, "ssc"},
    {Axiom::cssc, "cssc"},
    {Axiom::wsc, "wsc"},
    {Axiom::wc, "wc"},
    {Axiom::am, "am"},
    {Axiom::wispc, "wispc"},
}};

/// Proper nonempty coalitions, smallest first.
std::vector<Coalition> proper_coalitions(const NTUGame& game)
{
    auto all = nonempty_subsets(game.grand());
    all.pop_back();
    std::stable_sort(all.begin(), all.end(), [](Coalition a, Coalition b) { return a.size() < b.size(); });
    return all;
}

AxiomReport violated(Axiom axiom, Witness witness, std::string note = {})
{
    return AxiomReport{axiom, Verdict::violated, false, std::move(note), std::move(witness)};
}

AxiomReport not_applicable(Axiom axiom, std::string note)
{
    return AxiomReport{axiom, Verdict::not_applicable, false, std::move(note), std::nullopt};
}

PayoffVector over_n(const NTUGame& game, Point p)
{
    return {game.grand(), std::move(p)};
}

AxiomReport check_secession(const Solution& sol, const NTUGame& game, Axiom axiom)
{
    AxiomReport report{axiom, Verdict::pass, true, {}, std::nullopt};
    if (game.size() == 1) {
        report.note = "no proper coalitions";
        return report;
    }
    Region region = sol.evaluate(game);
    const Region pareto = pareto_region(game);
    if (!region_subset(region, pareto)) {
        region = region_intersect(region, pareto);
        report.note = "restricted to the Pareto-efficient part of the solution";
    }
    const auto reduce = axiom == Axiom::ssc ? ss_reduced : ws_reduced;
    const auto coalitions = proper_coalitions(game);
    for (auto& p : sample_points(region, sampling_breakpoints(game))) {
        const auto x = over_n(game, std::move(p));
        for (auto s : coalitions) {
            NTUGame reduced = reduce(game, s, x, ParetoCheck::enforce);
            if (!sol.contains(reduced, x.restrict(s))) {
                Witness w{game, std::move(reduced), s, x, std::nullopt, std::nullopt};
                auto out = violated(axiom, std::move(w), report.note);
                out.sampled = true;
                return out;
            }
        }
    }
    return report;
}

Rational threshold_between(const ExtRational& low, const ExtRational& high)
{
    if (low.is_finite() && high.is_finite()) return (low.value() + high.value()) / 2;
    if (low.is_finite()) return low.value() + 1;
    if (high.is_finite()) return high.value() - 1;
    return 0;
}

} // namespace

std::string_view to_string(Axiom axiom)
{
    for (const auto& [a, name] : axiom_names)
        if (a == axiom) return name;
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name)
{
    for (const auto& [a, n] : axiom_names)
        if (n == name) return a;
    return std::nullopt;
}

const std::vector<Axiom>& all_axioms()
{
    static const std::vector<Axiom> all = [] {
        std::vector<Axiom> out;
        for (const auto& entry : axiom_names) out.push_back(entry.first);
        return out;
    }();
    return all;
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

bool Solution::contains(const NTUGame& game, const PayoffVector& x) const
{
    if (x.values().size() != game.size()) throw std::invalid_argument("payoff vector has the wrong dimension");
    // x_S taken from a parent game is read in player order of the reduced game.
    const PayoffVector local(game.grand(), x.values());
    if (member) return member(game, local);
    return region_contains_point(evaluate(game), local);
}

Solution core_solution()
{
    return {"CORE", core_region, in_core};
}

Solution pareto_solution()
{
    return {"PARETO", pareto_region, is_pareto};
}

Solution ir_solution()
{
    return {"IR", ir_region, is_individually_rational};
}

Solution ir_pareto_solution()
{
    return {"IR_PARETO",
            [](const NTUGame& g) { return region_intersect(ir_region(g), pareto_region(g)); },
            [](const NTUGame& g, const PayoffVector& x) { return is_pareto(g, x) && is_individually_rational(g, x); }};
}

Solution feasible_solution()
{
    return {"FEASIBLE", feasible_region, [](const NTUGame& g, const PayoffVector& x) { return contains(g, g.grand(), x); }};
}

Solution empty_solution()
{
    return {"EMPTY", [](const NTUGame& g) { return Region(g.size()); },
            [](const NTUGame&, const PayoffVector&) { return false; }};
}

std::vector<Solution> builtin_solutions()
{
    return {core_solution(), pareto_solution(), ir_solution(), ir_pareto_solution(), feasible_solution(),
            empty_solution()};
}

std::optional<Solution> builtin_solution(std::string_view name)
{
    for (auto& s : builtin_solutions())
        if (s.name == name) return s;
    return std::nullopt;
}

std::vector<std::vector<Rational>> sampling_breakpoints(const NTUGame& game)
{
    std::vector<std::vector<Rational>> out;
    const auto b = b_vector(game);
    for (const auto& v : b.values()) out.push_back({v});
    return out;
}

AxiomReport check_po(const Solution& sol, const NTUGame& game)
{
    const Region excess = region_difference(sol.evaluate(game), pareto_region(game));
    if (excess.is_empty()) return {Axiom::po, Verdict::pass, false, {}, std::nullopt};
    auto x = over_n(game, sample_points(excess).front());
    return violated(Axiom::po, Witness{game, std::nullopt, game.grand(), std::move(x), std::nullopt, std::nullopt});
}

AxiomReport check_nespg(const Solution& sol, const NTUGame& game)
{
    if (game.size() != 1) return not_applicable(Axiom::nespg, "game has more than one player");
    if (!sol.evaluate(game).is_empty()) return {Axiom::nespg, Verdict::pass, false, {}, std::nullopt};
    return violated(Axiom::nespg, Witness{game, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
                    "solution is empty on a single-player game");
}

AxiomReport check_irec(const Solution& sol, const NTUGame& game)
{
    const Region rational = ir_region(game);
    if (rational.is_empty()) return not_applicable(Axiom::irec, "no individually rational vector");
    for (auto s : proper_coalitions(game)) {
        if (s.size() < 2) continue;
        if (!sol.evaluate(subgame(game, s)).is_empty())
            return not_applicable(Axiom::irec, "solution nonempty on subgame " + game.describe(s));
    }
    if (!sol.evaluate(game).is_empty()) return {Axiom::irec, Verdict::pass, false, {}, std::nullopt};
    auto x = over_n(game, sample_points(rational).front());
    return violated(Axiom::irec, Witness{game, std::nullopt, std::nullopt, std::move(x), std::nullopt, std::nullopt},
                    "individually rational vector exists but the solution is empty");
}

AxiomReport check_ssc(const Solution& sol, const NTUGame& game)
{
    return check_secession(sol, game, Axiom::ssc);
}

AxiomReport check_wsc(const Solution& sol, const NTUGame& game)
{
    return check_secession(sol, game, Axiom::wsc);
}

AxiomReport check_cssc(const Solution& sol, const NTUGame& game)
{
    if (game.size() < 2) return not_applicable(Axiom::cssc, "needs at least two players");
    std::optional<Region> own;
    const auto coalitions = proper_coalitions(game);
    for (auto& p : sample_points(pareto_region(game), sampling_breakpoints(game))) {
        const auto x = over_n(game, std::move(p));
        bool premise = true;
        for (auto s : coalitions) {
            if (!sol.contains(ss_reduced(game, s, x), x.restrict(s))) {
                premise = false;
                break;
            }
        }
        if (!premise) continue;
        bool member;
        if (sol.member) {
            member = sol.member(game, x);
        } else {
            if (!own) own = sol.evaluate(game);
            member = region_contains_point(*own, x);
        }
        if (!member) {
            auto out = violated(Axiom::cssc, Witness{game, std::nullopt, std::nullopt, x, std::nullopt, std::nullopt},
                                "every reduced game keeps x_S but x is excluded");
            out.sampled = true;
            return out;
        }
    }
    return {Axiom::cssc, Verdict::pass, true, {}, std::nullopt};
}

AxiomReport check_am(const Solution& sol, const NTUGame& game, const NTUGame& impoverished)
{
    if (impoverished.labels() != game.labels()) return not_applicable(Axiom::am, "player sets differ");
    if (!(impoverished.generators(game.grand()) == game.generators(game.grand())))
        return not_applicable(Axiom::am, "grand-coalition payoff sets differ");
    for (auto s : proper_coalitions(game))
        if (!region_subset(hull_region(impoverished, s), hull_region(game, s)))
            return not_applicable(Axiom::am, "payoff set of " + game.describe(s) + " is not shrunk");

    const Region excess = region_difference(sol.evaluate(game), sol.evaluate(impoverished));
    if (excess.is_empty()) return {Axiom::am, Verdict::pass, false, {}, std::nullopt};
    auto x = over_n(game, sample_points(excess).front());
    return violated(Axiom::am, Witness{game, impoverished, std::nullopt, std::move(x), std::nullopt, std::nullopt});
}

AxiomReport check_wispc(const Solution& sol, const NTUGame& game)
{
    if (game.size() < 2) return not_applicable(Axiom::wispc, "needs at least two players");
    const Region region = sol.evaluate(game);
    if (region.is_empty()) return {Axiom::wispc, Verdict::pass, false, "solution is empty", std::nullopt};
    const auto boxes = region.boxes();

    for (PlayerId dropped = game.size(); dropped-- > 0;) {
        const Coalition s(game.grand().bits() & ~Coalition::singleton(dropped).bits());
        NTUGame sub = subgame(game, s);
        const Region inner = sol.evaluate(sub);
        if (inner.is_empty()) continue;
        const Extremum best_min = sup_min_coordinate(inner, sub.grand());
        const Extremum least_max = inf_max_coordinate(region, s);
        if (!(least_max.value < best_min.value)) continue;

        // Rebuild a concrete pair from a box whose smallest max-coordinate lies below best_min.
        const auto members = s.members();
        for (const auto& box : boxes) {
            ExtRational box_max = ExtRational::neg_inf();
            for (auto j : members) box_max = std::max(box_max, box[j].lower);
            if (!(box_max < best_min.value)) continue;
            const Rational t = threshold_between(box_max, best_min.value);
            Point x;
            Rational x_max;
            bool first = true;
            for (PlayerId i = 0; i < game.size(); ++i) {
                if (!s.contains(i)) {
                    x.push_back(representative(box[i]));
                    continue;
                }
                x.push_back(representative(intersect(box[i], Interval::at_most(t))));
                if (first || x.back() > x_max) x_max = x.back();
                first = false;
            }
            for (const auto& cell : inner.boxes()) {
                Point y;
                bool ok = true;
                for (const auto& iv : cell) {
                    const Interval above = intersect(iv, Interval::open(x_max, ExtRational::pos_inf()));
                    if (above.empty()) {
                        ok = false;
                        break;
                    }
                    y.push_back(representative(above));
                }
                if (!ok) continue;
                Witness w{game, std::move(sub), s, over_n(game, std::move(x)), PayoffVector(Coalition::grand(s.size()), std::move(y)),
                          std::nullopt};
                return violated(Axiom::wispc, std::move(w),
                                "inf of max over the solution is " + to_string(least_max.value) +
                                    ", sup of min over the subgame solution is " + to_string(best_min.value));
            }
        }
    }
    return {Axiom::wispc, Verdict::pass, false, {}, std::nullopt};
}

AxiomReport wc_probe(const std::vector<std::pair<NTUGame, PayoffVector>>& seq, const NTUGame& limit_game,
                     const PayoffVector& limit_point, const Solution& sol)
{
    if (seq.empty()) throw std::invalid_argument("weak continuity probe needs a nonempty sequence");
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const auto& g = seq[k].first;
        if (g.labels() != limit_game.labels())
            throw std::invalid_argument("sequence game " + std::to_string(k) + " has a different player set");
        for (auto s : proper_coalitions(limit_game))
            if (!(g.generators(s) == limit_game.generators(s)))
                throw std::invalid_argument("sequence game " + std::to_string(k) + " differs from the limit on " +
                                            limit_game.describe(s));
    }

    std::optional<ExtRational> last_distance;
    std::optional<Rational> last_gap;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const auto& [g, x] = seq[k];
        if (!sol.contains(g, x))
            return not_applicable(Axiom::wc, "point " + std::to_string(k) + " is outside the solution of its game");
        const ExtRational d = hausdorff_linf(g, limit_game);
        Rational gap = 0;
        for (std::size_t i = 0; i < x.size(); ++i) gap = std::max<Rational>(gap, abs(x.values()[i] - limit_point.values()[i]));
        if ((last_distance && d > *last_distance) || (last_gap && gap > *last_gap))
            return not_applicable(Axiom::wc, "sequence is not approaching the limit at step " + std::to_string(k));
        last_distance = d;
        last_gap = gap;
    }
    AxiomReport report{Axiom::wc, Verdict::pass, false,
                       "Hausdorff distance at last step " + to_string(*last_distance) + ", point gap " +
                           to_string(*last_gap),
                       std::nullopt};
    if (sol.contains(limit_game, limit_point)) return report;
    report.verdict = Verdict::violated;
    report.witness = Witness{limit_game, seq.back().first, std::nullopt, limit_point, seq.back().second, seq.size() - 1};
    return report;
}

bool revalidate(const AxiomReport& report, const Solution& sol)
{
    if (report.verdict != Verdict::violated || !report.witness) return false;
    const auto& w = *report.witness;
    const auto& game = w.game;
    switch (report.axiom) {
    case Axiom::po:
        return w.x && sol.contains(game, *w.x) && !is_pareto(game, *w.x);
    case Axiom::nespg:
        return game.size() == 1 && sol.evaluate(game).is_empty();
    case Axiom::irec:
        return w.x && is_individually_rational(game, *w.x) && sol.evaluate(game).is_empty();
    case Axiom::ssc:
    case Axiom::wsc: {
        if (!w.x || !w.coalition || !sol.contains(game, *w.x) || !is_pareto(game, *w.x)) return false;
        const auto reduced = report.axiom == Axiom::ssc ? ss_reduced(game, *w.coalition, *w.x)
                                                        : ws_reduced(game, *w.coalition, *w.x);
        return !sol.contains(reduced, w.x->restrict(*w.coalition));
    }
    case Axiom::cssc: {
        if (!w.x || !is_pareto(game, *w.x) || sol.contains(game, *w.x)) return false;
        for (auto s : proper_coalitions(game))
            if (!sol.contains(ss_reduced(game, s, *w.x), w.x->restrict(s))) return false;
        return true;
    }
    case Axiom::am:
        return w.x && w.other && sol.contains(game, *w.x) && !sol.contains(*w.other, *w.x);
    case Axiom::wispc: {
        if (!w.x || !w.y || !w.coalition) return false;
        const auto sub = subgame(game, *w.coalition);
        if (!sol.contains(game, *w.x) || !sol.contains(sub, *w.y)) return false;
        const auto xs = w.x->restrict(*w.coalition).values();
        const auto& ys = w.y->values();
        return *std::max_element(xs.begin(), xs.end()) < *std::min_element(ys.begin(), ys.end());
    }
    case Axiom::wc:
        return w.x && !sol.contains(game, *w.x);
    }
    return false;
}

} // namespace ntu
