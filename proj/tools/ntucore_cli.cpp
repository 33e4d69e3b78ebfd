#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "ntucore/axioms.hpp"
#include "ntucore/harness.hpp"
#include "ntucore/io.hpp"
#include "ntucore/predicates.hpp"
#include "ntucore/reductions.hpp"
#include "ntucore/region.hpp"

using namespace ntu;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

struct Options {
    std::string format = "text";
    std::string game_path;
    std::string other_path;
    std::string point;
    std::string epsilon = "1";
    std::string kind;
    std::vector<int> coalition;
    std::string solution = "CORE";
    std::string axioms = "all";
    std::string out;
    int which = 1;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::size_t players = 3;
    std::size_t max_generators = 3;
    bool anchor = false;
};

bool json_out(const Options& o)
{
    return o.format == "json";
}

PayoffVector point_over_n(const NTUGame& game, const std::string& text)
{
    Point p = parse_point(text);
    if (p.size() != game.size())
        throw ParseError("point has " + std::to_string(p.size()) + " coordinates, game has " +
                         std::to_string(game.size()) + " players");
    return {game.grand(), std::move(p)};
}

Solution solution_named(const std::string& name)
{
    auto sol = builtin_solution(name);
    if (!sol) throw ParseError("unknown solution " + name + " (CORE, PARETO, IR, IR_PARETO, FEASIBLE, EMPTY)");
    return *sol;
}

std::vector<Axiom> axiom_list(const std::string& text)
{
    if (text == "all") return all_axioms();
    std::vector<Axiom> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto a = parse_axiom(item);
        if (!a) throw ParseError("unknown axiom " + item);
        out.push_back(*a);
    }
    if (out.empty()) throw ParseError("no axioms given");
    return out;
}

int print_region(const Options& o, const Region& r)
{
    if (json_out(o))
        std::cout << region_to_json(r).dump(2) << "\n";
    else
        std::cout << to_string(r) << "\n";
    return exit_ok;
}

int emit_game(const Options& o, const NTUGame& game)
{
    if (o.out.empty())
        std::cout << serialize_game(game);
    else
        save_game(game, o.out);
    return exit_ok;
}

int run_membership(const Options& o)
{
    const NTUGame game = load_game(o.game_path);
    const PayoffVector x = point_over_n(game, o.point);
    const bool feasible = contains(game, game.grand(), x);
    const bool core = in_core(game, x);
    const bool pareto = is_pareto(game, x);
    const bool ir = is_individually_rational(game, x);
    if (json_out(o)) {
        json j{{"point", point_to_json(x.values())}, {"feasible", feasible}, {"core", core}, {"pareto", pareto},
               {"individually_rational", ir}};
        if (auto w = find_domination(game, x))
            j["blocked_by"] = {{"coalition", coalition_to_json(game, w->coalition)},
                               {"payoff", point_to_json(w->generator.values())}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "feasible: " << std::boolalpha << feasible << "\ncore: " << core << "\npareto: " << pareto
                  << "\nindividually rational: " << ir << "\n";
        if (auto w = find_domination(game, x))
            std::cout << "blocked by " << game.describe(w->coalition) << " via " << to_string(w->generator) << "\n";
    }
    return exit_ok;
}

int run_reduce(const Options& o)
{
    const NTUGame game = load_game(o.game_path);
    const PayoffVector x = point_over_n(game, o.point);
    const Coalition s = coalition_from_labels(game, o.coalition);
    if (o.kind == "ss") return emit_game(o, ss_reduced(game, s, x));
    if (o.kind == "ws") return emit_game(o, ws_reduced(game, s, x));
    throw ParseError("--kind must be ss or ws");
}

int run_perturb(const Options& o)
{
    const NTUGame game = load_game(o.game_path);
    const PayoffVector x = point_over_n(game, o.point);
    const Epsilon eps(parse_rational(o.epsilon));
    if (o.kind == "eps") return emit_game(o, epsilon_game(game, x, eps));
    if (o.kind == "epsx") return emit_game(o, epsilon_x_game(game, x, eps));
    throw ParseError("--kind must be eps or epsx");
}

int run_hausdorff(const Options& o)
{
    const ExtRational d = hausdorff_linf(load_game(o.game_path), load_game(o.other_path));
    if (json_out(o))
        std::cout << json{{"hausdorff_linf", to_string(d)}}.dump(2) << "\n";
    else
        std::cout << to_string(d) << "\n";
    return exit_ok;
}

int run_check_axioms(const Options& o)
{
    const NTUGame game = load_game(o.game_path);
    const Solution sol = solution_named(o.solution);
    bool violated = false;
    json reports = json::array();
    for (auto axiom : axiom_list(o.axioms)) {
        const auto r = run_axiom(sol, axiom, game, o.seed);
        violated = violated || r.verdict == Verdict::violated;
        if (json_out(o)) {
            reports.push_back(report_to_json(r));
            continue;
        }
        std::cout << to_string(axiom) << ": " << to_string(r.verdict);
        if (r.sampled) std::cout << " (sampled)";
        if (r.witness) {
            const auto& w = *r.witness;
            if (w.coalition) std::cout << " S=" << w.game.describe(*w.coalition);
            if (w.x) std::cout << " x=" << to_string(*w.x);
            if (w.y) std::cout << " y=" << to_string(*w.y);
            if (w.index) std::cout << " k=" << *w.index;
        }
        if (!r.note.empty()) std::cout << " -- " << r.note;
        std::cout << "\n";
    }
    if (json_out(o)) std::cout << json{{"solution", sol.name}, {"reports", reports}}.dump(2) << "\n";
    return violated ? exit_violation : exit_ok;
}

GenConfig config_from(const Options& o, std::uint64_t seed)
{
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_players = o.players;
    cfg.max_generators_per_coalition = o.max_generators;
    cfg.validate();
    return cfg;
}

int run_check_theorems(const Options& o)
{
    if (o.which < 1 || o.which > 3) throw ParseError("--which must be 1, 2 or 3");
    const Rational eps_cycle[] = {Rational(1), Rational(1, 2), Rational(1, 4)};
    bool failed = false;
    std::size_t skipped = 0;
    json results = json::array();
    for (std::size_t t = 0; t < o.trials; ++t) {
        const auto seed = trial_seed(o.seed, t);
        NTUGame game = o.game_path.empty() ? random_game(config_from(o, seed)) : load_game(o.game_path);
        if (o.anchor && o.game_path.empty()) game = anchor_core(game, seed);
        TheoremCheckResult r;
        if (o.which == 1) {
            r = check_theorem1(game);
        } else {
            auto x = o.point.empty() ? some_core_point(game) : std::optional(point_over_n(game, o.point));
            if (!x) {
                ++skipped;
                continue;
            }
            const Epsilon eps(o.point.empty() ? eps_cycle[t % 3] : parse_rational(o.epsilon));
            r = o.which == 2 ? check_theorem2(game, *x, eps) : check_theorem3(game, *x, eps);
        }
        failed = failed || !r.passed();
        if (json_out(o)) {
            auto j = to_json(r);
            j["seed"] = seed;
            results.push_back(std::move(j));
        } else {
            std::cout << "seed " << seed << " " << to_text(r);
        }
        if (!o.game_path.empty()) break;
    }
    if (json_out(o))
        std::cout << json{{"theorem", o.which}, {"skipped_empty_core", skipped}, {"results", results}}.dump(2) << "\n";
    else if (skipped)
        std::cout << skipped << " game(s) skipped: empty core\n";
    return failed ? exit_violation : exit_ok;
}

int run_search(const Options& o)
{
    const auto report = counterexample_search(solution_named(o.solution), axiom_list(o.axioms), config_from(o, o.seed),
                                              o.trials);
    if (json_out(o))
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << to_text(report);
    return report.violations.empty() ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact core, reduction and axiom checks for finitely generated NTU games"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> run;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_game = [&](CLI::App* cmd) { cmd->add_option("game", o.game_path, "Game file (JSON)")->required(); };

    auto* core = app.add_subcommand("core", "Print the core as canonical boxes");
    add_game(core);
    add_format(core);
    core->callback([&] { run = [&] { return print_region(o, core_region(load_game(o.game_path))); }; });

    auto* pareto = app.add_subcommand("pareto", "Print the weakly Pareto-efficient set");
    add_game(pareto);
    add_format(pareto);
    pareto->callback([&] { run = [&] { return print_region(o, pareto_region(load_game(o.game_path))); }; });

    auto* ir = app.add_subcommand("ir", "Print the individually rational set");
    add_game(ir);
    add_format(ir);
    ir->callback([&] { run = [&] { return print_region(o, ir_region(load_game(o.game_path))); }; });

    auto* membership = app.add_subcommand("membership", "Test a payoff vector against core, Pareto and IR");
    add_game(membership);
    add_format(membership);
    membership->add_option("--point", o.point, "Comma-separated rationals, one per player")->required();
    membership->callback([&] { run = [&] { return run_membership(o); }; });

    auto* reduce = app.add_subcommand("reduce", "Write a reduced game");
    add_game(reduce);
    reduce->add_option("--kind", o.kind, "ss or ws")->required()->check(CLI::IsMember({"ss", "ws"}));
    reduce->add_option("--coalition", o.coalition, "Player ids of S")->required()->delimiter(',');
    reduce->add_option("--point", o.point, "Pareto-efficient payoff vector over N")->required();
    reduce->add_option("--out", o.out, "Output file (default stdout)");
    reduce->callback([&] { run = [&] { return run_reduce(o); }; });

    auto* perturb = app.add_subcommand("perturb", "Write the epsilon-perturbed game");
    add_game(perturb);
    perturb->add_option("--kind", o.kind, "eps or epsx")->required()->check(CLI::IsMember({"eps", "epsx"}));
    perturb->add_option("--point", o.point, "Payoff vector over N")->required();
    perturb->add_option("--epsilon", o.epsilon, "Positive rational");
    perturb->add_option("--out", o.out, "Output file (default stdout)");
    perturb->callback([&] { run = [&] { return run_perturb(o); }; });

    auto* hausdorff = app.add_subcommand("hausdorff", "L-infinity Hausdorff distance between two games");
    hausdorff->add_option("a", o.game_path, "First game")->required();
    hausdorff->add_option("b", o.other_path, "Second game")->required();
    add_format(hausdorff);
    hausdorff->callback([&] { run = [&] { return run_hausdorff(o); }; });

    auto* check = app.add_subcommand("check-axioms", "Run axiom checkers for a solution on a game");
    add_game(check);
    add_format(check);
    check->add_option("--solution", o.solution, "Built-in solution name");
    check->add_option("--axioms", o.axioms, "Comma-separated axiom ids or 'all'");
    check->add_option("--seed", o.seed, "Seed for the impoverished partner used by am");
    check->callback([&] { run = [&] { return run_check_axioms(o); }; });

    auto* theorems = app.add_subcommand("check-theorems", "Instance-level theorem checks on random or given games");
    theorems->add_option("game", o.game_path, "Game file; random games are drawn when omitted");
    theorems->add_option("--which", o.which, "1, 2 or 3");
    theorems->add_option("--trials", o.trials, "Number of random games");
    theorems->add_option("--seed", o.seed, "Base seed");
    theorems->add_option("--players", o.players, "Players per random game");
    theorems->add_option("--max-generators", o.max_generators, "Generators per coalition, at most");
    theorems->add_flag("--anchor-core", o.anchor, "Make each random game's core nonempty before checking");
    theorems->add_option("--point", o.point, "Core point (theorems 2, 3; default: first core sample)");
    theorems->add_option("--epsilon", o.epsilon, "Epsilon used with --point");
    add_format(theorems);
    theorems->callback([&] { run = [&] { return run_check_theorems(o); }; });

    auto* gen = app.add_subcommand("gen-random", "Write a random game");
    gen->add_option("--players", o.players, "Number of players");
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--max-generators", o.max_generators, "Generators per coalition, at most");
    gen->add_option("--out", o.out, "Output file (default stdout)");
    gen->callback([&] { run = [&] { return emit_game(o, random_game(config_from(o, o.seed))); }; });

    auto* search = app.add_subcommand("search", "Counterexample search over random games");
    search->add_option("--solution", o.solution, "Built-in solution name");
    search->add_option("--axioms", o.axioms, "Comma-separated axiom ids or 'all'");
    search->add_option("--trials", o.trials, "Number of random games");
    search->add_option("--seed", o.seed, "Base seed");
    search->add_option("--players", o.players, "Players per random game");
    search->add_option("--max-generators", o.max_generators, "Generators per coalition, at most");
    add_format(search);
    search->callback([&] { run = [&] { return run_search(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
