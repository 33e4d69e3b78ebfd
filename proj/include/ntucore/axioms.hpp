#ifndef NTUCORE_AXIOMS_HPP
#define NTUCORE_AXIOMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntucore/game.hpp"
#include "ntucore/region.hpp"

namespace ntu {

enum class Axiom { po, nespg, irec, ssc, cssc, wsc, wc, am, wispc };

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
const std::vector<Axiom>& all_axioms();

/// A solution: assigns each game a subset of its feasible grand-coalition payoffs.
struct Solution {
    std::string name;
    std::function<Region(const NTUGame&)> evaluate;
    /// Optional pointwise membership test. When set it must agree with `evaluate`.
    std::function<bool(const NTUGame&, const PayoffVector&)> member;

    /// x may be indexed by any coalition of size |N|; its values are read in player order.
    bool contains(const NTUGame& game, const PayoffVector& x) const;
};

Solution core_solution();
Solution pareto_solution();
Solution ir_solution();
Solution ir_pareto_solution();
Solution feasible_solution();
Solution empty_solution();

/// CORE, PARETO, IR, IR_PARETO, FEASIBLE, EMPTY.
std::vector<Solution> builtin_solutions();
std::optional<Solution> builtin_solution(std::string_view name);

enum class Verdict { pass, violated, not_applicable };

std::string_view to_string(Verdict verdict);

/// Evidence attached to a violation.
struct Witness {
    NTUGame game;                     // game in which the failure shows
    std::optional<NTUGame> other;     // reduced, impoverished or subgame partner
    std::optional<Coalition> coalition;
    std::optional<PayoffVector> x;
    std::optional<PayoffVector> y;
    std::optional<std::size_t> index; // position in a game sequence
};

struct AxiomReport {
    Axiom axiom;
    Verdict verdict = Verdict::pass;
    bool sampled = false;
    std::string note;
    std::optional<Witness> witness;
};

/// Per-axis cut values used to split regions before sampling: each player's stand-alone payoff.
std::vector<std::vector<Rational>> sampling_breakpoints(const NTUGame& game);

AxiomReport check_po(const Solution& sol, const NTUGame& game);
AxiomReport check_nespg(const Solution& sol, const NTUGame& game);
AxiomReport check_irec(const Solution& sol, const NTUGame& game);
AxiomReport check_ssc(const Solution& sol, const NTUGame& game);
AxiomReport check_cssc(const Solution& sol, const NTUGame& game);
AxiomReport check_wsc(const Solution& sol, const NTUGame& game);
AxiomReport check_am(const Solution& sol, const NTUGame& game, const NTUGame& impoverished);
AxiomReport check_wispc(const Solution& sol, const NTUGame& game);

/// Finite-prefix evidence for weak continuity. Throws std::invalid_argument when some game in
/// the sequence differs from the limit game on a proper coalition.
AxiomReport wc_probe(const std::vector<std::pair<NTUGame, PayoffVector>>& seq, const NTUGame& limit_game,
                     const PayoffVector& limit_point, const Solution& sol);

/// Re-checks a violation's witness pointwise, using the solution's membership test and the
/// predicates module rather than the region that produced it.
bool revalidate(const AxiomReport& report, const Solution& sol);

} // namespace ntu

#endif
