#ifndef NTUCORE_HARNESS_HPP
#define NTUCORE_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntucore/axioms.hpp"
#include "ntucore/game.hpp"
#include "ntucore/reductions.hpp"

namespace ntu {

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n_players = 3;
    std::size_t max_generators_per_coalition = 3;
    Rational value_low = 0;
    Rational value_high = 4;
    long denominator_bound = 4;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Deterministic in cfg (same config, same game).
NTUGame random_game(const GenConfig& cfg);

/// Keeps V(N); each proper coalition's generators are either kept or all shifted down by one
/// random nonnegative rational. The result is checked against the antimonotonicity premise.
NTUGame impoverish(const NTUGame& game, std::uint64_t seed);

/// Picks a generator p of G(N) (by seed) and lowers every proper-coalition generator g with
/// g >> p_S by min_i(g_i - p_i), so g touches p. Then no coalition blocks p and the core is nonempty.
NTUGame anchor_core(const NTUGame& game, std::uint64_t seed);

struct ClaimResult {
    std::string name;
    bool passed = true;
    std::string detail;
    nlohmann::json bundle; // reproduction data, set on failure
};

struct TheoremCheckResult {
    int theorem = 0;
    std::vector<ClaimResult> claims;
    double seconds = 0;

    bool passed() const;
};

/// Replays the argument that a solution satisfying PO and SSC stays inside the core: for a point
/// of sol(game) outside the core, returns the PO or SSC failure it forces (on the game or on
/// the reduced game). Returns nothing when sol(game) is inside the core.
std::optional<AxiomReport> replay_core_containment(const Solution& sol, const NTUGame& game);

/// Replays the argument that PO, IREC, WSC and WISPC keep a solution individually rational,
/// starting from `planted` if given, else from some point of sol(game) outside I(N,V).
/// Returns the forced failure, or a pass report if none could be produced; nothing when
/// sol(game) is individually rational and no point is planted.
std::optional<AxiomReport> replay_individual_rationality(const Solution& sol, const NTUGame& game,
                                                         const std::optional<PayoffVector>& planted = std::nullopt);

/// First canonical sample point of the core, if the core is nonempty.
std::optional<PayoffVector> some_core_point(const NTUGame& game);

TheoremCheckResult check_theorem1(const NTUGame& game);
/// Throws std::invalid_argument unless x is in the core.
TheoremCheckResult check_theorem2(const NTUGame& game, const PayoffVector& x, const Epsilon& eps);
TheoremCheckResult check_theorem3(const NTUGame& game, const PayoffVector& x, const Epsilon& eps);

nlohmann::json to_json(const TheoremCheckResult& result);
std::string to_text(const TheoremCheckResult& result);

struct SearchViolation {
    std::size_t trial = 0;
    std::uint64_t game_seed = 0;
    AxiomReport report;
};

struct SearchReport {
    std::string solution;
    std::vector<Axiom> axioms;
    GenConfig config;
    std::size_t trials = 0;
    std::vector<SearchViolation> violations;
};

/// Seed used for trial t of a search or batch started from `base`.
std::uint64_t trial_seed(std::uint64_t base, std::size_t t);

SearchReport counterexample_search(const Solution& sol, const std::vector<Axiom>& axioms, const GenConfig& cfg,
                                   std::size_t trials);

/// Runs one axiom checker on a game; `seed` drives the impoverished partner for am.
AxiomReport run_axiom(const Solution& sol, Axiom axiom, const NTUGame& game, std::uint64_t seed);

nlohmann::json to_json(const SearchReport& report);
std::string to_text(const SearchReport& report);

} // namespace ntu

#endif
