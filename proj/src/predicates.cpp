#include "ntucore/predicates.hpp"

namespace ntu {

namespace {

void require_support(const NTUGame& game, Coalition s, const PayoffVector& x)
{
    if (x.support() != s)
        throw std::invalid_argument("payoff vector is not indexed by coalition " + game.describe(s));
}

} // namespace

bool contains(const NTUGame& game, Coalition s, const PayoffVector& x)
{
    require_support(game, s, x);
    for (const auto& g : game.generators(s).points())
        if (weakly_below(x.values(), g)) return true;
    return false;
}

bool interior_contains(const NTUGame& game, Coalition s, const PayoffVector& x)
{
    require_support(game, s, x);
    for (const auto& g : game.generators(s).points())
        if (strictly_below(x.values(), g)) return true;
    return false;
}

bool dominates(const NTUGame& game, const PayoffVector& y, const PayoffVector& x, Coalition s)
{
    if (!s.subset_of(y.support()) || !s.subset_of(x.support()))
        throw std::invalid_argument("domination check on coordinates missing from a vector");
    const auto ys = y.restrict(s);
    return strictly_below(x.restrict(s).values(), ys.values()) && contains(game, s, ys);
}

std::optional<DominationWitness> find_domination(const NTUGame& game, const PayoffVector& x)
{
    if (x.support() != game.grand()) throw std::invalid_argument("find_domination needs a vector over N");
    for (auto s : nonempty_subsets(game.grand())) {
        const auto xs = x.restrict(s);
        const auto& gens = game.generators(s);
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (strictly_below(xs.values(), gens.points()[k])) return DominationWitness{s, gens.generator(k)};
    }
    return std::nullopt;
}

bool in_core(const NTUGame& game, const PayoffVector& x)
{
    return contains(game, game.grand(), x) && !find_domination(game, x);
}

bool is_pareto(const NTUGame& game, const PayoffVector& x)
{
    return contains(game, game.grand(), x) && !interior_contains(game, game.grand(), x);
}

bool is_individually_rational(const NTUGame& game, const PayoffVector& x)
{
    if (!contains(game, game.grand(), x)) return false;
    const auto b = b_vector(game);
    return weakly_below(b.values(), x.values());
}

std::optional<LevelnessViolation> find_c2_violation(const NTUGame& game)
{
    for (auto s : nonempty_subsets(game.grand())) {
        if (s.size() < 2) continue;
        const auto& gens = game.generators(s).points();
        const auto& g = gens.front();
        const std::size_t last = g.size() - 1;
        // Push the last coordinate down by at most 1, and never below any generator that is
        // strictly above g in all other coordinates; y then stays on the lower face of g.
        Rational step = 1;
        for (const auto& h : gens) {
            bool above_elsewhere = true;
            for (std::size_t i = 0; i < last && above_elsewhere; ++i) above_elsewhere = h[i] > g[i];
            if (above_elsewhere && &h != &g && g[last] - h[last] < step) step = g[last] - h[last];
        }
        Point y = g;
        y[last] -= step;
        return LevelnessViolation{s, PayoffVector(s, g), PayoffVector(s, std::move(y))};
    }
    return std::nullopt;
}

} // namespace ntu
