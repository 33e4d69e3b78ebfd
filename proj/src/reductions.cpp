#include "ntucore/reductions.hpp"

#include <map>

#include "ntucore/predicates.hpp"

namespace ntu {

Epsilon::Epsilon(Rational value) : value_(std::move(value))
{
    if (sgn(value_) <= 0) throw std::invalid_argument("epsilon must be strictly positive");
}

namespace {

void check_reduction_inputs(const NTUGame& game, Coalition s, const PayoffVector& x, ParetoCheck check)
{
    if (s.empty() || !s.proper_subset_of(game.grand()))
        throw std::invalid_argument("reduced game needs a nonempty proper coalition, got " + game.describe(s));
    if (x.support() != game.grand()) throw std::invalid_argument("reduced game needs a payoff vector over N");
    if (check == ParetoCheck::enforce && !is_pareto(game, x))
        throw std::invalid_argument("reduced game needs a Pareto-efficient vector; " + to_string(x) + " is not");
}

NTUGame restricted_with_top(const NTUGame& game, Coalition s, std::vector<Point> top)
{
    std::vector<int> labels;
    for (auto i : s.members()) labels.push_back(game.labels()[i]);
    std::map<Coalition, std::vector<Point>> sets;
    for (auto t : nonempty_subsets(s))
        if (t != s) sets.emplace(compress(t, s), game.generators(t).points());
    sets.emplace(compress(s, s), std::move(top));
    return new_game(std::move(labels), std::move(sets));
}

} // namespace

NTUGame ss_reduced(const NTUGame& game, Coalition s, const PayoffVector& x, ParetoCheck check)
{
    check_reduction_inputs(game, s, x, check);
    auto xs = x.restrict(s);
    if (contains(game, s, xs)) return restricted_with_top(game, s, game.generators(s).points());
    return restricted_with_top(game, s, {xs.values()});
}

NTUGame ws_reduced(const NTUGame& game, Coalition s, const PayoffVector& x, ParetoCheck check)
{
    check_reduction_inputs(game, s, x, check);
    return restricted_with_top(game, s, {x.restrict(s).values()});
}

PayoffVector x_epsilon(const PayoffVector& x, const Epsilon& eps)
{
    const Rational shift = eps.value() / Rational(static_cast<long>(x.size()));
    Point out = x.values();
    for (auto& v : out) v += shift;
    return {x.support(), std::move(out)};
}

NTUGame epsilon_game(const NTUGame& game, const PayoffVector& x, const Epsilon& eps)
{
    if (x.support() != game.grand()) throw std::invalid_argument("epsilon_game needs a payoff vector over N");
    auto top = game.generators(game.grand()).points();
    top.push_back(x_epsilon(x, eps).values());
    return with_generators(game, {{game.grand(), std::move(top)}});
}

NTUGame epsilon_x_game(const NTUGame& game, const PayoffVector& x, const Epsilon& eps)
{
    const auto shifted = x_epsilon(x, eps);
    auto top = game.generators(game.grand()).points();
    top.push_back(shifted.values());
    std::map<Coalition, std::vector<Point>> replacements{{game.grand(), std::move(top)}};
    for (PlayerId i = 0; i < game.size(); ++i)
        replacements[Coalition::singleton(i)] = {{shifted.at(i)}};
    return with_generators(game, replacements);
}

std::vector<std::pair<NTUGame, PayoffVector>> epsilon_sequence(const NTUGame& game, const PayoffVector& x,
                                                               const Epsilon& eps0, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("epsilon_sequence needs k >= 1");
    std::vector<std::pair<NTUGame, PayoffVector>> out;
    Rational eps = eps0.value();
    for (std::size_t j = 0; j < k; ++j, eps /= 2) {
        const Epsilon e(eps);
        out.emplace_back(epsilon_game(game, x, e), x_epsilon(x, e));
    }
    return out;
}

} // namespace ntu
