#ifndef NTUCORE_REDUCTIONS_HPP
#define NTUCORE_REDUCTIONS_HPP

#include <utility>
#include <vector>

#include "ntucore/game.hpp"

namespace ntu {

/// Strictly positive exact rational.
class Epsilon {
public:
    explicit Epsilon(Rational value);
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

/// Whether a reduced-game constructor verifies that x is Pareto-efficient first.
enum class ParetoCheck { enforce, skip };

/// Strong secession reduced game on S with respect to x. S keeps V(S) when x_S is feasible
/// for it and is pinned to the hull of x_S otherwise; proper subcoalitions keep their sets.
NTUGame ss_reduced(const NTUGame& game, Coalition s, const PayoffVector& x,
                   ParetoCheck check = ParetoCheck::enforce);

/// Weak secession reduced game: S is always pinned to the hull of x_S.
NTUGame ws_reduced(const NTUGame& game, Coalition s, const PayoffVector& x,
                   ParetoCheck check = ParetoCheck::enforce);

/// x shifted up by eps/|N| in every coordinate.
PayoffVector x_epsilon(const PayoffVector& x, const Epsilon& eps);

/// Grand coalition gains the hull of x_epsilon(x, eps); everything else is copied.
NTUGame epsilon_game(const NTUGame& game, const PayoffVector& x, const Epsilon& eps);

/// epsilon_game with every singleton {i} pinned to x_i + eps/|N|.
NTUGame epsilon_x_game(const NTUGame& game, const PayoffVector& x, const Epsilon& eps);

/// [(epsilon_game(eps_j), x_epsilon(eps_j))] for eps_j = eps0 / 2^(j-1), j = 1..k.
std::vector<std::pair<NTUGame, PayoffVector>> epsilon_sequence(const NTUGame& game, const PayoffVector& x,
                                                               const Epsilon& eps0, std::size_t k);

} // namespace ntu

#endif
