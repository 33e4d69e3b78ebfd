#ifndef NTUCORE_PREDICATES_HPP
#define NTUCORE_PREDICATES_HPP

#include <optional>

#include "ntucore/game.hpp"

namespace ntu {

/// y blocks x via `coalition` using `generator`, a point of V(coalition) strictly above x there.
struct DominationWitness {
    Coalition coalition;
    PayoffVector generator;
};

/// x in V(S): some generator of S weakly above x.
bool contains(const NTUGame& game, Coalition s, const PayoffVector& x);

/// x in the interior of V(S): some generator of S strictly above x in every coordinate.
bool interior_contains(const NTUGame& game, Coalition s, const PayoffVector& x);

/// y dominates x via S: y_S in V(S) and y_i > x_i for all i in S.
/// Coordinates of y and x outside S are ignored.
bool dominates(const NTUGame& game, const PayoffVector& y, const PayoffVector& x, Coalition s);

/// First blocking (coalition, generator), coalitions ascending by mask, generators in canonical order.
std::optional<DominationWitness> find_domination(const NTUGame& game, const PayoffVector& x);

bool in_core(const NTUGame& game, const PayoffVector& x);
bool is_pareto(const NTUGame& game, const PayoffVector& x);
bool is_individually_rational(const NTUGame& game, const PayoffVector& x);

/// A failure of non-levelness: x on the boundary of V(S), y <= x, y != x, and y not interior.
struct LevelnessViolation {
    Coalition coalition;
    PayoffVector boundary_point;
    PayoffVector lower_point;
};

std::optional<LevelnessViolation> find_c2_violation(const NTUGame& game);

} // namespace ntu

#endif
