#ifndef NTUCORE_TESTS_SUPPORT_HPP
#define NTUCORE_TESTS_SUPPORT_HPP

#include <random>

#include "ntucore/game.hpp"
#include "ntucore/region.hpp"

namespace ntu::testing {

inline Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// G({1}) = {0}, G({2}) = {0}, G(N) = {(1,1)}.
inline NTUGame game_a()
{
    return new_game({1, 2}, {{Coalition::of({0}), {{0}}}, {Coalition::of({1}), {{0}}}, {Coalition::of({0, 1}), {{1, 1}}}});
}

inline NTUGame single(const Rational& v)
{
    return new_game({1}, {{Coalition::of({0}), {{v}}}});
}

inline PayoffVector over_n(const NTUGame& game, Point p)
{
    return {game.grand(), std::move(p)};
}

/// Rational in [-3, 3] on a grid of quarters.
inline Rational grid_value(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> d(-12, 12);
    return q(d(rng), 4);
}

inline Interval random_interval(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> kind(0, 9);
    std::bernoulli_distribution coin(0.5);
    Rational a = grid_value(rng), b = grid_value(rng);
    if (b < a) std::swap(a, b);
    switch (kind(rng)) {
    case 0: return coin(rng) ? Interval::at_most(b) : Interval::below(b);
    case 1: return Interval::at_least(a);
    case 2: return Interval::point(a);
    default: return {a, coin(rng), b, a == b ? true : coin(rng)};
    }
}

inline Box random_box(std::mt19937_64& rng, std::size_t dim)
{
    Box box;
    for (std::size_t i = 0; i < dim; ++i) box.push_back(random_interval(rng));
    return box;
}

inline Region random_region(std::mt19937_64& rng, std::size_t dim, std::size_t max_boxes = 4)
{
    std::uniform_int_distribution<std::size_t> count(0, max_boxes);
    std::vector<Box> boxes(count(rng));
    for (auto& b : boxes) b = random_box(rng, dim);
    return Region::from_boxes(dim, boxes);
}

inline Point random_point(std::mt19937_64& rng, std::size_t dim)
{
    Point p;
    for (std::size_t i = 0; i < dim; ++i) p.push_back(grid_value(rng));
    return p;
}

} // namespace ntu::testing

#endif
