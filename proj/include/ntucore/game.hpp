#ifndef NTUCORE_GAME_HPP
#define NTUCORE_GAME_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntucore/rational.hpp"

namespace ntu {

/// Position of a player in a game's ordered player list (0..n-1).
using PlayerId = std::size_t;

inline constexpr std::size_t max_players = 16;

/// Set of player positions, stored as a bit mask.
class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

    static Coalition of(std::initializer_list<PlayerId> members);
    static constexpr Coalition singleton(PlayerId i) { return Coalition(std::uint32_t{1} << i); }
    static constexpr Coalition grand(std::size_t n) { return Coalition((std::uint32_t{1} << n) - 1); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(PlayerId i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(Coalition other) const { return subset_of(other) && bits_ != other.bits_; }

    /// Index of player i among the members (its coordinate in a vector over this coalition).
    constexpr std::size_t rank(PlayerId i) const
    {
        return static_cast<std::size_t>(std::popcount(bits_ & ((std::uint32_t{1} << i) - 1)));
    }

    std::vector<PlayerId> members() const;

    friend constexpr auto operator<=>(Coalition, Coalition) = default;
    friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
    friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }

private:
    std::uint32_t bits_ = 0;
};

/// Nonempty subsets of `of`, ascending by bit mask.
std::vector<Coalition> nonempty_subsets(Coalition of);

/// Maps a subset of `parent` into the positions of the game restricted to `parent`.
Coalition compress(Coalition sub, Coalition parent);

/// Exact payoff vector indexed by the members of one coalition.
class PayoffVector {
public:
    PayoffVector() = default;
    PayoffVector(Coalition support, Point values);

    Coalition support() const { return support_; }
    const Point& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    /// Coordinate of player position i (must be in the support).
    const Rational& at(PlayerId i) const;

    /// x_S for S a subset of the support.
    PayoffVector restrict(Coalition s) const;

    friend bool operator==(const PayoffVector&, const PayoffVector&) = default;

private:
    Coalition support_;
    Point values_;
};

std::string to_string(const PayoffVector& x);

/// Componentwise a <= b.
bool weakly_below(const Point& a, const Point& b);
/// Componentwise a < b.
bool strictly_below(const Point& a, const Point& b);

/// Finite antichain whose downward hull is one coalition's payoff set.
class GeneratorSet {
public:
    GeneratorSet() = default;

    Coalition coalition() const { return coalition_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    PayoffVector generator(std::size_t k) const { return {coalition_, points_[k]}; }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    friend GeneratorSet normalize_generators(Coalition, std::vector<Point>);

    Coalition coalition_;
    std::vector<Point> points_;
};

/// Drops dominated points and duplicates, sorts lexicographically.
/// Throws GameError on empty input or mixed dimensions.
GeneratorSet normalize_generators(Coalition coalition, std::vector<Point> raw);

class GameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finitely generated NTU game. Immutable once built.
class NTUGame {
public:
    /// External player labels, one per position.
    const std::vector<int>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    Coalition grand() const { return Coalition::grand(labels_.size()); }

    const GeneratorSet& generators(Coalition s) const;

    std::string describe(Coalition s) const;

    friend bool operator==(const NTUGame&, const NTUGame&) = default;

private:
    friend NTUGame new_game(std::vector<int>, std::map<Coalition, std::vector<Point>>);

    std::vector<int> labels_;
    std::vector<GeneratorSet> sets_; // index: mask - 1
};

/// Builds and validates a game. Every nonempty coalition needs a nonempty point set of
/// matching dimension; the empty coalition must not appear.
NTUGame new_game(std::vector<int> labels, std::map<Coalition, std::vector<Point>> assignments);

/// Restriction to the players of t. Labels are carried over.
NTUGame subgame(const NTUGame& game, Coalition t);

/// Best stand-alone payoff of each player.
PayoffVector b_vector(const NTUGame& game);

/// Rebuilds the game with some coalitions' generator sets replaced.
NTUGame with_generators(const NTUGame& game, const std::map<Coalition, std::vector<Point>>& replacements);

} // namespace ntu

#endif
