#include "ntucore/game.hpp"

#include <algorithm>
#include <set>

namespace ntu {

Coalition Coalition::of(std::initializer_list<PlayerId> members)
{
    std::uint32_t bits = 0;
    for (auto i : members) bits |= std::uint32_t{1} << i;
    return Coalition(bits);
}

std::vector<PlayerId> Coalition::members() const
{
    std::vector<PlayerId> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
        out.push_back(static_cast<PlayerId>(std::countr_zero(b)));
    return out;
}

std::vector<Coalition> nonempty_subsets(Coalition of)
{
    std::vector<Coalition> out;
    const std::uint32_t mask = of.bits();
    // Enumerate submasks, then sort ascending.
    for (std::uint32_t s = mask; s; s = (s - 1) & mask) out.emplace_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

Coalition compress(Coalition sub, Coalition parent)
{
    std::uint32_t bits = 0;
    for (auto i : sub.members()) bits |= std::uint32_t{1} << parent.rank(i);
    return Coalition(bits);
}

PayoffVector::PayoffVector(Coalition support, Point values)
    : support_(support), values_(std::move(values))
{
    if (values_.size() != support_.size())
        throw std::invalid_argument("payoff vector has " + std::to_string(values_.size()) +
                                    " coordinates for a coalition of size " +
                                    std::to_string(support_.size()));
}

const Rational& PayoffVector::at(PlayerId i) const
{
    if (!support_.contains(i))
        throw std::out_of_range("player " + std::to_string(i) + " outside payoff vector support");
    return values_[support_.rank(i)];
}

PayoffVector PayoffVector::restrict(Coalition s) const
{
    if (!s.subset_of(support_)) throw std::invalid_argument("restriction to a non-subset coalition");
    Point out;
    out.reserve(s.size());
    for (auto i : s.members()) out.push_back(values_[support_.rank(i)]);
    return {s, std::move(out)};
}

std::string to_string(const PayoffVector& x)
{
    return to_string(x.values());
}

bool weakly_below(const Point& a, const Point& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool strictly_below(const Point& a, const Point& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] < b[i])) return false;
    return true;
}

GeneratorSet normalize_generators(Coalition coalition, std::vector<Point> raw)
{
    if (raw.empty()) throw GameError("empty generator set");
    const std::size_t dim = raw.front().size();
    for (const auto& p : raw)
        if (p.size() != dim) throw GameError("generators of mixed dimension");
    if (!coalition.empty() && dim != coalition.size())
        throw GameError("generator dimension " + std::to_string(dim) + " does not match coalition size " +
                        std::to_string(coalition.size()));

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    GeneratorSet out;
    out.coalition_ = coalition;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        bool dominated = false;
        for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
            dominated = j != k && weakly_below(raw[k], raw[j]);
        if (!dominated) out.points_.push_back(raw[k]);
    }
    return out;
}

const GeneratorSet& NTUGame::generators(Coalition s) const
{
    if (s.empty() || !s.subset_of(grand()))
        throw std::invalid_argument("no payoff set for coalition " + describe(s));
    return sets_[s.bits() - 1];
}

std::string NTUGame::describe(Coalition s) const
{
    std::string out = "{";
    bool first = true;
    for (auto i : s.members()) {
        if (!first) out += ",";
        first = false;
        out += i < labels_.size() ? std::to_string(labels_[i]) : "?" + std::to_string(i);
    }
    return out + "}";
}

NTUGame new_game(std::vector<int> labels, std::map<Coalition, std::vector<Point>> assignments)
{
    if (labels.empty()) throw GameError("a game needs at least one player");
    if (labels.size() > max_players) throw GameError("too many players");
    std::set<int> seen;
    for (int l : labels)
        if (l < 0 || !seen.insert(l).second) throw GameError("player labels must be distinct and non-negative");

    NTUGame game;
    game.labels_ = std::move(labels);
    const Coalition n = game.grand();
    if (assignments.count(Coalition{}))
        throw GameError("the empty coalition must not be assigned a payoff set");
    for (const auto& [s, pts] : assignments)
        if (!s.subset_of(n)) throw GameError("coalition " + game.describe(s) + " is not a subset of the players");

    game.sets_.reserve(n.bits());
    for (std::uint32_t bits = 1; bits <= n.bits(); ++bits) {
        const Coalition s(bits);
        auto it = assignments.find(s);
        if (it == assignments.end()) throw GameError("missing payoff set for coalition " + game.describe(s));
        if (it->second.empty()) throw GameError("empty generator set for coalition " + game.describe(s));
        for (const auto& p : it->second)
            if (p.size() != s.size())
                throw GameError("dimension mismatch for coalition " + game.describe(s) + ": got " +
                                std::to_string(p.size()) + ", expected " + std::to_string(s.size()));
        game.sets_.push_back(normalize_generators(s, std::move(it->second)));
    }
    return game;
}

NTUGame subgame(const NTUGame& game, Coalition t)
{
    if (t.empty() || !t.subset_of(game.grand()))
        throw std::invalid_argument("subgame needs a nonempty subset of the players, got " + game.describe(t));
    std::vector<int> labels;
    for (auto i : t.members()) labels.push_back(game.labels()[i]);
    std::map<Coalition, std::vector<Point>> sets;
    for (auto s : nonempty_subsets(t)) sets.emplace(compress(s, t), game.generators(s).points());
    return new_game(std::move(labels), std::move(sets));
}

PayoffVector b_vector(const NTUGame& game)
{
    Point b;
    for (PlayerId i = 0; i < game.size(); ++i) b.push_back(game.generators(Coalition::singleton(i)).points().front()[0]);
    return {game.grand(), std::move(b)};
}

NTUGame with_generators(const NTUGame& game, const std::map<Coalition, std::vector<Point>>& replacements)
{
    std::map<Coalition, std::vector<Point>> sets;
    for (auto s : nonempty_subsets(game.grand())) {
        auto it = replacements.find(s);
        sets.emplace(s, it != replacements.end() ? it->second : game.generators(s).points());
    }
    return new_game(game.labels(), std::move(sets));
}

} // namespace ntu
