#ifndef NTUCORE_IO_HPP
#define NTUCORE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ntucore/axioms.hpp"
#include "ntucore/game.hpp"
#include "ntucore/region.hpp"

namespace ntu {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Game files:
//   {"players": [0, 1, ...],
//    "coalitions": [{"members": [0, 1], "generators": [["1/2", "3"], ...]}, ...]}
// Rationals are written as "p" or "p/q" strings; plain JSON integers are accepted on input.
// Coordinates follow the order of "members". Output lists coalitions by ascending bit mask
// and members in player order.

nlohmann::json game_to_json(const NTUGame& game);
NTUGame game_from_json(const nlohmann::json& j);

std::string serialize_game(const NTUGame& game);
NTUGame parse_game(const std::string& text);

NTUGame load_game(const std::filesystem::path& path);
void save_game(const NTUGame& game, const std::filesystem::path& path);

/// Parses "1,1/2,-3" into a point.
Point parse_point(const std::string& text);

nlohmann::json rational_to_json(const Rational& v);
nlohmann::json point_to_json(const Point& p);
nlohmann::json coalition_to_json(const NTUGame& game, Coalition s);
nlohmann::json region_to_json(const Region& region);
nlohmann::json report_to_json(const AxiomReport& report);

/// Resolves a list of player labels into a coalition of the game.
Coalition coalition_from_labels(const NTUGame& game, const std::vector<int>& labels);

} // namespace ntu

#endif
