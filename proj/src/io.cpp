#include "ntucore/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ntu {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("rational must be a string or an integer, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

json rational_to_json(const Rational& v)
{
    return to_string(v);
}

json point_to_json(const Point& p)
{
    json out = json::array();
    for (const auto& v : p) out.push_back(rational_to_json(v));
    return out;
}

json coalition_to_json(const NTUGame& game, Coalition s)
{
    json out = json::array();
    for (auto i : s.members()) out.push_back(game.labels()[i]);
    return out;
}

Coalition coalition_from_labels(const NTUGame& game, const std::vector<int>& labels)
{
    std::uint32_t bits = 0;
    for (int l : labels) {
        auto it = std::find(game.labels().begin(), game.labels().end(), l);
        if (it == game.labels().end()) throw ParseError("unknown player " + std::to_string(l));
        const auto pos = static_cast<std::size_t>(it - game.labels().begin());
        if ((bits >> pos) & 1U) throw ParseError("player " + std::to_string(l) + " listed twice");
        bits |= std::uint32_t{1} << pos;
    }
    return Coalition(bits);
}

json game_to_json(const NTUGame& game)
{
    json coalitions = json::array();
    for (auto s : nonempty_subsets(game.grand())) {
        json gens = json::array();
        for (const auto& g : game.generators(s).points()) gens.push_back(point_to_json(g));
        coalitions.push_back({{"members", coalition_to_json(game, s)}, {"generators", std::move(gens)}});
    }
    return {{"players", game.labels()}, {"coalitions", std::move(coalitions)}};
}

NTUGame game_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("players") || !j.contains("coalitions"))
        throw ParseError("game file needs \"players\" and \"coalitions\"");
    if (!j["players"].is_array() || !j["coalitions"].is_array())
        throw ParseError("\"players\" and \"coalitions\" must be arrays");

    std::vector<int> labels;
    for (const auto& p : j["players"]) {
        if (!p.is_number_integer() || p.get<long>() < 0) throw ParseError("player ids must be non-negative integers");
        labels.push_back(p.get<int>());
    }
    if (std::set<int>(labels.begin(), labels.end()).size() != labels.size())
        throw ParseError("duplicate player id");
    if (labels.empty() || labels.size() > max_players) throw ParseError("unsupported number of players");

    std::map<int, std::size_t> position;
    for (std::size_t k = 0; k < labels.size(); ++k) position[labels[k]] = k;

    std::map<Coalition, std::vector<Point>> sets;
    for (const auto& c : j["coalitions"]) {
        if (!c.is_object() || !c.contains("members") || !c.contains("generators"))
            throw ParseError("coalition entries need \"members\" and \"generators\"");
        std::vector<std::size_t> members;
        std::uint32_t bits = 0;
        for (const auto& m : c["members"]) {
            if (!m.is_number_integer() || !position.count(m.get<int>()))
                throw ParseError("unknown member " + m.dump());
            const auto pos = position[m.get<int>()];
            if ((bits >> pos) & 1U) throw ParseError("member " + m.dump() + " listed twice");
            bits |= std::uint32_t{1} << pos;
            members.push_back(pos);
        }
        const Coalition s(bits);
        if (s.empty()) throw ParseError("coalition with no members");
        if (sets.count(s)) throw ParseError("duplicate coalition " + c["members"].dump());

        // Reorder coordinates from the listed member order into player order.
        std::vector<std::size_t> order(members.size());
        for (std::size_t k = 0; k < members.size(); ++k) order[s.rank(members[k])] = k;

        std::vector<Point> gens;
        if (!c["generators"].is_array()) throw ParseError("\"generators\" must be an array");
        for (const auto& g : c["generators"]) {
            if (!g.is_array() || g.size() != members.size())
                throw ParseError("dimension mismatch in coalition " + c["members"].dump());
            Point p(members.size());
            for (std::size_t k = 0; k < members.size(); ++k) p[k] = rational_from_json(g[order[k]]);
            gens.push_back(std::move(p));
        }
        sets.emplace(s, std::move(gens));
    }
    try {
        return new_game(std::move(labels), std::move(sets));
    } catch (const GameError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_game(const NTUGame& game)
{
    return game_to_json(game).dump(2) + "\n";
}

NTUGame parse_game(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return game_from_json(j);
}

NTUGame load_game(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

void save_game(const NTUGame& game, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_game(game);
}

Point parse_point(const std::string& text)
{
    Point out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (out.empty()) throw ParseError("empty point");
    return out;
}

json region_to_json(const Region& region)
{
    json boxes = json::array();
    for (const auto& box : region.boxes()) {
        json b = json::array();
        for (const auto& iv : box)
            b.push_back({{"lower", to_string(iv.lower)},
                         {"lower_closed", iv.lower_closed},
                         {"upper", to_string(iv.upper)},
                         {"upper_closed", iv.upper_closed}});
        boxes.push_back(std::move(b));
    }
    return {{"dim", region.dim()}, {"boxes", std::move(boxes)}};
}

json report_to_json(const AxiomReport& report)
{
    json out{{"axiom", std::string(to_string(report.axiom))},
             {"verdict", std::string(to_string(report.verdict))},
             {"sampled", report.sampled}};
    if (!report.note.empty()) out["note"] = report.note;
    if (report.witness) {
        const auto& w = *report.witness;
        json wj{{"game", game_to_json(w.game)}};
        if (w.other) wj["other_game"] = game_to_json(*w.other);
        if (w.coalition) wj["coalition"] = coalition_to_json(w.game, *w.coalition);
        if (w.x) wj["x"] = point_to_json(w.x->values());
        if (w.y) wj["y"] = point_to_json(w.y->values());
        if (w.index) wj["index"] = *w.index;
        out["witness"] = std::move(wj);
    }
    return out;
}

} // namespace ntu
