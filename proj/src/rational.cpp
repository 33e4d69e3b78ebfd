#include "ntucore/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ntu {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    Rational value;
    if (value.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_string(const Point& point)
{
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ", ";
        out += to_string(point[i]);
    }
    return out + ")";
}

std::strong_ordering compare(const Rational& a, const Rational& b)
{
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const ExtRational& value)
{
    if (value.is_neg_inf()) return "-inf";
    if (value.is_pos_inf()) return "+inf";
    return to_string(value.value());
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value)
{
    return os << to_string(value);
}

} // namespace ntu
