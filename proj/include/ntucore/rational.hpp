#ifndef NTUCORE_RATIONAL_HPP
#define NTUCORE_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ntu {

/// Exact rational payoff value. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// A point of R^k, coordinates in the member order of some coalition.
using Point = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

std::string to_string(const Point& point);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// A rational extended by -inf and +inf.
class ExtRational {
public:
    enum class Kind : signed char { neg_inf = -1, finite = 0, pos_inf = 1 };

    ExtRational() = default;
    ExtRational(Rational value) : value_(std::move(value)) {}
    ExtRational(long value) : value_(value) {}

    static ExtRational neg_inf() { return ExtRational(Kind::neg_inf); }
    static ExtRational pos_inf() { return ExtRational(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    /// Finite value; zero for the infinities.
    const Rational& value() const { return value_; }

    friend bool operator==(const ExtRational& a, const ExtRational& b)
    {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b)
    {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return compare(a.value_, b.value_);
    }

private:
    explicit ExtRational(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::finite;
    Rational value_;
};

std::string to_string(const ExtRational& value);
std::ostream& operator<<(std::ostream& os, const ExtRational& value);

} // namespace ntu

#endif
