#ifndef NTUCORE_REGION_HPP
#define NTUCORE_REGION_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntucore/game.hpp"
#include "ntucore/rational.hpp"

namespace ntu {

/// One coordinate range with open/closed endpoints. Infinite endpoints are always open.
struct Interval {
    ExtRational lower = ExtRational::neg_inf();
    bool lower_closed = false;
    ExtRational upper = ExtRational::pos_inf();
    bool upper_closed = false;

    static Interval all() { return {}; }
    static Interval point(const Rational& v) { return {v, true, v, true}; }
    static Interval closed(const Rational& lo, const Rational& hi) { return {lo, true, hi, true}; }
    static Interval open(const ExtRational& lo, const ExtRational& hi) { return {lo, false, hi, false}; }
    static Interval at_most(const Rational& v) { return {ExtRational::neg_inf(), false, v, true}; }
    static Interval below(const Rational& v) { return {ExtRational::neg_inf(), false, v, false}; }
    static Interval at_least(const Rational& v) { return {v, true, ExtRational::pos_inf(), false}; }

    bool empty() const;
    bool contains(const Rational& v) const;
    bool is_point() const { return lower_closed && upper_closed && lower == upper; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);

/// A finite value inside a nonempty interval: the midpoint, or one unit in from a finite end.
Rational representative(const Interval& iv);

std::string to_string(const Interval& iv);

/// Product of intervals, one per axis.
using Box = std::vector<Interval>;

std::string to_string(const Box& box);

class RegionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyRegionError : public std::domain_error {
public:
    EmptyRegionError() : std::domain_error("undefined over empty region") {}
};

/// Finite union of boxes in R^dim, kept in canonical form: a sorted list of maximal slabs
/// along the first axis, each carrying the (canonical) cross-section over the remaining
/// axes. Two regions holding the same point set compare equal.
class Region {
public:
    explicit Region(std::size_t dim) : dim_(dim) {}

    static Region full(std::size_t dim);
    static Region from_box(const Box& box);
    /// Union of the given boxes; empty boxes are ignored.
    static Region from_boxes(std::size_t dim, std::span<const Box> boxes);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return dim_ == 0 ? !point_ : slabs_.empty(); }
    bool is_full() const;
    bool contains(std::span<const Rational> x) const;

    /// Pairwise disjoint boxes in canonical order.
    std::vector<Box> boxes() const;
    std::size_t box_count() const;

    friend bool operator==(const Region& a, const Region& b);

private:
    struct Slab;

    enum class Op { unite, intersect, subtract };

    static Region combine(const Region& a, const Region& b, Op op);
    static Region build(std::size_t dim, std::vector<const Interval*>& boxes, std::size_t axis);
    void collect(Box& prefix, std::vector<Box>& out) const;

    friend Region region_union(const Region&, const Region&);
    friend Region region_intersect(const Region&, const Region&);
    friend Region region_difference(const Region&, const Region&);

    std::size_t dim_;
    std::vector<Slab> slabs_;
    bool point_ = false; // dim 0: whether the single point of R^0 is included
};

struct Region::Slab {
    Interval span;
    Region rest;
};

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
Region region_complement(const Region& a);

bool region_is_empty(const Region& a);
bool region_contains_point(const Region& a, const PayoffVector& x);
bool region_subset(const Region& a, const Region& b);
bool region_equals(const Region& a, const Region& b);

/// Finite witnesses: for each canonical box, optionally split further at the given per-axis
/// breakpoints, the midpoint of every cell and each of its attained corners.
std::vector<Point> sample_points(const Region& a, const std::vector<std::vector<Rational>>& breakpoints = {});

/// Downward hull of V(S), over the members of S.
Region hull_region(const NTUGame& game, Coalition s);
Region feasible_region(const NTUGame& game);
Region core_region(const NTUGame& game);
Region pareto_region(const NTUGame& game);
Region ir_region(const NTUGame& game);

/// Exact L-infinity Hausdorff distance between the grand-coalition hulls of two games.
ExtRational hausdorff_linf(const NTUGame& a, const NTUGame& b);

/// Directed L-infinity distance from the hull of `from` to the hull of `to`.
Rational directed_hull_distance(std::span<const Point> from, std::span<const Point> to);

/// An exact infimum or supremum together with whether some point attains it.
struct Extremum {
    ExtRational value;
    bool attained = false;
};

/// inf over x in a of max_{j in over} x_j.
Extremum inf_max_coordinate(const Region& a, Coalition over);
/// sup over y in a of min_{j in over} y_j.
Extremum sup_min_coordinate(const Region& a, Coalition over);

std::string to_string(const Region& a);

} // namespace ntu

#endif
