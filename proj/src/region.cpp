#include "ntucore/region.hpp"

#include <algorithm>
#include <set>

namespace ntu {

// ---------------------------------------------------------------------------------------------
// Intervals

bool Interval::empty() const
{
    if (lower < upper) return false;
    return !(lower == upper && lower.is_finite() && lower_closed && upper_closed);
}

bool Interval::contains(const Rational& v) const
{
    const ExtRational x(v);
    const bool above = lower_closed ? lower <= x : lower < x;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
}

Interval intersect(const Interval& a, const Interval& b)
{
    Interval out;
    if (a.lower > b.lower) {
        out.lower = a.lower;
        out.lower_closed = a.lower_closed;
    } else if (b.lower > a.lower) {
        out.lower = b.lower;
        out.lower_closed = b.lower_closed;
    } else {
        out.lower = a.lower;
        out.lower_closed = a.lower_closed && b.lower_closed;
    }
    if (a.upper < b.upper) {
        out.upper = a.upper;
        out.upper_closed = a.upper_closed;
    } else if (b.upper < a.upper) {
        out.upper = b.upper;
        out.upper_closed = b.upper_closed;
    } else {
        out.upper = a.upper;
        out.upper_closed = a.upper_closed && b.upper_closed;
    }
    return out;
}

Rational representative(const Interval& iv)
{
    if (iv.lower.is_finite() && iv.upper.is_finite()) return (iv.lower.value() + iv.upper.value()) / 2;
    if (iv.lower.is_finite()) return iv.lower.value() + 1;
    if (iv.upper.is_finite()) return iv.upper.value() - 1;
    return 0;
}

std::string to_string(const Interval& iv)
{
    if (iv.is_point()) return "{" + to_string(iv.lower) + "}";
    return std::string(iv.lower_closed ? "[" : "(") + to_string(iv.lower) + ", " + to_string(iv.upper) +
           (iv.upper_closed ? "]" : ")");
}

std::string to_string(const Box& box)
{
    std::string out;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (i) out += " x ";
        out += to_string(box[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Atoms: for sorted breakpoints v_0 < ... < v_{m-1}, atom 2i is the open gap below v_i
// (atom 2m is the gap above the last one) and atom 2i+1 is the point v_i.

namespace {

class AtomGrid {
public:
    explicit AtomGrid(std::vector<Rational> values) : values_(std::move(values))
    {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }

    std::size_t atom_count() const { return 2 * values_.size() + 1; }

    std::size_t first_atom(const Interval& iv) const
    {
        if (iv.lower.is_neg_inf()) return 0;
        const std::size_t i = index_of(iv.lower.value());
        return iv.lower_closed ? 2 * i + 1 : 2 * i + 2;
    }

    std::size_t last_atom(const Interval& iv) const
    {
        if (iv.upper.is_pos_inf()) return 2 * values_.size();
        const std::size_t i = index_of(iv.upper.value());
        return iv.upper_closed ? 2 * i + 1 : 2 * i;
    }

    Interval span(std::size_t first, std::size_t last) const
    {
        Interval out;
        if (first % 2 == 1) {
            out.lower = values_[first / 2];
            out.lower_closed = true;
        } else if (first > 0) {
            out.lower = values_[first / 2 - 1];
        }
        if (last % 2 == 1) {
            out.upper = values_[last / 2];
            out.upper_closed = true;
        } else if (last / 2 < values_.size()) {
            out.upper = values_[last / 2];
        }
        return out;
    }

private:
    std::size_t index_of(const Rational& v) const
    {
        return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
    }

    std::vector<Rational> values_;
};

void add_endpoints(const Interval& iv, std::vector<Rational>& out)
{
    if (iv.lower.is_finite()) out.push_back(iv.lower.value());
    if (iv.upper.is_finite()) out.push_back(iv.upper.value());
}

} // namespace

// Accumulates per-atom cross-sections into maximal slabs.
class SlabBuilder {
public:
    explicit SlabBuilder(const AtomGrid& grid) : grid_(grid) {}

    /// Extends the current run when `atom` is adjacent and the cross-section is known to match.
    bool extend_if_same(std::size_t atom)
    {
        if (!open_ || last_ + 1 != atom) return false;
        last_ = atom;
        return true;
    }

    void add(std::size_t atom, Region rest)
    {
        if (open_ && last_ + 1 == atom && rest == run_.back()) {
            last_ = atom;
            return;
        }
        flush();
        open_ = true;
        first_ = last_ = atom;
        run_.clear();
        run_.push_back(std::move(rest));
    }

    template <typename SlabT>
    void finish(std::vector<SlabT>& out)
    {
        flush();
        out.clear();
        out.reserve(done_spans_.size());
        for (std::size_t k = 0; k < done_spans_.size(); ++k)
            out.push_back(SlabT{done_spans_[k], std::move(done_rests_[k])});
    }

private:
    void flush()
    {
        if (!open_) return;
        done_spans_.push_back(grid_.span(first_, last_));
        done_rests_.push_back(std::move(run_.back()));
        open_ = false;
    }

    const AtomGrid& grid_;
    bool open_ = false;
    std::size_t first_ = 0;
    std::size_t last_ = 0;
    std::vector<Region> run_;
    std::vector<Interval> done_spans_;
    std::vector<Region> done_rests_;
};

// ---------------------------------------------------------------------------------------------
// Region

bool operator==(const Region& a, const Region& b)
{
    if (a.dim_ != b.dim_ || a.point_ != b.point_ || a.slabs_.size() != b.slabs_.size()) return false;
    for (std::size_t k = 0; k < a.slabs_.size(); ++k)
        if (!(a.slabs_[k].span == b.slabs_[k].span) || !(a.slabs_[k].rest == b.slabs_[k].rest)) return false;
    return true;
}

Region Region::full(std::size_t dim)
{
    Region out(dim);
    if (dim == 0)
        out.point_ = true;
    else
        out.slabs_.push_back(Slab{Interval::all(), full(dim - 1)});
    return out;
}

bool Region::is_full() const
{
    if (dim_ == 0) return point_;
    return slabs_.size() == 1 && slabs_[0].span == Interval::all() && slabs_[0].rest.is_full();
}

Region Region::from_box(const Box& box)
{
    Region out(0);
    for (const auto& iv : box)
        if (iv.empty()) return Region(box.size());
    out.point_ = true;
    for (std::size_t k = box.size(); k-- > 0;) {
        Region wrapped(out.dim_ + 1);
        wrapped.slabs_.push_back(Slab{box[k], std::move(out)});
        out = std::move(wrapped);
    }
    return out;
}

Region Region::from_boxes(std::size_t dim, std::span<const Box> boxes)
{
    std::vector<const Interval*> heads;
    for (const auto& box : boxes) {
        if (box.size() != dim) throw RegionMismatch("box dimension does not match region dimension");
        if (std::none_of(box.begin(), box.end(), [](const Interval& iv) { return iv.empty(); }))
            heads.push_back(box.data());
    }
    return build(dim, heads, 0);
}

Region Region::build(std::size_t dim, std::vector<const Interval*>& boxes, std::size_t axis)
{
    Region out(dim - axis);
    if (axis == dim) {
        out.point_ = !boxes.empty();
        return out;
    }
    if (boxes.empty()) return out;

    std::vector<Rational> values;
    for (const auto* b : boxes) add_endpoints(b[axis], values);
    const AtomGrid grid(std::move(values));

    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    ranges.reserve(boxes.size());
    for (const auto* b : boxes) ranges.emplace_back(grid.first_atom(b[axis]), grid.last_atom(b[axis]));

    SlabBuilder builder(grid);
    std::vector<std::size_t> members, previous;
    bool have_previous = false;
    for (std::size_t atom = 0; atom < grid.atom_count(); ++atom) {
        members.clear();
        for (std::size_t k = 0; k < boxes.size(); ++k)
            if (ranges[k].first <= atom && atom <= ranges[k].second) members.push_back(k);
        if (members.empty()) {
            have_previous = false;
            continue;
        }
        if (have_previous && members == previous && builder.extend_if_same(atom)) continue;
        std::vector<const Interval*> sub;
        sub.reserve(members.size());
        for (auto k : members) sub.push_back(boxes[k]);
        builder.add(atom, build(dim, sub, axis + 1));
        previous = members;
        have_previous = true;
    }
    builder.finish(out.slabs_);
    return out;
}

Region Region::combine(const Region& a, const Region& b, Op op)
{
    if (a.dim_ != b.dim_) throw RegionMismatch("regions over different player sets");
    switch (op) {
    case Op::unite:
        if (a.is_empty() || b.is_full()) return b;
        if (b.is_empty() || a.is_full()) return a;
        break;
    case Op::intersect:
        if (a.is_empty() || b.is_full()) return a;
        if (b.is_empty() || a.is_full()) return b;
        break;
    case Op::subtract:
        if (a.is_empty() || b.is_empty()) return a;
        if (b.is_full()) return Region(a.dim_);
        break;
    }
    if (a.dim_ == 0) {
        // Both points are present here; the shortcuts above cover every other case.
        Region out(0);
        out.point_ = op != Op::subtract;
        return out;
    }

    std::vector<Rational> values;
    for (const auto& s : a.slabs_) add_endpoints(s.span, values);
    for (const auto& s : b.slabs_) add_endpoints(s.span, values);
    const AtomGrid grid(std::move(values));

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner_a(grid.atom_count(), none), owner_b(grid.atom_count(), none);
    for (std::size_t k = 0; k < a.slabs_.size(); ++k)
        std::fill(owner_a.begin() + static_cast<std::ptrdiff_t>(grid.first_atom(a.slabs_[k].span)),
                  owner_a.begin() + static_cast<std::ptrdiff_t>(grid.last_atom(a.slabs_[k].span)) + 1, k);
    for (std::size_t k = 0; k < b.slabs_.size(); ++k)
        std::fill(owner_b.begin() + static_cast<std::ptrdiff_t>(grid.first_atom(b.slabs_[k].span)),
                  owner_b.begin() + static_cast<std::ptrdiff_t>(grid.last_atom(b.slabs_[k].span)) + 1, k);

    const Region nothing(a.dim_ - 1);
    SlabBuilder builder(grid);
    std::size_t prev_a = none, prev_b = none;
    bool prev_nonempty = false;
    Region out(a.dim_);
    for (std::size_t atom = 0; atom < grid.atom_count(); ++atom) {
        const std::size_t ka = owner_a[atom], kb = owner_b[atom];
        if (prev_nonempty && ka == prev_a && kb == prev_b && builder.extend_if_same(atom)) continue;
        prev_a = ka;
        prev_b = kb;
        prev_nonempty = false;
        if (ka == none && kb == none) continue;
        const Region& ra = ka == none ? nothing : a.slabs_[ka].rest;
        const Region& rb = kb == none ? nothing : b.slabs_[kb].rest;
        Region r = combine(ra, rb, op);
        if (r.is_empty()) continue;
        builder.add(atom, std::move(r));
        prev_nonempty = true;
    }
    builder.finish(out.slabs_);
    return out;
}

bool Region::contains(std::span<const Rational> x) const
{
    if (x.size() != dim_) throw RegionMismatch("point dimension does not match region dimension");
    if (dim_ == 0) return point_;
    const auto& v = x.front();
    auto it = std::partition_point(slabs_.begin(), slabs_.end(), [&](const Slab& s) {
        const ExtRational up = s.span.upper;
        return up < ExtRational(v) || (up == ExtRational(v) && !s.span.upper_closed);
    });
    return it != slabs_.end() && it->span.contains(v) && it->rest.contains(x.subspan(1));
}

void Region::collect(Box& prefix, std::vector<Box>& out) const
{
    if (dim_ == 0) {
        if (point_) out.push_back(prefix);
        return;
    }
    for (const auto& s : slabs_) {
        prefix.push_back(s.span);
        s.rest.collect(prefix, out);
        prefix.pop_back();
    }
}

std::vector<Box> Region::boxes() const
{
    std::vector<Box> out;
    Box prefix;
    collect(prefix, out);
    return out;
}

std::size_t Region::box_count() const
{
    if (dim_ == 0) return point_ ? 1 : 0;
    std::size_t n = 0;
    for (const auto& s : slabs_) n += s.rest.box_count();
    return n;
}

Region region_union(const Region& a, const Region& b) { return Region::combine(a, b, Region::Op::unite); }
Region region_intersect(const Region& a, const Region& b) { return Region::combine(a, b, Region::Op::intersect); }
Region region_difference(const Region& a, const Region& b) { return Region::combine(a, b, Region::Op::subtract); }
Region region_complement(const Region& a) { return region_difference(Region::full(a.dim()), a); }

bool region_is_empty(const Region& a) { return a.is_empty(); }

bool region_contains_point(const Region& a, const PayoffVector& x)
{
    return a.contains(x.values());
}

bool region_subset(const Region& a, const Region& b)
{
    return region_difference(a, b).is_empty();
}

bool region_equals(const Region& a, const Region& b)
{
    if (a.dim() != b.dim()) throw RegionMismatch("regions over different player sets");
    return a == b;
}

std::string to_string(const Region& a)
{
    if (a.is_empty()) return "empty";
    std::string out;
    for (const auto& box : a.boxes()) {
        if (!out.empty()) out += "\n";
        out += to_string(box);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Sampling

namespace {

std::vector<Interval> split_at(const Interval& iv, const std::vector<Rational>& cuts)
{
    std::vector<Interval> out;
    Interval rest = iv;
    for (const auto& c : cuts) {
        const ExtRational v(c);
        if (!(rest.lower < v && v < rest.upper)) continue;
        out.push_back(Interval{rest.lower, rest.lower_closed, v, false});
        out.push_back(Interval::point(c));
        rest.lower = v;
        rest.lower_closed = false;
    }
    out.push_back(rest);
    return out;
}

void cell_points(const Box& cell, std::set<Point>& out)
{
    Point centre;
    std::vector<std::vector<Rational>> corners;
    for (const auto& iv : cell) {
        centre.push_back(representative(iv));
        std::vector<Rational> ends;
        if (iv.lower_closed && iv.lower.is_finite()) ends.push_back(iv.lower.value());
        if (iv.upper_closed && iv.upper.is_finite() && !(iv.lower == iv.upper)) ends.push_back(iv.upper.value());
        if (ends.empty()) ends.push_back(centre.back());
        corners.push_back(std::move(ends));
    }
    out.insert(centre);
    std::vector<std::size_t> pick(cell.size(), 0);
    for (;;) {
        Point p;
        for (std::size_t i = 0; i < cell.size(); ++i) p.push_back(corners[i][pick[i]]);
        out.insert(std::move(p));
        std::size_t i = 0;
        while (i < cell.size() && ++pick[i] == corners[i].size()) pick[i++] = 0;
        if (i == cell.size()) break;
    }
}

} // namespace

std::vector<Point> sample_points(const Region& a, const std::vector<std::vector<Rational>>& breakpoints)
{
    std::set<Point> out;
    for (const auto& box : a.boxes()) {
        std::vector<std::vector<Interval>> pieces;
        for (std::size_t i = 0; i < box.size(); ++i) {
            std::vector<Rational> cuts = i < breakpoints.size() ? breakpoints[i] : std::vector<Rational>{};
            std::sort(cuts.begin(), cuts.end());
            pieces.push_back(split_at(box[i], cuts));
        }
        std::vector<std::size_t> pick(box.size(), 0);
        for (;;) {
            Box cell;
            for (std::size_t i = 0; i < box.size(); ++i) cell.push_back(pieces[i][pick[i]]);
            cell_points(cell, out);
            std::size_t i = 0;
            while (i < box.size() && ++pick[i] == pieces[i].size()) pick[i++] = 0;
            if (i == box.size()) break;
        }
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------------------------
// Game regions

Region hull_region(const NTUGame& game, Coalition s)
{
    std::vector<Box> boxes;
    for (const auto& g : game.generators(s).points()) {
        Box box;
        for (const auto& v : g) box.push_back(Interval::at_most(v));
        boxes.push_back(std::move(box));
    }
    return Region::from_boxes(s.size(), boxes);
}

Region feasible_region(const NTUGame& game)
{
    return hull_region(game, game.grand());
}

Region ir_region(const NTUGame& game)
{
    Box up;
    const auto b = b_vector(game);
    for (const auto& v : b.values()) up.push_back(Interval::at_least(v));
    return region_intersect(feasible_region(game), Region::from_box(up));
}

Region pareto_region(const NTUGame& game)
{
    std::vector<Box> orthants;
    for (const auto& g : game.generators(game.grand()).points()) {
        Box box;
        for (const auto& v : g) box.push_back(Interval::below(v));
        orthants.push_back(std::move(box));
    }
    return region_difference(feasible_region(game), Region::from_boxes(game.size(), orthants));
}

Region core_region(const NTUGame& game)
{
    const Region rational = ir_region(game);
    if (rational.is_empty()) return rational;

    // The individually rational set lies inside this box, so blocking cylinders can be clipped to it.
    const auto b = b_vector(game).values();
    Box bounds;
    for (PlayerId i = 0; i < game.size(); ++i) {
        Rational top = game.generators(game.grand()).points().front()[i];
        for (const auto& g : game.generators(game.grand()).points()) top = std::max<Rational>(top, g[i]);
        bounds.push_back(Interval::closed(b[i], top));
    }

    std::vector<Box> blocked;
    for (auto s : nonempty_subsets(game.grand())) {
        if (s.size() < 2) continue;
        const auto members = s.members();
        for (const auto& g : game.generators(s).points()) {
            Box box = bounds;
            for (std::size_t k = 0; k < members.size(); ++k)
                box[members[k]] = intersect(box[members[k]], Interval::below(g[k]));
            blocked.push_back(std::move(box));
        }
    }
    return region_difference(rational, Region::from_boxes(game.size(), blocked));
}

// ---------------------------------------------------------------------------------------------
// Distances and extrema

Rational directed_hull_distance(std::span<const Point> from, std::span<const Point> to)
{
    Rational worst = 0;
    for (const auto& g : from) {
        std::optional<Rational> best;
        for (const auto& h : to) {
            Rational gap = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] - h[i] > gap) gap = g[i] - h[i];
            if (!best || gap < *best) best = gap;
        }
        if (best && *best > worst) worst = *best;
    }
    return worst;
}

ExtRational hausdorff_linf(const NTUGame& a, const NTUGame& b)
{
    if (a.labels() != b.labels()) throw RegionMismatch("Hausdorff distance between games on different players");
    const auto& ga = a.generators(a.grand()).points();
    const auto& gb = b.generators(b.grand()).points();
    return std::max<Rational>(directed_hull_distance(ga, gb), directed_hull_distance(gb, ga));
}

Extremum inf_max_coordinate(const Region& a, Coalition over)
{
    if (a.is_empty()) throw EmptyRegionError();
    if (over.empty() || !over.subset_of(Coalition::grand(a.dim())))
        throw RegionMismatch("coordinate set outside the region's axes");
    std::optional<Extremum> best;
    for (const auto& box : a.boxes()) {
        Extremum e{ExtRational::neg_inf(), false};
        for (auto j : over.members()) e.value = std::max(e.value, box[j].lower);
        e.attained = e.value.is_finite();
        for (auto j : over.members())
            if (box[j].lower == e.value && !box[j].lower_closed) e.attained = false;
        if (!best || e.value < best->value)
            best = e;
        else if (e.value == best->value)
            best->attained = best->attained || e.attained;
    }
    return *best;
}

Extremum sup_min_coordinate(const Region& a, Coalition over)
{
    if (a.is_empty()) throw EmptyRegionError();
    if (over.empty() || !over.subset_of(Coalition::grand(a.dim())))
        throw RegionMismatch("coordinate set outside the region's axes");
    std::optional<Extremum> best;
    for (const auto& box : a.boxes()) {
        Extremum e{ExtRational::pos_inf(), false};
        for (auto j : over.members()) e.value = std::min(e.value, box[j].upper);
        e.attained = e.value.is_finite();
        for (auto j : over.members())
            if (box[j].upper == e.value && !box[j].upper_closed) e.attained = false;
        if (!best || e.value > best->value)
            best = e;
        else if (e.value == best->value)
            best->attained = best->attained || e.attained;
    }
    return *best;
}

} // namespace ntu
