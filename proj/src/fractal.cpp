#include "efrac/fractal.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "efrac/errors.hpp"
#include "efrac/numeral.hpp"

namespace efrac {

Point Point::parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("point must be written as 'x,y'", text.size());
    }
    Point p;
    p.x = Rational::parse(text.substr(0, comma));
    try {
        p.y = Rational::parse(text.substr(comma + 1));
    } catch (const ParseError& e) {
        throw ParseError("bad y coordinate in point '" + std::string(text) + "'", comma + 1 + e.position());
    }
    return p;
}

std::string_view to_string(FractalKind kind) {
    return kind == FractalKind::sierpinski ? "sierpinski" : "snowflake";
}

FractalKind parse_fractal_kind(std::string_view text) {
    if (text == "sierpinski") {
        return FractalKind::sierpinski;
    }
    if (text == "snowflake") {
        return FractalKind::snowflake;
    }
    throw ParseError("unknown fractal '" + std::string(text) + "'", 0);
}

const std::array<Point, 3>& sierpinski_translations() {
    static const std::array<Point, 3> t{{
        {Rational(0), Rational(0)},
        {Rational(1, 2), Rational(0)},
        {Rational(0), Rational(1, 2)},
    }};
    return t;
}

const std::array<Point, 7>& snowflake_translations() {
    static const std::array<Point, 7> v{{
        {Rational(0), Rational(0)},
        {Rational(1, 3), Rational(0)},
        {Rational(0), Rational(1, 3)},
        {Rational(1, 3), Rational(-1, 3)},
        {Rational(-1, 3), Rational(0)},
        {Rational(0), Rational(-1, 3)},
        {Rational(-1, 3), Rational(1, 3)},
    }};
    return v;
}

bool t0_member(const Point& p) {
    return p.x.sign() >= 0 && p.y.sign() >= 0 && p.x + p.y <= Rational(1);
}

namespace {

const Rational kHalf(1, 2);
const Rational kSixth(1, 6);

bool in_snowflake_square(const Point& p) { return p.x.abs() <= kHalf && p.y.abs() <= kHalf; }

void require_snowflake_square(const Point& p) {
    if (!in_snowflake_square(p)) {
        throw DomainError("point " + p.to_string() + " lies outside [-1/2, 1/2]^2");
    }
}

void require_depth(int depth) {
    if (depth < 0) {
        throw DomainError("approximant depth must be >= 0");
    }
}

// The children's bounding regions (T0 halves, square thirds) only overlap
// on boundaries, so the disjunction rarely branches.
bool sierpinski_rec(const Point& p, int n, std::vector<int>* trace) {
    if (!t0_member(p)) {
        return false;  // S_n is a subset of T0
    }
    if (n == 0) {
        return true;
    }
    const auto& t = sierpinski_translations();
    for (int i = 0; i < 3; ++i) {
        const Point q{Rational(2) * (p.x - t[i].x), Rational(2) * (p.y - t[i].y)};
        if (sierpinski_rec(q, n - 1, trace)) {
            if (trace != nullptr) {
                trace->push_back(i);
            }
            return true;
        }
    }
    return false;
}

bool snowflake_rec(const Point& p, int n, std::vector<int>* trace) {
    if (!in_snowflake_square(p)) {
        return false;  // G_n is a subset of the square
    }
    if (n == 0) {
        return h0_member(p);
    }
    const auto& v = snowflake_translations();
    for (int i = 0; i < 7; ++i) {
        const Point q{Rational(3) * (p.x - v[i].x), Rational(3) * (p.y - v[i].y)};
        if (snowflake_rec(q, n - 1, trace)) {
            if (trace != nullptr) {
                trace->push_back(i);
            }
            return true;
        }
    }
    return false;
}

Membership finish(bool member, std::vector<int> trace) {
    std::reverse(trace.begin(), trace.end());
    return {member, member ? std::move(trace) : std::vector<int>{}};
}

}  // namespace

Membership sierpinski_member(const Point& p, int depth, bool with_trace) {
    require_depth(depth);
    std::vector<int> trace;
    const bool member = sierpinski_rec(p, depth, with_trace ? &trace : nullptr);
    return finish(member, std::move(trace));
}

bool h0_member(const Point& p) {
    require_snowflake_square(p);
    const Rational s = p.x + p.y;
    if (s > kHalf || s < -kHalf) {
        return false;
    }
    if (p.x > kSixth && p.y > kSixth && s < kHalf) {
        return false;
    }
    if (p.x < -kSixth && p.y < -kSixth && s > -kHalf) {
        return false;
    }
    return true;
}

bool first_digit_region_member(const Point& p) {
    require_snowflake_square(p);
    auto first_digits = [](const Rational& v) {
        std::vector<int> d;
        if (v.abs() <= kSixth) d.push_back(0);
        if (v >= kSixth) d.push_back(1);
        if (v <= -kSixth) d.push_back(-1);
        return d;
    };
    for (int a : first_digits(p.x)) {
        for (int b : first_digits(p.y)) {
            if (a * b == 0 || a + b == 0) {
                return true;
            }
        }
    }
    return false;
}

Membership snowflake_member(const Point& p, int depth, bool with_trace) {
    require_depth(depth);
    require_snowflake_square(p);
    std::vector<int> trace;
    const bool member = snowflake_rec(p, depth, with_trace ? &trace : nullptr);
    return finish(member, std::move(trace));
}

namespace {

template <int Base>
bool digits_compatible(int a, int b) {
    return a * b == 0 || (Base == 3 && a + b == 0);
}

inline constexpr std::size_t kMaxDigitStates = 1'000'000;

// Remainder after reading digit d from r: Base * r - d, or nothing when it
// leaves the digit range ([0, 1] for base 2, [-1/2, 1/2] for base 3).
template <int Base>
std::optional<Rational> advance(const Rational& r, int d) {
    Rational next = Rational(Base) * r - Rational(d);
    if constexpr (Base == 2) {
        if (next.sign() < 0 || next > Rational(1)) return std::nullopt;
    } else {
        if (next.abs() > kHalf) return std::nullopt;
    }
    return next;
}

// Some pair of expansions of x and y satisfies the digit condition at every
// position. States are pairs of remainders; a rational has finitely many,
// so this is a search for an infinite path in a finite graph.
template <int Base>
bool any_compatible(const Rational& x, const Rational& y) {
    using State = std::pair<Rational, Rational>;
    constexpr int lo = Base == 2 ? 0 : -1;
    std::map<State, std::size_t> index;
    std::vector<State> states;
    std::vector<std::vector<std::size_t>> succ;
    auto intern = [&](State s) {
        auto [it, fresh] = index.emplace(std::move(s), states.size());
        if (fresh) {
            if (states.size() >= kMaxDigitStates) {
                throw ResourceError("digit search exceeded " + std::to_string(kMaxDigitStates) + " states");
            }
            states.push_back(it->first);
            succ.emplace_back();
        }
        return it->second;
    };
    intern({x, y});
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (int a = lo; a <= 1; ++a) {
            const auto nx = advance<Base>(states[i].first, a);
            if (!nx) continue;
            for (int b = lo; b <= 1; ++b) {
                if (!digits_compatible<Base>(a, b)) continue;
                const auto ny = advance<Base>(states[i].second, b);
                if (!ny) continue;
                const std::size_t j = intern({*nx, *ny});
                succ[i].push_back(j);
            }
        }
    }
    // Strip states with no live successor until nothing changes.
    std::vector<std::vector<std::size_t>> pred(states.size());
    std::vector<std::size_t> live_out(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        live_out[i] = succ[i].size();
        for (std::size_t j : succ[i]) pred[j].push_back(i);
    }
    std::vector<bool> dead(states.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (live_out[i] == 0) {
            dead[i] = true;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t j = queue.back();
        queue.pop_back();
        for (std::size_t i : pred[j]) {
            if (!dead[i] && --live_out[i] == 0) {
                dead[i] = true;
                queue.push_back(i);
            }
        }
    }
    return !dead[0];
}

template <int Base>
bool finite_compatible(const DigitVec<Base>& x, const DigitVec<Base>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t j = 1; j <= n; ++j) {
        if (!digits_compatible<Base>(x[j], y[j])) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool digit_member_sierpinski(const DigitVec2& x, const DigitVec2& y, bool allow_dual) {
    if (!allow_dual) {
        return finite_compatible(x, y);
    }
    return any_compatible<2>(frac_value(x), frac_value(y));
}

bool digit_member_snowflake(const DigitVec3& x, const DigitVec3& y, bool allow_dual) {
    if (!allow_dual) {
        return finite_compatible(x, y);
    }
    return any_compatible<3>(frac_value(x), frac_value(y));
}

bool digit_member_sierpinski(const Point& p) {
    const Rational one(1);
    if (p.x.sign() < 0 || p.y.sign() < 0 || p.x > one || p.y > one) {
        return false;
    }
    return any_compatible<2>(p.x, p.y);
}

bool digit_member_snowflake(const Point& p) {
    require_snowflake_square(p);
    return any_compatible<3>(p.x, p.y);
}

std::optional<std::uint64_t> cell_count(const ApproximantSpec& spec) {
    require_depth(spec.depth);
    const std::uint64_t branch = spec.kind == FractalKind::sierpinski ? 3 : 7;
    std::uint64_t count = 1;
    for (int i = 0; i < spec.depth; ++i) {
        count *= branch;
        if (count > kMaxCells) {
            return std::nullopt;
        }
    }
    return count;
}

namespace {

template <std::size_t N>
std::vector<Cell> expand_cells(const std::array<Point, N>& translations, const Rational& ratio,
                               Cell seed, int depth) {
    std::vector<Cell> cells{std::move(seed)};
    for (int level = 0; level < depth; ++level) {
        std::vector<Cell> next;
        next.reserve(cells.size() * N);
        for (const Point& t : translations) {
            for (const Cell& c : cells) {
                next.push_back({{c.anchor.x * ratio + t.x, c.anchor.y * ratio + t.y}, c.scale * ratio});
            }
        }
        cells = std::move(next);
    }
    return cells;
}

}  // namespace

CellList approximant_cells(const ApproximantSpec& spec) {
    const auto count = cell_count(spec);
    if (!count) {
        throw ResourceError(std::string(to_string(spec.kind)) + " depth " + std::to_string(spec.depth) +
                            " exceeds the cell limit of " + std::to_string(kMaxCells));
    }
    CellList out;
    out.kind = spec.kind;
    const Cell seed{{Rational(0), Rational(0)}, Rational(1)};
    if (spec.kind == FractalKind::sierpinski) {
        out.cells = expand_cells(sierpinski_translations(), Rational(1, 2), seed, spec.depth);
    } else {
        out.cells = expand_cells(snowflake_translations(), Rational(1, 3), seed, spec.depth);
    }
    return out;
}

const std::vector<Point>& h0_outline() {
    static const std::vector<Point> outline = [] {
        const long v[][4] = {
            {1, 2, 0, 1},   {1, 3, 1, 6},   {1, 6, 1, 6},   {1, 6, 1, 3},   {0, 1, 1, 2},  {-1, 2, 1, 2},
            {-1, 2, 0, 1},  {-1, 3, -1, 6}, {-1, 6, -1, 6}, {-1, 6, -1, 3}, {0, 1, -1, 2}, {1, 2, -1, 2},
        };
        std::vector<Point> pts;
        for (const auto& r : v) {
            pts.push_back({Rational(r[0], r[1]), Rational(r[2], r[3])});
        }
        return pts;
    }();
    return outline;
}

std::vector<Point> cell_polygon(FractalKind kind, const Cell& cell) {
    const Point& a = cell.anchor;
    const Rational& s = cell.scale;
    if (kind == FractalKind::sierpinski) {
        return {a, {a.x + s, a.y}, {a.x, a.y + s}};
    }
    std::vector<Point> pts;
    pts.reserve(h0_outline().size());
    for (const Point& v : h0_outline()) {
        pts.push_back({a.x + s * v.x, a.y + s * v.y});
    }
    return pts;
}

std::pair<Rational, Rational> natural_box(FractalKind kind) {
    if (kind == FractalKind::sierpinski) {
        return {Rational(0), Rational(1)};
    }
    return {Rational(-1, 2), Rational(1, 2)};
}

}  // namespace efrac
