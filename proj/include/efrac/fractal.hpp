#pragma once

/*
 * Exact membership oracles for two self-similar sets and their finite
 * approximants.
 *
 * Sierpinski: S_0 = T0 = {x, y >= 0, x + y <= 1}; S_n is the union of three
 * copies of S_{n-1} scaled by 1/2 and translated by (0,0), (1/2,0), (0,1/2).
 *
 * Snowflake: G_0 = H0, the closed hexagon with vertices (1/2,0), (0,1/2),
 * (-1/2,1/2), (-1/2,0), (0,-1/2), (1/2,-1/2) minus the open triangle
 * (1/6,1/6)-(1/3,1/6)-(1/6,1/3) and its negation; G_n is the union of seven
 * copies of G_{n-1} scaled by 1/3 and translated by v_0..v_6.
 *
 * All sets are closed. Membership at depth n is decided by pulling the
 * point back through every child map that keeps it inside the parent's
 * bounding region; a point on a shared boundary is a member if any branch
 * accepts.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efrac/digitvec.hpp"
#include "efrac/rational.hpp"

namespace efrac {

struct Point {
    Rational x;
    Rational y;

    /// "p/q,p/q". Throws ParseError.
    static Point parse(std::string_view text);
    std::string to_string() const { return x.to_string() + "," + y.to_string(); }

    friend bool operator==(const Point&, const Point&) = default;
};

enum class FractalKind { sierpinski, snowflake };

std::string_view to_string(FractalKind kind);
/// "sierpinski" | "snowflake"; throws ParseError otherwise.
FractalKind parse_fractal_kind(std::string_view text);

struct Membership {
    bool member = false;
    /// Child index taken at each level, outermost first (first accepting
    /// branch in fixed order). Filled only when requested and member.
    std::vector<int> trace;
};

/// Translations of the three Sierpinski child maps (child i maps p to
/// p/2 + t_i).
const std::array<Point, 3>& sierpinski_translations();
/// v_0..v_6 of the snowflake child maps (child i maps p to p/3 + v_i).
const std::array<Point, 7>& snowflake_translations();

/// Closed triangle T0.
bool t0_member(const Point& p);

/// p in S_depth. Negative depth is a DomainError.
Membership sierpinski_member(const Point& p, int depth, bool with_trace = false);

/// p in H0. DomainError outside [-1/2, 1/2]^2.
bool h0_member(const Point& p);

/// The first-digit condition on its own: some balanced-ternary first digits
/// a of x and b of y satisfy a*b = 0 or a + b = 0 (x has first digit 0 on
/// [-1/6, 1/6], 1 on [1/6, 1/2], -1 on [-1/2, -1/6]). This region contains
/// G_1 but is not H0: it additionally covers the two corners beyond
/// x + y = +-1/2 and omits the two segments of x + y = +-1/2 that close
/// the notches of H0. DomainError outside [-1/2, 1/2]^2.
bool first_digit_region_member(const Point& p);

/// p in G_depth. DomainError outside [-1/2, 1/2]^2 or for negative depth.
Membership snowflake_member(const Point& p, int depth, bool with_trace = false);

/// x_j * y_j = 0 for all j. With allow_dual, any pair of expansions of the
/// two values may be used.
bool digit_member_sierpinski(const DigitVec2& x, const DigitVec2& y, bool allow_dual);
/// x_j * y_j = 0 or x_j + y_j = 0 for all j, likewise.
bool digit_member_snowflake(const DigitVec3& x, const DigitVec3& y, bool allow_dual);

/// Digit condition for an arbitrary rational point, over all expansions of
/// its coordinates (each is eventually periodic). Sierpinski reports false
/// outside [0,1]^2; the snowflake throws DomainError outside its square.
/// ResourceError when the search passes a million remainder pairs.
bool digit_member_sierpinski(const Point& p);
bool digit_member_snowflake(const Point& p);

struct ApproximantSpec {
    FractalKind kind = FractalKind::sierpinski;
    int depth = 0;
};

/// Cells of an approximant. For Sierpinski, `anchor` is the right-angle
/// corner and `scale` the leg length; for the snowflake, `anchor` is the
/// centre and `scale` the factor applied to H0.
struct Cell {
    Point anchor;
    Rational scale;
};

struct CellList {
    FractalKind kind = FractalKind::sierpinski;
    std::vector<Cell> cells;
};

/// Hard cap on the number of cells any approximant may expand to.
inline constexpr std::uint64_t kMaxCells = 10'000'000;

/// 3^depth or 7^depth; nullopt when that exceeds kMaxCells.
std::optional<std::uint64_t> cell_count(const ApproximantSpec& spec);

/// All depth-n cells in fixed child order. ResourceError past kMaxCells.
CellList approximant_cells(const ApproximantSpec& spec);

/// Outline of H0 as a simple polygon (the notches traced as part of the
/// boundary), counter-clockwise starting at (1/2, 0).
const std::vector<Point>& h0_outline();

/// Polygon vertices of a cell in the plane.
std::vector<Point> cell_polygon(FractalKind kind, const Cell& cell);

/// Natural bounding box [lo, hi]^2 of each fractal: [0,1] or [-1/2,1/2].
std::pair<Rational, Rational> natural_box(FractalKind kind);

}  // namespace efrac
