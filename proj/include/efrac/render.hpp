#pragma once

/*
 * Deterministic SVG / PGM output for approximants and linearity clouds.
 *
 * Pixel (col, row) has its centre at
 *     x = x0 + (col + 1/2) (x1 - x0) / width
 *     y = y1 - (row + 1/2) (y1 - y0) / height
 * (row 0 at the top, so the y axis points up as in the usual figures).
 * A pixel is dark (0) iff its centre is a member; otherwise 255.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "efrac/fractal.hpp"
#include "efrac/rational.hpp"

namespace efrac {

enum class ImageFormat { svg, pgm };

ImageFormat parse_image_format(std::string_view text);

struct Viewport {
    Rational x0, y0, x1, y1;

    /// The fractal's natural square.
    static Viewport natural(FractalKind kind);
};

struct RenderJob {
    ApproximantSpec spec;
    ImageFormat format = ImageFormat::svg;
    int width = 512;
    Viewport viewport = Viewport::natural(FractalKind::sierpinski);
    /// Worker threads for rasterization; the output does not depend on it.
    int jobs = 1;
};

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< row-major, top row first

    std::size_t dark_count() const;
    /// "P5\n<w> <h>\n255\n" followed by the raw bytes.
    std::string encode_pgm() const;
};

/// One filled polygon per approximant cell. ResourceError past kMaxCells,
/// DomainError for a width < 1 or an empty viewport.
std::string emit_svg(const RenderJob& job);

/// Pixel-centre membership image of the approximant.
GrayImage rasterize(const RenderJob& job);
std::string rasterize_pgm(const RenderJob& job);

inline constexpr int kMaxCloudLen2 = 12;
inline constexpr int kMaxCloudLen3 = 8;

/// Points (frac_value(x), frac_value(y)) of every digit pair of length <=
/// digit_len that is linear (base 2) or has an empty agreement vector
/// (base 3), in enumeration order. ResourceError past the length guards.
std::vector<Point> linearity_cloud_points(int base, int digit_len);

struct CloudJob {
    int base = 2;
    int digit_len = 4;
    ImageFormat format = ImageFormat::pgm;
    /// 0 means base^digit_len, so each cloud point owns one pixel.
    int width = 0;
};

/// Cloud image over the natural square of the matching fractal; a point
/// marks the pixel whose cell [col, col+1) x [row, row+1) contains it
/// (clamped at the far edges).
std::string plot_linearity_cloud(const CloudJob& job);
GrayImage rasterize_cloud(const CloudJob& job);

}  // namespace efrac
