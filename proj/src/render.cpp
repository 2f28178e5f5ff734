#include "efrac/render.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "efrac/egyptian.hpp"
#include "efrac/errors.hpp"
#include "efrac/numeral.hpp"

namespace efrac {

ImageFormat parse_image_format(std::string_view text) {
    if (text == "svg") return ImageFormat::svg;
    if (text == "pgm") return ImageFormat::pgm;
    throw ParseError("unknown image format '" + std::string(text) + "'", 0);
}

Viewport Viewport::natural(FractalKind kind) {
    const auto [lo, hi] = natural_box(kind);
    return {lo, lo, hi, hi};
}

std::size_t GrayImage::dark_count() const {
    return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), std::uint8_t{0}));
}

std::string GrayImage::encode_pgm() const {
    std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(pixels.begin(), pixels.end());
    return out;
}

namespace {

void check_frame(int width, const Viewport& vp) {
    if (width < 1) {
        throw DomainError("image width must be positive");
    }
    if (vp.x1 <= vp.x0 || vp.y1 <= vp.y0) {
        throw DomainError("viewport is empty");
    }
}

// Maps plane coordinates to SVG user units (y flipped).
struct SvgFrame {
    const Viewport& vp;
    int width;

    std::string coord(const Point& p) const {
        const Rational w(width);
        const Rational px = (p.x - vp.x0) / (vp.x1 - vp.x0) * w;
        const Rational py = (vp.y1 - p.y) / (vp.y1 - vp.y0) * w;
        return to_decimal(px) + "," + to_decimal(py);
    }
};

std::string svg_header(int width) {
    const std::string w = std::to_string(width);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + w +
           "\" viewBox=\"0 0 " + w + " " + w + "\">\n"
           "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + w + "\" fill=\"white\"/>\n";
}

Point pixel_centre(const Viewport& vp, int width, int col, int row) {
    const Rational w(width);
    return {vp.x0 + Rational(2 * col + 1, 2) * (vp.x1 - vp.x0) / w,
            vp.y1 - Rational(2 * row + 1, 2) * (vp.y1 - vp.y0) / w};
}

bool approximant_contains(const ApproximantSpec& spec, const Point& p) {
    if (spec.kind == FractalKind::sierpinski) {
        return sierpinski_member(p, spec.depth).member;
    }
    const Rational half(1, 2);
    if (p.x.abs() > half || p.y.abs() > half) {
        return false;
    }
    return snowflake_member(p, spec.depth).member;
}

}  // namespace

std::string emit_svg(const RenderJob& job) {
    check_frame(job.width, job.viewport);
    const CellList cells = approximant_cells(job.spec);
    const SvgFrame frame{job.viewport, job.width};

    std::ostringstream out;
    out << svg_header(job.width);
    for (const Cell& cell : cells.cells) {
        out << "<polygon points=\"";
        bool first = true;
        for (const Point& p : cell_polygon(cells.kind, cell)) {
            out << (first ? "" : " ") << frame.coord(p);
            first = false;
        }
        out << "\" fill=\"gray\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

GrayImage rasterize(const RenderJob& job) {
    check_frame(job.width, job.viewport);
    if (!cell_count(job.spec)) {
        throw ResourceError("approximant depth " + std::to_string(job.spec.depth) + " exceeds the cell limit");
    }
    GrayImage img;
    img.width = job.width;
    img.height = job.width;
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 255);

    // Each worker owns a contiguous band of rows, so the bytes do not depend
    // on scheduling.
    auto render_rows = [&](int row_begin, int row_end) {
        for (int row = row_begin; row < row_end; ++row) {
            for (int col = 0; col < img.width; ++col) {
                if (approximant_contains(job.spec, pixel_centre(job.viewport, job.width, col, row))) {
                    img.pixels[static_cast<std::size_t>(row) * img.width + col] = 0;
                }
            }
        }
    };
    const int workers = std::clamp(job.jobs, 1, img.height);
    if (workers == 1) {
        render_rows(0, img.height);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(render_rows, img.height * w / workers, img.height * (w + 1) / workers);
        }
    }
    return img;
}

std::string rasterize_pgm(const RenderJob& job) { return rasterize(job).encode_pgm(); }

std::vector<Point> linearity_cloud_points(int base, int digit_len) {
    if (base != 2 && base != 3) {
        throw DomainError("cloud base must be 2 or 3");
    }
    const int limit = base == 2 ? kMaxCloudLen2 : kMaxCloudLen3;
    if (digit_len < 0 || digit_len > limit) {
        throw ResourceError("cloud digit length " + std::to_string(digit_len) + " exceeds the limit of " +
                            std::to_string(limit) + " for base " + std::to_string(base));
    }
    std::vector<Point> out;
    const auto len = static_cast<std::size_t>(digit_len);
    if (base == 2) {
        const auto vecs = enumerate_digit_vectors<2>(len);
        std::vector<Rational> values;
        for (const auto& v : vecs) values.push_back(frac_value(v));
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            for (std::size_t k = 0; k < vecs.size(); ++k) {
                if (check_linear_z2(vecs[i], vecs[k]).linear) {
                    out.push_back({values[i], values[k]});
                }
            }
        }
    } else {
        const auto vecs = enumerate_digit_vectors<3>(len);
        std::vector<Rational> values;
        for (const auto& v : vecs) values.push_back(frac_value(v));
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            for (std::size_t k = 0; k < vecs.size(); ++k) {
                if (agreement(vecs[i], vecs[k]).empty()) {
                    out.push_back({values[i], values[k]});
                }
            }
        }
    }
    return out;
}

namespace {

int cloud_width(const CloudJob& job) {
    if (job.width > 0) {
        return job.width;
    }
    return static_cast<int>(pow(job.base, static_cast<unsigned long>(job.digit_len)).get_si());
}

Viewport cloud_viewport(int base) {
    return Viewport::natural(base == 2 ? FractalKind::sierpinski : FractalKind::snowflake);
}

}  // namespace

GrayImage rasterize_cloud(const CloudJob& job) {
    const auto points = linearity_cloud_points(job.base, job.digit_len);
    const Viewport vp = cloud_viewport(job.base);
    const int width = cloud_width(job);
    check_frame(width, vp);

    GrayImage img;
    img.width = width;
    img.height = width;
    img.pixels.assign(static_cast<std::size_t>(width) * width, 255);
    const Rational w(width);
    auto cell_index = [&](const Rational& v, const Rational& lo, const Rational& hi) {
        const BigInt i = ((v - lo) / (hi - lo) * w).floor();
        return std::clamp(static_cast<int>(i.get_si()), 0, width - 1);
    };
    for (const Point& p : points) {
        const int col = cell_index(p.x, vp.x0, vp.x1);
        const int row = width - 1 - cell_index(p.y, vp.y0, vp.y1);
        img.pixels[static_cast<std::size_t>(row) * width + col] = 0;
    }
    return img;
}

std::string plot_linearity_cloud(const CloudJob& job) {
    if (job.format == ImageFormat::pgm) {
        return rasterize_cloud(job).encode_pgm();
    }
    const auto points = linearity_cloud_points(job.base, job.digit_len);
    const Viewport vp = cloud_viewport(job.base);
    const int width = cloud_width(job);
    check_frame(width, vp);
    const SvgFrame frame{vp, width};
    // Half a cloud cell, in user units.
    const std::string radius = to_decimal(Rational(width, 2) / Rational(pow(job.base, job.digit_len)));

    std::ostringstream out;
    out << svg_header(width);
    for (const Point& p : points) {
        const std::string c = frame.coord(p);
        const auto comma = c.find(',');
        out << "<circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1) << "\" r=\"" << radius
            << "\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace efrac
